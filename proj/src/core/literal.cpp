#include "expc/literal.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "expc/error.hpp"

namespace expc {

namespace {

class TermParser {
 public:
  explicit TermParser(std::string_view text) : s_(text) {}

  std::map<int, cplx> parse() {
    std::map<int, cplx> terms;
    skip_ws();
    if (at_end()) fail("empty expression");
    bool first = true;
    while (!at_end()) {
      double sign = 1.0;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1.0 : 1.0;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      const auto [power, coeff] = term();
      terms[power] += sign * coeff;
      first = false;
      skip_ws();
    }
    return terms;
  }

 private:
  std::pair<int, cplx> term() {
    cplx coeff = 1.0;
    bool have_coeff = false;
    if (peek() == '(') {
      coeff = complex_literal();
      have_coeff = true;
    } else if (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.') {
      coeff = real_number();
      have_coeff = true;
      skip_ws();
      if (peek() == 'i') {
        ++pos_;
        coeff *= cplx(0.0, 1.0);
      }
    } else if (peek() == 'i') {
      ++pos_;
      coeff = cplx(0.0, 1.0);
      have_coeff = true;
    }
    skip_ws();
    if (have_coeff && peek() == '*') {
      ++pos_;
      skip_ws();
      if (peek() != 'z') fail("expected 'z' after '*'");
    }
    int power = 0;
    if (peek() == 'z') {
      ++pos_;
      power = 1;
      skip_ws();
      if (peek() == '^') {
        ++pos_;
        skip_ws();
        power = integer();
      }
    } else if (!have_coeff) {
      fail("expected a coefficient or 'z'");
    }
    return {power, coeff};
  }

  cplx complex_literal() {
    ++pos_;  // '('
    skip_ws();
    const double re = signed_real();
    skip_ws();
    if (peek() != ',') fail("expected ',' in complex literal");
    ++pos_;
    skip_ws();
    const double im = signed_real();
    skip_ws();
    if (peek() != ')') fail("expected ')' closing complex literal");
    ++pos_;
    return {re, im};
  }

  double signed_real() {
    double sign = 1.0;
    if (peek() == '+' || peek() == '-') {
      sign = peek() == '-' ? -1.0 : 1.0;
      ++pos_;
    }
    return sign * real_number();
  }

  double real_number() {
    const std::string rest(s_.substr(pos_));
    char* end = nullptr;
    const double v = std::strtod(rest.c_str(), &end);
    if (end == rest.c_str()) fail("expected a number");
    const std::string_view token(rest.c_str(), static_cast<std::size_t>(end - rest.c_str()));
    if (token.find_first_of("xXpP") != std::string_view::npos)
      fail("unsupported number format");
    pos_ += token.size();
    return v;
  }

  int integer() {
    const std::size_t start = pos_;
    if (peek() == '-' || peek() == '+') ++pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    const std::string tok(s_.substr(start, pos_ - start));
    if (tok.empty() || tok == "-" || tok == "+") fail("expected an integer exponent");
    return std::stoi(tok);
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("literal '" + std::string(s_) + "': " + msg + " at column " + std::to_string(pos_ + 1), 1,
                     pos_ + 1);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

std::string fmt_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt_cplx(cplx c) { return "(" + fmt_double(c.real()) + "," + fmt_double(c.imag()) + ")"; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

/// Strips one pair of enclosing parentheses unless they form a complex literal.
std::string_view unwrap_group(std::string_view s) {
  s = trim(s);
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') return s;
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (depth == 0 && i + 1 < s.size()) return s;  // first group closes early
    if (depth == 1 && s[i] == ',') return s;
  }
  return s.substr(1, s.size() - 2);
}

/// Laurent literal as poly * z^-shift with poly a genuine polynomial.
std::pair<PolyC, int> laurent_fraction(std::string_view text) {
  const auto terms = TermParser(text).parse();
  const int low = std::min(0, terms.begin()->first);
  const int top = std::max(0, terms.rbegin()->first);
  std::vector<cplx> v(static_cast<std::size_t>(top - low) + 1, 0.0);
  for (const auto& [p, c] : terms) v[static_cast<std::size_t>(p - low)] += c;
  return {PolyC(std::move(v)), -low};
}

}  // namespace

std::map<int, cplx> parse_laurent_terms(std::string_view text) { return TermParser(text).parse(); }

PolyC parse_poly(std::string_view text) {
  const auto terms = parse_laurent_terms(text);
  int top = 0;
  for (const auto& [p, c] : terms) {
    if (p < 0) throw ParseError("polynomial literal has a negative power: '" + std::string(text) + "'");
    top = std::max(top, p);
  }
  std::vector<cplx> v(static_cast<std::size_t>(top) + 1, 0.0);
  for (const auto& [p, c] : terms) v[static_cast<std::size_t>(p)] += c;
  return PolyC(std::move(v));
}

PrincipalPart parse_principal(std::string_view text) {
  const auto terms = parse_laurent_terms(text);
  int order = 0;
  for (const auto& [p, c] : terms) {
    if (p >= 0 && c != cplx(0.0))
      throw ParseError("principal part literal must use negative powers only: '" + std::string(text) + "'");
    order = std::max(order, -p);
  }
  std::vector<cplx> v(static_cast<std::size_t>(order), 0.0);
  for (const auto& [p, c] : terms) {
    if (p < 0) v[static_cast<std::size_t>(-p - 1)] += c;
  }
  try {
    return PrincipalPart(std::move(v));
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

RationalC parse_rational(std::string_view text) {
  int depth = 0;
  std::size_t slash = std::string_view::npos;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    if (text[i] == ')') --depth;
    if (text[i] == '/' && depth == 0) {
      if (slash != std::string_view::npos) throw ParseError("rational literal has more than one '/'");
      slash = i;
    }
  }
  std::string_view num_text = text, den_text = "1";
  if (slash != std::string_view::npos) {
    num_text = text.substr(0, slash);
    den_text = text.substr(slash + 1);
  }
  const auto [num, num_shift] = laurent_fraction(unwrap_group(num_text));
  const auto [den, den_shift] = laurent_fraction(unwrap_group(den_text));
  if (den.is_zero()) throw ParseError("rational literal has a zero denominator");
  return RationalC(num * PolyC::monomial(den_shift), den * PolyC::monomial(num_shift));
}

std::string format_poly(const PolyC& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = 0; k <= *p.degree(); ++k) {
    if (p[k] == cplx(0.0)) continue;
    if (!out.empty()) out += " + ";
    out += fmt_cplx(p[k]);
    if (k > 0) out += "*z^" + std::to_string(k);
  }
  return out;
}

std::string format_principal(const PrincipalPart& h) {
  std::string out;
  for (int j = 1; j <= h.order(); ++j) {
    if (h.coeff(j) == cplx(0.0)) continue;
    if (!out.empty()) out += " + ";
    out += fmt_cplx(h.coeff(j)) + "*z^-" + std::to_string(j);
  }
  return out;
}

}  // namespace expc
