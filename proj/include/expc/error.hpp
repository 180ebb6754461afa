#pragma once

#include <stdexcept>
#include <string>

namespace expc {

enum class ErrorCode {
  kInvalidArgument = 1,
  kParse,
  kDomain,
  kTolerance,
  kConvergence,
  kVerification,
};

/// Base exception for the library. The C API maps `code()` onto its status values.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& what) : Error(ErrorCode::kInvalidArgument, what) {}
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : Error(ErrorCode::kParse, what), line_(line), column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Input outside the mathematical domain of an operation (e.g. a non-descent ray).
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(ErrorCode::kDomain, what) {}
};

class ConvergenceError : public Error {
 public:
  explicit ConvergenceError(const std::string& what) : Error(ErrorCode::kConvergence, what) {}
};

/// A numerical check that should hold did not (rank deficiency, ill-conditioned kernel).
class VerificationError : public Error {
 public:
  explicit VerificationError(const std::string& what) : Error(ErrorCode::kVerification, what) {}
};

}  // namespace expc
