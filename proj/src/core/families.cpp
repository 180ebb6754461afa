#include "expc/families.hpp"

#include <cmath>
#include <numbers>

#include "expc/error.hpp"

namespace expc {

cplx random_unit_disc(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double r = std::sqrt(unit(rng));
  const double t = 2.0 * std::numbers::pi * unit(rng);
  return std::polar(r, t);
}

PolyC random_monic(int degree, std::mt19937_64& rng) {
  if (degree < 0) throw InvalidArgument("random_monic: negative degree");
  std::vector<cplx> c(static_cast<std::size_t>(degree) + 1);
  for (int k = 0; k < degree; ++k) c[static_cast<std::size_t>(k)] = random_unit_disc(rng);
  c.back() = 1.0;
  return PolyC(std::move(c));
}

PolyC random_poly(int degree, std::mt19937_64& rng) {
  if (degree < 0) throw InvalidArgument("random_poly: negative degree");
  std::vector<cplx> c(static_cast<std::size_t>(degree) + 1);
  for (auto& x : c) x = random_unit_disc(rng);
  while (std::abs(c.back()) < 0.1) c.back() = random_unit_disc(rng);
  return PolyC(std::move(c));
}

}  // namespace expc
