#pragma once

// Seeded random test families.

#include <random>

#include "expc/algebra.hpp"

namespace expc {

/// Uniform sample from the closed unit disc.
cplx random_unit_disc(std::mt19937_64& rng);

/// Monic polynomial of the given degree with lower coefficients uniform in the unit disc.
PolyC random_monic(int degree, std::mt19937_64& rng);

/// Every coefficient uniform in the unit disc; the leading one is kept away from zero.
PolyC random_poly(int degree, std::mt19937_64& rng);

}  // namespace expc
