#pragma once

#include <optional>
#include <vector>

#include "burnside/numeric.hpp"

namespace burnside {

using IntMatrix = std::vector<std::vector<Int>>;  // row-major

// Basis of { v : A v = 0 } over the integers, as columns. Unimodular column
// reduction, so the result is a lattice basis of the full kernel (saturated,
// not just finite index).
std::vector<std::vector<Int>> integer_kernel(const IntMatrix& a);

// Solve A x = b exactly over the rationals; nullopt if inconsistent. If the
// solution space is positive-dimensional, returns one solution with free
// variables set to zero.
std::optional<std::vector<Rat>> rational_solve(
    const std::vector<std::vector<Rat>>& a, const std::vector<Rat>& b);

}  // namespace burnside
