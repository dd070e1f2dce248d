#pragma once

#include <optional>
#include <vector>

#include "fsd/numeric.hpp"

namespace fsd {

using IntMat = std::vector<std::vector<Int>>; // row-major
using RatMat = std::vector<std::vector<Rat>>;

struct SmithForm {
  IntMat u; // rows x rows, unimodular
  IntMat d; // diagonal, d_1 | d_2 | ...
  IntMat v; // cols x cols, unimodular; u * a * v = d
};

SmithForm smith_normal_form(IntMat a);

// Basis of the integer kernel lattice {x : A x = 0}, as columns.
std::vector<std::vector<Int>> integer_kernel(const IntMat &a);

// Any exact solution of A x = b over Q (free variables set to zero,
// pivot-by-first-nonzero, deterministic), or nullopt if inconsistent.
std::optional<std::vector<Rat>> solve_rational(RatMat a, std::vector<Rat> b);

} // namespace fsd
