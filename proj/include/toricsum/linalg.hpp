#pragma once

#include <optional>
#include <vector>

#include "toricsum/exact.hpp"

namespace toricsum {

using RatMatrix = std::vector<RatVec>;

// Reduced row echelon form in place; returns pivot column indices.
std::vector<int> rref(RatMatrix& m);

// Basis of the right kernel of m (vectors of length cols).
std::vector<RatVec> kernel_basis(const RatMatrix& m);

// One solution of m x = rhs, if any.
std::optional<RatVec> solve_linear(const RatMatrix& m, const RatVec& rhs);

Rat dot(const RatVec& a, const RatVec& b);
Rat dot(const RatVec& a, const IntVec& b);

}  // namespace toricsum
