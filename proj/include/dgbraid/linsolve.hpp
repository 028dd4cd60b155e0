#pragma once

#include <optional>
#include <vector>

#include "dgbraid/scalar.hpp"

namespace dgbraid {

using RatVec = std::vector<Rational>;
using RatMat = std::vector<RatVec>;  // row-major, possibly ragged-free rectangular

/// Reduced row echelon form in place; returns pivot column indices.
std::vector<int> rref(RatMat& m);

/// One solution of A x = b, if any.
std::optional<RatVec> solveLinear(const RatMat& a, const RatVec& b);

/// Basis of the nullspace of A (columns = unknowns).
std::vector<RatVec> nullspaceBasis(const RatMat& a, int cols);

/// Row-span equality of two families of vectors of equal length.
bool spanEqual(const RatMat& a, const RatMat& b);

/// Whether v lies in the row span of basis.
bool inSpan(const RatMat& basis, const RatVec& v);

}  // namespace dgbraid
