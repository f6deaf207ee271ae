#pragma once

#include <vector>

#include "reeshom/algebra.hpp"

namespace reeshom::oracle {

/// Dense reference implementations, independent of the sparse pipeline: full
/// (non-sparse) boundary matrices and plain Gaussian elimination. Used only
/// to cross-check the sparse results at small dimensions.
using DenseMatrix = std::vector<std::vector<Rational>>;

std::size_t dense_rank(DenseMatrix m);

// Boundary d_n of the Hochschild complex with regular coefficients, as a
// dense dim(C_{n-1}) x dim(C_n) matrix; chains are A^(x)(n+1), leading
// factor the coefficient slot.
DenseMatrix dense_boundary(const FiniteAlgebra& a, std::size_t n);

// Homology dimensions in degrees 0..max_degree (top degree truncated),
// entirely along the dense path.
std::vector<std::size_t> homology_dims_dense(const FiniteAlgebra& a, std::size_t max_degree);

}  // namespace reeshom::oracle
