#pragma once

#include <string>
#include <vector>

#include "reeshom/algebra.hpp"
#include "reeshom/linalg.hpp"

namespace reeshom {

/// Finite-dimensional bimodule: a space with a left action of one algebra
/// and a right action of another, given by action matrices per basis
/// element. Construction verifies the action axioms (homomorphism,
/// anti-homomorphism, commutation) exactly on all basis pairs.
class Bimodule {
 public:
  Bimodule() = default;  // empty placeholder; only assignment is valid on it
  Bimodule(AlgebraPtr left, AlgebraPtr right, std::size_t dim,
           std::vector<SparseMatrix> left_action, std::vector<SparseMatrix> right_action,
           std::vector<std::string> basis_names, bool verify = true);

  const AlgebraPtr& left_algebra() const { return left_; }
  const AlgebraPtr& right_algebra() const { return right_; }
  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& basis_names() const { return names_; }

  const SparseMatrix& left_action(Index a) const { return left_action_[a]; }
  const SparseMatrix& right_action(Index b) const { return right_action_[b]; }

  // Action of a general algebra element (coefficient vector) on a module vector.
  SparseVec apply_left(const SparseVec& a, const SparseVec& v) const;
  SparseVec apply_right(const SparseVec& v, const SparseVec& b) const;

 private:
  void verify_axioms() const;

  AlgebraPtr left_, right_;
  std::size_t dim_ = 0;
  std::vector<SparseMatrix> left_action_, right_action_;
  std::vector<std::string> names_;
};

/// Linear map between bimodules over the same pair of algebras.
struct BimoduleMap {
  SparseMatrix matrix;  // target_dim x source_dim
};

// Checks that the map intertwines both actions exactly.
bool intertwines(const Bimodule& src, const Bimodule& dst, const SparseMatrix& matrix);

Bimodule regular_bimodule(const AlgebraPtr& a);

/// Corner data for an idempotent e: P = eA as a (B,A)-bimodule, Q = Ae as an
/// (A,B)-bimodule, and the corner algebra B = eAe with unit e. The subspace
/// bases embed the three spaces back into A.
struct CornerModules {
  AlgebraElement idempotent;
  AlgebraPtr corner;
  Bimodule p, q;
  SubspaceBasis p_basis, q_basis, b_basis;
};

CornerModules corner_modules(const AlgebraPtr& a, const AlgebraElement& e);

/// Balanced tensor product X (x)_B Y: the full tensor product modulo the
/// relations xb (x) y - x (x) by over basis triples, with the induced outer
/// actions. projection/section realize the quotient against the basis
/// (u, v) -> u * y_dim + v of the full tensor.
struct BalancedTensor {
  Bimodule quotient;
  SparseMatrix projection;
  SparseMatrix section;
  std::size_t x_dim = 0, y_dim = 0;
};

BalancedTensor balanced_tensor(const Bimodule& x, const Bimodule& y, bool verify = true);

struct InducednessWitness {
  bool induced = false;
  std::size_t module_dim = 0;
  std::size_t tensor_dim = 0;
  std::size_t map_rank = 0;
};

// Whether the multiplication map A (x)_A X (x)_B B -> X is a linear
// isomorphism.
InducednessWitness inducedness_check(const Bimodule& x);

// Quotient of a bimodule over the full semigroup algebra by the subspace
// (zero)X + X(zero), carrying the induced actions of the reduced algebra.
// The reduced algebra's basis must be the full basis with zero_index removed.
Bimodule reduce_module(const Bimodule& x, Index zero_index, const AlgebraPtr& reduced);

}  // namespace reeshom
