#pragma once

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "reeshom/sparse.hpp"

namespace reeshom {

/// Basis of a subspace in reduced row echelon form: pivot columns strictly
/// increasing, pivot entries 1, pivot columns cleared in all other rows.
struct SubspaceBasis {
  std::size_t ambient = 0;
  std::vector<SparseVec> rows;
  std::vector<Index> pivots;

  std::size_t dim() const { return rows.size(); }
  bool contains(const SparseVec& v) const;
  // Coordinates of a member vector with respect to the basis; callers must
  // know v lies in the span (checked).
  SparseVec coordinates(const SparseVec& v) const;
};

/// Incremental exact elimination: vectors are made integral and primitive,
/// then reduced against the pivot set by fraction-free multiply-subtract
/// steps with content reduction after each step.
class EchelonAccumulator {
 public:
  explicit EchelonAccumulator(std::size_t ambient) : ambient_(ambient) {}

  // Returns true when v contributed a new pivot.
  bool add(SparseVec v);
  std::size_t rank() const { return rows_.size(); }
  std::size_t ambient() const { return ambient_; }

  // Consumes the accumulator and produces the canonical RREF basis.
  SubspaceBasis finish() &&;

 private:
  std::size_t ambient_;
  std::vector<SparseVec> rows_;
  std::unordered_map<Index, std::size_t> pivot_slot_;
};

enum class RankOrientation { Auto, ByRows, ByColumns };

std::size_t rank(const SparseMatrix& m);
std::size_t rank_oriented(const SparseMatrix& m, RankOrientation o);

// Basis of {v : m v = 0}; dimension = cols - rank.
SubspaceBasis kernel_basis(const SparseMatrix& m);

// Basis of the column space; dimension = rank.
SubspaceBasis image_basis(const SparseMatrix& m);

// RREF basis of the span of the given vectors.
SubspaceBasis echelon_span(std::size_t ambient, std::vector<SparseVec> vecs);

std::size_t quotient_dim(const SubspaceBasis& sub, std::size_t space_dim);

// (projection, section) onto the echelon complement of sub: projection maps
// onto coordinates indexed by the non-pivot columns, section embeds them
// back, and projection * section is the identity on the quotient.
std::pair<SparseMatrix, SparseMatrix> quotient_projection(const SubspaceBasis& sub,
                                                          std::size_t space_dim);

inline constexpr std::uint64_t kRankProbePrime = 2147483629ULL;

// Rank over F_p. Never exceeds the exact rank; a fast probe only, not a
// substitute for the exact computation.
std::size_t rank_mod_prime(const SparseMatrix& m, std::uint64_t p = kRankProbePrime);

}  // namespace reeshom
