#pragma once

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "reeshom/group.hpp"
#include "reeshom/sparse.hpp"

namespace reeshom {

/// Finite-dimensional associative algebra over the rationals, presented by
/// sparse structure constants. Associativity of the bilinear extension is
/// checked on all basis triples at construction; for dimensions above 64 the
/// check may be skipped explicitly (constructions from validated semigroups
/// are associative by construction).
class FiniteAlgebra {
 public:
  using ProductMap = std::unordered_map<std::uint64_t, SparseVec>;

  FiniteAlgebra(std::size_t dim, ProductMap products, std::vector<std::string> basis_names,
                std::optional<SparseVec> unit, std::string name, bool skip_check_large = false);

  std::size_t dim() const { return dim_; }
  const std::string& name() const { return name_; }
  const std::vector<std::string>& basis_names() const { return names_; }
  const std::optional<SparseVec>& unit() const { return unit_; }
  const ProductMap& products() const { return products_; }

  // Product of basis elements i and j; empty vector when zero.
  const SparseVec& product(Index i, Index j) const;
  SparseVec multiply_vec(const SparseVec& x, const SparseVec& y) const;

  // dim x dim matrix of left (right) multiplication by v.
  SparseMatrix left_mult_matrix(const SparseVec& v) const;
  SparseMatrix right_mult_matrix(const SparseVec& v) const;

  // dim x dim^2 multiplication matrix on basis tensors (u*dim + v).
  SparseMatrix multiplication_matrix() const;

 private:
  void verify_unit() const;
  void verify_associative() const;

  std::size_t dim_;
  ProductMap products_;
  std::vector<std::string> names_;
  std::optional<SparseVec> unit_;
  std::string name_;
};

using AlgebraPtr = std::shared_ptr<const FiniteAlgebra>;

struct AlgebraElement {
  AlgebraPtr algebra;
  SparseVec coords;

  bool operator==(const AlgebraElement& o) const {
    return algebra == o.algebra && coords == o.coords;
  }
};

AlgebraPtr group_algebra(const GroupTable& g);
AlgebraPtr unitize(const AlgebraPtr& a);
AlgebraPtr direct_sum(const AlgebraPtr& a, const AlgebraPtr& b);

AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement basis_element(const AlgebraPtr& a, Index i);

inline std::uint64_t product_key(Index i, Index j) {
  return (static_cast<std::uint64_t>(i) << 32) | j;
}

}  // namespace reeshom
