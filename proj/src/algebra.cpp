#include "reeshom/algebra.hpp"

#include <utility>

#include "reeshom/errors.hpp"

namespace reeshom {

namespace {
const SparseVec kEmptyVec{};

constexpr std::size_t kAssocCheckLimit = 64;
}  // namespace

FiniteAlgebra::FiniteAlgebra(std::size_t dim, ProductMap products,
                             std::vector<std::string> basis_names, std::optional<SparseVec> unit,
                             std::string name, bool skip_check_large)
    : dim_(dim),
      products_(std::move(products)),
      names_(std::move(basis_names)),
      unit_(std::move(unit)),
      name_(std::move(name)) {
  if (names_.size() != dim_) throw Error(name_ + ": wrong number of basis names");
  for (const auto& [key, vec] : products_) {
    Index i = static_cast<Index>(key >> 32), j = static_cast<Index>(key & 0xffffffffu);
    if (i >= dim_ || j >= dim_) throw Error(name_ + ": structure constant index out of range");
    for (const auto& [k, c] : vec)
      if (k >= dim_) throw Error(name_ + ": structure constant entry out of range");
  }
  if (!(skip_check_large && dim_ > kAssocCheckLimit)) verify_associative();
  if (unit_) verify_unit();
}

const SparseVec& FiniteAlgebra::product(Index i, Index j) const {
  auto it = products_.find(product_key(i, j));
  return it == products_.end() ? kEmptyVec : it->second;
}

SparseVec FiniteAlgebra::multiply_vec(const SparseVec& x, const SparseVec& y) const {
  SparseVec acc;
  for (const auto& [i, ci] : x)
    for (const auto& [j, cj] : y) {
      Rational c = ci * cj;
      for (const auto& [k, ck] : product(i, j)) acc.emplace_back(k, c * ck);
    }
  normalize_vec(acc);
  return acc;
}

SparseMatrix FiniteAlgebra::left_mult_matrix(const SparseVec& v) const {
  std::vector<Triplet> ts;
  for (Index j = 0; j < dim_; ++j)
    for (const auto& [i, ci] : v)
      for (const auto& [k, ck] : product(i, j)) ts.emplace_back(k, j, ci * ck);
  return SparseMatrix::from_triplets(dim_, dim_, std::move(ts));
}

SparseMatrix FiniteAlgebra::right_mult_matrix(const SparseVec& v) const {
  std::vector<Triplet> ts;
  for (Index j = 0; j < dim_; ++j)
    for (const auto& [i, ci] : v)
      for (const auto& [k, ck] : product(j, i)) ts.emplace_back(k, j, ci * ck);
  return SparseMatrix::from_triplets(dim_, dim_, std::move(ts));
}

SparseMatrix FiniteAlgebra::multiplication_matrix() const {
  std::vector<Triplet> ts;
  for (Index i = 0; i < dim_; ++i)
    for (Index j = 0; j < dim_; ++j) {
      Index col = static_cast<Index>(i * dim_ + j);
      for (const auto& [k, c] : product(i, j)) ts.emplace_back(k, col, c);
    }
  return SparseMatrix::from_triplets(dim_, dim_ * dim_, std::move(ts));
}

void FiniteAlgebra::verify_unit() const {
  for (Index i = 0; i < dim_; ++i) {
    SparseVec e = unit_vec(i);
    if (multiply_vec(*unit_, e) != e || multiply_vec(e, *unit_) != e)
      throw Error(name_ + ": stored unit fails at basis element " + names_[i]);
  }
}

void FiniteAlgebra::verify_associative() const {
  for (Index i = 0; i < dim_; ++i) {
    SparseVec ei = unit_vec(i);
    for (Index j = 0; j < dim_; ++j) {
      const SparseVec& ij = product(i, j);
      for (Index k = 0; k < dim_; ++k) {
        SparseVec lhs = multiply_vec(ij, unit_vec(k));
        SparseVec rhs = multiply_vec(ei, product(j, k));
        if (lhs != rhs)
          throw NotAssociativeError(name_ + ": associativity fails at basis triple (" +
                                    names_[i] + ", " + names_[j] + ", " + names_[k] + ")");
      }
    }
  }
}

AlgebraPtr group_algebra(const GroupTable& g) {
  FiniteAlgebra::ProductMap products;
  products.reserve(g.order * g.order);
  for (Index a = 0; a < g.order; ++a)
    for (Index b = 0; b < g.order; ++b) products[product_key(a, b)] = unit_vec(g.mul(a, b));
  return std::make_shared<FiniteAlgebra>(g.order, std::move(products), g.names,
                                         unit_vec(g.identity), "Q[" + g.group_name + "]", true);
}

AlgebraPtr unitize(const AlgebraPtr& a) {
  const std::size_t n = a->dim();
  const Index one = static_cast<Index>(n);
  FiniteAlgebra::ProductMap products = a->products();
  for (Index i = 0; i < n; ++i) {
    products[product_key(one, i)] = unit_vec(i);
    products[product_key(i, one)] = unit_vec(i);
  }
  products[product_key(one, one)] = unit_vec(one);
  std::vector<std::string> names = a->basis_names();
  names.push_back("1");
  return std::make_shared<FiniteAlgebra>(n + 1, std::move(products), std::move(names),
                                         unit_vec(one), a->name() + "#", true);
}

AlgebraPtr direct_sum(const AlgebraPtr& a, const AlgebraPtr& b) {
  const std::size_t n = a->dim(), m = b->dim();
  FiniteAlgebra::ProductMap products = a->products();
  auto shift = [&](const SparseVec& v) {
    SparseVec r;
    r.reserve(v.size());
    for (const auto& [i, c] : v) r.emplace_back(static_cast<Index>(i + n), c);
    return r;
  };
  for (const auto& [key, vec] : b->products()) {
    Index i = static_cast<Index>(key >> 32), j = static_cast<Index>(key & 0xffffffffu);
    products[product_key(static_cast<Index>(i + n), static_cast<Index>(j + n))] = shift(vec);
  }
  std::vector<std::string> names = a->basis_names();
  for (const auto& s : b->basis_names()) names.push_back(s);
  std::optional<SparseVec> unit;
  if (a->unit() && b->unit()) {
    unit = *a->unit();
    for (const auto& [i, c] : *b->unit()) unit->emplace_back(static_cast<Index>(i + n), c);
  }
  return std::make_shared<FiniteAlgebra>(n + m, std::move(products), std::move(names),
                                         std::move(unit), a->name() + "+" + b->name(), true);
}

AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) {
  if (x.algebra != y.algebra)
    throw AlgebraMismatchError("multiply: elements live in different algebras");
  return {x.algebra, x.algebra->multiply_vec(x.coords, y.coords)};
}

AlgebraElement basis_element(const AlgebraPtr& a, Index i) {
  if (i >= a->dim()) throw Error("basis_element: index out of range");
  return {a, unit_vec(i)};
}

}  // namespace reeshom
