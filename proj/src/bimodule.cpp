#include "reeshom/bimodule.hpp"

#include <utility>

#include "reeshom/errors.hpp"

namespace reeshom {

namespace {

// sum_k v_k * actions[k]
SparseMatrix action_of_vec(const std::vector<SparseMatrix>& actions, const SparseVec& v,
                           std::size_t dim) {
  SparseMatrix m(dim, dim);
  for (Index r = 0; r < dim; ++r) {
    SparseVec row;
    for (const auto& [k, c] : v)
      for (const auto& [j, w] : actions[k].row(r)) row.emplace_back(j, c * w);
    normalize_vec(row);
    m.set_row(r, std::move(row));
  }
  return m;
}

std::string basis_name_of(const SubspaceBasis& basis, std::size_t k,
                          const std::vector<std::string>& ambient_names, const char* prefix) {
  const SparseVec& v = basis.rows[k];
  if (v.size() == 1 && v.front().second == 1) return ambient_names[v.front().first];
  return std::string(prefix) + std::to_string(k);
}

}  // namespace

Bimodule::Bimodule(AlgebraPtr left, AlgebraPtr right, std::size_t dim,
                   std::vector<SparseMatrix> left_action, std::vector<SparseMatrix> right_action,
                   std::vector<std::string> basis_names, bool verify)
    : left_(std::move(left)),
      right_(std::move(right)),
      dim_(dim),
      left_action_(std::move(left_action)),
      right_action_(std::move(right_action)),
      names_(std::move(basis_names)) {
  if (left_action_.size() != left_->dim() || right_action_.size() != right_->dim())
    throw Error("Bimodule: one action matrix per algebra basis element required");
  for (const auto& m : left_action_)
    if (m.rows() != dim_ || m.cols() != dim_) throw Error("Bimodule: bad action matrix shape");
  for (const auto& m : right_action_)
    if (m.rows() != dim_ || m.cols() != dim_) throw Error("Bimodule: bad action matrix shape");
  if (names_.size() != dim_) throw Error("Bimodule: wrong number of basis names");
  if (verify) verify_axioms();
}

void Bimodule::verify_axioms() const {
  const std::size_t da = left_->dim(), db = right_->dim();
  for (Index a = 0; a < da; ++a)
    for (Index b = 0; b < da; ++b) {
      SparseMatrix lhs = left_action_[a].times(left_action_[b]);
      SparseMatrix rhs = action_of_vec(left_action_, left_->product(a, b), dim_);
      if (!(lhs == rhs))
        throw IllDefinedActionError("Bimodule: left action is not a homomorphism at (" +
                                    left_->basis_names()[a] + ", " + left_->basis_names()[b] + ")");
    }
  for (Index a = 0; a < db; ++a)
    for (Index b = 0; b < db; ++b) {
      SparseMatrix lhs = right_action_[b].times(right_action_[a]);
      SparseMatrix rhs = action_of_vec(right_action_, right_->product(a, b), dim_);
      if (!(lhs == rhs))
        throw IllDefinedActionError("Bimodule: right action is not an anti-homomorphism at (" +
                                    right_->basis_names()[a] + ", " + right_->basis_names()[b] +
                                    ")");
    }
  for (Index a = 0; a < da; ++a)
    for (Index b = 0; b < db; ++b)
      if (!(left_action_[a].times(right_action_[b]) == right_action_[b].times(left_action_[a])))
        throw IllDefinedActionError("Bimodule: actions do not commute at (" +
                                    left_->basis_names()[a] + ", " + right_->basis_names()[b] +
                                    ")");
}

SparseVec Bimodule::apply_left(const SparseVec& a, const SparseVec& v) const {
  SparseVec acc;
  for (const auto& [k, c] : a) {
    SparseVec w = left_action_[k].mul(v);
    for (auto& [i, val] : w) acc.emplace_back(i, c * val);
  }
  normalize_vec(acc);
  return acc;
}

SparseVec Bimodule::apply_right(const SparseVec& v, const SparseVec& b) const {
  SparseVec acc;
  for (const auto& [k, c] : b) {
    SparseVec w = right_action_[k].mul(v);
    for (auto& [i, val] : w) acc.emplace_back(i, c * val);
  }
  normalize_vec(acc);
  return acc;
}

bool intertwines(const Bimodule& src, const Bimodule& dst, const SparseMatrix& matrix) {
  if (src.left_algebra() != dst.left_algebra() || src.right_algebra() != dst.right_algebra())
    return false;
  if (matrix.rows() != dst.dim() || matrix.cols() != src.dim()) return false;
  for (Index a = 0; a < src.left_algebra()->dim(); ++a)
    if (!(matrix.times(src.left_action(a)) == dst.left_action(a).times(matrix))) return false;
  for (Index b = 0; b < src.right_algebra()->dim(); ++b)
    if (!(matrix.times(src.right_action(b)) == dst.right_action(b).times(matrix))) return false;
  return true;
}

Bimodule regular_bimodule(const AlgebraPtr& a) {
  const std::size_t d = a->dim();
  std::vector<SparseMatrix> left, right;
  left.reserve(d);
  right.reserve(d);
  for (Index i = 0; i < d; ++i) {
    left.push_back(a->left_mult_matrix(unit_vec(i)));
    right.push_back(a->right_mult_matrix(unit_vec(i)));
  }
  return Bimodule(a, a, d, std::move(left), std::move(right), a->basis_names(), true);
}

CornerModules corner_modules(const AlgebraPtr& a, const AlgebraElement& e) {
  if (e.algebra != a) throw AlgebraMismatchError("corner_modules: idempotent from another algebra");
  if (a->multiply_vec(e.coords, e.coords) != e.coords)
    throw NotIdempotentError("corner_modules: e*e != e");

  SparseMatrix le = a->left_mult_matrix(e.coords);
  SparseMatrix re = a->right_mult_matrix(e.coords);
  SubspaceBasis p_basis = image_basis(le);
  SubspaceBasis q_basis = image_basis(re);
  SubspaceBasis b_basis = image_basis(le.times(re));

  const std::size_t db = b_basis.dim();
  FiniteAlgebra::ProductMap b_products;
  for (Index i = 0; i < db; ++i)
    for (Index j = 0; j < db; ++j) {
      SparseVec prod = b_basis.coordinates(a->multiply_vec(b_basis.rows[i], b_basis.rows[j]));
      if (!prod.empty()) b_products[product_key(i, j)] = std::move(prod);
    }
  std::vector<std::string> b_names;
  for (std::size_t k = 0; k < db; ++k)
    b_names.push_back(basis_name_of(b_basis, k, a->basis_names(), "b"));
  AlgebraPtr corner = std::make_shared<FiniteAlgebra>(
      db, std::move(b_products), std::move(b_names), b_basis.coordinates(e.coords),
      "e" + a->name() + "e", true);

  auto make_module = [&](const SubspaceBasis& basis, const AlgebraPtr& left_alg,
                         const AlgebraPtr& right_alg, const char* prefix) {
    const std::size_t dm = basis.dim();
    auto build = [&](const AlgebraPtr& alg, bool from_left) {
      std::vector<SparseMatrix> action;
      action.reserve(alg->dim());
      for (Index k = 0; k < alg->dim(); ++k) {
        SparseVec factor = (alg.get() == corner.get()) ? b_basis.rows[k] : unit_vec(k);
        std::vector<SparseVec> cols(dm);
        for (Index j = 0; j < dm; ++j) {
          SparseVec prod = from_left ? a->multiply_vec(factor, basis.rows[j])
                                     : a->multiply_vec(basis.rows[j], factor);
          cols[j] = basis.coordinates(prod);
        }
        action.push_back(SparseMatrix::from_columns(dm, cols));
      }
      return action;
    };
    std::vector<std::string> names;
    for (std::size_t k = 0; k < dm; ++k)
      names.push_back(basis_name_of(basis, k, a->basis_names(), prefix));
    return Bimodule(left_alg, right_alg, dm, build(left_alg, true), build(right_alg, false),
                    std::move(names), true);
  };

  Bimodule p = make_module(p_basis, corner, a, "p");
  Bimodule q = make_module(q_basis, a, corner, "q");
  return CornerModules{e, corner, std::move(p), std::move(q), std::move(p_basis),
                       std::move(q_basis), std::move(b_basis)};
}

BalancedTensor balanced_tensor(const Bimodule& x, const Bimodule& y, bool verify) {
  if (x.right_algebra() != y.left_algebra())
    throw AlgebraMismatchError("balanced_tensor: middle algebras differ");
  const AlgebraPtr& mid = x.right_algebra();
  const std::size_t dx = x.dim(), dy = y.dim();
  const std::size_t full = dx * dy;

  EchelonAccumulator acc(full);
  for (Index b = 0; b < mid->dim(); ++b) {
    std::vector<SparseVec> rx_cols = x.right_action(b).columns();
    std::vector<SparseVec> ly_cols = y.left_action(b).columns();
    for (Index u = 0; u < dx; ++u) {
      for (Index v = 0; v < dy; ++v) {
        SparseVec rel;
        for (const auto& [w, c] : rx_cols[u])
          rel.emplace_back(static_cast<Index>(w * dy + v), c);
        for (const auto& [z, c] : ly_cols[v])
          rel.emplace_back(static_cast<Index>(u * dy + z), -c);
        normalize_vec(rel);
        if (!rel.empty()) acc.add(std::move(rel));
      }
    }
  }
  SubspaceBasis sub = std::move(acc).finish();
  auto [proj, section] = quotient_projection(sub, full);
  const std::size_t qdim = full - sub.dim();
  const std::vector<SparseVec> section_cols = section.columns();

  auto induced_action = [&](const SparseMatrix& act, bool on_left) {
    std::vector<SparseVec> cols(qdim);
    std::vector<SparseVec> act_cols = act.columns();
    for (Index c = 0; c < qdim; ++c) {
      SparseVec w;
      for (const auto& [idx, val] : section_cols[c]) {
        Index u = static_cast<Index>(idx / dy), v = static_cast<Index>(idx % dy);
        if (on_left) {
          for (const auto& [u2, cv] : act_cols[u])
            w.emplace_back(static_cast<Index>(u2 * dy + v), val * cv);
        } else {
          for (const auto& [v2, cv] : act_cols[v])
            w.emplace_back(static_cast<Index>(u * dy + v2), val * cv);
        }
      }
      normalize_vec(w);
      cols[c] = proj.mul(w);
    }
    return SparseMatrix::from_columns(qdim, cols);
  };

  std::vector<SparseMatrix> left, right;
  left.reserve(x.left_algebra()->dim());
  for (Index a = 0; a < x.left_algebra()->dim(); ++a)
    left.push_back(induced_action(x.left_action(a), true));
  right.reserve(y.right_algebra()->dim());
  for (Index c = 0; c < y.right_algebra()->dim(); ++c)
    right.push_back(induced_action(y.right_action(c), false));

  std::vector<std::string> names;
  names.reserve(qdim);
  {
    std::vector<bool> is_pivot(full, false);
    for (Index p : sub.pivots) is_pivot[p] = true;
    for (Index idx = 0; idx < full; ++idx)
      if (!is_pivot[idx])
        names.push_back(x.basis_names()[idx / dy] + "⊗" + y.basis_names()[idx % dy]);
  }

  Bimodule quotient(x.left_algebra(), y.right_algebra(), qdim, std::move(left), std::move(right),
                    std::move(names), verify);
  return BalancedTensor{std::move(quotient), std::move(proj), std::move(section), dx, dy};
}

InducednessWitness inducedness_check(const Bimodule& x) {
  const AlgebraPtr& a = x.left_algebra();
  const AlgebraPtr& b = x.right_algebra();
  BalancedTensor t1 = balanced_tensor(regular_bimodule(a), x, false);
  BalancedTensor t2 = balanced_tensor(t1.quotient, regular_bimodule(b), false);

  const std::size_t dx = x.dim(), db = b->dim();
  std::vector<SparseVec> sec2_cols = t2.section.columns();
  std::vector<SparseVec> sec1_cols = t1.section.columns();
  std::vector<SparseVec> map_cols(t2.quotient.dim());
  for (Index c = 0; c < t2.quotient.dim(); ++c) {
    SparseVec out;
    for (const auto& [idx2, c2] : sec2_cols[c]) {
      Index t1_idx = static_cast<Index>(idx2 / db), bb = static_cast<Index>(idx2 % db);
      for (const auto& [idx1, c1] : sec1_cols[t1_idx]) {
        Index aa = static_cast<Index>(idx1 / dx), u = static_cast<Index>(idx1 % dx);
        SparseVec w = x.left_action(aa).mul(unit_vec(u));
        w = x.right_action(bb).mul(w);
        for (const auto& [i, val] : w) out.emplace_back(i, c2 * c1 * val);
      }
    }
    normalize_vec(out);
    map_cols[c] = std::move(out);
  }
  SparseMatrix m = SparseMatrix::from_columns(dx, map_cols);
  std::size_t r = rank(m);
  return InducednessWitness{t2.quotient.dim() == dx && r == dx, dx, t2.quotient.dim(), r};
}

Bimodule reduce_module(const Bimodule& x, Index zero_index, const AlgebraPtr& reduced) {
  if (x.left_algebra() != x.right_algebra())
    throw AlgebraMismatchError("reduce_module: expects a bimodule over one algebra");
  const AlgebraPtr& full_alg = x.left_algebra();
  if (zero_index >= full_alg->dim()) throw Error("reduce_module: zero index out of range");
  if (reduced->dim() + 1 != full_alg->dim())
    throw Error("reduce_module: reduced algebra dimension mismatch");

  const std::size_t d = x.dim();
  EchelonAccumulator acc(d);
  for (auto& col : x.left_action(zero_index).columns()) acc.add(std::move(col));
  for (auto& col : x.right_action(zero_index).columns()) acc.add(std::move(col));
  SubspaceBasis sub = std::move(acc).finish();
  auto [proj, section] = quotient_projection(sub, d);
  const std::size_t qdim = d - sub.dim();

  auto full_index = [&](Index t) { return t < zero_index ? t : static_cast<Index>(t + 1); };

  // The subspace must be invariant under every surviving action; otherwise
  // the input was not a module over the full algebra.
  for (Index t = 0; t < reduced->dim(); ++t) {
    for (const auto& row : sub.rows) {
      if (!proj.mul(x.left_action(full_index(t)).mul(row)).empty() ||
          !proj.mul(x.right_action(full_index(t)).mul(row)).empty())
        throw IllDefinedActionError("reduce_module: action of " + reduced->basis_names()[t] +
                                    " does not descend to the quotient");
    }
  }

  std::vector<SparseMatrix> left, right;
  left.reserve(reduced->dim());
  right.reserve(reduced->dim());
  for (Index t = 0; t < reduced->dim(); ++t) {
    left.push_back(proj.times(x.left_action(full_index(t))).times(section));
    right.push_back(proj.times(x.right_action(full_index(t))).times(section));
  }

  std::vector<std::string> names;
  {
    std::vector<bool> is_pivot(d, false);
    for (Index p : sub.pivots) is_pivot[p] = true;
    for (Index i = 0; i < d; ++i)
      if (!is_pivot[i]) names.push_back(x.basis_names()[i]);
  }
  return Bimodule(reduced, reduced, qdim, std::move(left), std::move(right), std::move(names),
                  true);
}

}  // namespace reeshom
