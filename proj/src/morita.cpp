#include "reeshom/morita.hpp"

#include <algorithm>
#include <future>

#include "reeshom/errors.hpp"

namespace reeshom {

MoritaWitness build_witness(const ReesSemigroup& s, std::size_t i, std::size_t lambda) {
  if (i >= s.i_size() || lambda >= s.lambda_size())
    throw Error("build_witness: idempotent position out of range");
  if (!s.p(lambda, i))
    throw ZeroSandwichEntryError("build_witness: sandwich entry (" + std::to_string(lambda + 1) +
                                 "," + std::to_string(i + 1) + ") is zero");

  MoritaWitness w;
  w.algebra = s.reduced_algebra();
  w.group_alg = group_algebra(s.group());
  w.i = i;
  w.lambda = lambda;
  w.idempotent = AlgebraElement{
      w.algebra, unit_vec(s.block_iso_index(i, lambda, s.group().identity))};
  w.corners = corner_modules(w.algebra, w.idempotent);

  // B should be spanned by the block basis vectors; identify it with the
  // group algebra along g -> (i, g p^-1, lambda).
  const std::size_t order = s.group().order;
  w.corner_is_group_algebra = w.corners.corner->dim() == order;
  w.group_to_block.assign(order, 0);
  w.block_to_group.assign(order, 0);
  if (w.corner_is_group_algebra) {
    for (Index g = 0; g < order && w.corner_is_group_algebra; ++g) {
      SparseVec coords =
          w.corners.b_basis.coordinates(unit_vec(s.block_iso_index(i, lambda, g)));
      if (coords.size() == 1 && coords.front().second == 1) {
        w.group_to_block[g] = coords.front().first;
        w.block_to_group[coords.front().first] = g;
      } else {
        w.corner_is_group_algebra = false;
      }
    }
  }
  if (w.corner_is_group_algebra) {
    for (Index g = 0; g < order && w.corner_is_group_algebra; ++g)
      for (Index h = 0; h < order && w.corner_is_group_algebra; ++h) {
        const SparseVec& prod = w.corners.corner->product(w.group_to_block[g], w.group_to_block[h]);
        w.corner_is_group_algebra = prod == unit_vec(w.group_to_block[s.group().mul(g, h)]);
      }
  }

  w.pq = balanced_tensor(w.corners.p, w.corners.q);
  w.qp = balanced_tensor(w.corners.q, w.corners.p);

  const AlgebraPtr& a = w.algebra;
  auto mult_map = [&](const BalancedTensor& t, const std::vector<SparseVec>& left_vecs,
                      const std::vector<SparseVec>& right_vecs, const SubspaceBasis* out_basis,
                      std::size_t out_dim) {
    std::vector<SparseVec> sec_cols = t.section.columns();
    std::vector<SparseVec> cols(t.quotient.dim());
    for (Index c = 0; c < t.quotient.dim(); ++c) {
      SparseVec out;
      for (const auto& [idx, val] : sec_cols[c]) {
        Index u = static_cast<Index>(idx / t.y_dim), v = static_cast<Index>(idx % t.y_dim);
        SparseVec prod = a->multiply_vec(left_vecs[u], right_vecs[v]);
        if (out_basis) prod = out_basis->coordinates(prod);
        for (const auto& [k, cv] : prod) out.emplace_back(k, val * cv);
      }
      normalize_vec(out);
      cols[c] = std::move(out);
    }
    return SparseMatrix::from_columns(out_dim, cols);
  };

  std::vector<SparseVec> p_vecs = w.corners.p_basis.rows;
  std::vector<SparseVec> q_vecs = w.corners.q_basis.rows;
  w.pq_mult.matrix =
      mult_map(w.pq, p_vecs, q_vecs, &w.corners.b_basis, w.corners.corner->dim());
  w.qp_mult.matrix = mult_map(w.qp, q_vecs, p_vecs, nullptr, a->dim());

  w.pq_bijective = w.pq.quotient.dim() == w.corners.corner->dim() &&
                   rank(w.pq_mult.matrix) == w.corners.corner->dim();
  w.qp_bijective = w.qp.quotient.dim() == a->dim() && rank(w.qp_mult.matrix) == a->dim();
  w.mult_maps_intertwine =
      intertwines(w.pq.quotient, regular_bimodule(w.corners.corner), w.pq_mult.matrix) &&
      intertwines(w.qp.quotient, regular_bimodule(a), w.qp_mult.matrix);
  return w;
}

namespace {

// Relabel the outer algebras of a (B,B)-bimodule to (kG,kG) or back.
Bimodule relabel_actions(const Bimodule& m, const AlgebraPtr& new_left,
                         const AlgebraPtr& new_right, const std::vector<Index>& left_map,
                         const std::vector<Index>& right_map) {
  std::vector<SparseMatrix> left, right;
  left.reserve(new_left->dim());
  right.reserve(new_right->dim());
  for (Index g = 0; g < new_left->dim(); ++g) left.push_back(m.left_action(left_map[g]));
  for (Index g = 0; g < new_right->dim(); ++g) right.push_back(m.right_action(right_map[g]));
  return Bimodule(new_left, new_right, m.dim(), std::move(left), std::move(right),
                  m.basis_names(), true);
}

// outer = (inner quotient) (x) Z: expand each quotient basis element of the
// outer tensor into elementary triples through both sections.
std::vector<std::vector<std::tuple<Index, Index, Index, Rational>>> compose_lift(
    const BalancedTensor& outer, const BalancedTensor& inner) {
  std::vector<std::vector<std::tuple<Index, Index, Index, Rational>>> lift(outer.quotient.dim());
  std::vector<SparseVec> outer_cols = outer.section.columns();
  std::vector<SparseVec> inner_cols = inner.section.columns();
  for (Index c = 0; c < outer.quotient.dim(); ++c) {
    for (const auto& [idx, val] : outer_cols[c]) {
      Index u = static_cast<Index>(idx / outer.y_dim), v = static_cast<Index>(idx % outer.y_dim);
      for (const auto& [idx1, val1] : inner_cols[u]) {
        Index a = static_cast<Index>(idx1 / inner.y_dim),
              b = static_cast<Index>(idx1 % inner.y_dim);
        lift[c].emplace_back(a, b, v, val * val1);
      }
    }
  }
  return lift;
}

}  // namespace

TransportedBimodule phi(const MoritaWitness& w, const Bimodule& x) {
  if (x.left_algebra() != w.algebra || x.right_algebra() != w.algebra)
    throw AlgebraMismatchError("phi: expected a bimodule over the reduced algebra");
  BalancedTensor t1 = balanced_tensor(w.corners.p, x);
  BalancedTensor t2 = balanced_tensor(t1.quotient, w.corners.q);
  Bimodule transported = relabel_actions(t2.quotient, w.group_alg, w.group_alg, w.group_to_block,
                                         w.group_to_block);
  return TransportedBimodule{std::move(transported), compose_lift(t2, t1)};
}

TransportedBimodule gamma(const MoritaWitness& w, const Bimodule& y) {
  if (y.left_algebra() != w.group_alg || y.right_algebra() != w.group_alg)
    throw AlgebraMismatchError("gamma: expected a bimodule over the group algebra");
  Bimodule y_corner = relabel_actions(y, w.corners.corner, w.corners.corner, w.block_to_group,
                                      w.block_to_group);
  BalancedTensor t1 = balanced_tensor(w.corners.q, y_corner);
  BalancedTensor t2 = balanced_tensor(t1.quotient, w.corners.p);
  return TransportedBimodule{t2.quotient, compose_lift(t2, t1)};
}

bool roundtrip_check(const MoritaWitness& w, const Bimodule& x) {
  InducednessWitness iw = inducedness_check(x);
  if (!iw.induced)
    throw NotInducedError("roundtrip_check: coefficients are not induced (dim " +
                          std::to_string(iw.module_dim) + ", tensor dim " +
                          std::to_string(iw.tensor_dim) + ", rank " +
                          std::to_string(iw.map_rank) + ")");

  TransportedBimodule f = phi(w, x);
  TransportedBimodule g = gamma(w, f.module);

  const AlgebraPtr& a = w.algebra;
  const auto& p_vecs = w.corners.p_basis.rows;
  const auto& q_vecs = w.corners.q_basis.rows;
  std::vector<SparseVec> eval_cols(g.module.dim());
  for (Index z = 0; z < g.module.dim(); ++z) {
    SparseVec out;
    for (const auto& [q_idx, y_idx, p_idx, c] : g.lift[z]) {
      for (const auto& [p2_idx, x_idx, q2_idx, c2] : f.lift[y_idx]) {
        SparseVec left = a->multiply_vec(q_vecs[q_idx], p_vecs[p2_idx]);
        SparseVec right = a->multiply_vec(q_vecs[q2_idx], p_vecs[p_idx]);
        SparseVec v = x.apply_left(left, x.apply_right(unit_vec(x_idx), right));
        Rational scale = c * c2;
        for (const auto& [k, cv] : v) out.emplace_back(k, scale * cv);
      }
    }
    normalize_vec(out);
    eval_cols[z] = std::move(out);
  }
  SparseMatrix eval = SparseMatrix::from_columns(x.dim(), eval_cols);
  return g.module.dim() == x.dim() && rank(eval) == x.dim();
}

std::optional<std::string> p_projectivity_violation(const ReesSemigroup& s,
                                                    const MoritaWitness& w) {
  const AlgebraPtr& a = w.algebra;
  const Bimodule& p = w.corners.p;
  const std::size_t dp = p.dim(), db = w.corners.corner->dim();
  const SparseVec& e = w.idempotent.coords;

  // Right witness rho_R : p -> e (x) p splits the action P (x) A -> P and is
  // a right-module map by its shape; the content is e.p = p on P.
  for (Index j = 0; j < dp; ++j) {
    if (a->multiply_vec(e, w.corners.p_basis.rows[j]) != w.corners.p_basis.rows[j])
      return "right witness: e.p != p at P basis element " + p.basis_names()[j];
  }

  // Left witness sigma : p_j = b_j . g_mu -> b_j (x) g_mu with generators
  // g_mu = (i, p(lambda,i)^-1, mu).
  const Index p_li = *s.p(w.lambda, w.i);
  std::vector<SparseVec> gen_in_p(s.lambda_size());
  std::vector<Index> gen_p_index(s.lambda_size());
  for (Index mu = 0; mu < s.lambda_size(); ++mu) {
    Index amb = s.triple_index(static_cast<Index>(w.i), s.group().inv(p_li), mu);
    SparseVec coords = w.corners.p_basis.coordinates(unit_vec(amb));
    if (coords.size() != 1 || coords.front().second != 1)
      return "left witness: generator for column " + std::to_string(mu + 1) +
             " is not a P basis vector";
    gen_p_index[mu] = coords.front().first;
    gen_in_p[mu] = unit_vec(amb);
  }

  std::vector<Index> gen_of(dp), b_of(dp);
  for (Index j = 0; j < dp; ++j) {
    const SparseVec& pj = w.corners.p_basis.rows[j];
    if (pj.size() != 1 || pj.front().second != 1)
      return "left witness: P basis is not a block basis";
    ReesElement t = s.element_at(pj.front().first);
    // (i, g, mu) = (i, g, lambda) . (i, p(lambda,i)^-1, mu): the product rule
    // inserts p(lambda,i) between the two group factors.
    Index b_amb = s.triple_index(t.i, t.g, static_cast<Index>(w.lambda));
    SparseVec b_coords = w.corners.b_basis.coordinates(unit_vec(b_amb));
    if (b_coords.size() != 1 || b_coords.front().second != 1)
      return "left witness: factor of " + p.basis_names()[j] + " is not in the corner";
    if (a->multiply_vec(unit_vec(b_amb), gen_in_p[t.lambda]) != pj)
      return "left witness: factorization fails at P basis element " + p.basis_names()[j];
    gen_of[j] = gen_p_index[t.lambda];
    b_of[j] = b_coords.front().first;
  }

  // Left B-linearity: sigma(b'.p_j) = b'.sigma(p_j) for all basis pairs.
  using TermVec = std::vector<std::pair<std::uint64_t, Rational>>;
  for (Index k = 0; k < db; ++k) {
    SparseMatrix lk = p.left_action(k);
    for (Index j = 0; j < dp; ++j) {
      TermVec lhs, rhs;
      for (const auto& [m, c] : lk.mul(unit_vec(j)))
        lhs.emplace_back(static_cast<std::uint64_t>(b_of[m]) * dp + gen_of[m], c);
      for (const auto& [bk2, cb2] : w.corners.corner->product(k, b_of[j]))
        rhs.emplace_back(static_cast<std::uint64_t>(bk2) * dp + gen_of[j], cb2);
      std::sort(lhs.begin(), lhs.end());
      std::sort(rhs.begin(), rhs.end());
      if (lhs != rhs)
        return "left witness: sigma is not B-linear at (" +
               w.corners.corner->basis_names()[k] + ", " + p.basis_names()[j] + ")";
    }
  }
  return std::nullopt;
}

InvarianceReport invariance_harness(const ReesSemigroup& s, std::size_t max_degree,
                                    std::uint64_t chain_cap, unsigned threads) {
  InvarianceReport rep;
  rep.max_degree = max_degree;
  rep.certified_degrees = max_degree;  // degrees 0 .. max_degree-1

  AlgebraPtr reduced = s.reduced_algebra();
  AlgebraPtr full = s.full_algebra();
  std::vector<std::pair<std::string, AlgebraPtr>> algebras = {
      {"A(S)", reduced},
      {"Q[G]", group_algebra(s.group())},
      {"l1(S)", full},
      {"A(S)#", unitize(reduced)},
      {"l1(S)#", unitize(full)},
  };

  auto column = [&](const std::pair<std::string, AlgebraPtr>& entry) {
    ChainComplex c = hochschild_complex(entry.second, regular_bimodule(entry.second), max_degree,
                                        chain_cap);
    return InvarianceColumn{entry.first, homology_report(c, entry.second->name(), "regular")};
  };

  if (threads > 1) {
    std::vector<std::future<InvarianceColumn>> futures;
    futures.reserve(algebras.size());
    for (const auto& entry : algebras)
      futures.push_back(std::async(std::launch::async, column, entry));
    for (auto& f : futures) rep.columns.push_back(f.get());
  } else {
    for (const auto& entry : algebras) rep.columns.push_back(column(entry));
  }

  rep.main_equal = true;
  for (std::size_t n = 0; n < rep.certified_degrees; ++n)
    rep.main_equal &=
        rep.columns[0].report.homology_dims[n] == rep.columns[1].report.homology_dims[n];
  rep.all_equal_from_1 = true;
  for (std::size_t n = 1; n < rep.certified_degrees; ++n)
    for (std::size_t c = 1; c < rep.columns.size(); ++c)
      rep.all_equal_from_1 &=
          rep.columns[c].report.homology_dims[n] == rep.columns[0].report.homology_dims[n];
  return rep;
}

}  // namespace reeshom
