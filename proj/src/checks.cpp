#include "reeshom/checks.hpp"

#include <sstream>

#include "reeshom/bimodule.hpp"
#include "reeshom/errors.hpp"
#include "reeshom/linalg.hpp"

namespace reeshom {

namespace {

// pi applied to a vector in A (x) A coordinates.
SparseVec tensor_multiply(const FiniteAlgebra& a, const SparseVec& v) {
  const std::size_t d = a.dim();
  SparseVec out;
  for (const auto& [uv, c] : v) {
    Index u = static_cast<Index>(uv / d), w = static_cast<Index>(uv % d);
    for (const auto& [m, cm] : a.product(u, w)) out.emplace_back(m, c * cm);
  }
  normalize_vec(out);
  return out;
}

std::string dims_to_string(const std::vector<std::size_t>& v, std::size_t from, std::size_t to) {
  std::ostringstream os;
  os << "[";
  for (std::size_t n = from; n <= to && n < v.size(); ++n) {
    if (n > from) os << ", ";
    os << v[n];
  }
  os << "]";
  return os.str();
}

}  // namespace

SparseMatrix right_splitting(const ReesSemigroup& s, AlgebraKind which) {
  const bool full = which == AlgebraKind::Full;
  const AlgebraPtr a = full ? s.full_algebra() : s.reduced_algebra();
  const std::size_t d = a->dim();
  const Index zero = s.zero_index();
  const Index e1 = s.idempotent_e_index(0);

  std::vector<Triplet> ts;
  for (Index t = 0; t < s.n_triples(); ++t) {
    const Index ei = s.idempotent_e_index(s.element_at(t).i);
    ts.emplace_back(static_cast<Index>(ei * d + t), t, Rational(1));
    if (full) {
      ts.emplace_back(static_cast<Index>(ei * d + zero), t, Rational(-1));
      ts.emplace_back(static_cast<Index>(e1 * d + zero), t, Rational(1));
    }
  }
  if (full) ts.emplace_back(static_cast<Index>(e1 * d + zero), zero, Rational(1));
  return SparseMatrix::from_triplets(d * d, d, std::move(ts));
}

SparseMatrix left_splitting(const ReesSemigroup& s, AlgebraKind which) {
  const bool full = which == AlgebraKind::Full;
  const AlgebraPtr a = full ? s.full_algebra() : s.reduced_algebra();
  const std::size_t d = a->dim();
  const Index zero = s.zero_index();
  const Index f1 = s.idempotent_f_index(0);

  std::vector<Triplet> ts;
  for (Index t = 0; t < s.n_triples(); ++t) {
    const Index fl = s.idempotent_f_index(s.element_at(t).lambda);
    ts.emplace_back(static_cast<Index>(t * d + fl), t, Rational(1));
    if (full) {
      ts.emplace_back(static_cast<Index>(zero * d + fl), t, Rational(-1));
      ts.emplace_back(static_cast<Index>(zero * d + f1), t, Rational(1));
    }
  }
  if (full) ts.emplace_back(static_cast<Index>(zero * d + f1), zero, Rational(1));
  return SparseMatrix::from_triplets(d * d, d, std::move(ts));
}

std::optional<std::string> left_splitting_violation(const AlgebraPtr& a,
                                                    const SparseMatrix& rho) {
  const std::size_t d = a->dim();
  if (rho.rows() != d * d || rho.cols() != d)
    return "rho must map A into A(x)A (shape " + std::to_string(d * d) + " x " +
           std::to_string(d) + ")";
  std::vector<SparseVec> cols = rho.columns();
  const auto& names = a->basis_names();
  for (Index t = 0; t < d; ++t)
    if (tensor_multiply(*a, cols[t]) != unit_vec(t))
      return "pi.rho != id at basis element " + names[t];
  for (Index t = 0; t < d; ++t) {
    for (Index x = 0; x < d; ++x) {
      SparseVec lhs;  // rho(t.x)
      for (const auto& [m, cm] : a->product(t, x))
        for (const auto& [uv, c] : cols[m]) lhs.emplace_back(uv, cm * c);
      normalize_vec(lhs);
      SparseVec rhs;  // t.rho(x) on the first tensor slot
      for (const auto& [uv, c] : cols[x]) {
        Index u = static_cast<Index>(uv / d), v = static_cast<Index>(uv % d);
        for (const auto& [w, cw] : a->product(t, u))
          rhs.emplace_back(static_cast<Index>(w * d + v), c * cw);
      }
      normalize_vec(rhs);
      if (lhs != rhs) return "rho(t.x) != t.rho(x) at (" + names[t] + ", " + names[x] + ")";
    }
  }
  return std::nullopt;
}

CheckReport projectivity_check(const ReesSemigroup& s) {
  CheckReport rep;
  rep.check_name = "projectivity";
  rep.passed = true;
  auto record = [&](const char* key, std::optional<std::string> violation) {
    rep.add(key, violation ? *violation : "ok");
    if (violation) rep.passed = false;
  };
  record("reduced.right", right_splitting_violation(s.reduced_algebra(),
                                                    right_splitting(s, AlgebraKind::Reduced)));
  record("reduced.left",
         left_splitting_violation(s.reduced_algebra(), left_splitting(s, AlgebraKind::Reduced)));
  record("full.right",
         right_splitting_violation(s.full_algebra(), right_splitting(s, AlgebraKind::Full)));
  record("full.left",
         left_splitting_violation(s.full_algebra(), left_splitting(s, AlgebraKind::Full)));
  return rep;
}

CheckReport self_induced_check(const AlgebraPtr& a, const std::string& instance_name) {
  CheckReport rep;
  rep.check_name = "self-induced";
  rep.instance_name = instance_name;
  InducednessWitness w = inducedness_check(regular_bimodule(a));
  rep.passed = w.induced;
  rep.add("algebra", a->name());
  rep.add("dim", std::to_string(w.module_dim));
  rep.add("tensor_dim", std::to_string(w.tensor_dim));
  rep.add("multiplication_rank", std::to_string(w.map_rank));
  return rep;
}

SparseMatrix biprojective_diagonal(const ReesSemigroup& s, std::size_t i, std::size_t lambda) {
  if (!s.p(lambda, i))
    throw ZeroSandwichEntryError("biprojective_diagonal: sandwich entry (" +
                                 std::to_string(lambda + 1) + "," + std::to_string(i + 1) +
                                 ") is zero");
  const GroupTable& g = s.group();
  const std::size_t d = s.n_triples();
  const Index p_inv = g.inv(*s.p(lambda, i));
  const Rational weight(1, static_cast<long>(g.order));

  std::vector<Triplet> ts;
  ts.reserve(d * g.order);
  for (Index t = 0; t < d; ++t) {
    ReesElement x = s.element_at(t);  // (j, g, mu)
    for (Index h = 0; h < g.order; ++h) {
      Index first = s.triple_index(x.i, g.mul(g.mul(x.g, h), p_inv), static_cast<Index>(lambda));
      Index second = s.triple_index(static_cast<Index>(i), g.inv(h), x.lambda);
      ts.emplace_back(static_cast<Index>(first * d + second), t, weight);
    }
  }
  return SparseMatrix::from_triplets(d * d, d, std::move(ts));
}

std::optional<std::string> bimodule_splitting_violation(const AlgebraPtr& a,
                                                        const SparseMatrix& rho) {
  const std::size_t d = a->dim();
  if (rho.rows() != d * d || rho.cols() != d)
    return "rho must map A into A(x)A (shape " + std::to_string(d * d) + " x " +
           std::to_string(d) + ")";
  std::vector<SparseVec> cols = rho.columns();
  const auto& names = a->basis_names();
  for (Index t = 0; t < d; ++t)
    if (tensor_multiply(*a, cols[t]) != unit_vec(t))
      return "pi.rho != id at basis element " + names[t];
  for (Index x = 0; x < d; ++x) {
    for (Index y = 0; y < d; ++y) {
      SparseVec mid;  // rho(x.y)
      for (const auto& [m, cm] : a->product(x, y))
        for (const auto& [uv, c] : cols[m]) mid.emplace_back(uv, cm * c);
      normalize_vec(mid);
      SparseVec lhs;  // x.rho(y)
      for (const auto& [uv, c] : cols[y]) {
        Index u = static_cast<Index>(uv / d), v = static_cast<Index>(uv % d);
        for (const auto& [w, cw] : a->product(x, u))
          lhs.emplace_back(static_cast<Index>(w * d + v), c * cw);
      }
      normalize_vec(lhs);
      SparseVec rhs;  // rho(x).y
      for (const auto& [uv, c] : cols[x]) {
        Index u = static_cast<Index>(uv / d), v = static_cast<Index>(uv % d);
        for (const auto& [w, cw] : a->product(v, y))
          rhs.emplace_back(static_cast<Index>(u * d + w), c * cw);
      }
      normalize_vec(rhs);
      if (lhs != mid)
        return "x.rho(y) != rho(x.y) at (" + names[x] + ", " + names[y] + ")";
      if (mid != rhs)
        return "rho(x.y) != rho(x).y at (" + names[x] + ", " + names[y] + ")";
    }
  }
  return std::nullopt;
}

CheckReport biprojectivity_check(const ReesSemigroup& s) {
  CheckReport rep;
  rep.check_name = "biprojectivity";
  auto [i, lambda] = default_witness_position(s);
  SparseMatrix rho = biprojective_diagonal(s, i, lambda);
  auto violation = bimodule_splitting_violation(s.reduced_algebra(), rho);
  rep.passed = !violation;
  rep.add("idempotent", "(" + std::to_string(i + 1) + "," + std::to_string(lambda + 1) + ")");
  rep.add("coefficient", "1/" + std::to_string(s.group().order));
  rep.add("identity", violation ? *violation : "ok");
  return rep;
}

CheckReport weak_amenability_check(const ReesSemigroup& s, std::size_t max_degree,
                                   std::uint64_t chain_cap) {
  CheckReport rep;
  rep.check_name = "weak-amenability";
  rep.passed = true;
  std::vector<std::pair<std::string, AlgebraPtr>> algebras = {
      {"A(S)", s.reduced_algebra()},
      {"l1(S)", s.full_algebra()},
      {"A(S)#", unitize(s.reduced_algebra())},
      {"l1(S)#", unitize(s.full_algebra())},
  };
  for (const auto& [name, a] : algebras) {
    ChainComplex c = hochschild_complex(a, regular_bimodule(a), max_degree + 1, chain_cap);
    HomologyReport hr = homology_report(c, name, "regular");
    for (std::size_t n = 1; n <= max_degree; ++n) rep.passed &= hr.homology_dims[n] == 0;
    rep.add(name + ".H1(A,A*)", dims_to_string(hr.homology_dims, 1, max_degree));
  }
  return rep;
}

std::size_t h1_dual_direct(const AlgebraPtr& a) {
  const std::size_t d = a->dim();
  // delta0 : A* -> Hom(A, A*), (delta0 f)(a)(x) = f(xa) - f(ax)
  std::vector<Triplet> ts0;
  for (Index aa = 0; aa < d; ++aa)
    for (Index x = 0; x < d; ++x) {
      const Index row = static_cast<Index>(aa * d + x);
      for (const auto& [u, c] : a->product(x, aa)) ts0.emplace_back(row, u, c);
      for (const auto& [u, c] : a->product(aa, x)) ts0.emplace_back(row, u, -c);
    }
  SparseMatrix delta0 = SparseMatrix::from_triplets(d * d, d, std::move(ts0));

  // delta1 : Hom(A, A*) -> Hom(A (x) A, A*),
  // (delta1 f)(a,b)(x) = f(b)(xa) - f(ab)(x) + f(a)(bx)
  std::vector<Triplet> ts1;
  for (Index aa = 0; aa < d; ++aa)
    for (Index bb = 0; bb < d; ++bb)
      for (Index x = 0; x < d; ++x) {
        const Index row = static_cast<Index>((static_cast<std::size_t>(aa) * d + bb) * d + x);
        for (const auto& [y, c] : a->product(x, aa))
          ts1.emplace_back(row, static_cast<Index>(bb * d + y), c);
        for (const auto& [m, c] : a->product(aa, bb))
          ts1.emplace_back(row, static_cast<Index>(m * d + x), -c);
        for (const auto& [y, c] : a->product(bb, x))
          ts1.emplace_back(row, static_cast<Index>(aa * d + y), c);
      }
  SparseMatrix delta1 = SparseMatrix::from_triplets(d * d * d, d * d, std::move(ts1));

  if (!delta1.times(delta0).is_zero()) throw Error("h1_dual_direct: delta.delta != 0");
  return (d * d - rank(delta1)) - rank(delta0);
}

}  // namespace reeshom
