#include "reeshom/hochschild.hpp"

#include <algorithm>
#include <chrono>
#include <limits>

#include "reeshom/errors.hpp"

namespace reeshom {

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

using Term = std::pair<std::uint64_t, Rational>;
using TermVec = std::vector<Term>;

void normalize_terms(TermVec& v) {
  std::sort(v.begin(), v.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < v.size();) {
    std::uint64_t idx = v[i].first;
    Rational sum = std::move(v[i].second);
    for (++i; i < v.size() && v[i].first == idx; ++i) sum += v[i].second;
    if (sum != 0) {
      v[out].first = idx;
      v[out].second = std::move(sum);
      ++out;
    }
  }
  v.resize(out);
}

// Odometer over mixed-radix digits, least significant last.
bool next_digits(std::vector<Index>& digits, const std::vector<std::size_t>& radix) {
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (++digits[i] < radix[i]) return true;
    digits[i] = 0;
  }
  return false;
}

}  // namespace

ChainComplex::ChainComplex(std::vector<std::size_t> dims_in,
                           std::vector<SparseMatrix> boundaries_in)
    : dims(std::move(dims_in)), boundaries(std::move(boundaries_in)) {
  if (boundaries.size() + 1 != dims.size())
    throw Error("ChainComplex: need one boundary per adjacent pair of spaces");
  for (std::size_t k = 0; k < boundaries.size(); ++k)
    if (boundaries[k].rows() != dims[k] || boundaries[k].cols() != dims[k + 1])
      throw Error("ChainComplex: boundary shape mismatch at degree " + std::to_string(k + 1));
  for (std::size_t k = 0; k + 1 < boundaries.size(); ++k)
    if (!boundaries[k].times(boundaries[k + 1]).is_zero())
      throw Error("ChainComplex: d.d != 0 at degrees " + std::to_string(k + 2) + "," +
                  std::to_string(k + 1));
}

ChainComplex hochschild_complex(const AlgebraPtr& a, const Bimodule& x, std::size_t max_degree,
                                std::uint64_t chain_cap) {
  if (x.left_algebra() != a || x.right_algebra() != a)
    throw AlgebraMismatchError("hochschild_complex: coefficients must be a bimodule over a");
  const std::size_t da = a->dim(), dx = x.dim();

  std::vector<std::size_t> dims(max_degree + 1);
  for (std::size_t n = 0; n <= max_degree; ++n) {
    std::uint64_t d = dx;
    for (std::size_t k = 0; k < n; ++k) {
      d *= da;
      if (d > chain_cap)
        throw SizeGuardError("hochschild_complex: chain space at degree " + std::to_string(n) +
                             " exceeds the cap of " + std::to_string(chain_cap),
                             static_cast<std::size_t>(d));
    }
    dims[n] = static_cast<std::size_t>(d);
  }

  // Columns of the left/right action matrices, indexed [algebra basis][x basis].
  std::vector<std::vector<SparseVec>> lcols(da), rcols(da);
  for (Index g = 0; g < da; ++g) {
    lcols[g] = x.left_action(g).columns();
    rcols[g] = x.right_action(g).columns();
  }

  std::vector<SparseMatrix> boundaries;
  boundaries.reserve(max_degree);
  std::vector<std::uint64_t> pw(max_degree + 1, 1);
  for (std::size_t k = 1; k <= max_degree; ++k) pw[k] = pw[k - 1] * da;

  for (std::size_t n = 1; n <= max_degree; ++n) {
    std::vector<Triplet> ts;
    ts.reserve(dims[n] * (n + 1));
    std::vector<Index> digits(n + 1, 0);  // (x, a_1 .. a_n)
    std::vector<std::size_t> radix(n + 1, da);
    radix[0] = dx;
    Index col = 0;
    do {
      const Index xb = digits[0];
      // (x.a_1) (x) a_2 ... a_n
      {
        std::uint64_t sfx = 0;
        for (std::size_t j = 2; j <= n; ++j) sfx += digits[j] * pw[n - j];
        for (const auto& [x2, c] : rcols[digits[1]][xb])
          ts.emplace_back(static_cast<Index>(x2 * pw[n - 1] + sfx), col, c);
      }
      // inner faces: merge a_k a_{k+1} with sign (-1)^k
      for (std::size_t k = 1; k + 1 <= n; ++k) {
        std::uint64_t base = xb * pw[n - 1];
        for (std::size_t j = 1; j < k; ++j) base += digits[j] * pw[n - 1 - j];
        for (std::size_t j = k + 2; j <= n; ++j) base += digits[j] * pw[n - j];
        const bool neg = (k % 2) == 1;
        for (const auto& [m, c] : a->product(digits[k], digits[k + 1]))
          ts.emplace_back(static_cast<Index>(base + m * pw[n - 1 - k]), col, neg ? Rational(-c) : c);
      }
      // (-1)^n (a_n.x) (x) a_1 ... a_{n-1}
      {
        std::uint64_t sfx = 0;
        for (std::size_t j = 1; j + 1 <= n; ++j) sfx += digits[j] * pw[n - 1 - j];
        const bool neg = (n % 2) == 1;
        for (const auto& [x2, c] : lcols[digits[n]][xb])
          ts.emplace_back(static_cast<Index>(x2 * pw[n - 1] + sfx), col, neg ? Rational(-c) : c);
      }
      ++col;
    } while (next_digits(digits, radix));
    boundaries.push_back(SparseMatrix::from_triplets(dims[n - 1], dims[n], std::move(ts)));
  }
  return ChainComplex(std::move(dims), std::move(boundaries));
}

HomologyReport homology_report(const ChainComplex& c, std::string algebra_name,
                               std::string coefficient_name) {
  HomologyReport rep;
  rep.algebra_name = std::move(algebra_name);
  rep.coefficient_name = std::move(coefficient_name);
  rep.max_degree = c.top_degree();
  rep.chain_dims = c.dims;

  const std::size_t nb = c.boundaries.size();
  std::vector<std::size_t> h_ranks(nb), c_ranks(nb);
  rep.timings_ms.resize(nb);
  for (std::size_t k = 0; k < nb; ++k) {
    auto t0 = std::chrono::steady_clock::now();
    const SparseMatrix& d = c.boundaries[k];
    const bool cols_first = d.rows() <= d.cols();
    h_ranks[k] = rank_oriented(d, cols_first ? RankOrientation::ByColumns
                                             : RankOrientation::ByRows);
    c_ranks[k] = rank_oriented(d, cols_first ? RankOrientation::ByRows
                                             : RankOrientation::ByColumns);
    if (h_ranks[k] != c_ranks[k])
      throw Error("homology_report: rank disagreement between orientations at degree " +
                  std::to_string(k + 1));
    rep.timings_ms[k] = ms_since(t0);
  }
  rep.boundary_ranks = h_ranks;

  auto dims_from = [&](const std::vector<std::size_t>& ranks) {
    std::vector<std::size_t> out(c.dims.size());
    for (std::size_t n = 0; n < c.dims.size(); ++n) {
      std::size_t rank_in = n < nb ? ranks[n] : 0;        // rank d_{n+1}
      std::size_t rank_out = n > 0 ? ranks[n - 1] : 0;    // rank d_n
      out[n] = c.dims[n] - rank_out - rank_in;
    }
    return out;
  };
  rep.homology_dims = dims_from(h_ranks);
  rep.cohomology_dims = dims_from(c_ranks);
  rep.top_degree_truncated = true;
  return rep;
}

std::vector<std::size_t> cohomology_dims(const ChainComplex& c) {
  return homology_report(c).cohomology_dims;
}

namespace {

// Chains of the bar complex in degree n >= 1 are (u_0, u_1, .., u_{n-1}, x)
// with u_0 in the unitization (index da = the adjoined unit) and the rest in
// the algebra; degree 0 chains are module elements.
struct BarSpace {
  const FiniteAlgebra* a;
  const Bimodule* x;
  std::size_t da, dx;
  Index one;  // index of the adjoined unit in slot 0

  std::uint64_t dim(std::size_t n) const {
    if (n == 0) return dx;
    std::uint64_t d = da + 1;
    for (std::size_t k = 1; k < n; ++k) d *= da;
    return d * dx;
  }

  std::uint64_t encode(const std::vector<Index>& us, Index xb) const {
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < us.size(); ++i) idx = i == 0 ? us[0] : idx * da + us[i];
    return idx * dx + xb;
  }

  // b on a degree-n basis chain, appended to out.
  void boundary(const std::vector<Index>& us, Index xb, TermVec& out) const {
    const std::size_t n = us.size();
    if (n == 0) return;
    std::vector<Index> t(us.begin() + 1, us.end());
    if (n == 1) {
      if (us[0] == one) {
        out.emplace_back(xb, Rational(1));
      } else {
        for (const auto& [x2, c] : x->left_action(us[0]).mul(unit_vec(xb)))
          out.emplace_back(x2, c);
      }
      return;
    }
    for (std::size_t k = 1; k <= n - 1; ++k) {
      // merge u_{k-1} u_k
      const bool neg = (k % 2) == 0;
      std::vector<Index> merged;
      merged.reserve(n - 1);
      for (std::size_t j = 0; j + 1 < k; ++j) merged.push_back(us[j]);
      merged.push_back(0);  // placeholder
      for (std::size_t j = k + 1; j < n; ++j) merged.push_back(us[j]);
      if (k == 1 && us[0] == one) {
        merged[0] = us[1];
        out.emplace_back(encode(merged, xb), neg ? Rational(-1) : Rational(1));
      } else if (k == 1) {
        for (const auto& [m, c] : a->product(us[0], us[1])) {
          merged[0] = m;
          out.emplace_back(encode(merged, xb), neg ? Rational(-c) : c);
        }
      } else {
        for (const auto& [m, c] : a->product(us[k - 1], us[k])) {
          merged[k - 1] = m;
          out.emplace_back(encode(merged, xb), neg ? Rational(-c) : c);
        }
      }
    }
    // (-1)^{n-1} u_0 .. u_{n-2} (x) u_{n-1}.x
    {
      const bool neg = ((n - 1) % 2) == 1;
      std::vector<Index> head(us.begin(), us.end() - 1);
      for (const auto& [x2, c] : x->left_action(us[n - 1]).mul(unit_vec(xb)))
        out.emplace_back(encode(head, x2), neg ? Rational(-c) : c);
    }
  }

  // s: prepend the unit; kills chains whose first slot is the unit.
  bool contract(const std::vector<Index>& us, std::vector<Index>& out_us) const {
    if (!us.empty() && us[0] == one) return false;
    out_us.assign(1, one);
    out_us.insert(out_us.end(), us.begin(), us.end());
    return true;
  }
};

}  // namespace

HomotopyResult bar_homotopy_check(const AlgebraPtr& a, const Bimodule& x, std::size_t max_degree,
                                  std::uint64_t enum_cap) {
  if (x.left_algebra() != a)
    throw AlgebraMismatchError("bar_homotopy_check: module is not over the given algebra");
  BarSpace bar{a.get(), &x, a->dim(), x.dim(), static_cast<Index>(a->dim())};
  for (std::size_t n = 0; n <= max_degree; ++n)
    if (bar.dim(n) > enum_cap)
      throw SizeGuardError("bar_homotopy_check: degree " + std::to_string(n) +
                           " enumerates " + std::to_string(bar.dim(n)) + " chains",
                           static_cast<std::size_t>(bar.dim(n)));

  TermVec acc, faces;
  std::vector<Index> s_chain, scratch;
  for (std::size_t n = 0; n <= max_degree; ++n) {
    std::vector<Index> digits(n + 1, 0);  // u_0 .. u_{n-1}, x
    std::vector<std::size_t> radix(n + 1, bar.da);
    if (n > 0) radix[0] = bar.da + 1;
    radix[n] = bar.dx;
    std::vector<Index> us(n);
    do {
      for (std::size_t i = 0; i < n; ++i) us[i] = digits[i];
      const Index xb = digits[n];
      acc.clear();
      // b(s(chain))
      if (bar.contract(us, s_chain)) bar.boundary(s_chain, xb, acc);
      // s(b(chain))
      faces.clear();
      bar.boundary(us, xb, faces);
      for (const auto& [idx, c] : faces) {
        // decode the degree-(n-1) chain
        std::uint64_t rest = idx / bar.dx;
        Index fx = static_cast<Index>(idx % bar.dx);
        scratch.resize(n >= 1 ? n - 1 : 0);
        for (std::size_t i = scratch.size(); i-- > 0;) {
          std::size_t r = i == 0 ? bar.da + 1 : bar.da;
          scratch[i] = static_cast<Index>(rest % r);
          rest /= r;
        }
        if (bar.contract(scratch, s_chain))
          acc.emplace_back(bar.encode(s_chain, fx), c);
      }
      normalize_terms(acc);
      const std::uint64_t self = n == 0 ? xb : bar.encode(us, xb);
      if (acc.size() != 1 || acc.front().first != self || acc.front().second != 1) {
        return HomotopyResult{false,
                              HomotopyViolation{n, self,
                                                "b.s + s.b differs from the identity"}};
      }
    } while (next_digits(digits, radix));
  }
  return HomotopyResult{};
}

std::optional<std::string> right_splitting_violation(const AlgebraPtr& a,
                                                     const SparseMatrix& rho) {
  const std::size_t da = a->dim();
  if (rho.rows() != da * da || rho.cols() != da)
    return "rho must map A into A(x)A (shape " + std::to_string(da * da) + " x " +
           std::to_string(da) + ")";
  std::vector<SparseVec> rho_cols = rho.columns();
  const auto& names = a->basis_names();
  for (Index s = 0; s < da; ++s) {
    SparseVec mult;
    for (const auto& [uv, c] : rho_cols[s]) {
      Index u = static_cast<Index>(uv / da), v = static_cast<Index>(uv % da);
      for (const auto& [m, cm] : a->product(u, v)) mult.emplace_back(m, c * cm);
    }
    normalize_vec(mult);
    if (mult != unit_vec(s)) return "pi.rho != id at basis element " + names[s];
  }
  for (Index s = 0; s < da; ++s) {
    for (Index t = 0; t < da; ++t) {
      SparseVec lhs;  // rho(s t), extended bilinearly
      for (const auto& [m, cm] : a->product(s, t))
        for (const auto& [uv, c] : rho_cols[m]) lhs.emplace_back(uv, cm * c);
      normalize_vec(lhs);
      SparseVec rhs;  // rho(s).t on the second tensor slot
      for (const auto& [uv, c] : rho_cols[s]) {
        Index u = static_cast<Index>(uv / da), v = static_cast<Index>(uv % da);
        for (const auto& [w, cw] : a->product(v, t))
          rhs.emplace_back(static_cast<Index>(u * da + w), c * cw);
      }
      normalize_vec(rhs);
      if (lhs != rhs)
        return "rho(s.t) != rho(s).t at (" + names[s] + ", " + names[t] + ")";
    }
  }
  return std::nullopt;
}

HomotopyResult simplicial_homotopy_identity(const AlgebraPtr& a, const SparseMatrix& rho,
                                            std::size_t max_degree, std::uint64_t enum_cap) {
  const std::size_t da = a->dim();
  std::vector<SparseVec> rho_cols = rho.columns();
  std::vector<std::uint64_t> pw(max_degree + 2, 1);
  for (std::size_t k = 1; k < pw.size(); ++k) pw[k] = pw[k - 1] * da;

  // b on A^(x)m chains encoded base da, digits most significant first.
  auto boundary = [&](const std::vector<Index>& ds, TermVec& out, const Rational& scale) {
    const std::size_t m = ds.size();
    for (std::size_t k = 1; k + 1 <= m; ++k) {
      std::uint64_t base = 0;
      for (std::size_t j = 0; j + 1 < k; ++j) base += ds[j] * pw[m - 2 - j];
      for (std::size_t j = k + 1; j < m; ++j) base += ds[j] * pw[m - 1 - j];
      const bool neg = (k % 2) == 0;
      for (const auto& [mm, c] : a->product(ds[k - 1], ds[k]))
        out.emplace_back(base + mm * pw[m - 1 - k], neg ? Rational(-(scale * c)) : Rational(scale * c));
    }
  };

  TermVec acc, faces;
  std::vector<Index> scratch;
  for (std::size_t n = 2; n <= max_degree; ++n) {
    if (pw[n] > enum_cap)
      throw SizeGuardError("simplicial homotopy: degree " + std::to_string(n) + " enumerates " +
                           std::to_string(pw[n]) + " chains",
                           static_cast<std::size_t>(pw[n]));
    std::vector<Index> digits(n, 0);
    std::vector<std::size_t> radix(n, da);
    do {
      acc.clear();
      // b((rho (x) 1)(chain))
      std::uint64_t tail = 0;
      for (std::size_t j = 1; j < n; ++j) tail += digits[j] * pw[n - 1 - j];
      scratch.resize(n + 1);
      for (const auto& [uv, c] : rho_cols[digits[0]]) {
        scratch[0] = static_cast<Index>(uv / da);
        scratch[1] = static_cast<Index>(uv % da);
        for (std::size_t j = 1; j < n; ++j) scratch[j + 1] = digits[j];
        faces.clear();
        boundary(scratch, faces, c);
        for (auto& t : faces) acc.push_back(std::move(t));
      }
      // (rho (x) 1)(b(chain))
      faces.clear();
      boundary(digits, faces, Rational(1));
      for (const auto& [idx, c] : faces) {
        Index first = static_cast<Index>(idx / pw[n - 2]);
        std::uint64_t rest = idx % pw[n - 2];
        for (const auto& [uv, cr] : rho_cols[first])
          acc.emplace_back(uv * pw[n - 2] + rest, c * cr);
      }
      normalize_terms(acc);
      std::uint64_t self = 0;
      for (std::size_t j = 0; j < n; ++j) self += digits[j] * pw[n - 1 - j];
      if (acc.size() != 1 || acc.front().first != self || acc.front().second != 1)
        return HomotopyResult{false,
                              HomotopyViolation{n, self,
                                                "b.(rho(x)1) + (rho(x)1).b differs from the "
                                                "identity"}};
    } while (next_digits(digits, radix));
  }
  return HomotopyResult{};
}

HomotopyResult hunital_homotopy_check(const AlgebraPtr& a, const SparseMatrix& rho,
                                      std::size_t max_degree, std::uint64_t enum_cap) {
  if (auto why = right_splitting_violation(a, rho))
    throw BadSplittingError("hunital_homotopy_check: " + *why);
  return simplicial_homotopy_identity(a, rho, max_degree, enum_cap);
}

}  // namespace reeshom
