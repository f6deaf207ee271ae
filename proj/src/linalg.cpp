#include "reeshom/linalg.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <cassert>
#include <stdexcept>

#include "reeshom/errors.hpp"

namespace reeshom {

bool SubspaceBasis::contains(const SparseVec& v) const {
  SparseVec r = v;
  for (std::size_t k = 0; k < rows.size() && !r.empty(); ++k) {
    const Rational* c = find_entry(r, pivots[k]);
    if (c) r = combine(Rational(1), r, -*c, rows[k]);
  }
  return r.empty();
}

SparseVec SubspaceBasis::coordinates(const SparseVec& v) const {
  SparseVec r = v;
  SparseVec coords;
  for (std::size_t k = 0; k < rows.size() && !r.empty(); ++k) {
    const Rational* c = find_entry(r, pivots[k]);
    if (c) {
      coords.emplace_back(static_cast<Index>(k), *c);
      r = combine(Rational(1), r, -coords.back().second, rows[k]);
    }
  }
  if (!r.empty()) throw Error("coordinates: vector is not in the span of the basis");
  return coords;
}

bool EchelonAccumulator::add(SparseVec v) {
  make_primitive(v);
  while (!v.empty()) {
    Index lead = v.front().first;
    auto it = pivot_slot_.find(lead);
    if (it == pivot_slot_.end()) {
      pivot_slot_.emplace(lead, rows_.size());
      rows_.push_back(std::move(v));
      return true;
    }
    SparseVec& p = rows_[it->second];
    // Keep the sparser vector as the pivot; this is what controls fill-in.
    if (v.size() < p.size()) {
      make_primitive(v);
      std::swap(v, p);
    }
    v = subtract_scaled(v, v.front().second / p.front().second, p);
  }
  return false;
}

SubspaceBasis EchelonAccumulator::finish() && {
  SubspaceBasis b;
  b.ambient = ambient_;
  std::vector<std::size_t> order(rows_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t c) {
    return rows_[a].front().first < rows_[c].front().first;
  });
  b.rows.reserve(rows_.size());
  b.pivots.reserve(rows_.size());
  for (std::size_t i : order) {
    b.rows.push_back(std::move(rows_[i]));
    b.pivots.push_back(b.rows.back().front().first);
  }
  // Normalize leading entries, then clear pivot columns above.
  for (auto& r : b.rows) {
    Rational lead = r.front().second;
    if (lead != 1)
      for (auto& [i, v] : r) v /= lead;
  }
  for (std::size_t i = b.rows.size(); i-- > 0;) {
    for (std::size_t j = i + 1; j < b.rows.size(); ++j) {
      const Rational* c = find_entry(b.rows[i], b.pivots[j]);
      if (c) b.rows[i] = combine(Rational(1), b.rows[i], -*c, b.rows[j]);
    }
  }
  rows_.clear();
  pivot_slot_.clear();
  return b;
}

namespace {

struct Int64Overflow {};

// Fraction-free elimination over machine integers with exact overflow
// detection; any overflow falls back to the arbitrary-precision path. The
// boundary matrices this engine sees keep tiny entries, so the fallback is
// the exception.
class Int64Echelon {
 public:
  using Vec = std::vector<std::pair<Index, std::int64_t>>;

  bool add(Vec v) {
    reduce_content(v);
    while (!v.empty()) {
      auto it = pivot_slot_.find(v.front().first);
      if (it == pivot_slot_.end()) {
        pivot_slot_.emplace(v.front().first, rows_.size());
        rows_.push_back(std::move(v));
        return true;
      }
      Vec& p = rows_[it->second];
      if (v.size() < p.size()) std::swap(v, p);
      v = ff_step(v, p);
      reduce_content(v);
    }
    return false;
  }

  std::size_t rank() const { return rows_.size(); }

 private:
  static std::int64_t to_i64(__int128 x) {
    if (x > std::numeric_limits<std::int64_t>::max() ||
        x < std::numeric_limits<std::int64_t>::min())
      throw Int64Overflow{};
    return static_cast<std::int64_t>(x);
  }

  static __int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static void reduce_content(Vec& v) {
    if (v.empty()) return;
    std::int64_t g = 0;
    for (const auto& [i, x] : v) {
      g = static_cast<std::int64_t>(gcd128(g, x));
      if (g == 1) break;
    }
    if (v.front().second < 0) g = -g;
    if (g != 1)
      for (auto& [i, x] : v) x /= g;
  }

  // lead(p) * v - lead(v) * p, exact in 128 bits.
  static Vec ff_step(const Vec& v, const Vec& p) {
    Vec r;
    r.reserve(v.size() + p.size());
    const __int128 a = p.front().second, b = -static_cast<__int128>(v.front().second);
    std::size_t i = 0, j = 0;
    while (i < v.size() && j < p.size()) {
      if (v[i].first < p[j].first) {
        r.emplace_back(v[i].first, to_i64(a * v[i].second));
        ++i;
      } else if (p[j].first < v[i].first) {
        r.emplace_back(p[j].first, to_i64(b * p[j].second));
        ++j;
      } else {
        __int128 s = a * v[i].second + b * p[j].second;
        if (s != 0) r.emplace_back(v[i].first, to_i64(s));
        ++i;
        ++j;
      }
    }
    for (; i < v.size(); ++i) r.emplace_back(v[i].first, to_i64(a * v[i].second));
    for (; j < p.size(); ++j) r.emplace_back(p[j].first, to_i64(b * p[j].second));
    return r;
  }

  std::unordered_map<Index, std::size_t> pivot_slot_;
  std::vector<Vec> rows_;
};

// Integer image of a rational vector, or nothing when it does not fit.
std::optional<Int64Echelon::Vec> to_int64_vec(SparseVec v) {
  make_primitive(v);
  Int64Echelon::Vec out;
  out.reserve(v.size());
  for (const auto& [i, val] : v) {
    const auto& q = val.backend().data();
    if (mpz_cmp_ui(mpq_denref(q), 1) != 0) return std::nullopt;
    if (!mpz_fits_slong_p(mpq_numref(q))) return std::nullopt;
    out.emplace_back(i, static_cast<std::int64_t>(mpz_get_si(mpq_numref(q))));
  }
  return out;
}

std::size_t rank_vectors(std::size_t ambient, std::vector<SparseVec> vecs) {
  std::stable_sort(vecs.begin(), vecs.end(),
                   [](const SparseVec& a, const SparseVec& b) { return a.size() < b.size(); });
  try {
    Int64Echelon fast;
    bool fits = true;
    for (const auto& v : vecs) {
      auto iv = to_int64_vec(v);
      if (!iv) {
        fits = false;
        break;
      }
      fast.add(std::move(*iv));
    }
    if (fits) return fast.rank();
  } catch (const Int64Overflow&) {
    // fall through to the exact path
  }
  EchelonAccumulator acc(ambient);
  for (auto& v : vecs) acc.add(std::move(v));
  return acc.rank();
}

std::size_t rank_feeding_rows(const SparseMatrix& m) {
  std::vector<SparseVec> vecs;
  vecs.reserve(m.rows());
  for (Index r = 0; r < m.rows(); ++r) vecs.push_back(m.row(r));
  return rank_vectors(m.cols(), std::move(vecs));
}

std::size_t rank_feeding_columns(const SparseMatrix& m) {
  return rank_vectors(m.rows(), m.columns());
}

}  // namespace

std::size_t rank(const SparseMatrix& m) { return rank_oriented(m, RankOrientation::Auto); }

std::size_t rank_oriented(const SparseMatrix& m, RankOrientation o) {
  switch (o) {
    case RankOrientation::ByRows:
      return rank_feeding_rows(m);
    case RankOrientation::ByColumns:
      return rank_feeding_columns(m);
    case RankOrientation::Auto:
    default:
      return m.rows() <= m.cols() ? rank_feeding_columns(m) : rank_feeding_rows(m);
  }
}

SubspaceBasis kernel_basis(const SparseMatrix& m) {
  EchelonAccumulator acc(m.cols());
  for (Index r = 0; r < m.rows(); ++r) acc.add(m.row(r));
  SubspaceBasis rref = std::move(acc).finish();

  std::vector<bool> is_pivot(m.cols(), false);
  for (Index p : rref.pivots) is_pivot[p] = true;

  EchelonAccumulator kernel_acc(m.cols());
  for (Index f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    SparseVec v{{f, Rational(1)}};
    for (std::size_t k = 0; k < rref.rows.size(); ++k) {
      const Rational* c = find_entry(rref.rows[k], f);
      if (c) v.emplace_back(rref.pivots[k], -*c);
    }
    normalize_vec(v);
    kernel_acc.add(std::move(v));
  }
  SubspaceBasis b = std::move(kernel_acc).finish();
  assert(b.dim() == m.cols() - rref.dim());
  return b;
}

SubspaceBasis image_basis(const SparseMatrix& m) {
  EchelonAccumulator acc(m.rows());
  for (auto& col : m.columns()) acc.add(std::move(col));
  return std::move(acc).finish();
}

SubspaceBasis echelon_span(std::size_t ambient, std::vector<SparseVec> vecs) {
  EchelonAccumulator acc(ambient);
  for (auto& v : vecs) acc.add(std::move(v));
  return std::move(acc).finish();
}

std::size_t quotient_dim(const SubspaceBasis& sub, std::size_t space_dim) {
  if (sub.ambient != space_dim)
    throw Error("quotient_dim: ambient dimension mismatch");
  return space_dim - sub.dim();
}

std::pair<SparseMatrix, SparseMatrix> quotient_projection(const SubspaceBasis& sub,
                                                          std::size_t space_dim) {
  if (sub.ambient != space_dim)
    throw Error("quotient_projection: ambient dimension mismatch");
  std::vector<bool> is_pivot(space_dim, false);
  for (Index p : sub.pivots) is_pivot[p] = true;

  std::size_t q = space_dim - sub.dim();
  SparseMatrix proj(q, space_dim);
  SparseMatrix section(space_dim, q);
  Index out = 0;
  for (Index f = 0; f < space_dim; ++f) {
    if (is_pivot[f]) continue;
    // pi(v)_out = v[f] - sum_k v[pivot_k] * basis_k[f]
    SparseVec row{{f, Rational(1)}};
    for (std::size_t k = 0; k < sub.rows.size(); ++k) {
      const Rational* c = find_entry(sub.rows[k], f);
      if (c) row.emplace_back(sub.pivots[k], -*c);
    }
    normalize_vec(row);
    proj.set_row(out, std::move(row));
    section.set(f, out, Rational(1));
    ++out;
  }
  return {std::move(proj), std::move(section)};
}

namespace {

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

std::uint64_t to_residue(const Rational& v, std::uint64_t p) {
  Integer num = rational_num(v) % Integer(p);
  Integer den = rational_den(v) % Integer(p);
  if (den == 0) throw Error("rank_mod_prime: denominator divisible by the prime");
  std::uint64_t n = static_cast<std::uint64_t>(num < 0 ? num + Integer(p) : num);
  std::uint64_t d = static_cast<std::uint64_t>(den);
  return n * mod_pow(d, p - 2, p) % p;
}

}  // namespace

std::size_t rank_mod_prime(const SparseMatrix& m, std::uint64_t p) {
  using ModVec = std::vector<std::pair<Index, std::uint64_t>>;
  std::unordered_map<Index, std::size_t> pivot_slot;
  std::vector<ModVec> rows;
  ModVec scratch;
  auto reduce_add = [&](ModVec v) {
    while (!v.empty()) {
      auto it = pivot_slot.find(v.front().first);
      if (it == pivot_slot.end()) {
        pivot_slot.emplace(v.front().first, rows.size());
        rows.push_back(std::move(v));
        return;
      }
      const ModVec& piv = rows[it->second];
      // v -= (lead(v)/lead(piv)) * piv
      std::uint64_t f = v.front().second * mod_pow(piv.front().second, p - 2, p) % p;
      scratch.clear();
      std::size_t a = 0, b = 0;
      while (a < v.size() && b < piv.size()) {
        if (v[a].first < piv[b].first)
          scratch.push_back(v[a++]);
        else if (piv[b].first < v[a].first) {
          std::uint64_t t = (p - f * piv[b].second % p) % p;
          if (t) scratch.emplace_back(piv[b].first, t);
          ++b;
        } else {
          std::uint64_t t = (v[a].second + p - f * piv[b].second % p) % p;
          if (t) scratch.emplace_back(v[a].first, t);
          ++a;
          ++b;
        }
      }
      for (; a < v.size(); ++a) scratch.push_back(v[a]);
      for (; b < piv.size(); ++b) {
        std::uint64_t t = (p - f * piv[b].second % p) % p;
        if (t) scratch.emplace_back(piv[b].first, t);
      }
      v.swap(scratch);
    }
  };

  bool by_cols = m.rows() <= m.cols();
  if (by_cols) {
    auto cols = m.columns();
    for (const auto& col : cols) {
      ModVec v;
      v.reserve(col.size());
      for (const auto& [i, val] : col) {
        std::uint64_t r = to_residue(val, p);
        if (r) v.emplace_back(i, r);
      }
      reduce_add(std::move(v));
    }
  } else {
    for (Index r = 0; r < m.rows(); ++r) {
      ModVec v;
      v.reserve(m.row(r).size());
      for (const auto& [i, val] : m.row(r)) {
        std::uint64_t res = to_residue(val, p);
        if (res) v.emplace_back(i, res);
      }
      reduce_add(std::move(v));
    }
  }
  return rows.size();
}

}  // namespace reeshom
