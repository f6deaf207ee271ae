#include "reeshom/sparse.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace reeshom {

void normalize_vec(SparseVec& v) {
  std::sort(v.begin(), v.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < v.size();) {
    Index idx = v[i].first;
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

SparseVec combine(const Rational& a, const SparseVec& x, const Rational& b, const SparseVec& y) {
  SparseVec r;
  r.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() && j < y.size()) {
    if (x[i].first < y[j].first) {
      Rational v = a * x[i].second;
      if (v != 0) r.emplace_back(x[i].first, std::move(v));
      ++i;
    } else if (y[j].first < x[i].first) {
      Rational v = b * y[j].second;
      if (v != 0) r.emplace_back(y[j].first, std::move(v));
      ++j;
    } else {
      Rational v = a * x[i].second + b * y[j].second;
      if (v != 0) r.emplace_back(x[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  for (; i < x.size(); ++i) {
    Rational v = a * x[i].second;
    if (v != 0) r.emplace_back(x[i].first, std::move(v));
  }
  for (; j < y.size(); ++j) {
    Rational v = b * y[j].second;
    if (v != 0) r.emplace_back(y[j].first, std::move(v));
  }
  return r;
}

SparseVec subtract_scaled(const SparseVec& x, const Rational& f, const SparseVec& y) {
  SparseVec r;
  r.reserve(x.size() + y.size());
  const bool f_is_one = f == 1;
  std::size_t i = 0, j = 0;
  while (i < x.size() && j < y.size()) {
    if (x[i].first < y[j].first) {
      r.push_back(x[i++]);
    } else if (y[j].first < x[i].first) {
      Rational v = f_is_one ? Rational(-y[j].second) : Rational(-(f * y[j].second));
      if (v != 0) r.emplace_back(y[j].first, std::move(v));
      ++j;
    } else {
      Rational v = f_is_one ? Rational(x[i].second - y[j].second)
                            : Rational(x[i].second - f * y[j].second);
      if (v != 0) r.emplace_back(x[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  for (; i < x.size(); ++i) r.push_back(x[i]);
  for (; j < y.size(); ++j) {
    Rational v = f_is_one ? Rational(-y[j].second) : Rational(-(f * y[j].second));
    if (v != 0) r.emplace_back(y[j].first, std::move(v));
  }
  return r;
}

SparseVec scaled(const SparseVec& x, const Rational& c) {
  SparseVec r;
  if (c == 0) return r;
  r.reserve(x.size());
  for (const auto& [i, v] : x) r.emplace_back(i, c * v);
  return r;
}

const Rational* find_entry(const SparseVec& v, Index i) {
  auto it = std::lower_bound(v.begin(), v.end(), i,
                             [](const Entry& e, Index idx) { return e.first < idx; });
  if (it != v.end() && it->first == i) return &it->second;
  return nullptr;
}

SparseVec unit_vec(Index i) { return SparseVec{{i, Rational(1)}}; }

void make_primitive(SparseVec& v) {
  if (v.empty()) return;
  bool denominators_one = true;
  for (const auto& [i, val] : v) {
    if (mpz_cmp_ui(mpq_denref(val.backend().data()), 1) != 0) {
      denominators_one = false;
      break;
    }
  }
  if (!denominators_one) {
    Integer den_lcm = 1;
    for (const auto& [i, val] : v) den_lcm = lcm(den_lcm, rational_den(val));
    Rational f(den_lcm);
    for (auto& [i, val] : v) val *= f;
  }
  Integer g = 0;
  for (const auto& [i, val] : v) {
    mpz_gcd(g.backend().data(), g.backend().data(), mpq_numref(val.backend().data()));
    if (mpz_cmp_ui(g.backend().data(), 1) == 0) break;
  }
  const bool negative_lead = mpq_sgn(v.front().second.backend().data()) < 0;
  if (negative_lead) g = -g;
  if (g != 1) {
    Rational f(g);
    for (auto& [i, val] : v) val /= f;
  }
}

std::string vec_to_string(const SparseVec& v, const std::vector<std::string>& names) {
  if (v.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [i, c] : v) {
    if (!first) os << " + ";
    first = false;
    if (c != 1) os << c.str() << "*";
    os << (i < names.size() ? names[i] : "e" + std::to_string(i));
  }
  return os.str();
}

SparseMatrix SparseMatrix::identity(std::size_t n) {
  SparseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i] = unit_vec(static_cast<Index>(i));
  return m;
}

SparseMatrix SparseMatrix::from_triplets(std::size_t rows, std::size_t cols,
                                         std::vector<Triplet> ts) {
  SparseMatrix m(rows, cols);
  std::sort(ts.begin(), ts.end(), [](const Triplet& a, const Triplet& b) {
    if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) < std::get<0>(b);
    return std::get<1>(a) < std::get<1>(b);
  });
  std::size_t row_start = 0;
  while (row_start < ts.size()) {
    Index r = std::get<0>(ts[row_start]);
    std::size_t row_end = row_start;
    while (row_end < ts.size() && std::get<0>(ts[row_end]) == r) ++row_end;
    SparseVec& dst = m.data_[r];
    dst.reserve(row_end - row_start);
    for (std::size_t k = row_start; k < row_end;) {
      Index c = std::get<1>(ts[k]);
      Rational sum = std::move(std::get<2>(ts[k]));
      for (++k; k < row_end && std::get<1>(ts[k]) == c; ++k) sum += std::get<2>(ts[k]);
      if (sum != 0) dst.emplace_back(c, std::move(sum));
    }
    row_start = row_end;
  }
  return m;
}

SparseMatrix SparseMatrix::from_columns(std::size_t rows, const std::vector<SparseVec>& cols) {
  std::vector<Triplet> ts;
  std::size_t n = 0;
  for (const auto& c : cols) n += c.size();
  ts.reserve(n);
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (const auto& [r, v] : cols[c]) ts.emplace_back(r, static_cast<Index>(c), v);
  return from_triplets(rows, cols.size(), std::move(ts));
}

std::size_t SparseMatrix::nnz() const {
  std::size_t n = 0;
  for (const auto& r : data_) n += r.size();
  return n;
}

void SparseMatrix::set(Index r, Index c, const Rational& v) {
  SparseVec& row = data_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const Entry& e, Index idx) { return e.first < idx; });
  if (it != row.end() && it->first == c) {
    if (v == 0)
      row.erase(it);
    else
      it->second = v;
  } else if (v != 0) {
    row.insert(it, {c, v});
  }
}

void SparseMatrix::add_at(Index r, Index c, const Rational& v) {
  if (v == 0) return;
  SparseVec& row = data_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const Entry& e, Index idx) { return e.first < idx; });
  if (it != row.end() && it->first == c) {
    it->second += v;
    if (it->second == 0) row.erase(it);
  } else {
    row.insert(it, {c, v});
  }
}

Rational SparseMatrix::at(Index r, Index c) const {
  const Rational* p = find_entry(data_[r], c);
  return p ? *p : Rational(0);
}

void SparseMatrix::set_row(Index r, SparseVec v) { data_[r] = std::move(v); }

std::vector<SparseVec> SparseMatrix::columns() const {
  std::vector<SparseVec> cols(cols_);
  std::vector<std::size_t> counts(cols_, 0);
  for (const auto& row : data_)
    for (const auto& [c, v] : row) ++counts[c];
  for (std::size_t c = 0; c < cols_; ++c) cols[c].reserve(counts[c]);
  for (Index r = 0; r < rows_; ++r)
    for (const auto& [c, v] : data_[r]) cols[c].emplace_back(r, v);
  return cols;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(cols_, rows_);
  t.data_ = columns();
  return t;
}

SparseMatrix SparseMatrix::times(const SparseMatrix& o) const {
  assert(cols_ == o.rows_);
  SparseMatrix r(rows_, o.cols_);
  SparseVec acc;
  for (Index i = 0; i < rows_; ++i) {
    acc.clear();
    for (const auto& [k, v] : data_[i])
      for (const auto& [j, w] : o.data_[k]) acc.emplace_back(j, v * w);
    normalize_vec(acc);
    r.data_[i] = acc;
  }
  return r;
}

SparseVec SparseMatrix::mul(const SparseVec& v) const {
  SparseVec r;
  for (Index i = 0; i < rows_; ++i) {
    const SparseVec& row = data_[i];
    Rational dot = 0;
    std::size_t a = 0, b = 0;
    while (a < row.size() && b < v.size()) {
      if (row[a].first < v[b].first)
        ++a;
      else if (v[b].first < row[a].first)
        ++b;
      else {
        dot += row[a].second * v[b].second;
        ++a;
        ++b;
      }
    }
    if (dot != 0) r.emplace_back(i, std::move(dot));
  }
  return r;
}

bool SparseMatrix::is_zero() const {
  for (const auto& r : data_)
    if (!r.empty()) return false;
  return true;
}

bool SparseMatrix::operator==(const SparseMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

}  // namespace reeshom
