#include "reeshom/oracle.hpp"

#include <utility>

namespace reeshom::oracle {

std::size_t dense_rank(DenseMatrix m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[r], m[pivot]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      Rational factor = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) {
        if (m[r][j] != 0) m[i][j] -= factor * m[r][j];
      }
    }
    ++r;
  }
  return r;
}

DenseMatrix dense_boundary(const FiniteAlgebra& a, std::size_t n) {
  const std::size_t d = a.dim();
  std::size_t rows = 1, cols = 1;
  for (std::size_t k = 0; k < n; ++k) rows *= d;
  cols = rows * d;

  DenseMatrix m(rows, std::vector<Rational>(cols));
  std::vector<std::size_t> pw(n + 1, 1);
  for (std::size_t k = 1; k <= n; ++k) pw[k] = pw[k - 1] * d;

  std::vector<Index> digits(n + 1, 0);  // (x, a_1 .. a_n)
  for (std::size_t col = 0; col < cols; ++col) {
    std::size_t rest = col;
    for (std::size_t i = n + 1; i-- > 0;) {
      digits[i] = static_cast<Index>(rest % d);
      rest /= d;
    }
    // x.a_1 (x) a_2..a_n
    {
      std::size_t sfx = 0;
      for (std::size_t j = 2; j <= n; ++j) sfx += digits[j] * pw[n - j];
      for (const auto& [x2, c] : a.product(digits[0], digits[1]))
        m[x2 * pw[n - 1] + sfx][col] += c;
    }
    for (std::size_t k = 1; k + 1 <= n; ++k) {
      std::size_t base = digits[0] * pw[n - 1];
      for (std::size_t j = 1; j < k; ++j) base += digits[j] * pw[n - 1 - j];
      for (std::size_t j = k + 2; j <= n; ++j) base += digits[j] * pw[n - j];
      for (const auto& [mm, c] : a.product(digits[k], digits[k + 1])) {
        if (k % 2 == 1)
          m[base + mm * pw[n - 1 - k]][col] -= c;
        else
          m[base + mm * pw[n - 1 - k]][col] += c;
      }
    }
    // (-1)^n a_n.x (x) a_1..a_{n-1}
    {
      std::size_t sfx = 0;
      for (std::size_t j = 1; j + 1 <= n; ++j) sfx += digits[j] * pw[n - 1 - j];
      for (const auto& [x2, c] : a.product(digits[n], digits[0])) {
        if (n % 2 == 1)
          m[x2 * pw[n - 1] + sfx][col] -= c;
        else
          m[x2 * pw[n - 1] + sfx][col] += c;
      }
    }
  }
  return m;
}

std::vector<std::size_t> homology_dims_dense(const FiniteAlgebra& a, std::size_t max_degree) {
  const std::size_t d = a.dim();
  std::vector<std::size_t> dims(max_degree + 1), ranks(max_degree, 0);
  std::size_t cd = d;
  for (std::size_t n = 0; n <= max_degree; ++n) {
    dims[n] = cd;
    cd *= d;
  }
  for (std::size_t n = 1; n <= max_degree; ++n) ranks[n - 1] = dense_rank(dense_boundary(a, n));

  std::vector<std::size_t> h(max_degree + 1);
  for (std::size_t n = 0; n <= max_degree; ++n) {
    std::size_t rank_out = n > 0 ? ranks[n - 1] : 0;
    std::size_t rank_in = n < max_degree ? ranks[n] : 0;
    h[n] = dims[n] - rank_out - rank_in;
  }
  return h;
}

}  // namespace reeshom::oracle
