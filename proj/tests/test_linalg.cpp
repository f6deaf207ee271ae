#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "reeshom/linalg.hpp"

using namespace reeshom;

namespace {

SparseMatrix from_dense(const std::vector<std::vector<int>>& rows, std::size_t cols) {
  SparseMatrix m(rows.size(), cols);
  for (Index r = 0; r < rows.size(); ++r)
    for (Index c = 0; c < cols; ++c)
      if (rows[r][c] != 0) m.set(r, c, Rational(rows[r][c]));
  return m;
}

SparseMatrix random_sparse(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                           double density) {
  SparseMatrix m(rows, cols);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 4);
  for (Index r = 0; r < rows; ++r)
    for (Index c = 0; c < cols; ++c)
      if (coin(rng) < density) {
        int n = num(rng);
        if (n != 0) m.set(r, c, Rational(n, den(rng)));
      }
  return m;
}

}  // namespace

TEST_CASE("rank on small fixed matrices") {
  CHECK(rank(SparseMatrix::identity(3)) == 3);
  CHECK(rank(from_dense({{1, 1}, {1, 1}}, 2)) == 1);
  CHECK(rank(SparseMatrix(0, 5)) == 0);
  CHECK(rank(SparseMatrix(5, 0)) == 0);
  CHECK(rank(from_dense({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}}, 3)) == 2);
}

TEST_CASE("kernel bases of small fixed matrices") {
  CHECK(kernel_basis(SparseMatrix::identity(2)).dim() == 0);

  SubspaceBasis k = kernel_basis(from_dense({{1, 1}}, 2));
  REQUIRE(k.dim() == 1);
  CHECK(k.rows[0] == SparseVec{{0, Rational(1)}, {1, Rational(-1)}});

  CHECK(kernel_basis(SparseMatrix(2, 3)).dim() == 3);
}

TEST_CASE("image bases of small fixed matrices") {
  SubspaceBasis full = image_basis(SparseMatrix::identity(3));
  CHECK(full.dim() == 3);
  CHECK(full.pivots == std::vector<Index>{0, 1, 2});

  CHECK(image_basis(SparseMatrix(3, 3)).dim() == 0);

  SubspaceBasis ones = image_basis(from_dense({{1, 1}, {1, 1}}, 2));
  REQUIRE(ones.dim() == 1);
  CHECK(ones.rows[0] == SparseVec{{0, Rational(1)}, {1, Rational(1)}});
}

TEST_CASE("quotient dimensions") {
  SubspaceBasis empty;
  empty.ambient = 4;
  CHECK(quotient_dim(empty, 4) == 4);

  SubspaceBasis full = image_basis(SparseMatrix::identity(4));
  CHECK(quotient_dim(full, 4) == 0);

  SparseMatrix three(4, 3);
  three.set(0, 0, Rational(1));
  three.set(1, 1, Rational(1));
  three.set(2, 2, Rational(1));
  CHECK(quotient_dim(image_basis(three), 4) == 1);
}

TEST_CASE("quotient projection and section") {
  SUBCASE("empty subspace gives identities") {
    SubspaceBasis empty;
    empty.ambient = 3;
    auto [proj, sec] = quotient_projection(empty, 3);
    CHECK(proj == SparseMatrix::identity(3));
    CHECK(sec == SparseMatrix::identity(3));
  }
  SUBCASE("span{(1,0)} in dimension 2 projects onto the second coordinate") {
    SparseMatrix m(2, 1);
    m.set(0, 0, Rational(1));
    auto [proj, sec] = quotient_projection(image_basis(m), 2);
    CHECK(proj.rows() == 1);
    CHECK(proj.at(0, 1) == 1);
    CHECK(proj.at(0, 0) == 0);
    CHECK(sec.at(1, 0) == 1);
  }
  SUBCASE("full subspace gives a 0-dimensional quotient") {
    auto [proj, sec] = quotient_projection(image_basis(SparseMatrix::identity(2)), 2);
    CHECK(proj.rows() == 0);
    CHECK(sec.cols() == 0);
  }
  SUBCASE("projection . section = identity on random subspaces") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 10; ++trial) {
      SparseMatrix m = random_sparse(rng, 8, 5, 0.4);
      SubspaceBasis sub = image_basis(m);
      auto [proj, sec] = quotient_projection(sub, 8);
      CHECK(proj.times(sec) == SparseMatrix::identity(8 - sub.dim()));
      // the section composed with projection fixes the subspace pointwise to zero
      for (const auto& row : sub.rows) CHECK(proj.mul(row).empty());
    }
  }
}

TEST_CASE("rank-nullity and transpose invariance on random sparse matrices") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 25; ++trial) {
    std::size_t rows = 1 + static_cast<std::size_t>(rng() % 12);
    std::size_t cols = 1 + static_cast<std::size_t>(rng() % 12);
    SparseMatrix m = random_sparse(rng, rows, cols, 0.3);

    SubspaceBasis k = kernel_basis(m);
    std::size_t r = rank(m);
    CHECK(r + k.dim() == cols);
    CHECK(r == rank(m.transpose()));
    CHECK(rank_oriented(m, RankOrientation::ByRows) == r);
    CHECK(rank_oriented(m, RankOrientation::ByColumns) == r);

    for (const auto& v : k.rows) CHECK(m.mul(v).empty());

    // pivots of any echelon basis strictly increase
    for (std::size_t i = 1; i < k.pivots.size(); ++i) CHECK(k.pivots[i - 1] < k.pivots[i]);
  }
}

TEST_CASE("modular rank probe never exceeds the exact rank") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    SparseMatrix m = random_sparse(rng, 9, 7, 0.35);
    std::size_t exact = rank(m);
    std::size_t probe = rank_mod_prime(m);
    CHECK(probe <= exact);
    CHECK(probe == exact);  // the probe prime is far larger than any entry here
  }
}

TEST_CASE("rank survives machine-word overflow and oversized entries") {
  SUBCASE("fraction-free products overflow into the exact path") {
    Rational big = Rational(Integer(1) << 40);
    SparseMatrix m(3, 3);
    m.set(0, 0, big);
    m.set(0, 1, Rational(1));
    m.set(1, 0, Rational(1));
    m.set(1, 1, big);
    m.set(2, 2, Rational(3));
    CHECK(rank(m) == 3);
  }
  SUBCASE("entries beyond 64 bits skip the fast path entirely") {
    Rational huge = Rational(Integer("123456789012345678901234567890123456789"));
    SparseMatrix m(2, 2);
    m.set(0, 0, huge);
    m.set(1, 1, Rational(1, 7));
    CHECK(rank(m) == 2);
    CHECK(rank(m.transpose()) == 2);
  }
}

TEST_CASE("echelon span produces a reduced basis") {
  std::vector<SparseVec> vecs = {
      {{0, Rational(2)}, {1, Rational(4)}},
      {{0, Rational(1)}, {1, Rational(2)}, {2, Rational(1)}},
      {{1, Rational(1)}, {2, Rational(3)}},
  };
  SubspaceBasis b = echelon_span(3, vecs);
  REQUIRE(b.dim() == 3);
  for (std::size_t i = 0; i < b.rows.size(); ++i) {
    CHECK(b.rows[i].front().first == b.pivots[i]);
    CHECK(b.rows[i].front().second == 1);
    for (std::size_t j = 0; j < b.rows.size(); ++j)
      if (i != j) CHECK(find_entry(b.rows[j], b.pivots[i]) == nullptr);
  }
}
