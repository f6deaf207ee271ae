#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "reeshom/checks.hpp"
#include "reeshom/errors.hpp"
#include "reeshom/hochschild.hpp"
#include "reeshom/oracle.hpp"
#include "reeshom/rees.hpp"

using namespace reeshom;

namespace {

ReesSemigroup matrix_units(std::size_t n) {
  SandwichMatrix p(n, std::vector<SandwichEntry>(n));
  for (std::size_t k = 0; k < n; ++k) p[k][k] = 0;
  return rees_new(cyclic_group(1), n, n, p);
}

AlgebraPtr zero_mult_algebra(std::size_t dim) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < dim; ++i) names.push_back("z" + std::to_string(i));
  return std::make_shared<FiniteAlgebra>(dim, FiniteAlgebra::ProductMap{}, names, std::nullopt,
                                         "zero");
}

std::vector<std::size_t> hh(const AlgebraPtr& a, std::size_t max_degree) {
  ChainComplex c = hochschild_complex(a, regular_bimodule(a), max_degree);
  return homology_report(c).homology_dims;
}

}  // namespace

TEST_CASE("boundary in degree one") {
  ReesSemigroup s = matrix_units(2);
  AlgebraPtr a = s.reduced_algebra();
  ChainComplex c = hochschild_complex(a, regular_bimodule(a), 1);
  // d1(E11 (x) E12) = E11.E12 - E12.E11 = E12
  const Index e11 = s.triple_index(0, 0, 0), e12 = s.triple_index(0, 0, 1);
  const Index col = static_cast<Index>(e11 * a->dim() + e12);
  SparseVec column;
  for (Index r = 0; r < c.boundaries[0].rows(); ++r) {
    Rational v = c.boundaries[0].at(r, col);
    if (v != 0) column.emplace_back(r, v);
  }
  CHECK(column == unit_vec(e12));
}

TEST_CASE("boundary in degree two matches the three-term formula") {
  AlgebraPtr a = group_algebra(symmetric_group_3());
  Bimodule x = regular_bimodule(a);
  ChainComplex c = hochschild_complex(a, x, 2);
  const std::size_t d = a->dim();
  for (Index xb : {0u, 3u}) {
    for (Index a1 : {1u, 4u}) {
      for (Index a2 : {2u, 5u}) {
        Index col = static_cast<Index>((xb * d + a1) * d + a2);
        SparseVec expected;
        for (const auto& [m, cv] : a->product(xb, a1))  // xa1 (x) a2
          expected.emplace_back(static_cast<Index>(m * d + a2), cv);
        for (const auto& [m, cv] : a->product(a1, a2))  // - x (x) a1a2
          expected.emplace_back(static_cast<Index>(xb * d + m), -cv);
        for (const auto& [m, cv] : a->product(a2, xb))  // + a2x (x) a1
          expected.emplace_back(static_cast<Index>(m * d + a1), cv);
        normalize_vec(expected);
        SparseVec got;
        for (Index r = 0; r < c.boundaries[1].rows(); ++r) {
          Rational v = c.boundaries[1].at(r, col);
          if (v != 0) got.emplace_back(r, v);
        }
        CHECK(got == expected);
      }
    }
  }
}

TEST_CASE("homology dimensions of small algebras") {
  CHECK(hh(matrix_units(2).reduced_algebra(), 3) ==
        std::vector<std::size_t>{1, 0, 0, 205});
  CHECK(hh(group_algebra(cyclic_group(2)), 3)[0] == 2);
  CHECK(hh(group_algebra(cyclic_group(2)), 3)[1] == 0);
  CHECK(hh(group_algebra(cyclic_group(2)), 3)[2] == 0);

  SUBCASE("all boundaries of the zero-multiplication algebra vanish") {
    AlgebraPtr z = zero_mult_algebra(1);
    ChainComplex c = hochschild_complex(z, regular_bimodule(z), 4);
    for (const auto& b : c.boundaries) CHECK(b.is_zero());
    CHECK(homology_report(c).homology_dims == std::vector<std::size_t>{1, 1, 1, 1, 1});
  }
}

TEST_CASE("chain dimensions and cohomology agreement") {
  AlgebraPtr a = group_algebra(cyclic_group(3));
  Bimodule x = regular_bimodule(a);
  ChainComplex c = hochschild_complex(a, x, 3);
  CHECK(c.dims == std::vector<std::size_t>{3, 9, 27, 81});
  HomologyReport rep = homology_report(c, "Q[C3]", "regular");
  CHECK(rep.cohomology_dims == rep.homology_dims);
  CHECK(rep.top_degree_truncated);
  CHECK(cohomology_dims(c) == rep.homology_dims);
}

TEST_CASE("dense oracle agreement at small dimension") {
  std::vector<AlgebraPtr> algebras = {
      group_algebra(cyclic_group(1)),
      group_algebra(cyclic_group(2)),
      group_algebra(cyclic_group(3)),
      zero_mult_algebra(1),
      zero_mult_algebra(2),
      unitize(zero_mult_algebra(1)),
  };
  for (const AlgebraPtr& a : algebras) {
    CAPTURE(a->name());
    std::vector<std::size_t> dense = oracle::homology_dims_dense(*a, 3);
    std::vector<std::size_t> sparse = hh(a, 3);
    for (std::size_t n = 0; n <= 2; ++n) CHECK(dense[n] == sparse[n]);
  }
}

TEST_CASE("size guard on chain spaces") {
  AlgebraPtr a = group_algebra(symmetric_group_3());
  CHECK_THROWS_AS(hochschild_complex(a, regular_bimodule(a), 4, 100), SizeGuardError);
}

TEST_CASE("bar resolution contracting homotopy") {
  SUBCASE("trivial group algebra") {
    AlgebraPtr a = group_algebra(cyclic_group(1));
    CHECK(bar_homotopy_check(a, regular_bimodule(a), 3).ok);
  }
  SUBCASE("matrix units") {
    AlgebraPtr a = matrix_units(2).reduced_algebra();
    CHECK(bar_homotopy_check(a, regular_bimodule(a), 2).ok);
  }
  SUBCASE("enumeration budget") {
    AlgebraPtr a = group_algebra(symmetric_group_3());
    CHECK_THROWS_AS(bar_homotopy_check(a, regular_bimodule(a), 4, 100), SizeGuardError);
  }
}

TEST_CASE("h-unitality homotopy certificates") {
  ReesSemigroup s = matrix_units(2);

  SUBCASE("reduced algebra with the block splitting") {
    CHECK(hunital_homotopy_check(s.reduced_algebra(),
                                 right_splitting(s, AlgebraKind::Reduced), 4)
              .ok);
  }
  SUBCASE("full algebra with the zero-corrected splitting") {
    CHECK(hunital_homotopy_check(s.full_algebra(), right_splitting(s, AlgebraKind::Full), 4).ok);
  }
  SUBCASE("unital algebras split through the unit") {
    AlgebraPtr a = group_algebra(cyclic_group(2));
    const Index one = 0;  // identity basis index
    std::vector<Triplet> ts;
    for (Index t = 0; t < a->dim(); ++t)
      ts.emplace_back(static_cast<Index>(one * a->dim() + t), t, Rational(1));
    SparseMatrix rho =
        SparseMatrix::from_triplets(a->dim() * a->dim(), a->dim(), std::move(ts));
    CHECK(hunital_homotopy_check(a, rho, 4).ok);
  }
  SUBCASE("a corrupted splitting is rejected with a witness") {
    // e2 (x) x instead of e_{i(x)} (x) x: fails pi.rho = id on the first row
    AlgebraPtr a = s.reduced_algebra();
    const Index e22 = s.triple_index(1, 0, 1);
    std::vector<Triplet> ts;
    for (Index t = 0; t < a->dim(); ++t)
      ts.emplace_back(static_cast<Index>(e22 * a->dim() + t), t, Rational(1));
    SparseMatrix bad = SparseMatrix::from_triplets(a->dim() * a->dim(), a->dim(), std::move(ts));
    CHECK(right_splitting_violation(a, bad).has_value());
    CHECK_THROWS_AS(hunital_homotopy_check(a, bad, 4), BadSplittingError);
    // the identity itself fails, pinpointing degree and chain
    HomotopyResult r = simplicial_homotopy_identity(a, bad, 3);
    REQUIRE_FALSE(r.ok);
    REQUIRE(r.violation.has_value());
    CHECK(r.violation->degree == 2);
  }
}

TEST_CASE("naive splitting on the full algebra fails the module identity") {
  // rho(x) = e_{i(x)} (x) x with rho(zero) = e_1 (x) zero is not a right
  // module map once two block rows reach the zero element; the corrected
  // splitting is what right_splitting(Full) returns.
  ReesSemigroup s = matrix_units(2);
  AlgebraPtr full = s.full_algebra();
  const std::size_t d = full->dim();
  std::vector<Triplet> ts;
  for (Index t = 0; t < s.n_triples(); ++t) {
    Index ei = s.idempotent_e_index(s.element_at(t).i);
    ts.emplace_back(static_cast<Index>(ei * d + t), t, Rational(1));
  }
  ts.emplace_back(static_cast<Index>(s.idempotent_e_index(0) * d + s.zero_index()),
                  s.zero_index(), Rational(1));
  SparseMatrix naive = SparseMatrix::from_triplets(d * d, d, std::move(ts));
  auto violation = right_splitting_violation(full, naive);
  REQUIRE(violation.has_value());
  CHECK(violation->find("rho(s.t)") != std::string::npos);
}
