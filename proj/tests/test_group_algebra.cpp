#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "reeshom/algebra.hpp"
#include "reeshom/errors.hpp"

using namespace reeshom;

namespace {

// 2x2 matrix units E_ij, indexed (i,j) -> 2*i + j.
AlgebraPtr matrix_units_2() {
  FiniteAlgebra::ProductMap products;
  for (Index i = 0; i < 2; ++i)
    for (Index j = 0; j < 2; ++j)
      for (Index k = 0; k < 2; ++k)
        for (Index l = 0; l < 2; ++l)
          if (j == k) products[product_key(2 * i + j, 2 * k + l)] = unit_vec(2 * i + l);
  SparseVec unit{{0, Rational(1)}, {3, Rational(1)}};
  return std::make_shared<FiniteAlgebra>(4, std::move(products),
                                         std::vector<std::string>{"E11", "E12", "E21", "E22"},
                                         unit, "M2");
}

AlgebraPtr zero_algebra(std::size_t dim, bool skip_check = false) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < dim; ++i) names.push_back("z" + std::to_string(i));
  return std::make_shared<FiniteAlgebra>(dim, FiniteAlgebra::ProductMap{}, names, std::nullopt,
                                         "zero" + std::to_string(dim), skip_check);
}

}  // namespace

TEST_CASE("cyclic groups") {
  GroupTable c1 = cyclic_group(1);
  CHECK(c1.order == 1);
  CHECK(c1.identity == 0);

  GroupTable c2 = cyclic_group(2);
  CHECK(c2.table == std::vector<std::vector<Index>>{{0, 1}, {1, 0}});

  GroupTable c3 = cyclic_group(3);
  CHECK(c3.inv(1) == 2);

  CHECK_THROWS_AS(cyclic_group(0), Error);
}

TEST_CASE("symmetric group on three letters") {
  GroupTable s3 = symmetric_group_3();
  CHECK(s3.order == 6);
  CHECK_FALSE(s3.is_abelian());

  // brute-force conjugation orbits, recomputed here
  std::vector<int> orbit(6, -1);
  int classes = 0;
  for (Index a = 0; a < 6; ++a) {
    if (orbit[a] >= 0) continue;
    for (Index g = 0; g < 6; ++g) orbit[s3.mul(s3.mul(g, a), s3.inv(g))] = classes;
    ++classes;
  }
  CHECK(classes == 3);
  CHECK(s3.conjugacy_class_count() == 3);
}

TEST_CASE("group_from_table validation") {
  SUBCASE("Klein four-group is accepted") {
    std::vector<std::vector<Index>> klein = {
        {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    GroupTable v = group_from_table(klein, 0, {"e", "x", "y", "z"}, "V4");
    CHECK(v.order == 4);
    CHECK(v.is_abelian());
    for (Index a = 0; a < 4; ++a) CHECK(v.inv(a) == a);
  }
  SUBCASE("a non-associative triple is rejected by name") {
    std::vector<std::vector<Index>> bad = {{0, 1, 2}, {1, 2, 2}, {2, 2, 1}};
    CHECK_THROWS_WITH_AS(group_from_table(bad, 0, {"e", "u", "v"}),
                         doctest::Contains("associativity fails"), NotAssociativeError);
  }
  SUBCASE("a table without identity is rejected") {
    std::vector<std::vector<Index>> relabeled = {{1, 0}, {0, 1}};  // identity is element 1
    CHECK_THROWS_AS(group_from_table(relabeled, 0, {"a", "b"}), NoIdentityError);
    std::vector<std::vector<Index>> left_zero = {{0, 0}, {1, 1}};
    CHECK_THROWS_AS(group_from_table(left_zero, {"a", "b"}), NoIdentityError);
  }
  SUBCASE("a monoid without inverses is rejected") {
    // multiplication is max(a,b): associative, identity 0, no inverse for 1
    std::vector<std::vector<Index>> mx = {{0, 1}, {1, 1}};
    CHECK_THROWS_WITH_AS(group_from_table(mx, 0, {"e", "t"}),
                         doctest::Contains("no inverse"), NoInverseError);
  }
}

TEST_CASE("group algebras") {
  AlgebraPtr q = group_algebra(cyclic_group(1));
  CHECK(q->dim() == 1);
  CHECK(q->unit().has_value());

  AlgebraPtr qc2 = group_algebra(cyclic_group(2));
  CHECK(qc2->dim() == 2);
  AlgebraElement e = basis_element(qc2, 0), a = basis_element(qc2, 1);
  AlgebraElement plus{qc2, {{0, Rational(1)}, {1, Rational(1)}}};
  AlgebraElement minus{qc2, {{0, Rational(1)}, {1, Rational(-1)}}};
  CHECK(multiply(plus, minus).coords.empty());  // (e+a)(e-a) = e^2 - a^2 = 0
  CHECK(multiply(a, a).coords == e.coords);

  AlgebraPtr qs3 = group_algebra(symmetric_group_3());
  CHECK(qs3->dim() == 6);
  CHECK(qs3->unit().has_value());
  AlgebraElement t12 = basis_element(qs3, 1), t13 = basis_element(qs3, 2);
  CHECK(multiply(t12, t13).coords != multiply(t13, t12).coords);
}

TEST_CASE("unitization") {
  SUBCASE("of the one-dimensional zero algebra") {
    AlgebraPtr z = zero_algebra(1);
    AlgebraPtr zu = unitize(z);
    CHECK(zu->dim() == 2);
    AlgebraElement nil = basis_element(zu, 0);
    CHECK(multiply(nil, nil).coords.empty());  // z^2 = 0
    REQUIRE(zu->unit().has_value());
    CHECK(multiply(AlgebraElement{zu, *zu->unit()}, nil).coords == nil.coords);
  }
  SUBCASE("of an already unital algebra adjoins a new unit anyway") {
    AlgebraPtr a = group_algebra(cyclic_group(1));
    AlgebraPtr au = unitize(a);
    CHECK(au->dim() == 2);
    // the old unit and its complement are orthogonal idempotents
    AlgebraElement old_unit = basis_element(au, 0);
    AlgebraElement complement{au, {{0, Rational(-1)}, {1, Rational(1)}}};
    CHECK(multiply(old_unit, old_unit).coords == old_unit.coords);
    CHECK(multiply(complement, complement).coords == complement.coords);
    CHECK(multiply(old_unit, complement).coords.empty());
  }
  SUBCASE("dimension always grows by one and the ideal is preserved") {
    for (AlgebraPtr a : {group_algebra(cyclic_group(3)), matrix_units_2(), zero_algebra(2)}) {
      AlgebraPtr au = unitize(a);
      CHECK(au->dim() == a->dim() + 1);
      const Index one = static_cast<Index>(a->dim());
      for (Index i = 0; i < a->dim(); ++i)
        for (Index j = 0; j < a->dim(); ++j) {
          CHECK(au->product(i, j) == a->product(i, j));
          CHECK(find_entry(au->product(i, j), one) == nullptr);
        }
    }
  }
}

TEST_CASE("direct sums") {
  AlgebraPtr q = group_algebra(cyclic_group(1));
  AlgebraPtr qq = direct_sum(q, q);
  CHECK(qq->dim() == 2);
  CHECK(qq->product(0, 1).empty());
  CHECK(qq->product(1, 0).empty());
  REQUIRE(qq->unit().has_value());

  AlgebraPtr a = group_algebra(cyclic_group(2));
  AlgebraPtr with_zero = direct_sum(a, zero_algebra(0));
  CHECK(with_zero->dim() == a->dim());

  CHECK(direct_sum(matrix_units_2(), q)->dim() == 5);
}

TEST_CASE("element multiplication") {
  AlgebraPtr a = group_algebra(cyclic_group(2));
  AlgebraPtr b = group_algebra(cyclic_group(2));  // distinct object, same contents
  CHECK_THROWS_AS(multiply(basis_element(a, 0), basis_element(b, 0)), AlgebraMismatchError);

  AlgebraPtr m = matrix_units_2();
  AlgebraElement unit{m, *m->unit()};
  for (Index i = 0; i < 4; ++i)
    CHECK(multiply(unit, basis_element(m, i)).coords == unit_vec(i));

  // basis product matches the structure-constant row
  CHECK(multiply(basis_element(m, 1), basis_element(m, 2)).coords == m->product(1, 2));
}

TEST_CASE("associativity checking") {
  FiniteAlgebra::ProductMap bad;
  bad[product_key(0, 0)] = unit_vec(1);
  bad[product_key(1, 0)] = unit_vec(0);
  CHECK_THROWS_AS(FiniteAlgebra(2, bad, {"u", "v"}, std::nullopt, "bad"), NotAssociativeError);

  SUBCASE("the skip flag applies only above dimension 64") {
    // same defect embedded in a large algebra passes construction when skipped
    FiniteAlgebra::ProductMap big = bad;
    std::vector<std::string> names;
    for (int i = 0; i < 70; ++i) names.push_back("g" + std::to_string(i));
    CHECK_THROWS_AS(FiniteAlgebra(70, big, names, std::nullopt, "big"), NotAssociativeError);
    CHECK_NOTHROW(FiniteAlgebra(70, big, names, std::nullopt, "big", true));
    // below the threshold the flag is ignored
    CHECK_THROWS_AS(FiniteAlgebra(2, bad, {"u", "v"}, std::nullopt, "bad", true),
                    NotAssociativeError);
  }
}
