#include <doctest.h>

#include <random>

#include "fdalg/algebra.hpp"
#include "fdalg/corpus.hpp"
#include "fdalg/errors.hpp"
#include "fdalg/invariants.hpp"
#include "support.hpp"

using namespace fdalg;
using fdalg::testing::num;

namespace {

Algebra ground_field(const FieldSpec& f) {
  return Algebra::from_products(f, 1, {vector_from_integers(f, {1})}, vector_from_integers(f, {1}));
}

/// F[X]/(X^2) with basis {1, X}, optionally with c[1][0][0] perturbed.
Algebra dual_numbers(const FieldSpec& f, bool perturbed) {
  std::vector<Vector> products{vector_from_integers(f, {1, 0}), vector_from_integers(f, {0, 1}),
                               vector_from_integers(f, {0, 1}), vector_from_integers(f, {0, 0})};
  if (perturbed) products[1] = vector_from_integers(f, {1, 1});
  return Algebra::from_products(f, 2, products, vector_from_integers(f, {1, 0}));
}

}  // namespace

TEST_SUITE("algebra_core") {
  TEST_CASE("validation examples") {
    const FieldSpec q = FieldSpec::rationals();
    CHECK(validate(ground_field(q)).valid());
    CHECK(validate(dual_numbers(q, false)).valid());
    const ValidationReport bad = validate(dual_numbers(q, true));
    CHECK_FALSE(bad.valid());
    CHECK((!bad.associativity_failures.empty() || !bad.unit_failures.empty()));
    CHECK(validate(group_algebra_from_cayley(FieldSpec::prime(3), s3_table())).valid());
  }

  TEST_CASE("multiplication examples") {
    const FieldSpec q = FieldSpec::rationals();
    const Algebra t = truncated_polynomial(q, 3);
    const Element one = unit_element(t);
    const Element x(t, t.basis_vector(1)), x2(t, t.basis_vector(2));
    CHECK(one * x == x);
    CHECK(x * x2 == Element(t, t.zero()));
    const Algebra m = matrix_algebra(q, 2);
    // basis e11, e12, e21, e22
    CHECK(m.multiply(m.basis_vector(1), m.basis_vector(2)) == m.basis_vector(0));
  }

  TEST_CASE("elements of different algebras do not mix") {
    const FieldSpec q = FieldSpec::rationals();
    const Algebra a = truncated_polynomial(q, 2), b = truncated_polynomial(q, 2);
    const Element x(a, a.basis_vector(1)), y(b, b.basis_vector(1));
    CHECK_THROWS_AS(x * y, Error);
    CHECK_FALSE(x == y);
    CHECK_THROWS_AS(Element(a, zero_vector(q, 3)), Error);
  }

  TEST_CASE("center examples") {
    for (const auto& f : testing::test_fields()) {
      const Algebra c = truncated_polynomial(f, 4);
      CHECK(k_star(c) == 4);
      for (std::size_t n = 2; n <= 5; ++n) CHECK(k_star(triangular_algebra(f, n)) == 1);
      CHECK(k_star(matrix_algebra(f, 2)) == 1);
    }
  }

  TEST_CASE("group algebra examples") {
    const FieldSpec f2 = FieldSpec::prime(2), f3 = FieldSpec::prime(3);
    const Algebra z2 = cyclic_group_algebra(f2, 2);
    CHECK(z2.dim() == 2);
    // g - 1 squares to zero, as X does in F[X]/(X^2).
    const Vector x = sub(z2.basis_vector(1), z2.unit());
    CHECK(is_zero(z2.multiply(x, x)));
    const Algebra s3 = s3_group_algebra(f3);
    CHECK(s3.dim() == 6);
    const auto* prov = std::get_if<GroupProvenance>(&s3.provenance());
    REQUIRE(prov);
    CHECK(prov->classes.size() == 3);
    const Algebra trivial = group_algebra_from_cayley(f3, {{0}});
    CHECK(trivial.dim() == 1);
    CHECK(k_of(trivial) == 1);
    CHECK_THROWS_AS(group_algebra_from_cayley(f3, {{0, 1}, {1, 1}}), Error);
  }

  TEST_CASE("matrix algebra, direct sum and corner examples") {
    const FieldSpec q = FieldSpec::rationals();
    const Algebra m2 = matrix_algebra(q, 2);
    const Algebra sum = direct_sum(ground_field(q), m2);
    CHECK(sum.dim() == 5);
    CHECK(k_of(sum) == 2);
    const Corner whole = corner(m2, m2.unit());
    CHECK(whole.algebra.dim() == 4);
    const Corner e11 = corner(m2, m2.basis_vector(0));
    CHECK(e11.algebra.dim() == 1);
    CHECK(validate(e11.algebra).valid());
    CHECK_THROWS_AS(corner(m2, m2.basis_vector(1)), Error);
  }

  TEST_CASE("associativity and regular representations on sampled elements") {
    std::mt19937_64 rng(17);
    for (const auto& f : testing::test_fields()) {
      std::vector<Algebra> algebras{triangular_algebra(f, 3), s3_group_algebra(f), kronecker_algebra(f, 3)};
      if (f.characteristic() != 2) algebras.push_back(a_q_algebra(f, num(f, 2)));
      for (const Algebra& a : algebras) {
        for (int trial = 0; trial < 5; ++trial) {
          const Vector x = testing::random_vector(f, a.dim(), rng), y = testing::random_vector(f, a.dim(), rng);
          const Vector z = testing::random_vector(f, a.dim(), rng);
          CHECK(a.multiply(a.multiply(x, y), z) == a.multiply(x, a.multiply(y, z)));
          const Vector xy = a.multiply(x, y);
          CHECK(a.left_regular(xy) == a.left_regular(x) * a.left_regular(y));
          CHECK(a.right_regular(xy) == a.right_regular(y) * a.right_regular(x));
          CHECK(a.left_regular(x).apply(y) == xy);
        }
      }
    }
  }

  TEST_CASE("group algebras have k equal to the number of conjugacy classes") {
    for (const auto& f : testing::test_fields()) {
      CHECK(k_of(s3_group_algebra(f)) == 3);
      for (std::size_t n = 1; n <= 6; ++n) CHECK(k_of(cyclic_group_algebra(f, n)) == n);
    }
  }
}
