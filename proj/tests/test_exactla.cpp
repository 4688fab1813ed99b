#include <doctest.h>

#include <algorithm>
#include <random>

#include "fdalg/errors.hpp"
#include "fdalg/linalg.hpp"
#include "support.hpp"

using namespace fdalg;
using fdalg::testing::num;

TEST_SUITE("exactla") {
  TEST_CASE("field specs parse and reject composite moduli") {
    CHECK(FieldSpec::parse("Fp:5") == FieldSpec::prime(5));
    CHECK(FieldSpec::parse("Q") == FieldSpec::rationals());
    CHECK(FieldSpec::prime(7).characteristic() == 7);
    CHECK(FieldSpec::rationals().characteristic() == 0);
    CHECK_THROWS_AS(FieldSpec::prime(6), Error);
    CHECK_THROWS_AS(FieldSpec::parse("Fp:x"), Error);
    CHECK(FieldSpec::prime(3).to_string() == "Fp:3");
  }

  TEST_CASE("scalars are canonical") {
    const FieldSpec q = FieldSpec::rationals(), f5 = FieldSpec::prime(5);
    CHECK(Scalar::parse(q, "4/6") == Scalar::parse(q, "2/3"));
    CHECK(Scalar::parse(q, "-4/6").to_string() == "-2/3");
    CHECK(Scalar::parse(f5, "-1").residue() == 4);
    CHECK(Scalar::parse(f5, "1/2").residue() == 3);
    CHECK((num(f5, 3) * num(f5, 3).inverse()).is_one());
    CHECK(num(f5, 2).pow(4).is_one());
    CHECK_THROWS_AS(num(f5, 0).inverse(), Error);
    CHECK_THROWS_AS(Scalar::parse(q, "1/0"), Error);
  }

  TEST_CASE("rref examples") {
    const FieldSpec q = FieldSpec::rationals();
    const auto id = rref(Matrix::identity(q, 2));
    CHECK(id.reduced == Matrix::identity(q, 2));
    CHECK(id.rank == 2);
    CHECK(id.pivots == std::vector<std::size_t>{0, 1});
    const auto z = rref(Matrix(q, 3, 3));
    CHECK(z.rank == 0);
    CHECK(z.pivots.empty());
    CHECK(z.reduced == Matrix(q, 3, 3));
    const auto r = rref(Matrix::from_integers(q, {{2, 4}, {1, 2}}));
    CHECK(r.reduced == Matrix::from_integers(q, {{1, 2}, {0, 0}}));
    CHECK(r.rank == 1);
  }

  TEST_CASE("kernel examples") {
    const FieldSpec q = FieldSpec::rationals(), f2 = FieldSpec::prime(2);
    CHECK(kernel(Matrix(q, 1, 3)) == Subspace::full(q, 3));
    const Subspace k = kernel(Matrix::from_integers(f2, {{1, 1}}));
    CHECK(k == Subspace::span(f2, 2, {vector_from_integers(f2, {1, 1})}));
    CHECK(kernel(Matrix::identity(q, 3)).is_zero());
  }

  TEST_CASE("span, sum, intersection and codim examples") {
    const FieldSpec q = FieldSpec::rationals();
    const Subspace e1 = Subspace::span(q, 2, {vector_from_integers(q, {1, 0})});
    const Subspace e2 = Subspace::span(q, 2, {vector_from_integers(q, {0, 1})});
    CHECK(subspace_sum(e1, e2).codim() == 0);
    const Subspace diag = Subspace::span(q, 2, {vector_from_integers(q, {1, 1})});
    CHECK(subspace_intersect(diag, e1).is_zero());
    CHECK(Subspace(q, 4).codim() == 4);
    CHECK_THROWS_AS(subspace_sum(e1, Subspace(q, 3)), Error);
  }

  TEST_CASE("rref is idempotent and rank plus codim is the ambient dimension") {
    std::mt19937_64 rng(11);
    for (const auto& f : testing::test_fields()) {
      for (int trial = 0; trial < 20; ++trial) {
        const std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 6;
        std::vector<Vector> vs;
        for (std::size_t r = 0; r < rows; ++r) vs.push_back(testing::random_vector(f, cols, rng));
        const Matrix m = Matrix::from_rows(f, cols, vs);
        const auto once = rref(m);
        CHECK(rref(once.reduced).reduced == once.reduced);
        const Subspace s = Subspace::span(f, cols, vs);
        CHECK(s.dim() + s.codim() == cols);
        CHECK(s.dim() == once.rank);
        CHECK(kernel(m).dim() + once.rank == cols);
      }
    }
  }

  TEST_CASE("dimension formula for sums and intersections over F_5^6") {
    const FieldSpec f = FieldSpec::prime(5);
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<Vector> a, b;
      for (std::size_t i = 0, n = rng() % 5; i < n; ++i) a.push_back(testing::random_vector(f, 6, rng));
      for (std::size_t i = 0, n = rng() % 5; i < n; ++i) b.push_back(testing::random_vector(f, 6, rng));
      const Subspace u = Subspace::span(f, 6, a), v = Subspace::span(f, 6, b);
      CHECK(subspace_sum(u, v).dim() + subspace_intersect(u, v).dim() == u.dim() + v.dim());
    }
  }

  TEST_CASE("membership agrees with enumeration of span elements over F_3^4") {
    const FieldSpec f = FieldSpec::prime(3);
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<Vector> gens;
      for (int i = 0; i < 2; ++i) gens.push_back(testing::random_vector(f, 4, rng));
      const Subspace s = Subspace::span(f, 4, gens);
      std::vector<Vector> members;
      for (int c0 = 0; c0 < 3; ++c0) {
        for (int c1 = 0; c1 < 3; ++c1) {
          Vector v = zero_vector(f, 4);
          axpy(v, num(f, c0), gens[0]);
          axpy(v, num(f, c1), gens[1]);
          members.push_back(v);
        }
      }
      for (int code = 0; code < 81; ++code) {
        Vector v;
        for (int i = 0, c = code; i < 4; ++i, c /= 3) v.push_back(num(f, c % 3));
        const bool listed = std::find(members.begin(), members.end(), v) != members.end();
        CHECK(s.contains(v) == listed);
      }
    }
  }

  TEST_CASE("solve finds a solution exactly when one exists") {
    const FieldSpec q = FieldSpec::rationals();
    const Matrix m = Matrix::from_integers(q, {{1, 2}, {2, 4}});
    const auto x = solve(m, vector_from_integers(q, {3, 6}));
    REQUIRE(x);
    CHECK(m.apply(*x) == vector_from_integers(q, {3, 6}));
    CHECK_FALSE(solve(m, vector_from_integers(q, {1, 0})));
  }
}
