#include <doctest.h>

#include "fdalg/corpus.hpp"
#include "fdalg/errors.hpp"
#include "fdalg/invariants.hpp"
#include "fdalg/structure.hpp"
#include "support.hpp"

using namespace fdalg;
using fdalg::testing::num;

namespace {

std::vector<Algebra> sample_algebras(const FieldSpec& f) {
  std::vector<Algebra> out{truncated_polynomial(f, 3), triangular_algebra(f, 3), kronecker_algebra(f, 2),
                           matrix_algebra(f, 2), s3_group_algebra(f), lower_triangular_algebra(f, 3)};
  if (f.characteristic() != 2) out.push_back(a_q_algebra(f, num(f, 2)));
  for (std::uint64_t seed = 1; seed <= 5; ++seed) out.push_back(random_quiver(f, seed));
  return out;
}

}  // namespace

TEST_SUITE("structure") {
  TEST_CASE("radical examples") {
    for (const auto& f : testing::test_fields()) CHECK(radical(matrix_algebra(f, 2)).is_zero());
    const FieldSpec q = FieldSpec::rationals();
    const Algebra t3 = lower_triangular_algebra(q, 3);
    const Subspace j = radical(t3);
    CHECK(j.dim() == 3);
    // units e_ij (i >= j) in row-major order: e11 e21 e22 e31 e32 e33
    CHECK(j == Subspace::span(q, 6, {t3.basis_vector(1), t3.basis_vector(3), t3.basis_vector(4)}));
    const FieldSpec f2 = FieldSpec::prime(2);
    const Algebra z2 = cyclic_group_algebra(f2, 2);
    CHECK(radical(z2) == Subspace::span(f2, 2, {vector_from_integers(f2, {1, 1})}));
  }

  TEST_CASE("radical powers and Loewy length examples") {
    for (const auto& f : testing::test_fields()) {
      const Algebra t = truncated_polynomial(f, 4);
      for (std::size_t n = 1; n <= 4; ++n) CHECK(radical_power(t, n).dim() == 4 - n);
      CHECK(loewy_length(t) == 4);
      CHECK(loewy_length(matrix_algebra(f, 3)) == 1);
      if (f.characteristic() != 2) {
        const Algebra a = a_q_algebra(f, num(f, 2));
        const Vector xy = a.multiply(a.basis_vector(1), a.basis_vector(2));
        CHECK(radical_power(a, 2) == Subspace::span(f, 4, {xy}));
        CHECK(radical_power(a, 3).is_zero());
        CHECK(loewy_length(a) == 3);
      }
    }
  }

  TEST_CASE("Wedderburn examples") {
    const WedderburnSplit s3 = wedderburn_split(s3_group_algebra(FieldSpec::prime(3)));
    CHECK(s3.split);
    CHECK(s3.components.size() == 2);

    const WedderburnSplit z3 = wedderburn_split(cyclic_group_algebra(FieldSpec::prime(2), 3));
    CHECK_FALSE(z3.split);
    bool has_quadratic = false;
    for (const auto& c : z3.components) has_quadratic = has_quadratic || (c.dim == 2 && c.center_dim == 2);
    CHECK(has_quadratic);

    const WedderburnSplit m2 = wedderburn_split(matrix_algebra(FieldSpec::prime(5), 2));
    CHECK(m2.split);
    REQUIRE(m2.components.size() == 1);
    CHECK(m2.components[0].degree == 2);
  }

  TEST_CASE("rational centers without rational roots are undecided") {
    try {
      wedderburn_split(cyclic_group_algebra(FieldSpec::rationals(), 3));
      FAIL("expected split_undecided");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::split_undecided);
    }
    CHECK_THROWS_AS(primitive_idempotents(cyclic_group_algebra(FieldSpec::prime(2), 3)), Error);
  }

  TEST_CASE("primitive idempotent examples") {
    for (const auto& f : testing::test_fields()) {
      if (f.characteristic() != 2) {
        const Algebra a = a_q_algebra(f, num(f, 2));
        const IdempotentSet s = primitive_idempotents(a);
        REQUIRE(s.idempotents.size() == 1);
        CHECK(s.idempotents[0] == a.unit());
      }
      const IdempotentSet t3 = primitive_idempotents(triangular_algebra(f, 3));
      CHECK(t3.idempotents.size() == 3);
      CHECK(t3.iso_classes.size() == 3);
      const IdempotentSet m2 = primitive_idempotents(matrix_algebra(f, 2));
      CHECK(m2.idempotents.size() == 2);
      CHECK(m2.iso_classes.size() == 1);
    }
  }

  TEST_CASE("Cartan matrix and Ext1 diagonal examples") {
    for (const auto& f : testing::test_fields()) {
      for (std::size_t n = 2; n <= 5; ++n) {
        const Algebra t = truncated_polynomial(f, n);
        CHECK(cartan_matrix(t) == CountMatrix{{n}});
        CHECK(ell(t) == 1);
        CHECK(ext1_diag(t) == std::vector<std::size_t>{1});
      }
      for (std::size_t n = 1; n <= 4; ++n) {
        const CountMatrix c = cartan_matrix(kronecker_algebra(f, n));
        REQUIRE(c.size() == 2);
        CHECK(trace(c) == 2);
        CHECK(c[0][1] + c[1][0] == n);
        CHECK(c[0][1] * c[1][0] == 0);
        CHECK(ext1_diag(kronecker_algebra(f, n)) == std::vector<std::size_t>{0, 0});
      }
      if (f.characteristic() != 2) {
        const Algebra a = a_q_algebra(f, num(f, 2));
        CHECK(cartan_matrix(a) == CountMatrix{{4}});
        CHECK(ell(a) == 1);
        CHECK(ext1_diag(a) == std::vector<std::size_t>{2});
      }
    }
  }

  TEST_CASE("radical is a nilpotent ideal with a semisimple quotient") {
    for (const auto& f : testing::test_fields()) {
      for (const Algebra& a : sample_algebras(f)) {
        const Subspace j = radical(a, RadicalMethod::trace_form);
        CHECK(is_two_sided_ideal(a, j));
        const auto powers = radical_powers(a, j);
        CHECK(powers.back().is_zero());
        CHECK(powers.size() <= a.dim());
        CHECK(radical(quotient(a, j).algebra, RadicalMethod::trace_form).is_zero());
        if (a.is_quiver()) CHECK(radical(a) == j);
      }
    }
  }

  TEST_CASE("idempotent sets are complete, orthogonal and reconstruct the semisimple dimension") {
    for (const auto& f : testing::test_fields()) {
      for (const Algebra& a : sample_algebras(f)) {
        const StructureReport s = analyze_structure(a);
        REQUIRE(s.split());
        const IdempotentSet& idems = *s.idempotents;
        Vector sum = a.zero();
        for (std::size_t i = 0; i < idems.idempotents.size(); ++i) {
          sum = add(sum, idems.idempotents[i]);
          for (std::size_t j = 0; j < idems.idempotents.size(); ++j) {
            const Vector p = a.multiply(idems.idempotents[i], idems.idempotents[j]);
            CHECK(p == (i == j ? idems.idempotents[i] : a.zero()));
          }
          // primitive: e(A/J)e is one-dimensional
          CHECK(sandwich(a, idems.idempotents[i], Subspace::full(f, a.dim()), idems.idempotents[i]).dim() -
                    sandwich(a, idems.idempotents[i], s.radical, idems.idempotents[i]).dim() ==
                1);
        }
        CHECK(sum == a.unit());
        std::size_t semisimple_dim = 0;
        for (const auto& cls : idems.iso_classes) semisimple_dim += cls.size() * cls.size();
        CHECK(semisimple_dim == s.radical.codim());
        CHECK(*s.ell == idems.iso_classes.size());
        std::size_t diagonal = 0;
        for (std::size_t r : idems.basic_representatives) {
          diagonal += sandwich(a, idems.idempotents[r], Subspace::full(f, a.dim()), idems.idempotents[r]).dim();
        }
        CHECK(trace(*s.cartan) == diagonal);
      }
    }
  }
}
