#include <doctest.h>

#include <string>

#include "fdalg/corpus.hpp"
#include "fdalg/errors.hpp"
#include "fdalg/quiver.hpp"
#include "fdalg/structure.hpp"
#include "support.hpp"

using namespace fdalg;
using fdalg::testing::num;

namespace {

ErrorKind error_kind_of(const std::string& text) {
  try {
    parse_quiver(text);
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::internal;
}

std::string linear_quiver(std::size_t n) {
  std::string text = "vertices:";
  for (std::size_t i = 1; i <= n; ++i) text += " v" + std::to_string(i);
  text += "\narrows:";
  for (std::size_t i = 1; i < n; ++i) {
    text += (i > 1 ? ", a" : " a") + std::to_string(i) + ": v" + std::to_string(i) + " -> v" + std::to_string(i + 1);
  }
  return text + "\nrelations:\n";
}

}  // namespace

TEST_SUITE("quiver") {
  TEST_CASE("parse examples") {
    const auto loop = parse_quiver("vertices: v; arrows: x: v->v; relations: x^3");
    CHECK(loop.vertices.size() == 1);
    REQUIRE(loop.arrows.size() == 1);
    REQUIRE(loop.relations.size() == 1);
    CHECK(loop.relations[0].terms[0].path.length() == 3);

    const auto kron = parse_quiver("vertices: u v; arrows: a1: u->v, a2: u->v; relations:");
    CHECK(kron.vertices.size() == 2);
    CHECK(kron.arrows.size() == 2);
    CHECK(kron.relations.empty());
  }

  TEST_CASE("header, parameters and rational coefficients") {
    const auto q = parse_quiver("quiver field=Fp:5\nvertices: o\narrows: x: o->o, y: o->o\nrelations: x^2, y^2, x*y - q*y*x",
                                FieldSpec::rationals(), {{"q", "2"}});
    CHECK(q.field == FieldSpec::prime(5));
    REQUIRE(q.relations.size() == 3);
    CHECK(q.relations[2].terms[1].coeff == num(q.field, -2));
    const auto r = parse_quiver("vertices: o\narrows: x: o->o\nrelations: 1/2 x^2 - 3/4 x^3");
    CHECK(r.relations[0].terms[0].coeff == Scalar::parse(r.field, "1/2"));
  }

  TEST_CASE("parse errors") {
    CHECK(error_kind_of("vertices: u v; arrows: a: u->v, b: v->u; relations: a*b - 2 b*a") == ErrorKind::not_parallel);
    CHECK(error_kind_of("vertices: u; arrows: a: u->w; relations:") == ErrorKind::unknown_symbol);
    CHECK(error_kind_of("vertices: u; arrows: a: u->u; relations: a*z") == ErrorKind::unknown_symbol);
    CHECK(error_kind_of("vertices: u\narrows: a u->u") == ErrorKind::syntax_error);
    CHECK(error_kind_of("vertices: u; arrows: a: u->u; relations: a*a - a") == ErrorKind::not_admissible);
    try {
      parse_quiver("vertices: u v\narrows: a: u->v\nrelations: a*a");
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
  }

  TEST_CASE("admissibility bound examples") {
    CHECK(admissibility_bound(parse_quiver("vertices: v; arrows: x: v->v; relations: x^3")) == 3);
    CHECK(admissibility_bound(kronecker_quiver(FieldSpec::rationals(), 2)) == 2);
    try {
      admissibility_bound(parse_quiver("vertices: v; arrows: x: v->v; relations:"));
      FAIL("expected not_admissible");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::not_admissible);
    }
  }

  TEST_CASE("path algebra examples") {
    for (const auto& f : testing::test_fields()) {
      for (std::size_t n = 1; n <= 5; ++n) {
        const PathAlgebra p = build_path_algebra(truncated_quiver(f, n));
        CHECK(p.algebra.dim() == n);
        CHECK(validate(p.algebra).valid());
        CHECK(p.arrow_ideal.dim() == n - 1);
      }
      for (std::size_t n = 1; n <= 5; ++n) {
        const PathAlgebra p = build_path_algebra(parse_quiver(linear_quiver(n), f));
        CHECK(p.algebra.dim() == n * (n + 1) / 2);
        CHECK(validate(p.algebra).valid());
      }
    }
  }

  TEST_CASE("A_q over F_5 has basis e, x, y, xy with yx = q^-1 xy") {
    const FieldSpec f = FieldSpec::prime(5);
    const QuiverPresentation q = a_q_quiver(f, num(f, 2));
    const PathAlgebra p = build_path_algebra(q);
    REQUIRE(p.algebra.dim() == 4);
    std::vector<std::string> labels;
    for (const auto& path : p.basis) labels.push_back(path_label(q, path));
    CHECK(labels == std::vector<std::string>{"v", "x", "y", "x*y"});
    const Algebra& a = p.algebra;
    const Vector x = a.basis_vector(1), y = a.basis_vector(2);
    CHECK(a.multiply(y, x) == scaled(num(f, 2).inverse(), a.multiply(x, y)));
  }

  TEST_CASE("arrow ideal is a nilpotent ideal equal to the radical") {
    for (const auto& f : testing::test_fields()) {
      std::vector<QuiverPresentation> quivers{truncated_quiver(f, 4), kronecker_quiver(f, 3)};
      if (f.characteristic() != 2) quivers.push_back(a_q_quiver(f, num(f, -1)));
      for (std::uint64_t seed = 1; seed <= 10; ++seed) quivers.push_back(random_quiver_presentation(f, seed, {}));
      for (const auto& q : quivers) {
        const PathAlgebra p = build_path_algebra(q);
        CHECK(validate(p.algebra).valid());
        CHECK(is_two_sided_ideal(p.algebra, p.arrow_ideal));
        CHECK(p.arrow_ideal.codim() == q.vertices.size());
        CHECK(radical(p.algebra, RadicalMethod::trace_form) == p.arrow_ideal);
        Subspace power = p.arrow_ideal;
        for (std::size_t n = 1; n < p.bound; ++n) power = product_space(p.algebra, power, p.arrow_ideal);
        CHECK(power.is_zero());
      }
    }
  }

  TEST_CASE("Kronecker path algebras have dimension n + 2") {
    for (std::size_t n = 1; n <= 8; ++n) CHECK(build_path_algebra(kronecker_quiver(FieldSpec::prime(3), n)).algebra.dim() == n + 2);
  }
}
