#include <doctest.h>

#include "fdalg/corpus.hpp"
#include "fdalg/errors.hpp"
#include "fdalg/io.hpp"
#include "fdalg/report.hpp"
#include "support.hpp"

using namespace fdalg;
using fdalg::testing::num;

namespace {

GeneratorSpec make_spec(Family family, const FieldSpec& field, std::size_t n = 0) {
  GeneratorSpec spec;
  spec.family = family;
  spec.field = field;
  spec.n = n;
  return spec;
}

ErrorKind read_error(const std::string& text) {
  try {
    read_algebra(text);
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::internal;
}

bool same_constants(const Algebra& a, const Algebra& b) {
  if (!(a.field() == b.field()) || a.dim() != b.dim() || a.unit() != b.unit()) return false;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      if (a.basis_product_vector(i, j) != b.basis_product_vector(i, j)) return false;
    }
  }
  return true;
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("structure-constant files round trip") {
    for (const auto& f : testing::test_fields()) {
      std::vector<Algebra> algebras{truncated_polynomial(f, 3), s3_group_algebra(f), kronecker_algebra(f, 2),
                                    random_local(f, 4)};
      if (f.characteristic() != 2) algebras.push_back(a_q_algebra(f, Scalar::parse(f, "-1")));
      for (const Algebra& a : algebras) {
        const std::string text = write_algebra(a);
        const Algebra b = read_algebra(text);
        CHECK(same_constants(a, b));
        CHECK(b.name() == a.name());
        CHECK(b.provenance().index() == a.provenance().index());
        CHECK(write_algebra(b) == text);
      }
    }
  }

  TEST_CASE("rational coefficients survive a round trip") {
    const FieldSpec q = FieldSpec::rationals();
    const Algebra a = a_q_algebra(q, Scalar::parse(q, "2/3"));
    CHECK(same_constants(a, read_algebra(write_algebra(a))));
  }

  TEST_CASE("syntax errors carry a line number") {
    CHECK(read_error("") == ErrorKind::syntax_error);
    CHECK(read_error("algebra dim=2 field=Q\nunit: 1 0\nmul 0 0 5 1\n") != ErrorKind::internal);
    CHECK(read_error("algebra dim=1 field=Q\nunit: 1\nmul 0 0 0\n") == ErrorKind::syntax_error);
    CHECK(read_error("algebra dim=1 field=Fp:4\nunit: 1\n") == ErrorKind::syntax_error);
    try {
      read_algebra("algebra dim=1 field=Q\nunit: 1\nbogus\n");
      FAIL("expected syntax_error");
    } catch (const Error& e) {
      CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
  }

  TEST_CASE("reading does not validate") {
    const Algebra a = read_algebra("algebra dim=2 field=Q\nunit: 1 0\nmul 0 0 0 1\nmul 0 1 1 1\nmul 1 0 0 1\n");
    CHECK_FALSE(validate(a).valid());
  }

  TEST_CASE("format detection") {
    CHECK(detect_format("# comment\nalgebra dim=1 field=Q\n") == InputFormat::structure_constants);
    CHECK(detect_format("\n2\n0 1\n1 0\n") == InputFormat::cayley);
    CHECK(detect_format("vertices: v\n") == InputFormat::quiver);
    CHECK(detect_format("quiver field=Fp:3\nvertices: v\n") == InputFormat::quiver);
  }

  TEST_CASE("Cayley tables load as group algebras") {
    LoadOptions opts;
    opts.field = FieldSpec::prime(3);
    const Algebra a = parse_any("3\n0 1 2\n1 2 0\n2 0 1\n", opts);
    CHECK(a.dim() == 3);
    CHECK(std::holds_alternative<GroupProvenance>(a.provenance()));
    CHECK_THROWS_AS(parse_any("2\n0 0\n1 1\n", opts), Error);
  }

  TEST_CASE("quiver files load with parameters") {
    LoadOptions opts;
    opts.params["q"] = "2";
    const Algebra a =
        parse_any("quiver field=Fp:5\nvertices: o\narrows: x: o->o, y: o->o\nrelations: x^2, y^2, x*y - q*y*x\n", opts);
    CHECK(a.dim() == 4);
    CHECK(a.field() == FieldSpec::prime(5));
  }

  TEST_CASE("missing files raise io errors") {
    try {
      read_text("/nonexistent/fdalg/input");
      FAIL("expected io_error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::io_error);
    }
  }

  TEST_CASE("reports are reproduced from written files") {
    GeneratorSpec spec = make_spec(Family::a_q, FieldSpec::prime(5));
    spec.q = num(spec.field, 2);
    const Algebra a = generate(spec);
    const Algebra b = read_algebra(write_algebra(a));
    const auto ja = to_json(build_report(a, 3)), jb = to_json(build_report(b, 3));
    CHECK(ja == jb);
    CHECK(ja.at("k") == 3);
    CHECK(ja.at("ell") == 1);
    CHECK(nlohmann::json::parse(ja.dump()) == ja);
    CHECK(to_text(build_report(a, 3)) == to_text(build_report(b, 3)));
  }
}
