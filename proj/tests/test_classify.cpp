#include <doctest.h>

#include "fdalg/classify.hpp"
#include "fdalg/corpus.hpp"
#include "fdalg/errors.hpp"
#include "fdalg/invariants.hpp"
#include "fdalg/morita.hpp"
#include "support.hpp"

using namespace fdalg;
using fdalg::testing::num;

namespace {

/// The verdict the numeric criteria alone dictate.
VerdictKind expected_kind(std::size_t k, std::size_t codim_k2, std::size_t l) {
  if (k == 1) return VerdictKind::morita_f;
  if (k == 2 && l == 1) return VerdictKind::morita_dual;
  if (l == 1 && codim_k2 <= 2) return VerdictKind::truncated_poly;
  return VerdictKind::other;
}

}  // namespace

TEST_SUITE("classify") {
  TEST_CASE("truncated classifier examples") {
    for (const auto& f : testing::test_fields()) {
      const Verdict v = classify_truncated(truncated_polynomial(f, 5));
      CHECK(v.kind == VerdictKind::truncated_poly);
      CHECK(v.truncation_degree == 5);
      CHECK(v.describe() == "TruncatedPoly(5)");
      REQUIRE(v.witness);
      CHECK(v.witness->valid());

      const Verdict inflated = classify_truncated(inflate(truncated_polynomial(f, 3), {2}));
      CHECK(inflated.describe() == "TruncatedPoly(3)");

      if (f.characteristic() != 2) {
        const Verdict a = classify_truncated(a_q_algebra(f, num(f, 2)));
        CHECK(a.kind == VerdictKind::other);
        CHECK(a.k == std::optional<std::size_t>(3));
        CHECK(a.codim_k2 == std::optional<std::size_t>(3));
      }
    }
  }

  TEST_CASE("small classifier examples") {
    const Verdict m7 = classify_small(matrix_algebra(FieldSpec::prime(5), 7));
    CHECK(m7.kind == VerdictKind::morita_f);
    CHECK(m7.describe() == "MoritaF");
    const Verdict z2 = classify_small(cyclic_group_algebra(FieldSpec::prime(2), 2));
    CHECK(z2.kind == VerdictKind::morita_dual);
    CHECK(z2.describe() == "MoritaDual");
    REQUIRE(z2.witness);
    CHECK(z2.witness->valid());
    const Verdict kr = classify_small(kronecker_algebra(FieldSpec::rationals(), 3));
    CHECK(kr.kind == VerdictKind::other);
    CHECK(kr.k == std::optional<std::size_t>(2));
    CHECK(kr.ell == std::optional<std::size_t>(2));
  }

  TEST_CASE("non-split algebras are unavailable") {
    const Verdict v = classify_small(cyclic_group_algebra(FieldSpec::prime(2), 3));
    CHECK(v.kind == VerdictKind::unavailable);
    CHECK(v.describe().rfind("Unavailable(", 0) == 0);
    CHECK(classify_truncated(cyclic_group_algebra(FieldSpec::rationals(), 3)).kind == VerdictKind::unavailable);
  }

  TEST_CASE("Chlebowitz check examples") {
    const FieldSpec f = FieldSpec::prime(5);
    const ChlebowitzResult a = chlebowitz_check(a_q_algebra(f, num(f, 2)));
    CHECK(a.consistent);
    CHECK(a.tight);
    CHECK(a.surrogate);
    CHECK(a.k == 3);
    CHECK(a.dim == 4);
    const ChlebowitzResult t4 = chlebowitz_check(truncated_polynomial(f, 4));
    CHECK(t4.consistent);
    CHECK(t4.k == 4);
    const ChlebowitzResult t5 = chlebowitz_check(truncated_polynomial(f, 5));
    CHECK(t5.consistent);
    CHECK(t5.top_dim == 1);
    try {
      chlebowitz_check(triangular_algebra(f, 2));
      FAIL("expected not_local");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::not_local);
    }
  }

  TEST_CASE("theorem suite examples") {
    for (const auto& f : testing::test_fields()) {
      const TheoremReport r = verify_theorem_suite(truncated_polynomial(f, 3));
      CHECK(r.passed());
      CHECK(r.count(CheckStatus::fail) == 0);
      REQUIRE(r.find("codim_K1_equals_ell"));
      CHECK(r.find("codim_K1_equals_ell")->status == CheckStatus::pass);
    }
    const TheoremReport rq = verify_theorem_suite(random_quiver(FieldSpec::prime(5), 3));
    CHECK(rq.passed());
    const TheoremReport ns = verify_theorem_suite(cyclic_group_algebra(FieldSpec::prime(2), 3));
    CHECK(ns.passed());
    REQUIRE(ns.find("codim_K1_equals_ell"));
    CHECK(ns.find("codim_K1_equals_ell")->status == CheckStatus::skip);
    CHECK(ns.find("codim_K1_equals_ell")->note.rfind("split unavailable", 0) == 0);
    REQUIRE(ns.find("codim_series_monotone"));
    CHECK(ns.find("codim_series_monotone")->status == CheckStatus::pass);
  }

  TEST_CASE("inflated truncated polynomials round trip") {
    for (const auto& f : {FieldSpec::prime(2), FieldSpec::prime(3), FieldSpec::rationals()}) {
      for (std::size_t n = 1; n <= 5; ++n) {
        for (std::size_t m = 1; m <= 3; ++m) {
          const Verdict v = classify_truncated(inflate(truncated_polynomial(f, n), {m}));
          CHECK(v.truncated());
          CHECK(v.truncation_degree == n);
          REQUIRE(v.witness);
          CHECK(v.witness->valid());
        }
      }
    }
  }

  TEST_CASE("verdicts are determined by the numeric triple") {
    for (const auto& spec : standard_corpus()) {
      const Algebra a = generate(spec);
      const Verdict v = classify_small(a);
      if (v.kind == VerdictKind::unavailable) continue;
      REQUIRE(v.k);
      REQUIRE(v.codim_k2);
      REQUIRE(v.ell);
      const VerdictKind expected = expected_kind(*v.k, *v.codim_k2, *v.ell);
      const VerdictKind small = expected == VerdictKind::truncated_poly ? VerdictKind::other : expected;
      CHECK_MESSAGE(v.kind == small, spec.describe());
      const Verdict t = classify_truncated(a);
      CHECK_MESSAGE(t.kind == expected, spec.describe());
      if (t.truncated()) {
        CHECK(t.truncation_degree == *v.k);
        REQUIRE(t.witness);
        CHECK(t.witness->valid());
        CHECK(t.witness->powers.size() == t.truncation_degree);
      }
      if (v.truncated()) {
        CHECK(v.truncation_degree == *v.k);
        REQUIRE(v.witness);
        CHECK(v.witness->valid());
        CHECK(v.witness->powers.size() == v.truncation_degree);
      } else {
        CHECK(v.truncation_degree == 0);
      }
    }
  }
}
