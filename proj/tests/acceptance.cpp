#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "fdalg/classify.hpp"
#include "fdalg/corpus.hpp"
#include "fdalg/errors.hpp"
#include "fdalg/invariants.hpp"
#include "fdalg/morita.hpp"
#include "fdalg/structure.hpp"
#include "oracle/oracle.hpp"

using namespace fdalg;

namespace {

struct Member {
  std::string label;
  Algebra algebra;
  StructureReport structure;
  bool random = false;
};

const std::vector<FieldSpec> small_primes{FieldSpec::prime(2), FieldSpec::prime(3), FieldSpec::prime(5)};

Member make_member(std::string label, Algebra a, bool random = false) {
  StructureReport s = analyze_structure(a, 0);
  return {std::move(label), std::move(a), std::move(s), random};
}

std::vector<Member> build_corpus() {
  std::vector<Member> out;
  for (const auto& spec : standard_corpus()) out.push_back(make_member(spec.describe(), generate(spec)));
  for (std::uint64_t i = 0; i < 200; ++i) {
    GeneratorSpec spec;
    spec.family = Family::random_quiver;
    spec.field = small_primes[i % 3];
    spec.seed = 1000 + i;
    out.push_back(make_member(spec.describe(), generate(spec), true));
  }
  const std::vector<FieldSpec> local_fields{FieldSpec::prime(2), FieldSpec::prime(3), FieldSpec::prime(5),
                                            FieldSpec::rationals()};
  for (std::uint64_t i = 0; i < 100; ++i) {
    GeneratorSpec spec;
    spec.family = Family::random_local;
    spec.field = local_fields[i % 4];
    spec.seed = 5000 + i;
    spec.local.generators = 1 + i % 3;
    spec.local.truncation = 2 + (i / 3) % 3;
    out.push_back(make_member(spec.describe(), generate(spec), true));
  }
  return out;
}

std::vector<std::size_t> series_of(const Algebra& a, const StructureReport& s, std::size_t top) {
  const Subspace k = commutator_subspace(a);
  std::vector<std::size_t> out;
  for (std::size_t n = 1; n <= top; ++n) out.push_back(subspace_sum(k, s.power(a, n)).codim());
  return out;
}

std::string list(const std::vector<std::size_t>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + "]";
}

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> failures;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    if (failures.size() < 5) failures.push_back(what);
  }
};

std::size_t total_ext(const StructureReport& s) {
  std::size_t e = 0;
  for (auto v : *s.ext1_diag) e += v;
  return e;
}

Outcome criterion_1() {
  Outcome o;
  std::vector<std::pair<FieldSpec, long long>> aq{{FieldSpec::prime(5), 2}, {FieldSpec::prime(5), 3},
                                                  {FieldSpec::prime(7), 2}, {FieldSpec::prime(7), 3},
                                                  {FieldSpec::rationals(), 2}};
  for (const auto& [f, q] : aq) {
    const Algebra a = a_q_algebra(f, Scalar::from_integer(f, q));
    const auto s = analyze_structure(a);
    o.require(a.dim() == 4 && k_of(a) == 3 && s.ell == std::optional<std::size_t>(1),
              "A_q(" + std::to_string(q) + ") over " + f.to_string());
  }
  for (const FieldSpec& f : {FieldSpec::rationals(), FieldSpec::prime(2), FieldSpec::prime(3)}) {
    for (std::size_t n = 1; n <= 5; ++n) {
      const Algebra a = kronecker_algebra(f, n);
      o.require(k_of(a) == 2 && ell(a) == 2, "kronecker(" + std::to_string(n) + ") over " + f.to_string());
    }
    for (std::size_t n = 2; n <= 5; ++n) {
      o.require(k_star(triangular_algebra(f, n)) == 1, "k* of T_" + std::to_string(n) + " over " + f.to_string());
    }
  }
  o.detail = "A_q (5 cases), kronecker n=1..5 and T_2..T_5 over Q, F_2, F_3";
  return o;
}

Outcome criterion_2(const std::vector<Member>& corpus) {
  Outcome o;
  std::size_t checked = 0, skipped = 0;
  for (const auto& m : corpus) {
    if (!m.structure.split()) {
      ++skipped;
      continue;
    }
    ++checked;
    const auto& s = m.structure;
    const auto series = series_of(m.algebra, s, 2);
    const std::size_t ell = *s.ell, ext = total_ext(s), k = k_of(m.algebra), tr = trace(*s.cartan);
    o.require(series[0] == ell, m.label + ": codim K_1 " + std::to_string(series[0]) + " vs ell " + std::to_string(ell));
    o.require(series[1] == ell + ext, m.label + ": codim K_2 " + std::to_string(series[1]) + " vs " + std::to_string(ell + ext));
    o.require(ell + ext <= k && k <= tr, m.label + ": bounds on k");
  }
  o.detail = std::to_string(checked) + " split algebras checked, " + std::to_string(skipped) + " non-split skipped";
  return o;
}

Outcome criterion_3(const std::vector<Member>& corpus) {
  Outcome o;
  std::size_t checked = 0;
  for (const auto& m : corpus) {
    if (!m.structure.split()) continue;
    ++checked;
    const auto& s = m.structure;
    const auto series = series_of(m.algebra, s, s.loewy_length);
    bool strict_seen = false;
    for (std::size_t n = 1; n <= s.loewy_length; ++n) {
      const std::size_t b = otokita_bound(m.algebra, s, n);
      o.require(series[n - 1] <= b, m.label + ": bound fails at n=" + std::to_string(n));
      if (series[n - 1] != b) strict_seen = true;
      else o.require(!strict_seen, m.label + ": equality set not downward closed");
    }
  }
  const Algebra aq = a_q_algebra(FieldSpec::prime(5), Scalar::from_integer(FieldSpec::prime(5), 2));
  const auto s = analyze_structure(aq);
  std::vector<std::size_t> bounds;
  for (std::size_t n = 1; n <= 3; ++n) bounds.push_back(otokita_bound(aq, s, n));
  const auto series = series_of(aq, s, 3);
  o.require(s.loewy_length == 3 && series[0] == bounds[0] && series[1] == bounds[1] && series[2] < bounds[2],
            "A_q pattern " + list(series) + " vs " + list(bounds));
  o.detail = std::to_string(checked) + " split algebras; A_q series " + list(series) + " vs bounds " + list(bounds);
  return o;
}

/// All vectors in {1,2,3}^l.
std::vector<std::vector<std::size_t>> multiplicity_vectors(std::size_t l) {
  std::vector<std::vector<std::size_t>> out{{}};
  for (std::size_t i = 0; i < l; ++i) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& v : out) {
      for (std::size_t m = 1; m <= 3; ++m) {
        auto w = v;
        w.push_back(m);
        next.push_back(std::move(w));
      }
    }
    out = std::move(next);
  }
  return out;
}

std::size_t inflated_dim(const Algebra& a, const IdempotentSet& idems, const std::vector<std::size_t>& mult) {
  const auto& reps = idems.basic_representatives;
  const Subspace full = Subspace::full(a.field(), a.dim());
  std::size_t d = 0;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (std::size_t j = 0; j < reps.size(); ++j) {
      d += mult[i] * mult[j] * sandwich(a, idems.idempotents[reps[i]], full, idems.idempotents[reps[j]]).dim();
    }
  }
  return d;
}

Outcome criterion_4(const std::vector<Member>& corpus) {
  Outcome o;
  std::size_t algebras = 0, inflations = 0;
  for (const auto& m : corpus) {
    if (!m.structure.split()) continue;
    ++algebras;
    const MoritaReport r = verify_morita_invariance(m.algebra, m.structure);
    o.require(r.passed(), m.label + ": Morita certificate");
    const auto& idems = *m.structure.idempotents;
    const std::size_t l = idems.basic_representatives.size();
    if (m.random && l > 2) continue;
    for (const auto& mult : multiplicity_vectors(l)) {
      if (inflated_dim(m.algebra, idems, mult) > 60) continue;
      ++inflations;
      const Algebra big = inflate(m.algebra, idems, mult);
      const StructureReport sb = analyze_structure(big, 0);
      const MoritaReport rb = verify_morita_invariance(big, sb);
      const std::size_t top = std::max(m.structure.loewy_length, sb.loewy_length);
      const auto sa = series_of(m.algebra, m.structure, top);
      const auto si = series_of(big, sb, top);
      std::vector<std::size_t> basic;
      for (const auto& level : rb.levels) basic.push_back(level.codim_b);
      basic.resize(top, basic.empty() ? 0 : basic.back());
      o.require(rb.passed() && sa == si && sa == basic, m.label + " inflated by " + list(mult));
    }
  }
  o.detail = std::to_string(algebras) + " algebras, " + std::to_string(inflations) + " inflations up to dim 60";
  return o;
}

Outcome criterion_5() {
  Outcome o;
  std::size_t cases = 0;
  auto expect = [&](const Algebra& a, VerdictKind kind, std::size_t n, const std::string& what, bool small) {
    ++cases;
    const Verdict v = small ? classify_small(a) : classify_truncated(a);
    bool ok = v.kind == kind;
    if (v.truncated()) ok = ok && v.truncation_degree == n && v.witness && v.witness->valid();
    o.require(ok, what + " gave " + v.describe());
  };
  for (const FieldSpec& f : {FieldSpec::prime(2), FieldSpec::prime(3), FieldSpec::prime(5), FieldSpec::rationals()}) {
    const std::string on = " over " + f.to_string();
    for (std::size_t n = 1; n <= 4; ++n) {
      expect(matrix_algebra(f, n), VerdictKind::morita_f, 1, "M_" + std::to_string(n) + on, true);
      expect(matrix_algebra(f, n), VerdictKind::morita_f, 1, "M_" + std::to_string(n) + on, false);
    }
    for (std::size_t n = 1; n <= 8; ++n) {
      const VerdictKind kind =
          n == 1 ? VerdictKind::morita_f : n == 2 ? VerdictKind::morita_dual : VerdictKind::truncated_poly;
      for (std::size_t m = 1; m <= 3; ++m) {
        expect(inflate(truncated_polynomial(f, n), {m}), kind, n,
               "inflate(F[X]/(X^" + std::to_string(n) + "), [" + std::to_string(m) + "])" + on, false);
      }
    }
    for (std::size_t n = 1; n <= 5; ++n) {
      expect(kronecker_algebra(f, n), VerdictKind::other, 0, "kronecker(" + std::to_string(n) + ")" + on, true);
      expect(kronecker_algebra(f, n), VerdictKind::other, 0, "kronecker(" + std::to_string(n) + ")" + on, false);
    }
    for (long long q : {2LL, 3LL, -1LL}) {
      const Scalar qs = Scalar::from_integer(f, q);
      if (qs.is_zero() || qs.is_one()) continue;
      expect(a_q_algebra(f, qs), VerdictKind::other, 0, "A_q(" + std::to_string(q) + ")" + on, true);
      expect(a_q_algebra(f, qs), VerdictKind::other, 0, "A_q(" + std::to_string(q) + ")" + on, false);
    }
  }
  expect(cyclic_group_algebra(FieldSpec::prime(2), 2), VerdictKind::morita_dual, 2, "F_2[Z/2]", true);
  expect(cyclic_group_algebra(FieldSpec::prime(2), 2), VerdictKind::morita_dual, 2, "F_2[Z/2]", false);
  o.detail = std::to_string(cases) + " classifications with certificates";
  return o;
}

Outcome criterion_6(const std::vector<Member>& corpus) {
  Outcome o;
  std::size_t checked = 0;
  for (const auto& m : corpus) {
    if (!m.algebra.field().is_prime() || !m.structure.split()) continue;
    ++checked;
    const Subspace k1 = subspace_sum(commutator_subspace(m.algebra), m.structure.radical);
    o.require(t_space(m.algebra) == k1, m.label);
  }
  o.detail = std::to_string(checked) + " split algebras over F_2, F_3, F_5";
  return o;
}

Outcome criterion_7() {
  Outcome o;
  for (std::uint64_t i = 0; i < 100; ++i) {
    GeneratorSpec spec;
    spec.family = Family::random_quiver;
    spec.field = small_primes[i % 3];
    spec.seed = 9000 + i;
    spec.quiver.radical_square_zero = true;
    const Algebra a = generate(spec);
    const auto s = analyze_structure(a);
    o.require(s.split() && s.loewy_length <= 2 && k_of(a) == trace(*s.cartan), spec.describe());
  }
  o.detail = "100 radical-square-zero random quiver algebras";
  return o;
}

Outcome criterion_8(const std::vector<Member>& corpus) {
  Outcome o;
  std::size_t checked = 0, hypothesis = 0, equal = 0;
  for (const auto& m : corpus) {
    if (!m.structure.split()) continue;
    ++checked;
    const std::size_t k = k_of(m.algebra), ell = *m.structure.ell;
    const bool rad_in = commutator_subspace(m.algebra).contains(m.structure.radical);
    o.require((k == ell) == rad_in, m.label + ": k = ell vs Rad in K");
    if (k != ell) continue;
    ++equal;
    bool applies = m.algebra.is_commutative() || is_local(m.algebra, m.structure).value_or(false);
    if (!applies) applies = is_symmetric_search(m.algebra, 0).verdict == SymmetricVerdict::yes;
    if (!applies) continue;
    ++hypothesis;
    o.require(m.structure.radical.is_zero(), m.label + ": k = ell with nonzero radical");
  }
  o.detail = std::to_string(checked) + " split algebras, " + std::to_string(equal) + " with k = ell, " +
             std::to_string(hypothesis) + " of those symmetric, commutative or local";
  return o;
}

Outcome criterion_9(const std::vector<Member>& corpus) {
  Outcome o;
  std::size_t radicals = 0, ks = 0;
  for (const auto& m : corpus) {
    const Algebra& a = m.algebra;
    if (a.dim() <= 24) {
      ++ks;
      o.require(oracle::k_oracle(a) == k_of(a), m.label + ": k oracle");
    }
    if (!a.field().is_prime()) continue;
    std::size_t size = 1;
    bool small = true;
    for (std::size_t i = 0; i < a.dim() && small; ++i) {
      size *= a.field().characteristic();
      small = size <= oracle::radical_oracle_limit;
    }
    if (!small) continue;
    ++radicals;
    const Subspace expected = oracle::radical_oracle(a);
    o.require(expected == m.structure.radical, m.label + ": radical oracle");
    o.require(expected == radical(a.with_provenance({})), m.label + ": radical oracle, provenance stripped");
  }
  o.detail = std::to_string(radicals) + " radical comparisons, " + std::to_string(ks) + " k comparisons";
  return o;
}

Outcome criterion_10() {
  Outcome o;
  std::size_t tight = 0;
  for (std::uint64_t i = 0; i < 500; ++i) {
    GeneratorSpec spec;
    spec.family = Family::random_local;
    spec.field = i % 2 ? FieldSpec::prime(3) : FieldSpec::prime(2);
    spec.seed = 20000 + i;
    spec.local.generators = 1 + i % 3;
    spec.local.truncation = 2 + (i / 2) % 3;
    spec.local.max_dim = 12;
    const Algebra a = generate(spec);
    const ChlebowitzResult r = chlebowitz_check(a);
    o.require(r.consistent && r.surrogate, spec.describe() + ": k=" + std::to_string(r.k) + " dim " + std::to_string(r.dim));
    tight += r.tight;
  }
  const FieldSpec f5 = FieldSpec::prime(5);
  const ChlebowitzResult aq = chlebowitz_check(a_q_algebra(f5, Scalar::from_integer(f5, 2)));
  o.require(aq.consistent && aq.tight && aq.k == 3 && aq.dim == 4, "A_q tight case");
  o.detail = "500 random local algebras, " + std::to_string(tight) + " tight; A_q k=" + std::to_string(aq.k) +
             " dim=" + std::to_string(aq.dim);
  return o;
}

}  // namespace

int main() {
  using clock = std::chrono::steady_clock;
  const auto start = clock::now();
  std::vector<Member> corpus;
  try {
    corpus = build_corpus();
  } catch (const std::exception& e) {
    std::cout << "corpus construction failed: " << e.what() << "\n";
    return 1;
  }
  std::cout << "corpus: " << corpus.size() << " algebras\n";
  const std::vector<std::pair<int, std::function<Outcome()>>> criteria{
      {1, [] { return criterion_1(); }},
      {2, [&] { return criterion_2(corpus); }},
      {3, [&] { return criterion_3(corpus); }},
      {4, [&] { return criterion_4(corpus); }},
      {5, [] { return criterion_5(); }},
      {6, [&] { return criterion_6(corpus); }},
      {7, [] { return criterion_7(); }},
      {8, [&] { return criterion_8(corpus); }},
      {9, [&] { return criterion_9(corpus); }},
      {10, [] { return criterion_10(); }},
  };
  bool all = true;
  for (const auto& [id, run] : criteria) {
    const auto t0 = clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(clock::now() - t0).count();
    all = all && o.pass;
    std::printf("criterion %2d: %s  %s  (%.1fs)\n", id, o.pass ? "PASS" : "FAIL", o.detail.c_str(), secs);
    for (const auto& f : o.failures) std::printf("    failed: %s\n", f.c_str());
  }
  std::printf("total %.1fs\n", std::chrono::duration<double>(clock::now() - start).count());
  return all ? 0 : 1;
}
