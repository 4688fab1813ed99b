#include "fdalg/classify.hpp"

#include <algorithm>
#include <numeric>

#include "fdalg/errors.hpp"
#include "fdalg/morita.hpp"

namespace fdalg {

namespace {

std::string join(const std::vector<std::size_t>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + "]";
}

std::string num(std::size_t v) { return std::to_string(v); }

TheoremLine skipped(std::string name, std::string note) {
  TheoremLine l;
  l.name = std::move(name);
  l.status = CheckStatus::skip;
  l.note = std::move(note);
  return l;
}

TheoremLine judged(std::string name, bool ok, std::string lhs, std::string rhs, std::string note = {}) {
  TheoremLine l;
  l.name = std::move(name);
  l.status = ok ? CheckStatus::pass : CheckStatus::fail;
  l.lhs = std::move(lhs);
  l.rhs = std::move(rhs);
  l.note = std::move(note);
  return l;
}

bool is_basic(const IdempotentSet& idems) {
  return std::all_of(idems.iso_classes.begin(), idems.iso_classes.end(), [](const auto& c) { return c.size() == 1; });
}

std::size_t codim_k2(const Algebra& a, const StructureReport& s) {
  return subspace_sum(commutator_subspace(a), s.power(a, 2)).codim();
}

}  // namespace

std::string_view to_string(VerdictKind kind) noexcept {
  switch (kind) {
    case VerdictKind::morita_f: return "MoritaF";
    case VerdictKind::morita_dual: return "MoritaDual";
    case VerdictKind::truncated_poly: return "TruncatedPoly";
    case VerdictKind::other: return "Other";
    case VerdictKind::unavailable: return "Unavailable";
  }
  return "Unavailable";
}

std::string Verdict::describe() const {
  switch (kind) {
    case VerdictKind::truncated_poly: return "TruncatedPoly(" + std::to_string(truncation_degree) + ")";
    case VerdictKind::unavailable: return "Unavailable(" + reason + ")";
    default: return std::string(to_string(kind));
  }
}

bool Verdict::truncated() const noexcept {
  return kind == VerdictKind::morita_f || kind == VerdictKind::morita_dual || kind == VerdictKind::truncated_poly;
}

TruncationWitness truncation_witness(const Algebra& a, const StructureReport& s, std::size_t n) {
  TruncationWitness w;
  w.n = n;
  const Corner basic = basic_algebra(a, s);
  const Algebra& b = basic.algebra;
  const StructureReport sb = analyze_structure(b, s.seed);
  w.basic_dim = b.dim();
  w.local = is_local(b, sb).value_or(false);
  const Subspace j2 = sb.power(b, 2);
  w.top_dim = sb.radical.dim() - j2.dim();
  w.x = b.zero();
  for (const auto& v : sb.radical.basis()) {
    if (!j2.contains(v)) {
      w.x = v;
      break;
    }
  }
  Vector p = b.unit();
  for (std::size_t i = 0; i < n; ++i) {
    w.powers.push_back(p);
    p = b.multiply(p, w.x);
  }
  w.nilpotent = is_zero(p);
  w.independent = Subspace::span(b.field(), b.dim(), w.powers).dim() == b.dim() && w.powers.size() == b.dim();
  return w;
}

Verdict classify_truncated(const Algebra& a, std::uint64_t seed) { return classify_truncated(a, analyze_structure(a, seed)); }

Verdict classify_truncated(const Algebra& a, const StructureReport& s) {
  Verdict v;
  v.k = k_of(a);
  if (!s.split() || !s.ell) {
    v.kind = VerdictKind::unavailable;
    v.reason = s.split_note.empty() ? std::string("algebra is not known to be split") : s.split_note;
    return v;
  }
  v.ell = s.ell;
  v.codim_k2 = codim_k2(a, s);
  if (*v.ell != 1 || *v.codim_k2 > 2) {
    v.kind = VerdictKind::other;
    return v;
  }
  const std::size_t n = *v.k;
  v.truncation_degree = n;
  v.kind = n == 1 ? VerdictKind::morita_f : n == 2 ? VerdictKind::morita_dual : VerdictKind::truncated_poly;
  v.witness = truncation_witness(a, s, n);
  return v;
}

Verdict classify_small(const Algebra& a, std::uint64_t seed) { return classify_small(a, analyze_structure(a, seed)); }

Verdict classify_small(const Algebra& a, const StructureReport& s) {
  Verdict v = classify_truncated(a, s);
  if (v.kind == VerdictKind::unavailable) return v;
  const bool f = *v.k == 1;
  const bool dual = *v.k == 2 && *v.ell == 1;
  if (f || dual) {
    v.kind = f ? VerdictKind::morita_f : VerdictKind::morita_dual;
    v.truncation_degree = f ? 1 : 2;
    if (!v.witness) v.witness = truncation_witness(a, s, v.truncation_degree);
  } else {
    v.kind = VerdictKind::other;
    v.truncation_degree = 0;
    v.witness.reset();
  }
  return v;
}

ChlebowitzResult chlebowitz_check(const Algebra& a, std::uint64_t seed) {
  return chlebowitz_check(a, analyze_structure(a, seed));
}

ChlebowitzResult chlebowitz_check(const Algebra& a, const StructureReport& s) {
  const auto local = is_local(a, s);
  if (!local) throw Error(ErrorKind::not_local, "cannot decide whether the algebra is local: " + s.split_note);
  if (!*local) throw Error(ErrorKind::not_local, "the algebra is not local");
  ChlebowitzResult r;
  r.k = k_of(a);
  r.dim = a.dim();
  r.top_dim = s.radical.dim() - s.power(a, 2).dim();
  auto bound = [&](bool applies, std::size_t cap, const std::string& label) {
    if (!applies) return;
    const bool ok = r.dim <= cap;
    r.consistent = r.consistent && ok;
    r.tight = r.tight || r.dim == cap;
    r.checks.push_back(label + ": dim " + num(r.dim) + (ok ? " <= " : " > ") + num(cap));
  };
  bound(r.k <= 3, 4, "k <= 3");
  bound(r.k == 4, 10, "k = 4");
  bound(r.k == 5 && r.top_dim <= 2, 12, "k = 5, dim J/J^2 <= 2");
  return r;
}

std::string_view to_string(CheckStatus status) noexcept {
  switch (status) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skip: return "skip";
  }
  return "skip";
}

bool TheoremReport::passed() const noexcept { return count(CheckStatus::fail) == 0; }

std::size_t TheoremReport::count(CheckStatus status) const noexcept {
  return static_cast<std::size_t>(
      std::count_if(lines.begin(), lines.end(), [&](const TheoremLine& l) { return l.status == status; }));
}

const TheoremLine* TheoremReport::find(std::string_view name) const noexcept {
  for (const auto& l : lines) {
    if (l.name == name) return &l;
  }
  return nullptr;
}

TheoremReport verify_theorem_suite(const Algebra& a, std::uint64_t seed, std::uint64_t symmetric_budget) {
  return verify_theorem_suite(a, analyze_structure(a, seed), symmetric_budget);
}

TheoremReport verify_theorem_suite(const Algebra& a, const StructureReport& s, std::uint64_t symmetric_budget) {
  TheoremReport report;
  auto& out = report.lines;
  const Subspace kspace = commutator_subspace(a);
  const std::size_t k = kspace.codim();
  const std::size_t ll = s.loewy_length;
  std::vector<std::size_t> series;
  for (std::size_t n = 1; n <= ll; ++n) series.push_back(subspace_sum(kspace, s.power(a, n)).codim());
  const bool split = s.split() && s.idempotents && s.ell;
  const std::string why = "split unavailable: " + (s.split_note.empty() ? std::string("undecided") : s.split_note);

  if (split) {
    const std::size_t ell = *s.ell;
    const std::size_t ext = std::accumulate(s.ext1_diag->begin(), s.ext1_diag->end(), std::size_t{0});
    const std::size_t tr = trace(*s.cartan);
    const std::size_t c2 = ll >= 2 ? series[1] : series[0];
    out.push_back(judged("codim_K1_equals_ell", series[0] == ell, num(series[0]), num(ell)));
    out.push_back(judged("codim_K2_equals_ell_plus_ext1", c2 == ell + ext, num(c2), num(ell + ext)));
    out.push_back(judged("ext1_bound_k_trace_bound", ell + ext <= k && k <= tr, num(k),
                         "[" + num(ell + ext) + ", " + num(tr) + "]"));

    std::vector<std::size_t> bounds;
    for (std::size_t n = 1; n <= ll; ++n) bounds.push_back(otokita_bound(a, *s.idempotents, s, n));
    bool below = true, closed = true, seen_strict = false;
    for (std::size_t n = 0; n < ll; ++n) {
      below = below && series[n] <= bounds[n];
      if (series[n] != bounds[n]) seen_strict = true;
      else if (seen_strict) closed = false;
    }
    out.push_back(judged("otokita_bound", below && closed, join(series), join(bounds),
                         closed ? "" : "equality set is not downward closed"));

    if (is_basic(*s.idempotents)) {
      bool same = true, iff = true;
      std::vector<std::size_t> cyc;
      for (std::size_t n = 1; n <= ll; ++n) {
        const Subspace ac = acyc_cyc(a, *s.idempotents, s, n);
        cyc.push_back(ac.codim());
        same = same && ac.codim() == bounds[n - 1];
        iff = iff && ((series[n - 1] == bounds[n - 1]) == ac.contains(kspace));
      }
      out.push_back(judged("peirce_codim_equals_bound", same, join(cyc), join(bounds)));
      out.push_back(judged("equality_iff_K_in_peirce_sum", iff, join(series), join(bounds)));
    } else {
      out.push_back(skipped("peirce_codim_equals_bound", "algebra is not basic"));
      out.push_back(skipped("equality_iff_K_in_peirce_sum", "algebra is not basic"));
    }

    if (a.field().is_prime()) {
      const Subspace t = t_space(a);
      const Subspace k1 = subspace_sum(kspace, s.radical);
      out.push_back(judged("t_space_equals_K1", t == k1, num(t.codim()), num(k1.codim()), "codimensions shown"));
    } else {
      out.push_back(skipped("t_space_equals_K1", "characteristic zero"));
    }

    if (ll <= 2) {
      out.push_back(judged("radical_square_zero_k_equals_trace", k == tr, num(k), num(tr)));
    } else {
      out.push_back(skipped("radical_square_zero_k_equals_trace", "radical square is nonzero"));
    }

    const bool rad_in = kspace.contains(s.radical);
    out.push_back(judged("k_equals_ell_iff_rad_in_K", (k == ell) == rad_in, "k=" + num(k) + ", ell=" + num(ell),
                         std::string("rad_in_K=") + (rad_in ? "true" : "false")));

    std::string hypothesis;
    if (a.is_commutative()) hypothesis = "commutative";
    else if (is_local(a, s).value_or(false)) hypothesis = "local";
    else if (k == ell && is_symmetric_search(a, s.seed, symmetric_budget).verdict == SymmetricVerdict::yes) {
      hypothesis = "symmetric";
    }
    if (hypothesis.empty()) {
      out.push_back(skipped("k_equals_ell_forces_semisimple", "not commutative, local or certified symmetric"));
    } else {
      out.push_back(judged("k_equals_ell_forces_semisimple", k != ell || s.radical.is_zero(),
                           "k=" + num(k) + ", ell=" + num(ell), "dim J=" + num(s.radical.dim()), hypothesis));
    }
  } else {
    for (const char* name : {"codim_K1_equals_ell", "codim_K2_equals_ell_plus_ext1", "ext1_bound_k_trace_bound",
                             "otokita_bound", "peirce_codim_equals_bound", "equality_iff_K_in_peirce_sum",
                             "t_space_equals_K1", "radical_square_zero_k_equals_trace", "k_equals_ell_iff_rad_in_K",
                             "k_equals_ell_forces_semisimple"}) {
      out.push_back(skipped(name, why));
    }
  }

  const bool monotone = std::is_sorted(series.begin(), series.end()) && series.back() == k;
  out.push_back(judged("codim_series_monotone", monotone, join(series), num(k)));

  if (split) {
    const MoritaReport m = verify_morita_invariance(a, s);
    std::vector<std::size_t> ca, cb;
    for (const auto& l : m.levels) {
      ca.push_back(l.codim_a);
      cb.push_back(l.codim_b);
    }
    out.push_back(judged("morita_invariance", m.passed(), join(ca), join(cb),
                         "basic algebra of dimension " + num(m.basic.algebra.dim())));
  } else {
    out.push_back(skipped("morita_invariance", why));
  }
  return report;
}

}  // namespace fdalg
