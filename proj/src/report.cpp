#include "fdalg/report.hpp"

#include <sstream>

#include "fdalg/errors.hpp"

namespace fdalg {

namespace {

using nlohmann::json;

json vector_json(const Vector& v) {
  json out = json::array();
  for (const auto& s : v) out.push_back(s.to_string());
  return out;
}

json matrix_json(const Matrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vector_json(m.row(r)));
  return out;
}

template <class T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

std::string list_text(const std::vector<std::size_t>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + std::to_string(v[i]);
  return out + "]";
}

std::string matrix_text(const CountMatrix& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.size(); ++i) out += (i ? ", " : "") + list_text(m[i]);
  return out + "]";
}

template <class T>
std::string optional_text(const std::optional<T>& v) {
  if (!v) return "unavailable";
  if constexpr (std::is_same_v<T, std::size_t>) return std::to_string(*v);
  else return list_text(*v);
}

}  // namespace

Report build_report(const Algebra& a, std::uint64_t seed, std::uint64_t symmetric_budget) {
  const StructureReport s = analyze_structure(a, seed);
  Report r;
  r.descriptor = a.name();
  r.field = a.field();
  r.dim = a.dim();
  r.seed = seed;
  r.split_status = s.split_status;
  r.split_note = s.split_note;
  const Subspace kspace = commutator_subspace(a);
  r.k = kspace.codim();
  r.k_star = k_star(a);
  r.ell = s.ell;
  r.radical_dim = s.radical.dim();
  r.loewy_length = s.loewy_length;
  r.codim_series = codim_series(a, s).values;
  if (s.split() && s.idempotents) {
    std::vector<std::size_t> bounds;
    for (std::size_t n = 1; n <= s.loewy_length; ++n) bounds.push_back(otokita_bound(a, *s.idempotents, s, n));
    r.otokita_bounds = std::move(bounds);
  }
  r.cartan = s.cartan;
  r.ext1_diag = s.ext1_diag;
  r.rad_in_K = kspace.contains(s.radical);
  r.symmetric = is_symmetric_search(a, seed, symmetric_budget);
  r.verdict = classify_truncated(a, s);
  r.theorems = verify_theorem_suite(a, s, symmetric_budget);
  return r;
}

json to_json(const Verdict& v) {
  json out;
  out["kind"] = std::string(to_string(v.kind));
  out["label"] = v.describe();
  out["n"] = v.truncated() ? json(v.truncation_degree) : json(nullptr);
  out["k"] = optional_json(v.k);
  out["codim_K2"] = optional_json(v.codim_k2);
  out["ell"] = optional_json(v.ell);
  if (!v.reason.empty()) out["reason"] = v.reason;
  if (v.witness) {
    const auto& w = *v.witness;
    json p = json::array();
    for (const auto& x : w.powers) p.push_back(vector_json(x));
    out["witness"] = {{"n", w.n},           {"basic_dim", w.basic_dim}, {"top_dim", w.top_dim},
                      {"local", w.local},   {"x", vector_json(w.x)},    {"powers", p},
                      {"independent", w.independent}, {"nilpotent", w.nilpotent}, {"valid", w.valid()}};
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

json to_json(const TheoremReport& t) {
  json lines = json::array();
  for (const auto& l : t.lines) {
    lines.push_back({{"name", l.name}, {"status", std::string(to_string(l.status))}, {"lhs", l.lhs}, {"rhs", l.rhs},
                     {"note", l.note}});
  }
  return {{"passed", t.passed()},
          {"pass", t.count(CheckStatus::pass)},
          {"fail", t.count(CheckStatus::fail)},
          {"skip", t.count(CheckStatus::skip)},
          {"lines", lines}};
}

json to_json(const MoritaReport& m) {
  json pairs = json::array();
  for (const auto& [u, v] : m.witness.pairs) pairs.push_back({vector_json(u), vector_json(v)});
  json levels = json::array();
  for (const auto& l : m.levels) {
    levels.push_back({{"n", l.n}, {"codim_A", l.codim_a}, {"codim_B", l.codim_b}, {"tau_matches", l.tau_matches}});
  }
  return {{"basic_dim", m.basic.algebra.dim()},
          {"idempotent", vector_json(m.basic.idempotent)},
          {"fullness_pairs", pairs},
          {"witness_valid", m.witness_valid},
          {"tau", matrix_json(m.tau.matrix)},
          {"tau_well_defined", m.tau.well_defined},
          {"tau_bijective", m.tau.bijective},
          {"sigma_well_defined", m.sigma_well_defined},
          {"round_trip", m.round_trip},
          {"levels", levels},
          {"passed", m.passed()}};
}

json to_json(const Report& r) {
  json sym = {{"verdict", std::string(to_string(r.symmetric.verdict))},
              {"exhaustive", r.symmetric.exhaustive},
              {"candidates_tried", r.symmetric.candidates_tried},
              {"form", r.symmetric.form ? vector_json(*r.symmetric.form) : json(nullptr)}};
  if (!r.symmetric.reason.empty()) sym["reason"] = r.symmetric.reason;
  return {{"input", r.descriptor},
          {"field", r.field.to_string()},
          {"dim", r.dim},
          {"seeds", {r.seed}},
          {"split", std::string(to_string(r.split_status))},
          {"split_note", r.split_note},
          {"k", r.k},
          {"k_star", r.k_star},
          {"ell", optional_json(r.ell)},
          {"radical_dim", r.radical_dim},
          {"loewy_length", r.loewy_length},
          {"codim_series", r.codim_series},
          {"otokita_bounds", optional_json(r.otokita_bounds)},
          {"cartan", optional_json(r.cartan)},
          {"ext1_diag", optional_json(r.ext1_diag)},
          {"rad_in_K", r.rad_in_K},
          {"symmetric", sym},
          {"verdict", to_json(r.verdict)},
          {"theorems", to_json(r.theorems)}};
}

std::string to_text(const Verdict& v) {
  std::ostringstream out;
  out << "verdict: " << v.describe() << "\n";
  out << "evidence: (k, codim K_2, ell) = (" << optional_text(v.k) << ", " << optional_text(v.codim_k2) << ", "
      << optional_text(v.ell) << ")\n";
  if (v.witness) {
    const auto& w = *v.witness;
    out << "witness: basic algebra of dim " << w.basic_dim << ", local " << (w.local ? "yes" : "no")
        << ", dim J/J^2 = " << w.top_dim << "\n";
    out << "  x = " << to_string(w.x) << "\n";
    out << "  powers 1..x^" << (w.n ? w.n - 1 : 0) << " form a basis: " << (w.independent ? "yes" : "no")
        << ", x^" << w.n << " = 0: " << (w.nilpotent ? "yes" : "no") << "\n";
    out << "  certificate " << (w.valid() ? "valid" : "INVALID") << "\n";
  }
  return out.str();
}

std::string to_text(const TheoremReport& t) {
  std::ostringstream out;
  for (const auto& l : t.lines) {
    out << "  " << to_string(l.status) << "  " << l.name;
    if (l.status != CheckStatus::skip) out << "  lhs=" << l.lhs << " rhs=" << l.rhs;
    if (!l.note.empty()) out << "  (" << l.note << ")";
    out << "\n";
  }
  out << "checks: " << t.count(CheckStatus::pass) << " pass, " << t.count(CheckStatus::fail) << " fail, "
      << t.count(CheckStatus::skip) << " skip\n";
  return out.str();
}

std::string to_text(const MoritaReport& m) {
  std::ostringstream out;
  out << "basic algebra: dim " << m.basic.algebra.dim() << ", idempotent " << to_string(m.basic.idempotent) << "\n";
  out << "fullness witness: " << m.witness.pairs.size() << " pairs, valid " << (m.witness_valid ? "yes" : "no") << "\n";
  out << "tau: well-defined " << (m.tau.well_defined ? "yes" : "no") << ", bijective " << (m.tau.bijective ? "yes" : "no")
      << "; sigma well-defined " << (m.sigma_well_defined ? "yes" : "no") << "; round trip "
      << (m.round_trip ? "yes" : "no") << "\n";
  for (const auto& l : m.levels) {
    out << "  n=" << l.n << ": codim K_n(A) = " << l.codim_a << ", codim K_n(B) = " << l.codim_b << ", tau matches "
        << (l.tau_matches ? "yes" : "no") << "\n";
  }
  out << "morita invariance: " << (m.passed() ? "pass" : "FAIL") << "\n";
  return out.str();
}

std::string to_text(const Report& r) {
  std::ostringstream out;
  out << "algebra: " << (r.descriptor.empty() ? "(unnamed)" : r.descriptor) << "\n";
  out << "field: " << r.field.to_string() << "\n";
  out << "dim: " << r.dim << "\n";
  out << "seed: " << r.seed << "\n";
  out << "split: " << to_string(r.split_status);
  if (!r.split_note.empty()) out << " (" << r.split_note << ")";
  out << "\n";
  out << "k = " << r.k << "\n";
  out << "k* = " << r.k_star << "\n";
  out << "ell = " << optional_text(r.ell) << "\n";
  out << "dim J = " << r.radical_dim << "\n";
  out << "Loewy length = " << r.loewy_length << "\n";
  out << "codim K_n series: " << list_text(r.codim_series) << "\n";
  out << "Otokita bounds: " << optional_text(r.otokita_bounds) << "\n";
  out << "Cartan matrix: " << (r.cartan ? matrix_text(*r.cartan) : std::string("unavailable")) << "\n";
  out << "Ext1 diagonal: " << optional_text(r.ext1_diag) << "\n";
  out << "Rad in K: " << (r.rad_in_K ? "yes" : "no") << "\n";
  out << "symmetric: " << to_string(r.symmetric.verdict);
  if (r.symmetric.verdict == SymmetricVerdict::no) out << (r.symmetric.exhaustive ? " (exhaustive)" : "");
  if (!r.symmetric.reason.empty()) out << " (" << r.symmetric.reason << ")";
  out << "\n";
  out << to_text(r.verdict);
  out << "theorem checks:\n" << to_text(r.theorems);
  return out.str();
}

}  // namespace fdalg
