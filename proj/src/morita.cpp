#include "fdalg/morita.hpp"

#include <algorithm>

#include "fdalg/errors.hpp"
#include "fdalg/invariants.hpp"

namespace fdalg {

namespace {

std::vector<Vector> project_all(const Subspace& k, const std::vector<std::size_t>& reps, const std::vector<Vector>& vs) {
  std::vector<Vector> out;
  for (const auto& v : vs) {
    const Vector r = k.reduce(v);
    Vector p;
    for (std::size_t c : reps) p.push_back(r[c]);
    out.push_back(std::move(p));
  }
  return out;
}

Vector project(const Subspace& k, const std::vector<std::size_t>& reps, const Vector& v) {
  return project_all(k, reps, {v}).front();
}

}  // namespace

Vector basic_idempotent(const Algebra& a, const IdempotentSet& idems) {
  Vector e = a.zero();
  for (std::size_t r : idems.basic_representatives) e = add(e, idems.idempotents[r]);
  return e;
}

Corner basic_algebra(const Algebra& a, std::uint64_t seed) { return basic_algebra(a, analyze_structure(a, seed)); }

Corner basic_algebra(const Algebra& a, const StructureReport& s) {
  if (!s.idempotents) throw Error(ErrorKind::not_split, "basic algebra needs a split algebra: " + s.split_note);
  return corner(a, basic_idempotent(a, *s.idempotents));
}

FullnessWitness fullness_witness(const Algebra& a, const Vector& e) {
  if (!is_idempotent(a, e)) throw Error(ErrorKind::not_idempotent, "fullness witness needs an idempotent");
  FullnessWitness w{e, {}};
  if (e == a.unit()) {
    w.pairs.emplace_back(a.unit(), a.unit());
    return w;
  }
  const std::size_t d = a.dim();
  SpanBuilder builder(a.field(), d);
  std::vector<std::pair<std::size_t, std::size_t>> chosen;
  std::vector<Vector> columns;
  for (std::size_t i = 0; i < d && !builder.full(); ++i) {
    const Vector be = a.multiply(a.basis_vector(i), e);
    if (is_zero(be)) continue;
    for (std::size_t j = 0; j < d && !builder.full(); ++j) {
      Vector p = a.multiply(be, a.basis_vector(j));
      if (builder.add(p)) {
        chosen.emplace_back(i, j);
        columns.push_back(std::move(p));
      }
    }
  }
  const auto c = builder.contains(a.unit()) ? solve(Matrix::from_columns(a.field(), d, columns), a.unit()) : std::nullopt;
  if (!c) throw Error(ErrorKind::not_full, "AeA is a proper ideal of A");
  for (std::size_t t = 0; t < chosen.size(); ++t) {
    if ((*c)[t].is_zero()) continue;
    w.pairs.emplace_back(scaled((*c)[t], a.basis_vector(chosen[t].first)), a.basis_vector(chosen[t].second));
  }
  return w;
}

bool check_witness(const Algebra& a, const FullnessWitness& w) {
  Vector total = a.zero();
  for (const auto& [u, v] : w.pairs) total = add(total, a.multiply(a.multiply(u, w.e), v));
  return total == a.unit();
}

TauMap tau_map(const Algebra& a, const Corner& b, const FullnessWitness& w) {
  const Subspace ka = commutator_subspace(a), kb = commutator_subspace(b.algebra);
  TauMap t{Matrix(a.field(), kb.codim(), ka.codim()), ka.free_coordinates(), kb.free_coordinates()};
  auto tau = [&](const Vector& x) {
    Vector out = a.zero();
    for (const auto& [u, v] : w.pairs) {
      out = add(out, a.multiply(a.multiply(a.multiply(w.e, v), x), a.multiply(u, w.e)));
    }
    return b.to_corner(out);
  };
  for (std::size_t col = 0; col < t.source_representatives.size(); ++col) {
    const Vector img = project(kb, t.target_representatives, tau(a.basis_vector(t.source_representatives[col])));
    for (std::size_t row = 0; row < img.size(); ++row) t.matrix(row, col) = img[row];
  }
  t.well_defined = std::all_of(ka.basis().begin(), ka.basis().end(), [&](const Vector& v) { return kb.contains(tau(v)); });
  t.bijective = t.matrix.rows() == t.matrix.cols() && rank(t.matrix) == t.matrix.rows();
  return t;
}

Matrix sigma_map(const Algebra& a, const Corner& b) {
  const Subspace ka = commutator_subspace(a), kb = commutator_subspace(b.algebra);
  const auto ra = ka.free_coordinates(), rb = kb.free_coordinates();
  Matrix m(a.field(), ra.size(), rb.size());
  for (std::size_t col = 0; col < rb.size(); ++col) {
    const Vector img = project(ka, ra, b.to_parent(b.algebra.basis_vector(rb[col])));
    for (std::size_t row = 0; row < img.size(); ++row) m(row, col) = img[row];
  }
  return m;
}

bool MoritaReport::passed() const {
  if (!witness_valid || !tau.well_defined || !tau.bijective || !sigma_well_defined || !round_trip) return false;
  return std::all_of(levels.begin(), levels.end(),
                     [](const MoritaLevel& l) { return l.tau_matches && l.codim_a == l.codim_b; });
}

MoritaReport verify_morita_invariance(const Algebra& a, std::uint64_t seed) {
  return verify_morita_invariance(a, analyze_structure(a, seed));
}

MoritaReport verify_morita_invariance(const Algebra& a, const StructureReport& s) {
  Corner basic = basic_algebra(a, s);
  FullnessWitness w = fullness_witness(a, basic.idempotent);
  TauMap tau = tau_map(a, basic, w);
  MoritaReport r{basic, w, tau, false, false, false, {}};
  r.witness_valid = check_witness(a, w);

  const Algebra& b = basic.algebra;
  const StructureReport sb = analyze_structure(b, s.seed);
  const Subspace ka = commutator_subspace(a), kb = commutator_subspace(b);
  r.sigma_well_defined = std::all_of(kb.basis().begin(), kb.basis().end(),
                                     [&](const Vector& v) { return ka.contains(basic.to_parent(v)); });
  const Matrix sigma = sigma_map(a, basic);
  if (tau.bijective && sigma.rows() == tau.matrix.cols() && sigma.cols() == tau.matrix.rows()) {
    r.round_trip = tau.matrix * sigma == Matrix::identity(a.field(), sigma.cols()) &&
                   sigma * tau.matrix == Matrix::identity(a.field(), sigma.rows());
  }
  const std::size_t top = std::max(s.loewy_length, sb.loewy_length);
  for (std::size_t n = 1; n <= top; ++n) {
    MoritaLevel level;
    level.n = n;
    const Subspace kna = subspace_sum(ka, s.power(a, n));
    const Subspace knb = subspace_sum(kb, sb.power(b, n));
    level.codim_a = kna.codim();
    level.codim_b = knb.codim();
    // Compare tau(K_n(A)/K(A)) with K_n(B)/K(B) inside B/K(B).
    const auto pa = project_all(ka, tau.source_representatives, kna.basis());
    std::vector<Vector> images;
    for (const auto& v : pa) images.push_back(tau.matrix.apply(v));
    const std::size_t kbdim = tau.target_representatives.size();
    level.tau_matches = Subspace::span(a.field(), kbdim, images) ==
                        Subspace::span(a.field(), kbdim, project_all(kb, tau.target_representatives, knb.basis()));
    r.levels.push_back(level);
  }
  return r;
}

Algebra inflate(const Algebra& a, const std::vector<std::size_t>& multiplicities, std::uint64_t seed) {
  const StructureReport s = analyze_structure(a, seed);
  if (!s.idempotents) throw Error(ErrorKind::not_split, "inflation needs a split algebra: " + s.split_note);
  return inflate(a, *s.idempotents, multiplicities);
}

Algebra inflate(const Algebra& a, const IdempotentSet& idems, const std::vector<std::size_t>& multiplicities) {
  const auto& reps = idems.basic_representatives;
  if (multiplicities.size() != reps.size()) {
    throw Error(ErrorKind::bad_parameter, "expected " + std::to_string(reps.size()) + " multiplicities, got " +
                                              std::to_string(multiplicities.size()));
  }
  if (std::any_of(multiplicities.begin(), multiplicities.end(), [](std::size_t m) { return m == 0; })) {
    throw Error(ErrorKind::bad_parameter, "multiplicities must be positive");
  }
  const FieldSpec& f = a.field();
  const Subspace full = Subspace::full(f, a.dim());
  const std::size_t l = reps.size();
  std::vector<std::vector<Subspace>> peirce(l);
  for (std::size_t i = 0; i < l; ++i) {
    for (std::size_t j = 0; j < l; ++j) {
      peirce[i].push_back(sandwich(a, idems.idempotents[reps[i]], full, idems.idempotents[reps[j]]));
    }
  }
  std::vector<std::size_t> slot_class;
  for (std::size_t i = 0; i < l; ++i) slot_class.insert(slot_class.end(), multiplicities[i], i);
  const std::size_t slots = slot_class.size();

  struct BasisElement {
    std::size_t s, t, k;
  };
  std::vector<BasisElement> basis;
  std::vector<std::vector<std::size_t>> offset(slots, std::vector<std::size_t>(slots));
  for (std::size_t s = 0; s < slots; ++s) {
    for (std::size_t t = 0; t < slots; ++t) {
      offset[s][t] = basis.size();
      for (std::size_t k = 0; k < peirce[slot_class[s]][slot_class[t]].dim(); ++k) basis.push_back({s, t, k});
    }
  }
  const std::size_t d = basis.size();
  std::vector<Vector> products;
  products.reserve(d * d);
  for (const auto& x : basis) {
    for (const auto& y : basis) {
      Vector out = zero_vector(f, d);
      if (x.t == y.s) {
        const Subspace& px = peirce[slot_class[x.s]][slot_class[x.t]];
        const Subspace& py = peirce[slot_class[y.s]][slot_class[y.t]];
        const Subspace& target = peirce[slot_class[x.s]][slot_class[y.t]];
        const Vector c = target.coordinates(a.multiply(px.basis()[x.k], py.basis()[y.k]));
        for (std::size_t k = 0; k < c.size(); ++k) out[offset[x.s][y.t] + k] = c[k];
      }
      products.push_back(std::move(out));
    }
  }
  Vector unit = zero_vector(f, d);
  for (std::size_t s = 0; s < slots; ++s) {
    const std::size_t i = slot_class[s];
    const Vector c = peirce[i][i].coordinates(idems.idempotents[reps[i]]);
    for (std::size_t k = 0; k < c.size(); ++k) unit[offset[s][s] + k] = c[k];
  }
  std::string name;
  if (!a.name().empty()) {
    name = "inflate(" + a.name() + ", [";
    for (std::size_t i = 0; i < l; ++i) name += (i ? "," : "") + std::to_string(multiplicities[i]);
    name += "])";
  }
  return Algebra::from_products(f, d, products, std::move(unit), {}, name);
}

}  // namespace fdalg
