#include "fdalg/invariants.hpp"

#include <random>

#include "fdalg/errors.hpp"

namespace fdalg {

Subspace commutator_subspace(const Algebra& a) {
  SpanBuilder builder(a.field(), a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = i + 1; j < a.dim(); ++j) {
      Vector c = a.basis_product_vector(i, j);
      for (const auto& t : a.basis_product(j, i)) c[t.index] -= t.coeff;
      builder.add(c);
    }
  }
  return builder.build();
}

std::size_t k_of(const Algebra& a) { return commutator_subspace(a).codim(); }

Subspace kn_subspace(const Algebra& a, const StructureReport& s, std::size_t n) {
  return subspace_sum(commutator_subspace(a), s.power(a, n));
}

Subspace kn_subspace(const Algebra& a, std::size_t n) { return kn_subspace(a, analyze_structure(a), n); }

CodimSeries codim_series(const Algebra& a, const StructureReport& s) {
  CodimSeries out;
  const Subspace k = commutator_subspace(a);
  for (std::size_t n = 1; n <= s.loewy_length; ++n) out.values.push_back(subspace_sum(k, s.power(a, n)).codim());
  out.k = k.codim();
  out.ell_if_split = s.ell;
  return out;
}

CodimSeries codim_series(const Algebra& a, std::uint64_t seed) { return codim_series(a, analyze_structure(a, seed)); }

Subspace t_space(const Algebra& a) {
  if (!a.field().is_prime()) throw Error(ErrorKind::char_zero, "T(A) needs positive characteristic");
  const std::uint64_t p = a.field().characteristic();
  const Subspace k = commutator_subspace(a);
  const auto reps = k.free_coordinates();
  const std::size_t m = reps.size();
  auto project = [&](const Vector& v) {
    const Vector r = k.reduce(v);
    Vector out;
    for (std::size_t c : reps) out.push_back(r[c]);
    return out;
  };
  std::vector<Vector> cols;
  for (std::size_t c : reps) cols.push_back(project(a.power(a.basis_vector(c), p)));
  const Matrix phi = Matrix::from_columns(a.field(), m, cols);
  Matrix power = phi;
  Subspace ker = kernel(power);
  for (std::size_t step = 1; step < m; ++step) {
    power = power * phi;
    Subspace next = kernel(power);
    if (next.dim() == ker.dim()) break;
    ker = std::move(next);
  }
  std::vector<Vector> gens = k.basis();
  for (const auto& v : ker.basis()) {
    Vector lifted = a.zero();
    for (std::size_t i = 0; i < m; ++i) lifted[reps[i]] = v[i];
    gens.push_back(std::move(lifted));
  }
  return Subspace::span(a.field(), a.dim(), gens);
}

Subspace acyc_cyc(const Algebra& a, const IdempotentSet& idems, const StructureReport& s, std::size_t n) {
  for (const auto& cls : idems.iso_classes) {
    if (cls.size() != 1) throw Error(ErrorKind::not_basic, "two primitive idempotents are isomorphic");
  }
  const Subspace full = Subspace::full(a.field(), a.dim());
  const Subspace jn = s.power(a, n);
  SpanBuilder builder(a.field(), a.dim());
  const auto& e = idems.idempotents;
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (std::size_t j = 0; j < e.size(); ++j) {
      const Subspace piece = i == j ? sandwich(a, e[i], jn, e[i]) : sandwich(a, e[i], full, e[j]);
      for (const auto& v : piece.basis()) builder.add(v);
    }
  }
  return builder.build();
}

std::size_t otokita_bound(const Algebra& a, const IdempotentSet& idems, const StructureReport& s, std::size_t n) {
  const Subspace full = Subspace::full(a.field(), a.dim());
  const Subspace jn = s.power(a, n);
  std::size_t total = 0;
  for (std::size_t r : idems.basic_representatives) {
    const Vector& e = idems.idempotents[r];
    total += sandwich(a, e, full, e).dim() - sandwich(a, e, jn, e).dim();
  }
  return total;
}

std::size_t otokita_bound(const Algebra& a, const StructureReport& s, std::size_t n) {
  if (!s.idempotents) throw Error(ErrorKind::not_split, "idempotents unavailable: " + s.split_note);
  return otokita_bound(a, *s.idempotents, s, n);
}

bool rad_in_K(const Algebra& a, const StructureReport& s) { return commutator_subspace(a).contains(s.radical); }
bool rad_in_K(const Algebra& a) { return commutator_subspace(a).contains(radical(a)); }
bool is_commutative(const Algebra& a) { return a.is_commutative(); }

std::optional<bool> is_local(const Algebra& a, const StructureReport& s) {
  if (!s.wedderburn) return std::nullopt;
  const auto& comps = s.wedderburn->components;
  if (comps.size() != 1) return false;
  // A single simple component M_n(D) is a division algebra iff n = 1; with a
  // commutative center of degree c this means dim A/J = c.
  (void)a;
  return comps.front().dim == comps.front().center_dim;
}

std::optional<bool> is_local(const Algebra& a) { return is_local(a, analyze_structure(a)); }

std::string_view to_string(SymmetricVerdict v) noexcept {
  switch (v) {
    case SymmetricVerdict::yes: return "yes";
    case SymmetricVerdict::no: return "no";
    case SymmetricVerdict::unknown: return "unknown";
  }
  return "unknown";
}

Matrix gram_matrix(const Algebra& a, const Vector& lambda) {
  Matrix g(a.field(), a.dim(), a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      Scalar s = Scalar::zero(a.field());
      for (const auto& t : a.basis_product(i, j)) s += t.coeff * lambda[t.index];
      g(i, j) = s;
    }
  }
  return g;
}

SymmetricResult is_symmetric_search(const Algebra& a, std::uint64_t seed, std::uint64_t budget) {
  SymmetricResult out;
  const FieldSpec& f = a.field();
  const std::size_t d = a.dim();
  const Subspace kspace = commutator_subspace(a);
  const std::size_t k = kspace.codim();
  // Functionals vanishing on K(A).
  const Subspace ann = kspace.is_zero() ? Subspace::full(f, d) : kernel(kspace.basis_matrix());
  auto test = [&](const std::vector<Scalar>& c) {
    ++out.candidates_tried;
    Vector lambda = zero_vector(f, d);
    for (std::size_t t = 0; t < c.size(); ++t) axpy(lambda, c[t], ann.basis()[t]);
    if (rank(gram_matrix(a, lambda)) == d) {
      out.verdict = SymmetricVerdict::yes;
      out.form = std::move(lambda);
      return true;
    }
    return false;
  };

  if (f.is_prime()) {
    const std::uint64_t p = f.characteristic();
    unsigned __int128 total = 1;
    for (std::size_t t = 0; t < k && total <= budget; ++t) total *= p;
    if (total <= budget) {
      // Projective enumeration: first nonzero coefficient equal to 1.
      out.exhaustive = true;
      for (std::size_t lead = 0; lead < k; ++lead) {
        std::vector<std::uint64_t> digits(k - lead - 1, 0);
        while (true) {
          std::vector<Scalar> c(k, Scalar::zero(f));
          c[lead] = Scalar::one(f);
          for (std::size_t t = 0; t < digits.size(); ++t) c[lead + 1 + t] = Scalar::from_integer(f, static_cast<long long>(digits[t]));
          if (test(c)) return out;
          std::size_t pos = 0;
          while (pos < digits.size() && ++digits[pos] == p) digits[pos++] = 0;
          if (pos == digits.size()) break;
        }
      }
      out.verdict = SymmetricVerdict::no;
      out.reason = "no nondegenerate form among all functionals vanishing on K(A)";
      return out;
    }
  }
  if (k_star(a) != k) {
    out.verdict = SymmetricVerdict::no;
    out.reason = "dim Z(A) differs from codim K(A), impossible for a symmetric algebra";
    return out;
  }
  for (std::size_t t = 0; t < k; ++t) {
    std::vector<Scalar> c(k, Scalar::zero(f));
    c[t] = Scalar::one(f);
    if (test(c)) return out;
  }
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < 64; ++trial) {
    std::vector<Scalar> c;
    for (std::size_t t = 0; t < k; ++t) c.push_back(Scalar::from_integer(f, static_cast<long long>(rng() % 19) - 9));
    if (test(c)) return out;
  }
  out.reason = "no certificate found in the random trials";
  return out;
}

}  // namespace fdalg
