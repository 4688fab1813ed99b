#include "fdalg/structure.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "fdalg/errors.hpp"
#include "polynomial.hpp"

namespace fdalg {

namespace {

bool nilpotent_ideal(const Algebra& a, const Subspace& ideal) {
  Subspace p = ideal;
  while (!p.is_zero()) {
    Subspace next = product_space(a, p, ideal);
    if (next.dim() >= p.dim()) return false;
    p = std::move(next);
  }
  return true;
}

std::vector<Scalar> basis_traces(const Algebra& a) {
  std::vector<Scalar> t(a.dim(), Scalar::zero(a.field()));
  for (std::size_t k = 0; k < a.dim(); ++k) {
    for (std::size_t j = 0; j < a.dim(); ++j) t[k] += a.structure_constant(k, j, j);
  }
  return t;
}

/// G[i][j] = Tr(L_{b_i b_j}).
Matrix trace_form(const Algebra& a) {
  const auto t = basis_traces(a);
  Matrix g(a.field(), a.dim(), a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      for (const auto& term : a.basis_product(i, j)) g(i, j) += term.coeff * t[term.index];
    }
  }
  return g;
}

// Dense integer matrices modulo a small prime power for the p-power trace forms.
class ModMatrix {
 public:
  ModMatrix(std::size_t n, std::uint64_t m) : n_(n), m_(m), v_(n * n, 0) {}
  std::uint64_t& at(std::size_t r, std::size_t c) { return v_[r * n_ + c]; }
  std::uint64_t at(std::size_t r, std::size_t c) const { return v_[r * n_ + c]; }

  ModMatrix operator*(const ModMatrix& o) const {
    ModMatrix out(n_, m_);
    const bool lazy = m_ < (1ULL << 24) && n_ < (1ULL << 14);
    for (std::size_t r = 0; r < n_; ++r) {
      std::vector<std::uint64_t> acc(n_, 0);
      for (std::size_t k = 0; k < n_; ++k) {
        const std::uint64_t x = at(r, k);
        if (x == 0) continue;
        const std::uint64_t* row = &o.v_[k * n_];
        if (lazy) {
          for (std::size_t c = 0; c < n_; ++c) acc[c] += x * row[c];
        } else {
          for (std::size_t c = 0; c < n_; ++c) {
            acc[c] = static_cast<std::uint64_t>((acc[c] + static_cast<unsigned __int128>(x) * row[c]) % m_);
          }
        }
      }
      for (std::size_t c = 0; c < n_; ++c) out.at(r, c) = acc[c] % m_;
    }
    return out;
  }

  std::uint64_t trace() const {
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < n_; ++i) s = (s + at(i, i)) % m_;
    return s;
  }

 private:
  std::size_t n_;
  std::uint64_t m_;
  std::vector<std::uint64_t> v_;
};

ModMatrix mod_power(ModMatrix x, std::uint64_t e, std::size_t n, std::uint64_t m) {
  ModMatrix result(n, m);
  for (std::size_t i = 0; i < n; ++i) result.at(i, i) = 1 % m;
  bool first = true;
  while (e != 0) {
    if (e & 1) {
      result = first ? x : result * x;
      first = false;
    }
    e >>= 1;
    if (e != 0) x = x * x;
  }
  return result;
}

Subspace radical_prime(const Algebra& a) {
  const std::uint64_t p = a.field().characteristic();
  const std::size_t d = a.dim();
  Subspace ideal = kernel(trace_form(a));
  if (nilpotent_ideal(a, ideal)) return ideal;

  std::size_t levels = 0;
  for (unsigned __int128 q = p; q <= d; q *= p) ++levels;
  for (std::size_t i = 1; i <= levels && !ideal.is_zero(); ++i) {
    std::uint64_t pi = 1;
    for (std::size_t t = 0; t < i; ++t) pi *= p;
    const std::uint64_t m = pi * p;
    std::vector<ModMatrix> lifted;
    lifted.reserve(d);
    for (std::size_t t = 0; t < d; ++t) {
      ModMatrix l(d, m);
      for (std::size_t j = 0; j < d; ++j) {
        for (const auto& term : a.basis_product(t, j)) l.at(term.index, j) = term.coeff.residue();
      }
      lifted.push_back(std::move(l));
    }
    auto g = [&](const Vector& x) {
      ModMatrix lx(d, m);
      for (std::size_t t = 0; t < d; ++t) {
        const std::uint64_t c = x[t].residue();
        if (c == 0) continue;
        for (std::size_t r = 0; r < d; ++r) {
          for (std::size_t s = 0; s < d; ++s) {
            const std::uint64_t v = lifted[t].at(r, s);
            if (v != 0) lx.at(r, s) = (lx.at(r, s) + c * v) % m;
          }
        }
      }
      const std::uint64_t tr = mod_power(std::move(lx), pi, d, m).trace();
      if (tr % pi != 0) throw Error(ErrorKind::internal, "p-power trace not divisible by p^i");
      return Scalar::from_integer(a.field(), static_cast<long long>(tr / pi));
    };
    const auto& basis = ideal.basis();
    std::vector<Scalar> lambda;
    lambda.reserve(basis.size());
    for (const auto& x : basis) lambda.push_back(g(x));
    // H[j][k] = g_i(a_k b_j); g_i is linear on the previous ideal.
    Matrix h(a.field(), d, basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k) {
      for (std::size_t j = 0; j < d; ++j) {
        const Vector c = ideal.coordinates(a.multiply(basis[k], a.basis_vector(j)));
        Scalar s = Scalar::zero(a.field());
        for (std::size_t mth = 0; mth < c.size(); ++mth) s += c[mth] * lambda[mth];
        h(j, k) = s;
      }
    }
    const Subspace coeffs = kernel(h);
    std::vector<Vector> gens;
    for (const auto& xi : coeffs.basis()) {
      Vector v = a.zero();
      for (std::size_t k = 0; k < xi.size(); ++k) axpy(v, xi[k], basis[k]);
      gens.push_back(std::move(v));
    }
    ideal = Subspace::span(a.field(), d, gens);
    if (nilpotent_ideal(a, ideal)) return ideal;
  }
  return ideal;
}

std::mt19937_64 make_rng(std::uint64_t seed) { return std::mt19937_64(seed); }

Vector random_combination(const FieldSpec& field, const std::vector<Vector>& basis, std::mt19937_64& rng) {
  Vector v = zero_vector(field, basis.empty() ? 0 : basis.front().size());
  for (const auto& b : basis) {
    Scalar c = field.is_prime() ? Scalar::from_integer(field, static_cast<long long>(rng() % field.characteristic()))
                                : Scalar::from_integer(field, static_cast<long long>(rng() % 7) - 3);
    axpy(v, c, b);
  }
  return v;
}

Vector from_sub_coords(const Subspace& s, const Vector& coords) {
  Vector v = zero_vector(s.field(), s.ambient_dim());
  for (std::size_t k = 0; k < coords.size(); ++k) axpy(v, coords[k], s.basis()[k]);
  return v;
}

struct CommutativeDecomposition {
  std::vector<Vector> blocks;
  bool complete = true;
};

/// Replaces each block e by e*f and e - e*f whenever both are nonzero.
void refine(const Algebra& z, std::vector<Vector>& blocks, const Vector& f) {
  std::vector<Vector> next;
  for (const auto& e : blocks) {
    Vector g = z.multiply(e, f);
    if (is_zero(g) || g == e) {
      next.push_back(e);
    } else {
      next.push_back(sub(e, g));
      next.push_back(std::move(g));
    }
  }
  blocks = std::move(next);
}

/// Primitive idempotents of a commutative semisimple algebra. Over Q,
/// components on which some minimal polynomial has no rational root are kept
/// as unsplit blocks and the result is marked incomplete.
CommutativeDecomposition decompose_commutative(const Algebra& z, std::mt19937_64& rng) {
  const FieldSpec& f = z.field();
  const std::size_t d = z.dim();
  CommutativeDecomposition out;
  out.blocks.push_back(z.unit());
  if (d == 1) return out;

  if (f.is_prime()) {
    const std::uint64_t p = f.characteristic();
    std::vector<Vector> frob_cols;
    for (std::size_t k = 0; k < d; ++k) frob_cols.push_back(sub(z.power(z.basis_vector(k), p), z.basis_vector(k)));
    const Subspace berlekamp = kernel(Matrix::from_columns(f, d, frob_cols));
    const std::size_t r = berlekamp.dim();
    const Vector one = z.unit();
    auto apply = [&](const Vector& y) {
      if (p == 2) {
        refine(z, out.blocks, y);
      } else if (p <= 64) {
        for (std::uint64_t c = 0; c < p && out.blocks.size() < r; ++c) {
          Vector shifted = sub(y, scaled(Scalar::from_integer(f, static_cast<long long>(c)), one));
          refine(z, out.blocks, sub(one, z.power(shifted, p - 1)));
        }
      } else {
        for (int attempt = 0; attempt < 48 && out.blocks.size() < r; ++attempt) {
          const Scalar c = Scalar::from_integer(f, static_cast<long long>(rng() % p));
          const Vector w = z.power(add(y, scaled(c, one)), (p - 1) / 2);
          const Vector w2 = z.multiply(w, w);
          refine(z, out.blocks, scaled(Scalar::from_integer(f, 2).inverse(), add(w2, w)));
          refine(z, out.blocks, w2);
        }
      }
    };
    for (const auto& y : berlekamp.basis()) {
      if (out.blocks.size() >= r) break;
      apply(y);
    }
    for (int attempt = 0; attempt < 256 && out.blocks.size() < r; ++attempt) {
      apply(random_combination(f, berlekamp.basis(), rng));
    }
    if (out.blocks.size() != r) throw Error(ErrorKind::internal, "failed to split the Berlekamp subalgebra");
    return out;
  }

  for (std::size_t k = 0; k < d; ++k) {
    std::vector<Vector> next;
    for (const auto& e : out.blocks) {
      const Vector y = z.multiply(z.basis_vector(k), e);
      const auto mp = detail::minimal_polynomial(z, y, e);
      if (mp.coeffs.size() <= 2) {
        next.push_back(e);
        continue;
      }
      const auto roots = detail::rational_roots(mp.coeffs);
      Vector rest = e;
      for (const auto& r : roots) {
        const auto g = detail::divide_linear(mp.coeffs, r);
        const Scalar gr = detail::evaluate(g, r);
        Vector idem = scaled(gr.inverse(), detail::evaluate(z, g, y, e));
        rest = sub(rest, idem);
        next.push_back(std::move(idem));
      }
      if (!is_zero(rest)) {
        out.complete = false;
        next.push_back(std::move(rest));
      }
    }
    out.blocks = std::move(next);
  }
  return out;
}

std::optional<Vector> split_from_element(const Algebra& c, const Vector& y, std::mt19937_64& rng, int depth);

/// Candidate elements: basis vectors, pairwise sums, then seeded combinations.
void for_each_candidate(const Algebra& c, std::mt19937_64& rng, const std::function<bool(const Vector&)>& visit) {
  const std::size_t d = c.dim();
  std::vector<Vector> basis;
  for (std::size_t i = 0; i < d; ++i) basis.push_back(c.basis_vector(i));
  for (std::size_t i = 0; i < d; ++i) {
    if (visit(basis[i])) return;
  }
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      if (visit(add(basis[i], basis[j]))) return;
    }
  }
  for (int t = 0; t < 64; ++t) {
    if (visit(random_combination(c.field(), basis, rng))) return;
  }
}

bool is_nilpotent_element(const Algebra& c, const Vector& y) { return is_zero(c.power(y, c.dim())); }

/// A nontrivial idempotent of c, or nothing if none was found.
std::optional<Vector> find_split(const Algebra& c, std::mt19937_64& rng, int depth = 0) {
  std::optional<Vector> found;
  for_each_candidate(c, rng, [&](const Vector& y) {
    found = split_from_element(c, y, rng, depth);
    return found.has_value();
  });
  return found;
}

std::optional<Vector> split_from_element(const Algebra& c, const Vector& y, std::mt19937_64& rng, int depth) {
  const auto mp = detail::minimal_polynomial(c, y, c.unit());
  if (mp.coeffs.size() <= 2) return std::nullopt;
  const Algebra r = subalgebra(c, mp.span);
  const Subspace nil = radical(r, RadicalMethod::trace_form);
  Quotient rq = quotient(r, nil);
  const CommutativeDecomposition dec = decompose_commutative(rq.algebra, rng);
  if (dec.blocks.size() >= 2) {
    const Vector first = dec.blocks.front();
    const auto lifted = lift_idempotents(r, rq, {first, sub(rq.algebra.unit(), first)});
    return from_sub_coords(mp.span, lifted.front());
  }
  if (nil.is_zero() || depth >= 2) return std::nullopt;
  // y generates a local algebra with a nonzero nilpotent n; some n*b is
  // singular but not nilpotent, so its polynomial algebra splits.
  const Vector n = from_sub_coords(mp.span, nil.basis().front());
  std::optional<Vector> found;
  for_each_candidate(c, rng, [&](const Vector& b) {
    const Vector nb = c.multiply(n, b);
    if (is_nilpotent_element(c, nb)) return false;
    found = split_from_element(c, nb, rng, depth + 1);
    return found.has_value();
  });
  return found;
}

}  // namespace

// ---------------------------------------------------------------------------

Subspace radical(const Algebra& a, RadicalMethod method) {
  Subspace j(a.field(), a.dim());
  if (method == RadicalMethod::automatic && a.is_quiver()) {
    const auto& prov = std::get<QuiverProvenance>(a.provenance());
    std::vector<Vector> gens;
    for (std::size_t k : prov.arrow_coordinates) gens.push_back(a.basis_vector(k));
    j = Subspace::span(a.field(), a.dim(), gens);
  } else if (a.field().is_prime()) {
    j = radical_prime(a);
  } else {
    j = kernel(trace_form(a));
  }
  if (!is_two_sided_ideal(a, j)) throw Error(ErrorKind::internal, "computed radical is not a two-sided ideal");
  if (!nilpotent_ideal(a, j)) throw Error(ErrorKind::internal, "computed radical is not nilpotent");
  return j;
}

std::vector<Subspace> radical_powers(const Algebra& a, const Subspace& j) {
  std::vector<Subspace> out{j};
  while (!out.back().is_zero()) {
    Subspace next = product_space(a, j, out.back());
    if (next.dim() >= out.back().dim()) throw Error(ErrorKind::internal, "radical powers do not decrease");
    out.push_back(std::move(next));
  }
  return out;
}

Subspace radical_power(const Algebra& a, std::size_t n) {
  if (n == 0) return Subspace::full(a.field(), a.dim());
  const auto powers = radical_powers(a, radical(a));
  return n <= powers.size() ? powers[n - 1] : Subspace(a.field(), a.dim());
}

std::size_t loewy_length(const Algebra& a) {
  const Subspace j = radical(a);
  return j.is_zero() ? 1 : radical_powers(a, j).size();
}

Algebra subalgebra(const Algebra& a, const Subspace& s) {
  const std::size_t m = s.dim();
  std::vector<Vector> products;
  products.reserve(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) products.push_back(s.coordinates(a.multiply(s.basis()[i], s.basis()[j])));
  }
  return Algebra::from_products(a.field(), m, products, s.coordinates(a.unit()));
}

std::vector<Vector> lift_idempotents(const Algebra& a, const Quotient& q, const std::vector<Vector>& idempotents) {
  const Scalar three = Scalar::from_integer(a.field(), 3), two = Scalar::from_integer(a.field(), 2);
  std::vector<Vector> out;
  Vector u = a.unit();
  for (std::size_t i = 0; i + 1 < idempotents.size(); ++i) {
    Vector x = a.multiply(a.multiply(u, q.lift(idempotents[i])), u);
    bool done = false;
    for (int step = 0; step < 64 && !done; ++step) {
      const Vector x2 = a.multiply(x, x);
      if (x2 == x) {
        done = true;
      } else {
        x = sub(scaled(three, x2), scaled(two, a.multiply(x2, x)));
      }
    }
    if (!done) throw Error(ErrorKind::internal, "idempotent lifting did not converge");
    u = sub(u, x);
    out.push_back(std::move(x));
  }
  if (!idempotents.empty()) out.push_back(u);
  return out;
}

WedderburnSplit wedderburn_split(const Algebra& a, std::uint64_t seed) { return wedderburn_split(a, radical(a), seed); }

WedderburnSplit wedderburn_split(const Algebra& a, const Subspace& j, std::uint64_t seed) {
  auto rng = make_rng(seed);
  WedderburnSplit w{quotient(a, j), {}, true};
  const Algebra& s = w.semisimple.algebra;
  const Subspace zs = center(s);
  const Algebra z = subalgebra(s, zs);
  const CommutativeDecomposition dec = decompose_commutative(z, rng);
  if (!dec.complete) {
    throw Error(ErrorKind::split_undecided,
                "the center of A/J has a minimal polynomial with an irreducible nonlinear factor over Q");
  }
  for (const auto& block : dec.blocks) {
    WedderburnComponent comp;
    comp.central_idempotent = from_sub_coords(zs, block);
    comp.dim = sandwich(s, comp.central_idempotent, Subspace::full(s.field(), s.dim()), s.unit()).dim();
    SpanBuilder zc(s.field(), s.dim());
    for (const auto& zb : zs.basis()) zc.add(s.multiply(comp.central_idempotent, zb));
    comp.center_dim = zc.rank();
    if (comp.center_dim == 1) {
      std::vector<Vector> work{comp.central_idempotent};
      bool ok = true;
      while (!work.empty() && ok) {
        Vector e = std::move(work.back());
        work.pop_back();
        const Corner c = corner(s, e);
        if (c.algebra.dim() == 1) {
          comp.primitive_idempotents.push_back(std::move(e));
          continue;
        }
        const auto f = find_split(c.algebra, rng);
        if (!f) {
          ok = false;
          break;
        }
        const Vector fp = c.to_parent(*f);
        work.push_back(sub(e, fp));
        work.push_back(fp);
      }
      if (!ok) {
        if (!s.field().is_prime()) {
          throw Error(ErrorKind::split_undecided,
                      "no idempotent found in a simple component of dimension " + std::to_string(comp.dim) +
                          "; it may be a matrix algebra over a division algebra");
        }
        throw Error(ErrorKind::internal, "failed to split a simple component over a finite field");
      }
      const std::size_t n = comp.primitive_idempotents.size();
      if (n * n != comp.dim) throw Error(ErrorKind::internal, "simple component dimension is not n^2");
      comp.degree = n;
    } else {
      w.split = false;
    }
    w.components.push_back(std::move(comp));
  }
  return w;
}

IdempotentSet primitive_idempotents(const Algebra& a, std::uint64_t seed) {
  const Subspace j = radical(a);
  return primitive_idempotents(a, j, wedderburn_split(a, j, seed));
}

IdempotentSet primitive_idempotents(const Algebra& a, const Subspace& j, const WedderburnSplit& w) {
  if (!w.split) throw Error(ErrorKind::not_split, "A/J is not a product of matrix algebras over the ground field");
  const Quotient& q = w.semisimple;
  const Algebra& s = q.algebra;
  std::vector<Vector> bars, lifted;
  if (a.is_quiver()) {
    lifted = std::get<QuiverProvenance>(a.provenance()).vertex_idempotents;
    for (const auto& e : lifted) bars.push_back(q.project(e));
  } else {
    for (const auto& c : w.components) bars.insert(bars.end(), c.primitive_idempotents.begin(), c.primitive_idempotents.end());
    lifted = lift_idempotents(a, q, bars);
  }
  (void)j;
  IdempotentSet out;
  out.idempotents = std::move(lifted);
  std::vector<std::size_t> component_of(bars.size());
  for (std::size_t i = 0; i < bars.size(); ++i) {
    bool found = false;
    for (std::size_t c = 0; c < w.components.size() && !found; ++c) {
      if (s.multiply(w.components[c].central_idempotent, bars[i]) == bars[i]) {
        component_of[i] = c;
        found = true;
      }
    }
    if (!found) throw Error(ErrorKind::internal, "idempotent not supported on a single component");
  }
  std::vector<std::size_t> class_index(w.components.size(), SIZE_MAX);
  out.class_of.resize(bars.size());
  for (std::size_t i = 0; i < bars.size(); ++i) {
    std::size_t& ci = class_index[component_of[i]];
    if (ci == SIZE_MAX) {
      ci = out.iso_classes.size();
      out.iso_classes.emplace_back();
      out.basic_representatives.push_back(i);
    }
    out.iso_classes[ci].push_back(i);
    out.class_of[i] = ci;
  }
  // Orthogonality, completeness and primitivity.
  Vector total = a.zero();
  for (std::size_t i = 0; i < out.idempotents.size(); ++i) {
    total = add(total, out.idempotents[i]);
    for (std::size_t k = 0; k < out.idempotents.size(); ++k) {
      const Vector prod = a.multiply(out.idempotents[i], out.idempotents[k]);
      if (i == k ? prod != out.idempotents[i] : !is_zero(prod)) {
        throw Error(ErrorKind::internal, "lifted idempotents are not orthogonal");
      }
    }
    if (sandwich(s, bars[i], Subspace::full(s.field(), s.dim()), bars[i]).dim() != 1) {
      throw Error(ErrorKind::internal, "idempotent is not primitive");
    }
  }
  if (total != a.unit()) throw Error(ErrorKind::internal, "idempotents do not sum to 1");
  return out;
}

CountMatrix cartan_matrix(const Algebra& a, const IdempotentSet& idems) {
  const auto& reps = idems.basic_representatives;
  const Subspace full = Subspace::full(a.field(), a.dim());
  CountMatrix c(reps.size(), std::vector<std::size_t>(reps.size(), 0));
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (std::size_t k = 0; k < reps.size(); ++k) {
      c[i][k] = sandwich(a, idems.idempotents[reps[i]], full, idems.idempotents[reps[k]]).dim();
    }
  }
  return c;
}

std::vector<std::size_t> ext1_diag(const Algebra& a, const IdempotentSet& idems, const Subspace& j, const Subspace& j2) {
  std::vector<std::size_t> out;
  for (std::size_t r : idems.basic_representatives) {
    const Vector& e = idems.idempotents[r];
    out.push_back(sandwich(a, e, j, e).dim() - sandwich(a, e, j2, e).dim());
  }
  return out;
}

std::size_t trace(const CountMatrix& c) {
  std::size_t t = 0;
  for (std::size_t i = 0; i < c.size(); ++i) t += c[i][i];
  return t;
}

CountMatrix cartan_matrix(const Algebra& a, std::uint64_t seed) { return cartan_matrix(a, primitive_idempotents(a, seed)); }

std::size_t ell(const Algebra& a, std::uint64_t seed) { return primitive_idempotents(a, seed).iso_classes.size(); }

std::vector<std::size_t> ext1_diag(const Algebra& a, std::uint64_t seed) {
  const Subspace j = radical(a);
  const auto idems = primitive_idempotents(a, j, wedderburn_split(a, j, seed));
  return ext1_diag(a, idems, j, product_space(a, j, j));
}

std::string_view to_string(SplitStatus s) noexcept {
  switch (s) {
    case SplitStatus::split: return "split";
    case SplitStatus::not_split: return "not_split";
    case SplitStatus::undecided: return "undecided";
  }
  return "undecided";
}

Subspace StructureReport::power(const Algebra& a, std::size_t n) const {
  if (n == 0) return Subspace::full(a.field(), a.dim());
  return n <= powers.size() ? powers[n - 1] : Subspace(a.field(), a.dim());
}

StructureReport analyze_structure(const Algebra& a, std::uint64_t seed, RadicalMethod method) {
  Subspace j = radical(a, method);
  std::vector<Subspace> powers = radical_powers(a, j);
  const std::size_t ll = j.is_zero() ? 1 : powers.size();
  StructureReport r{seed, std::move(j), std::move(powers), ll, SplitStatus::undecided, {}, {}, {}, {}, {}, {}};
  try {
    r.wedderburn = wedderburn_split(a, r.radical, seed);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::split_undecided) throw;
    r.split_status = SplitStatus::undecided;
    r.split_note = e.what();
    return r;
  }
  if (!r.wedderburn->split) {
    r.split_status = SplitStatus::not_split;
    for (const auto& c : r.wedderburn->components) {
      if (c.center_dim > 1) {
        r.split_note = "A/J has a simple component whose center has degree " + std::to_string(c.center_dim);
        break;
      }
    }
    return r;
  }
  r.split_status = SplitStatus::split;
  r.idempotents = primitive_idempotents(a, r.radical, *r.wedderburn);
  r.ell = r.idempotents->iso_classes.size();
  r.cartan = cartan_matrix(a, *r.idempotents);
  r.ext1_diag = ext1_diag(a, *r.idempotents, r.radical, r.power(a, 2));
  return r;
}

}  // namespace fdalg
