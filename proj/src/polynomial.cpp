#include "polynomial.hpp"

#include <algorithm>

#include "fdalg/errors.hpp"

namespace fdalg::detail {

MinimalPolynomial minimal_polynomial(const Algebra& a, const Vector& y, const Vector& unit) {
  std::vector<Vector> powers{unit};
  SpanBuilder builder(a.field(), a.dim());
  builder.add(unit);
  Vector cur = unit;
  while (true) {
    cur = a.multiply(cur, y);
    if (!builder.add(cur)) break;
    powers.push_back(cur);
  }
  const auto c = solve(Matrix::from_columns(a.field(), a.dim(), powers), cur);
  if (!c) throw Error(ErrorKind::internal, "Krylov dependency has no solution");
  Poly f;
  for (const auto& x : *c) f.push_back(-x);
  f.push_back(Scalar::one(a.field()));
  return {std::move(f), builder.build()};
}

Scalar evaluate(const Poly& f, const Scalar& x) {
  Scalar r = Scalar::zero(x.field());
  for (auto it = f.rbegin(); it != f.rend(); ++it) r = r * x + *it;
  return r;
}

Vector evaluate(const Algebra& a, const Poly& f, const Vector& y, const Vector& unit) {
  Vector r = a.zero();
  for (auto it = f.rbegin(); it != f.rend(); ++it) {
    r = a.multiply(r, y);
    axpy(r, *it, unit);
  }
  return r;
}

Poly divide_linear(const Poly& f, const Scalar& r) {
  if (f.size() < 2) throw Error(ErrorKind::internal, "dividing a constant polynomial");
  Poly q(f.size() - 1, Scalar::zero(r.field()));
  Scalar carry = Scalar::zero(r.field());
  for (std::size_t k = f.size() - 1; k >= 1; --k) {
    carry = carry * r + f[k];
    q[k - 1] = carry;
  }
  return q;
}

namespace {

/// Positive divisors of |n| by trial division; n != 0.
std::vector<mpz_class> divisors(mpz_class n) {
  n = abs(n);
  std::vector<std::pair<mpz_class, unsigned>> factors;
  for (mpz_class p = 2; p * p <= n; ++p) {
    if (p > 2000000) throw Error(ErrorKind::split_undecided, "polynomial coefficients too large for rational root search");
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e != 0) factors.emplace_back(p, e);
  }
  if (n > 1) factors.emplace_back(n, 1);
  std::vector<mpz_class> out{1};
  for (const auto& [p, e] : factors) {
    const std::size_t size = out.size();
    mpz_class pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < size; ++i) out.push_back(out[i] * pk);
    }
  }
  return out;
}

}  // namespace

std::vector<Scalar> rational_roots(const Poly& f) {
  if (f.empty()) return {};
  const FieldSpec field = f.front().field();
  mpz_class lcm = 1;
  for (const auto& c : f) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.rational().get_den_mpz_t());
  std::vector<mpz_class> z;
  for (const auto& c : f) z.push_back(mpz_class(c.rational() * lcm));
  while (!z.empty() && z.back() == 0) z.pop_back();
  std::vector<Scalar> roots;
  std::size_t shift = 0;
  while (shift < z.size() && z[shift] == 0) ++shift;
  if (shift > 0) roots.push_back(Scalar::zero(field));
  z.erase(z.begin(), z.begin() + static_cast<std::ptrdiff_t>(shift));
  if (z.size() < 2) return roots;
  const auto nums = divisors(z.front()), dens = divisors(z.back());
  std::vector<mpq_class> seen;
  for (const auto& q : dens) {
    for (const auto& p : nums) {
      for (int sign : {1, -1}) {
        mpq_class cand(sign * p, q);
        cand.canonicalize();
        if (std::find(seen.begin(), seen.end(), cand) != seen.end()) continue;
        seen.push_back(cand);
        const Scalar x = Scalar::from_rational(field, cand);
        if (evaluate(f, x).is_zero()) roots.push_back(x);
      }
    }
  }
  return roots;
}

}  // namespace fdalg::detail
