#pragma once

// Univariate polynomials over the ground field, used for minimal
// polynomials of algebra elements. Coefficients run from degree 0 upward.

#include <vector>

#include "fdalg/algebra.hpp"

namespace fdalg::detail {

using Poly = std::vector<Scalar>;

struct MinimalPolynomial {
  Poly coeffs;    ///< monic
  Subspace span;  ///< span of unit, y, ..., y^(deg-1)
};

/// Minimal polynomial of y inside the corner whose identity is `unit`.
MinimalPolynomial minimal_polynomial(const Algebra& a, const Vector& y, const Vector& unit);

Scalar evaluate(const Poly& f, const Scalar& x);
Vector evaluate(const Algebra& a, const Poly& f, const Vector& y, const Vector& unit);

/// f / (x - r), assuming r is a root.
Poly divide_linear(const Poly& f, const Scalar& r);

/// Distinct rational roots of a polynomial over Q.
std::vector<Scalar> rational_roots(const Poly& f);

}  // namespace fdalg::detail
