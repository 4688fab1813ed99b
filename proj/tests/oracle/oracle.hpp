#pragma once

#include <cstddef>

#include "fdalg/algebra.hpp"

namespace fdalg::oracle {

/// Largest exhaustive enumeration the radical oracle accepts.
inline constexpr std::size_t radical_oracle_limit = std::size_t{1} << 15;

/// Jacobson radical of an algebra over F_p by enumeration: x lies in the
/// radical iff a*x is nilpotent for every a. Throws Error(too_large) when
/// p^dim exceeds the limit, Error(char_zero) over Q.
Subspace radical_oracle(const Algebra& a);

/// codim of the span of all d^2 basis commutators, by a separate elimination.
std::size_t k_oracle(const Algebra& a);

}  // namespace fdalg::oracle
