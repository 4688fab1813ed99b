#pragma once

#include <random>
#include <vector>

#include "fdalg/algebra.hpp"

namespace fdalg::testing {

inline Scalar num(const FieldSpec& f, long long v) { return Scalar::from_integer(f, v); }

inline const std::vector<FieldSpec>& test_fields() {
  static const std::vector<FieldSpec> fields{FieldSpec::prime(2), FieldSpec::prime(3), FieldSpec::prime(5),
                                             FieldSpec::rationals()};
  return fields;
}

inline Vector random_vector(const FieldSpec& f, std::size_t n, std::mt19937_64& rng) {
  Vector v;
  for (std::size_t i = 0; i < n; ++i) {
    const long long x = f.is_prime() ? static_cast<long long>(rng() % f.characteristic())
                                     : static_cast<long long>(rng() % 7) - 3;
    v.push_back(Scalar::from_integer(f, x));
  }
  return v;
}

}  // namespace fdalg::testing
