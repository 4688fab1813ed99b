#pragma once

// Field-specialised elimination kernels shared by the exact linear algebra.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "fdalg/field.hpp"
#include "fdalg/linalg.hpp"

namespace fdalg::detail {

struct ModArith {
  FieldSpec field;
  std::uint64_t p;

  using value_type = std::uint64_t;

  explicit ModArith(const FieldSpec& f) : field(f), p(f.characteristic()) {}

  value_type zero() const noexcept { return 0; }
  bool is_zero(value_type a) const noexcept { return a == 0; }
  value_type from(const Scalar& s) const { return s.residue(); }
  Scalar to(value_type v) const { return Scalar::from_integer(field, static_cast<long long>(v)); }
  value_type inv(value_type a) const { return modp::inv(a, p); }
  value_type mul(value_type a, value_type b) const noexcept { return modp::mul(a, b, p); }
  /// a -= f * b
  void sub_mul(value_type& a, value_type f, value_type b) const noexcept {
    a = modp::sub(a, modp::mul(f, b, p), p);
  }
};

struct RatArith {
  FieldSpec field;

  using value_type = mpq_class;

  explicit RatArith(const FieldSpec& f) : field(f) {}

  value_type zero() const { return 0; }
  bool is_zero(const value_type& a) const noexcept { return sgn(a) == 0; }
  value_type from(const Scalar& s) const { return s.rational(); }
  Scalar to(const value_type& v) const { return Scalar::from_rational(field, v); }
  value_type inv(const value_type& a) const { return value_type(1) / a; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  void sub_mul(value_type& a, const value_type& f, const value_type& b) const { a -= f * b; }
};

/// Fully reduced echelon basis kept sorted by pivot column.
template <class Arith>
class Echelon {
 public:
  using T = typename Arith::value_type;

  Echelon(Arith arith, std::size_t n) : ar_(std::move(arith)), n_(n) {}

  std::size_t rank() const noexcept { return rows_.size(); }
  const std::vector<std::vector<T>>& rows() const noexcept { return rows_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  const Arith& arith() const noexcept { return ar_; }

  std::vector<T> convert(const Vector& v) const {
    std::vector<T> out;
    out.reserve(v.size());
    for (const auto& s : v) out.push_back(ar_.from(s));
    return out;
  }

  Vector export_row(const std::vector<T>& row) const {
    Vector out;
    out.reserve(row.size());
    for (const auto& x : row) out.push_back(ar_.to(x));
    return out;
  }

  void reduce(std::vector<T>& v) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const std::size_t c = pivots_[k];
      if (ar_.is_zero(v[c])) continue;
      const T f = v[c];
      const auto& row = rows_[k];
      for (std::size_t j = c; j < n_; ++j) {
        if (!ar_.is_zero(row[j])) ar_.sub_mul(v[j], f, row[j]);
      }
    }
  }

  bool in_span(std::vector<T> v) const {
    reduce(v);
    return std::all_of(v.begin(), v.end(), [&](const T& x) { return ar_.is_zero(x); });
  }

  bool insert(std::vector<T> v) {
    if (rows_.size() == n_) return false;
    reduce(v);
    std::size_t c = 0;
    while (c < n_ && ar_.is_zero(v[c])) ++c;
    if (c == n_) return false;
    const T scale = ar_.inv(v[c]);
    for (std::size_t j = c; j < n_; ++j) {
      if (!ar_.is_zero(v[j])) v[j] = ar_.mul(v[j], scale);
    }
    for (auto& row : rows_) {
      if (ar_.is_zero(row[c])) continue;
      const T f = row[c];
      for (std::size_t j = c; j < n_; ++j) {
        if (!ar_.is_zero(v[j])) ar_.sub_mul(row[j], f, v[j]);
      }
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), c);
    const auto idx = static_cast<std::size_t>(pos - pivots_.begin());
    pivots_.insert(pos, c);
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(idx), std::move(v));
    return true;
  }

 private:
  Arith ar_;
  std::size_t n_;
  std::vector<std::vector<T>> rows_;
  std::vector<std::size_t> pivots_;
};

/// Calls f(ModArith) or f(RatArith) depending on the field.
template <class F>
decltype(auto) with_arith(const FieldSpec& field, F&& f) {
  if (field.is_prime()) return f(ModArith(field));
  return f(RatArith(field));
}

}  // namespace fdalg::detail
