#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

namespace fdalg {

enum class FieldKind { prime, rationals };

/// The ground field: a prime field F_p with p a machine word, or Q.
class FieldSpec {
 public:
  /// Throws Error(bad_parameter) unless p is prime and below 2^63.
  static FieldSpec prime(std::uint64_t p);
  static FieldSpec rationals() noexcept { return FieldSpec(FieldKind::rationals, 0); }
  /// Accepts "Fp:<p>" or "Q".
  static FieldSpec parse(std::string_view text);

  FieldKind kind() const noexcept { return kind_; }
  bool is_prime() const noexcept { return kind_ == FieldKind::prime; }
  std::uint64_t characteristic() const noexcept { return p_; }
  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  friend class Scalar;
  FieldSpec(FieldKind kind, std::uint64_t p) noexcept : kind_(kind), p_(p) {}

  FieldKind kind_;
  std::uint64_t p_;
};

bool is_prime_number(std::uint64_t n) noexcept;

/// An exact field element. Residues are kept in [0, p); rationals are
/// canonical (reduced, positive denominator).
class Scalar {
 public:
  static Scalar zero(const FieldSpec& field);
  static Scalar one(const FieldSpec& field);
  static Scalar from_integer(const FieldSpec& field, long long value);
  static Scalar from_integer(const FieldSpec& field, const mpz_class& value);
  /// Over F_p the denominator must be invertible.
  static Scalar from_rational(const FieldSpec& field, const mpq_class& value);
  /// Parses an optionally signed integer or `a/b`.
  static Scalar parse(const FieldSpec& field, std::string_view text);

  FieldSpec field() const;
  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  std::uint64_t residue() const;
  const mpq_class& rational() const;

  Scalar inverse() const;
  Scalar pow(std::uint64_t exponent) const;
  std::string to_string() const;

  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  Scalar& operator/=(const Scalar& other);
  Scalar operator-() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  struct Residue {
    std::uint64_t value;
    std::uint64_t modulus;
  };

  explicit Scalar(Residue r) : value_(r) {}
  explicit Scalar(mpq_class q) : value_(std::move(q)) {}

  std::variant<Residue, mpq_class> value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

namespace modp {

inline std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t p) noexcept {
  std::uint64_t s = a + b;
  return s >= p ? s - p : s;
}
inline std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) noexcept {
  return a >= b ? a - b : a + (p - b);
}
inline std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) noexcept {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}
std::uint64_t inv(std::uint64_t a, std::uint64_t p);
std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) noexcept;

}  // namespace modp

}  // namespace fdalg
