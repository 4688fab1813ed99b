#include "fdalg/field.hpp"

#include <charconv>
#include <ostream>

#include "fdalg/errors.hpp"

namespace fdalg {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::bad_parameter: return "BadParameter";
    case ErrorKind::ambient_mismatch: return "AmbientMismatch";
    case ErrorKind::parent_mismatch: return "ParentMismatch";
    case ErrorKind::not_a_group: return "NotAGroup";
    case ErrorKind::not_idempotent: return "NotIdempotent";
    case ErrorKind::syntax_error: return "SyntaxError";
    case ErrorKind::not_parallel: return "NotParallel";
    case ErrorKind::unknown_symbol: return "UnknownSymbol";
    case ErrorKind::not_admissible: return "NotAdmissible";
    case ErrorKind::not_split: return "NotSplit";
    case ErrorKind::split_undecided: return "SplitUndecided";
    case ErrorKind::not_basic: return "NotBasic";
    case ErrorKind::not_full: return "NotFull";
    case ErrorKind::char_zero: return "CharZero";
    case ErrorKind::not_local: return "NotLocal";
    case ErrorKind::generator_failed: return "GeneratorFailed";
    case ErrorKind::too_large: return "TooLarge";
    case ErrorKind::invalid_algebra: return "InvalidAlgebra";
    case ErrorKind::io_error: return "IoError";
    case ErrorKind::internal: return "InternalError";
  }
  return "Error";
}

namespace modp {

std::uint64_t inv(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw Error(ErrorKind::internal, "inverse of zero residue");
  __int128 t = 0, new_t = 1;
  __int128 r = p, new_r = a % p;
  while (new_r != 0) {
    __int128 q = r / new_r;
    __int128 tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p;
  return static_cast<std::uint64_t>(t);
}

std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) noexcept {
  std::uint64_t result = 1 % p;
  a %= p;
  while (e != 0) {
    if (e & 1) result = mul(result, a, p);
    a = mul(a, a, p);
    e >>= 1;
  }
  return result;
}

}  // namespace modp

bool is_prime_number(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic witness set for all 64-bit n.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = modp::pow(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = modp::mul(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p >= (1ull << 63) || !is_prime_number(p)) {
    throw Error(ErrorKind::bad_parameter, "field characteristic " + std::to_string(p) + " is not a prime below 2^63");
  }
  return FieldSpec(FieldKind::prime, p);
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "Q") return rationals();
  if (text.size() > 3 && text.substr(0, 3) == "Fp:") {
    std::uint64_t p = 0;
    auto digits = text.substr(3);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec == std::errc() && ptr == digits.data() + digits.size()) return prime(p);
  }
  throw Error(ErrorKind::bad_parameter, "field must be 'Q' or 'Fp:<prime>', got '" + std::string(text) + "'");
}

std::string FieldSpec::to_string() const {
  return is_prime() ? "Fp:" + std::to_string(p_) : std::string("Q");
}

Scalar Scalar::zero(const FieldSpec& field) {
  if (field.is_prime()) return Scalar(Residue{0, field.characteristic()});
  return Scalar(mpq_class(0));
}

Scalar Scalar::one(const FieldSpec& field) {
  if (field.is_prime()) return Scalar(Residue{1, field.characteristic()});
  return Scalar(mpq_class(1));
}

Scalar Scalar::from_integer(const FieldSpec& field, long long value) {
  if (field.is_prime()) {
    const std::uint64_t p = field.characteristic();
    std::uint64_t mag = value < 0 ? static_cast<std::uint64_t>(-(value + 1)) + 1 : static_cast<std::uint64_t>(value);
    mag %= p;
    if (value < 0 && mag != 0) mag = p - mag;
    return Scalar(Residue{mag, p});
  }
  return Scalar(mpq_class(mpz_class(static_cast<long>(value))));
}

Scalar Scalar::from_integer(const FieldSpec& field, const mpz_class& value) {
  if (field.is_prime()) {
    mpz_class r = value % mpz_class(std::to_string(field.characteristic()));
    if (r < 0) r += mpz_class(std::to_string(field.characteristic()));
    return Scalar(Residue{std::stoull(r.get_str()), field.characteristic()});
  }
  return Scalar(mpq_class(value));
}

Scalar Scalar::from_rational(const FieldSpec& field, const mpq_class& value) {
  if (!field.is_prime()) {
    mpq_class q(value);
    q.canonicalize();
    return Scalar(std::move(q));
  }
  Scalar num = from_integer(field, value.get_num());
  Scalar den = from_integer(field, value.get_den());
  if (den.is_zero()) {
    throw Error(ErrorKind::bad_parameter,
                "denominator of " + value.get_str() + " vanishes in " + field.to_string());
  }
  return num / den;
}

Scalar Scalar::parse(const FieldSpec& field, std::string_view text) {
  auto bad = [&] { return Error(ErrorKind::syntax_error, "malformed scalar '" + std::string(text) + "'"); };
  if (text.empty()) throw bad();
  std::string s(text);
  std::size_t slash = s.find('/');
  auto valid_int = [](const std::string& t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i) {
      if (t[i] < '0' || t[i] > '9') return false;
    }
    return true;
  };
  auto to_mpz = [](std::string t) {
    if (!t.empty() && t[0] == '+') t.erase(0, 1);
    return mpz_class(t);
  };
  if (slash == std::string::npos) {
    if (!valid_int(s)) throw bad();
    return from_integer(field, to_mpz(s));
  }
  std::string num = s.substr(0, slash), den = s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+') throw bad();
  mpz_class d = to_mpz(den);
  if (d == 0) throw Error(ErrorKind::syntax_error, "zero denominator in '" + s + "'");
  return from_rational(field, mpq_class(to_mpz(num), d));
}

FieldSpec Scalar::field() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return FieldSpec(FieldKind::prime, r->modulus);
  return FieldSpec::rationals();
}

bool Scalar::is_zero() const noexcept {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const noexcept {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value == 1;
  return std::get<mpq_class>(value_) == 1;
}

std::uint64_t Scalar::residue() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value;
  throw Error(ErrorKind::internal, "residue() on a rational scalar");
}

const mpq_class& Scalar::rational() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return *q;
  throw Error(ErrorKind::internal, "rational() on a residue scalar");
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorKind::internal, "division by zero");
  if (const auto* r = std::get_if<Residue>(&value_)) return Scalar(Residue{modp::inv(r->value, r->modulus), r->modulus});
  return Scalar(mpq_class(1) / std::get<mpq_class>(value_));
}

Scalar Scalar::pow(std::uint64_t exponent) const {
  if (const auto* r = std::get_if<Residue>(&value_)) {
    return Scalar(Residue{modp::pow(r->value, exponent, r->modulus), r->modulus});
  }
  mpq_class base = std::get<mpq_class>(value_), result = 1;
  while (exponent != 0) {
    if (exponent & 1) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return Scalar(std::move(result));
}

std::string Scalar::to_string() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return std::to_string(r->value);
  return std::get<mpq_class>(value_).get_str();
}

namespace {
[[noreturn]] void field_mismatch() { throw Error(ErrorKind::internal, "arithmetic across different fields"); }
}  // namespace

Scalar& Scalar::operator+=(const Scalar& other) {
  if (auto* r = std::get_if<Residue>(&value_)) {
    const auto* o = std::get_if<Residue>(&other.value_);
    if (o == nullptr || o->modulus != r->modulus) field_mismatch();
    r->value = modp::add(r->value, o->value, r->modulus);
    return *this;
  }
  const auto* o = std::get_if<mpq_class>(&other.value_);
  if (o == nullptr) field_mismatch();
  std::get<mpq_class>(value_) += *o;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) {
  if (auto* r = std::get_if<Residue>(&value_)) {
    const auto* o = std::get_if<Residue>(&other.value_);
    if (o == nullptr || o->modulus != r->modulus) field_mismatch();
    r->value = modp::sub(r->value, o->value, r->modulus);
    return *this;
  }
  const auto* o = std::get_if<mpq_class>(&other.value_);
  if (o == nullptr) field_mismatch();
  std::get<mpq_class>(value_) -= *o;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& other) {
  if (auto* r = std::get_if<Residue>(&value_)) {
    const auto* o = std::get_if<Residue>(&other.value_);
    if (o == nullptr || o->modulus != r->modulus) field_mismatch();
    r->value = modp::mul(r->value, o->value, r->modulus);
    return *this;
  }
  const auto* o = std::get_if<mpq_class>(&other.value_);
  if (o == nullptr) field_mismatch();
  std::get<mpq_class>(value_) *= *o;
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& other) { return *this *= other.inverse(); }

Scalar Scalar::operator-() const {
  if (const auto* r = std::get_if<Residue>(&value_)) {
    return Scalar(Residue{r->value == 0 ? 0 : r->modulus - r->value, r->modulus});
  }
  return Scalar(mpq_class(-std::get<mpq_class>(value_)));
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (const auto* r = std::get_if<Scalar::Residue>(&a.value_)) {
    const auto* o = std::get_if<Scalar::Residue>(&b.value_);
    return o != nullptr && o->modulus == r->modulus && o->value == r->value;
  }
  const auto* o = std::get_if<mpq_class>(&b.value_);
  return o != nullptr && *o == std::get<mpq_class>(a.value_);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace fdalg
