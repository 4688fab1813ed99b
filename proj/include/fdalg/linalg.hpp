#pragma once

#include <cstddef>
#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fdalg/field.hpp"

namespace fdalg {

using Vector = std::vector<Scalar>;

Vector zero_vector(const FieldSpec& field, std::size_t n);
Vector unit_vector(const FieldSpec& field, std::size_t n, std::size_t index);
Vector vector_from_integers(const FieldSpec& field, std::initializer_list<long long> values);
bool is_zero(const Vector& v) noexcept;
/// y += a * x
void axpy(Vector& y, const Scalar& a, const Vector& x);
Vector add(const Vector& x, const Vector& y);
Vector sub(const Vector& x, const Vector& y);
Vector scaled(const Scalar& a, const Vector& x);
std::string to_string(const Vector& v);

/// Dense row-major matrix of exact scalars.
class Matrix {
 public:
  Matrix(const FieldSpec& field, std::size_t rows, std::size_t cols);

  static Matrix identity(const FieldSpec& field, std::size_t n);
  static Matrix from_rows(const FieldSpec& field, std::size_t cols, const std::vector<Vector>& rows);
  static Matrix from_columns(const FieldSpec& field, std::size_t rows, const std::vector<Vector>& columns);
  static Matrix from_integers(const FieldSpec& field, std::initializer_list<std::initializer_list<long long>> rows);

  const FieldSpec& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  /// Matrix-vector product M * v.
  Vector apply(const Vector& v) const;
  Matrix transpose() const;
  Scalar trace() const;

  Matrix operator*(const Matrix& other) const;
  Matrix operator+(const Matrix& other) const;
  Matrix operator-(const Matrix& other) const;
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  FieldSpec field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

struct RrefResult {
  Matrix reduced;
  std::size_t rank;
  std::vector<std::size_t> pivots;
};

/// Unique reduced row-echelon form, same shape as the input (zero rows last).
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);
/// One solution x of m * x = rhs (free variables set to zero), if any.
std::optional<Vector> solve(const Matrix& m, const Vector& rhs);

/// A subspace of F^n held in canonical RREF; equal subspaces compare equal
/// structurally.
class Subspace {
 public:
  /// The zero subspace of F^ambient.
  Subspace(const FieldSpec& field, std::size_t ambient);

  static Subspace full(const FieldSpec& field, std::size_t ambient);
  static Subspace span(const FieldSpec& field, std::size_t ambient, const std::vector<Vector>& vectors);

  const FieldSpec& field() const noexcept { return field_; }
  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  std::size_t codim() const noexcept { return ambient_ - basis_.size(); }
  bool is_zero() const noexcept { return basis_.empty(); }

  const std::vector<Vector>& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  Matrix basis_matrix() const;
  /// Coordinates that are not pivots; their unit vectors span a complement.
  std::vector<std::size_t> free_coordinates() const;

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  /// Canonical representative of v modulo this subspace (zero at every pivot).
  Vector reduce(const Vector& v) const;
  /// Coefficients of a member with respect to basis(); throws if v is not a member.
  Vector coordinates(const Vector& v) const;

  friend bool operator==(const Subspace& a, const Subspace& b);

 private:
  friend class SpanBuilder;

  FieldSpec field_;
  std::size_t ambient_;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

/// Null space {v : m * v = 0}; ambient dimension cols(m).
Subspace kernel(const Matrix& m);
Subspace subspace_sum(const Subspace& u, const Subspace& v);
Subspace subspace_intersect(const Subspace& u, const Subspace& v);

/// Incremental echelon basis. Prime fields run on raw residues.
class SpanBuilder {
 public:
  SpanBuilder(const FieldSpec& field, std::size_t ambient);
  explicit SpanBuilder(const Subspace& start);
  SpanBuilder(SpanBuilder&&) noexcept;
  SpanBuilder& operator=(SpanBuilder&&) noexcept;
  ~SpanBuilder();

  /// Returns true iff the rank grew.
  bool add(const Vector& v);
  bool contains(const Vector& v) const;
  std::size_t rank() const noexcept;
  std::size_t ambient_dim() const noexcept { return ambient_; }
  bool full() const noexcept { return rank() == ambient_; }
  Subspace build() const;

 private:
  struct Impl;
  FieldSpec field_;
  std::size_t ambient_;
  std::unique_ptr<Impl> impl_;
};

}  // namespace fdalg
