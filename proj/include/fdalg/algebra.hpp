#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "fdalg/field.hpp"
#include "fdalg/linalg.hpp"

namespace fdalg {

/// Vertex idempotents and the arrow ideal of a path algebra.
struct QuiverProvenance {
  std::vector<std::string> vertex_names;
  std::vector<Vector> vertex_idempotents;
  /// Basis coordinates spanning the arrow ideal (positive-length path residues).
  std::vector<std::size_t> arrow_coordinates;
};

/// Group order and conjugacy-class partition of a group algebra basis.
struct GroupProvenance {
  std::size_t order = 0;
  std::vector<std::vector<std::size_t>> classes;
};

using Provenance = std::variant<std::monostate, QuiverProvenance, GroupProvenance>;

struct ProductTerm {
  std::size_t index;
  Scalar coeff;
};

/// Finite-dimensional unital associative algebra given by structure constants
/// b_i * b_j = sum_k c[i][j][k] b_k. Copies share one immutable body; two
/// handles denote the same algebra iff same_as() holds.
class Algebra {
 public:
  /// products[i * dim + j] holds the coordinates of b_i * b_j.
  static Algebra from_products(const FieldSpec& field, std::size_t dim, const std::vector<Vector>& products,
                               Vector unit, Provenance provenance = {}, std::string name = {});
  /// terms[i * dim + j] lists the nonzero coordinates of b_i * b_j; repeated indices are summed.
  static Algebra from_terms(const FieldSpec& field, std::size_t dim, std::vector<std::vector<ProductTerm>> terms,
                            Vector unit, Provenance provenance = {}, std::string name = {});

  const FieldSpec& field() const noexcept;
  std::size_t dim() const noexcept;
  const Vector& unit() const noexcept;
  const Provenance& provenance() const noexcept;
  const std::string& name() const noexcept;
  bool is_quiver() const noexcept { return std::holds_alternative<QuiverProvenance>(provenance()); }

  /// Nonzero terms of b_i * b_j sorted by index.
  const std::vector<ProductTerm>& basis_product(std::size_t i, std::size_t j) const;
  Vector basis_product_vector(std::size_t i, std::size_t j) const;
  Scalar structure_constant(std::size_t i, std::size_t j, std::size_t k) const;
  Vector basis_vector(std::size_t i) const;
  Vector zero() const;

  Vector multiply(const Vector& x, const Vector& y) const;
  Vector power(const Vector& x, std::uint64_t exponent) const;
  Vector commutator(const Vector& x, const Vector& y) const;
  /// Matrix of y -> x*y.
  Matrix left_regular(const Vector& x) const;
  /// Matrix of y -> y*x.
  Matrix right_regular(const Vector& x) const;
  bool is_commutative() const;

  bool same_as(const Algebra& other) const noexcept { return data_ == other.data_; }
  /// Same structure constants, new identity, different provenance.
  Algebra with_provenance(Provenance provenance) const;
  Algebra renamed(std::string name) const;

 private:
  struct Data;
  explicit Algebra(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  std::shared_ptr<const Data> data_;
};

/// Coordinates tied to a parent algebra handle.
class Element {
 public:
  Element(Algebra parent, Vector coords);

  const Algebra& parent() const noexcept { return parent_; }
  const Vector& coords() const noexcept { return coords_; }

  friend Element operator*(const Element& x, const Element& y);
  friend Element operator+(const Element& x, const Element& y);
  friend Element operator-(const Element& x, const Element& y);
  friend Element operator*(const Scalar& a, const Element& x);
  /// False for elements of different algebras.
  friend bool operator==(const Element& x, const Element& y);

 private:
  Algebra parent_;
  Vector coords_;
};

Element unit_element(const Algebra& a);
Element multiply(const Algebra& a, const Element& x, const Element& y);
Matrix left_regular(const Algebra& a, const Element& x);
Matrix right_regular(const Algebra& a, const Element& x);

struct ValidationReport {
  bool full = true;  ///< false when only sampled triples were checked
  std::vector<std::array<std::size_t, 3>> associativity_failures;
  std::vector<std::size_t> unit_failures;
  bool valid() const noexcept { return associativity_failures.empty() && unit_failures.empty(); }
};

enum class ValidationMode { automatic, full, sampled };

/// Full triple check up to dimension 64 in automatic mode; sampled above.
ValidationReport validate(const Algebra& a, ValidationMode mode = ValidationMode::automatic, std::uint64_t seed = 0);

Subspace center(const Algebra& a);
std::size_t k_star(const Algebra& a);

/// Span of all products u*v with u in U, v in V.
Subspace product_space(const Algebra& a, const Subspace& u, const Subspace& v);
/// Span of e*x*f over a basis of x.
Subspace sandwich(const Algebra& a, const Vector& e, const Subspace& x, const Vector& f);
bool is_idempotent(const Algebra& a, const Vector& e);
bool is_two_sided_ideal(const Algebra& a, const Subspace& s);

using CayleyTable = std::vector<std::vector<std::size_t>>;

/// Throws Error(not_a_group) naming the first failing axiom.
Algebra group_algebra_from_cayley(const FieldSpec& field, const CayleyTable& table);
/// Conjugacy classes of a validated Cayley table (classes ordered by least element).
std::vector<std::vector<std::size_t>> conjugacy_classes(const CayleyTable& table);

/// Full matrix algebra M_n(F) on matrix units e_ij at index i*n + j.
Algebra matrix_algebra(const FieldSpec& field, std::size_t n);
/// Lower triangular n x n matrices on units e_ij (i >= j), row-major order.
Algebra lower_triangular_algebra(const FieldSpec& field, std::size_t n);
Algebra direct_sum(const Algebra& a, const Algebra& b);

struct Corner {
  Algebra algebra;
  /// Basis of eAe as vectors in the parent, in canonical RREF.
  Subspace image;
  Vector idempotent;
  /// Parent coordinates -> corner coordinates for members of eAe.
  Vector to_corner(const Vector& v) const { return image.coordinates(v); }
  Vector to_parent(const Vector& coords) const;
};

/// eAe with unit e; throws Error(not_idempotent) when e*e != e.
Corner corner(const Algebra& a, const Vector& e);

struct Quotient {
  Algebra algebra;
  Subspace ideal;
  std::vector<std::size_t> representatives;  ///< parent coordinates forming the quotient basis
  Vector project(const Vector& v) const;
  Vector lift(const Vector& coords) const;
};

/// A / I for a two-sided ideal I.
Quotient quotient(const Algebra& a, const Subspace& ideal);

}  // namespace fdalg
