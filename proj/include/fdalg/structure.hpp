#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fdalg/algebra.hpp"

namespace fdalg {

enum class RadicalMethod {
  automatic,   ///< arrow ideal for quiver provenance, trace methods otherwise
  trace_form,  ///< ignore provenance
};

/// Jacobson radical. Verifies the ideal property and nilpotency of the result.
Subspace radical(const Algebra& a, RadicalMethod method = RadicalMethod::automatic);
/// J^n for n >= 1 computed as J * J^(n-1); J^0 is the whole algebra.
Subspace radical_power(const Algebra& a, std::size_t n);
/// [J, J^2, ..., J^LL] where J^LL = 0 (just [0] when J = 0).
std::vector<Subspace> radical_powers(const Algebra& a, const Subspace& j);
std::size_t loewy_length(const Algebra& a);

/// Subalgebra on a subspace closed under products that contains the unit.
Algebra subalgebra(const Algebra& a, const Subspace& s);

struct WedderburnComponent {
  Vector central_idempotent;  ///< in quotient coordinates
  std::size_t dim = 0;         ///< dim of the simple component
  std::size_t center_dim = 0;  ///< degree of its center over the ground field
  std::size_t degree = 0;      ///< n with component = M_n(F), 0 when not split
  std::vector<Vector> primitive_idempotents;  ///< quotient coordinates, when split
};

struct WedderburnSplit {
  Quotient semisimple;  ///< A / J
  std::vector<WedderburnComponent> components;
  bool split = false;
};

/// Decomposes A/J into simple components. Over Q throws
/// Error(split_undecided) when a minimal polynomial has an irreducible
/// nonlinear factor that blocks the decomposition.
WedderburnSplit wedderburn_split(const Algebra& a, std::uint64_t seed = 0);
WedderburnSplit wedderburn_split(const Algebra& a, const Subspace& j, std::uint64_t seed = 0);

struct IdempotentSet {
  std::vector<Vector> idempotents;
  std::vector<std::vector<std::size_t>> iso_classes;
  std::vector<std::size_t> basic_representatives;
  std::vector<std::size_t> class_of;
};

/// Complete set of primitive orthogonal idempotents of A. Throws
/// Error(not_split) when A/J is not a product of matrix algebras over F.
IdempotentSet primitive_idempotents(const Algebra& a, std::uint64_t seed = 0);
IdempotentSet primitive_idempotents(const Algebra& a, const Subspace& j, const WedderburnSplit& w);

/// Lifts orthogonal idempotents of A/J summing to 1 to orthogonal idempotents of A.
std::vector<Vector> lift_idempotents(const Algebra& a, const Quotient& q, const std::vector<Vector>& idempotents);

using CountMatrix = std::vector<std::vector<std::size_t>>;

CountMatrix cartan_matrix(const Algebra& a, const IdempotentSet& idems);
std::vector<std::size_t> ext1_diag(const Algebra& a, const IdempotentSet& idems, const Subspace& j,
                                   const Subspace& j2);
std::size_t trace(const CountMatrix& c);

CountMatrix cartan_matrix(const Algebra& a, std::uint64_t seed = 0);
std::size_t ell(const Algebra& a, std::uint64_t seed = 0);
std::vector<std::size_t> ext1_diag(const Algebra& a, std::uint64_t seed = 0);

enum class SplitStatus { split, not_split, undecided };
std::string_view to_string(SplitStatus s) noexcept;

/// Everything the invariants need from the radical and the splitting, computed once.
struct StructureReport {
  std::uint64_t seed = 0;
  Subspace radical;
  std::vector<Subspace> powers;  ///< powers[n-1] = J^n for n = 1..LL
  std::size_t loewy_length = 1;
  SplitStatus split_status = SplitStatus::undecided;
  std::string split_note;
  std::optional<WedderburnSplit> wedderburn;
  std::optional<IdempotentSet> idempotents;
  std::optional<std::size_t> ell;
  std::optional<CountMatrix> cartan;
  std::optional<std::vector<std::size_t>> ext1_diag;

  bool split() const noexcept { return split_status == SplitStatus::split; }
  /// J^n with J^0 = A and J^n = 0 beyond the Loewy length.
  Subspace power(const Algebra& a, std::size_t n) const;
};

StructureReport analyze_structure(const Algebra& a, std::uint64_t seed = 0,
                                  RadicalMethod method = RadicalMethod::automatic);

}  // namespace fdalg
