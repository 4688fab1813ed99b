#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fdalg/algebra.hpp"
#include "fdalg/structure.hpp"

namespace fdalg {

/// K(A) = span of all commutators [b_i, b_j].
Subspace commutator_subspace(const Algebra& a);
/// k(A) = codim K(A).
std::size_t k_of(const Algebra& a);

/// K_n(A) = K(A) + J^n.
Subspace kn_subspace(const Algebra& a, const StructureReport& s, std::size_t n);
Subspace kn_subspace(const Algebra& a, std::size_t n);

struct CodimSeries {
  /// values[n-1] = codim K_n(A) for n = 1..LL.
  std::vector<std::size_t> values;
  std::size_t k = 0;
  std::optional<std::size_t> ell_if_split;
};

CodimSeries codim_series(const Algebra& a, const StructureReport& s);
CodimSeries codim_series(const Algebra& a, std::uint64_t seed = 0);

/// Preimage in A of the generalized kernel of a + K -> a^p + K on A/K(A).
/// Throws Error(char_zero) over Q.
Subspace t_space(const Algebra& a);

/// Sum of e_i A e_j over i != j plus the sum of e_i J^n e_i. Throws
/// Error(not_basic) if two idempotents share an isomorphism class.
Subspace acyc_cyc(const Algebra& a, const IdempotentSet& idems, const StructureReport& s, std::size_t n);

/// Sum over basic representatives of dim e_i A e_i - dim e_i J^n e_i.
std::size_t otokita_bound(const Algebra& a, const IdempotentSet& idems, const StructureReport& s, std::size_t n);
/// Throws Error(not_split) when no idempotents are available.
std::size_t otokita_bound(const Algebra& a, const StructureReport& s, std::size_t n);

bool rad_in_K(const Algebra& a, const StructureReport& s);
bool rad_in_K(const Algebra& a);
bool is_commutative(const Algebra& a);
/// A/J is a division algebra; empty when the splitting is undecided.
std::optional<bool> is_local(const Algebra& a, const StructureReport& s);
std::optional<bool> is_local(const Algebra& a);

enum class SymmetricVerdict { yes, no, unknown };
std::string_view to_string(SymmetricVerdict v) noexcept;

struct SymmetricResult {
  SymmetricVerdict verdict = SymmetricVerdict::unknown;
  /// lambda(b_i) for each basis vector when verdict is yes.
  std::optional<Vector> form;
  std::size_t candidates_tried = 0;
  bool exhaustive = false;
  std::string reason;
};

inline constexpr std::uint64_t default_symmetric_budget = 1ULL << 16;

/// Searches for a symmetrizing form: a functional vanishing on K(A) with
/// nondegenerate Gram matrix lambda(b_i b_j).
SymmetricResult is_symmetric_search(const Algebra& a, std::uint64_t seed = 0,
                                    std::uint64_t budget = default_symmetric_budget);

/// Gram matrix of lambda: G[i][j] = lambda(b_i b_j).
Matrix gram_matrix(const Algebra& a, const Vector& lambda);

}  // namespace fdalg
