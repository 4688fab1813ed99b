#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fdalg/algebra.hpp"
#include "fdalg/invariants.hpp"
#include "fdalg/structure.hpp"

namespace fdalg {

enum class VerdictKind { morita_f, morita_dual, truncated_poly, other, unavailable };

std::string_view to_string(VerdictKind kind) noexcept;

/// Certificate that the basic algebra B is F[X]/(X^n): B is local with
/// dim J/J^2 <= 1, and for x in J outside J^2 the powers 1, x, ..., x^(n-1)
/// form a basis of B while x^n = 0.
struct TruncationWitness {
  std::size_t n = 0;
  std::size_t basic_dim = 0;
  std::size_t top_dim = 0;  ///< dim J/J^2 of the basic algebra
  bool local = false;
  Vector x;                   ///< in basic-algebra coordinates
  std::vector<Vector> powers; ///< x^0, ..., x^(n-1)
  bool independent = false;   ///< the powers form a basis of B
  bool nilpotent = false;     ///< x^n = 0

  bool valid() const noexcept { return local && top_dim <= 1 && independent && nilpotent && basic_dim == n; }
};

struct Verdict {
  VerdictKind kind = VerdictKind::unavailable;
  /// n for the truncated kinds (1 for morita_f, 2 for morita_dual), else 0.
  std::size_t truncation_degree = 0;
  std::optional<std::size_t> k;
  std::optional<std::size_t> codim_k2;
  std::optional<std::size_t> ell;
  std::optional<TruncationWitness> witness;
  std::string reason;

  /// "MoritaF", "MoritaDual", "TruncatedPoly(n)", "Other" or "Unavailable(reason)".
  std::string describe() const;
  bool truncated() const noexcept;
};

Verdict classify_truncated(const Algebra& a, std::uint64_t seed = 0);
Verdict classify_truncated(const Algebra& a, const StructureReport& s);
Verdict classify_small(const Algebra& a, std::uint64_t seed = 0);
Verdict classify_small(const Algebra& a, const StructureReport& s);

/// Builds the structural certificate for degree n, independently of the numeric criteria.
TruncationWitness truncation_witness(const Algebra& a, const StructureReport& s, std::size_t n);

struct ChlebowitzResult {
  bool consistent = true;
  /// Always set: the bounds are stated over algebraically closed fields.
  bool surrogate = true;
  bool tight = false;  ///< some applicable bound is attained
  std::size_t k = 0;
  std::size_t dim = 0;
  std::size_t top_dim = 0;
  std::vector<std::string> checks;
};

/// Evaluates the dimension bounds for local algebras with small k(A).
/// Throws Error(not_local).
ChlebowitzResult chlebowitz_check(const Algebra& a, std::uint64_t seed = 0);
ChlebowitzResult chlebowitz_check(const Algebra& a, const StructureReport& s);

enum class CheckStatus { pass, fail, skip };

std::string_view to_string(CheckStatus status) noexcept;

struct TheoremLine {
  std::string name;
  CheckStatus status = CheckStatus::skip;
  std::string lhs;
  std::string rhs;
  std::string note;
};

struct TheoremReport {
  std::vector<TheoremLine> lines;

  bool passed() const noexcept;
  std::size_t count(CheckStatus status) const noexcept;
  const TheoremLine* find(std::string_view name) const noexcept;
};

TheoremReport verify_theorem_suite(const Algebra& a, std::uint64_t seed = 0,
                                   std::uint64_t symmetric_budget = default_symmetric_budget);
TheoremReport verify_theorem_suite(const Algebra& a, const StructureReport& s,
                                   std::uint64_t symmetric_budget = default_symmetric_budget);

}  // namespace fdalg
