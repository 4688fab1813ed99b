#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "fdalg/algebra.hpp"

namespace fdalg {

struct QuiverArrow {
  std::string name;
  std::size_t source;
  std::size_t target;
};

/// A path as a sequence of arrow indices; `a*b` is a then b. Length-zero
/// paths are the vertex idempotents and carry only their vertex.
struct QuiverPath {
  std::size_t source = 0;
  std::size_t target = 0;
  std::vector<std::size_t> arrows;

  std::size_t length() const noexcept { return arrows.size(); }
  friend bool operator==(const QuiverPath&, const QuiverPath&) = default;
};

struct RelationTerm {
  Scalar coeff;
  QuiverPath path;
};

struct QuiverRelation {
  std::vector<RelationTerm> terms;
};

struct QuiverPresentation {
  FieldSpec field = FieldSpec::rationals();
  std::vector<std::string> vertices;
  std::vector<QuiverArrow> arrows;
  std::vector<QuiverRelation> relations;

  std::size_t add_vertex(std::string name);
  std::size_t add_arrow(std::string name, std::size_t source, std::size_t target);
  /// Composes arrows into a path; throws Error(not_parallel) if they do not compose.
  QuiverPath path(const std::vector<std::size_t>& arrows) const;
  /// Adds a relation after checking composability, length >= 2 and parallelism.
  void add_relation(std::vector<RelationTerm> terms);
};

/// Parses the quiver DSL. A leading `quiver field=Fp:p` line overrides
/// `default_field`; identifiers that are not arrows are looked up in `params`.
QuiverPresentation parse_quiver(std::string_view text, const FieldSpec& default_field = FieldSpec::rationals(),
                                const std::map<std::string, std::string>& params = {});

/// Human-readable label: vertex name for length zero, arrow names joined by '*'.
std::string path_label(const QuiverPresentation& q, const QuiverPath& p);

inline constexpr std::size_t default_admissibility_cap = 32;

/// Smallest N with every path of length N in the ideal generated by the relations.
std::size_t admissibility_bound(const QuiverPresentation& q, std::size_t cap = default_admissibility_cap);

struct PathAlgebra {
  Algebra algebra;
  std::vector<Vector> vertex_idempotents;
  Subspace arrow_ideal;
  /// Residue paths forming the basis, ascending by (length, lex).
  std::vector<QuiverPath> basis;
  std::size_t bound;
};

PathAlgebra build_path_algebra(const QuiverPresentation& q, std::size_t cap = default_admissibility_cap);

}  // namespace fdalg
