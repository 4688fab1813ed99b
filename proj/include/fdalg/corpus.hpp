#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fdalg/algebra.hpp"
#include "fdalg/quiver.hpp"

namespace fdalg {

enum class Family { truncated, triangular, kronecker, a_q, cyclic_group, s3, matrix, random_quiver, random_local };

std::string_view to_string(Family f) noexcept;
/// Accepts the names printed by to_string (e.g. "a_q", "random_local").
Family parse_family(std::string_view name);

struct RandomQuiverParams {
  std::size_t max_vertices = 3;
  std::size_t max_arrows = 4;
  std::size_t max_length = 5;  ///< all paths of this length (at most) are relations
  std::size_t max_dim = 24;
  bool radical_square_zero = false;
};

struct RandomLocalParams {
  std::size_t generators = 2;  ///< loops, at most 3
  std::size_t truncation = 3;  ///< words of this length vanish; between 2 and 4
  std::size_t max_dim = 24;
};

struct GeneratorSpec {
  Family family = Family::truncated;
  FieldSpec field = FieldSpec::rationals();
  std::size_t n = 0;
  std::optional<Scalar> q;
  std::uint64_t seed = 0;
  RandomQuiverParams quiver;
  RandomLocalParams local;

  std::string describe() const;
};

/// Deterministic in the spec. Throws Error(bad_parameter) for out-of-range
/// parameters and Error(generator_failed) when 100 random draws are rejected.
Algebra generate(const GeneratorSpec& spec);

QuiverPresentation truncated_quiver(const FieldSpec& field, std::size_t n);
QuiverPresentation kronecker_quiver(const FieldSpec& field, std::size_t n);
QuiverPresentation a_q_quiver(const FieldSpec& field, const Scalar& q);
CayleyTable cyclic_group_table(std::size_t n);
CayleyTable s3_table();

Algebra truncated_polynomial(const FieldSpec& field, std::size_t n);
Algebra kronecker_algebra(const FieldSpec& field, std::size_t n);
Algebra a_q_algebra(const FieldSpec& field, const Scalar& q);
Algebra triangular_algebra(const FieldSpec& field, std::size_t n);
Algebra cyclic_group_algebra(const FieldSpec& field, std::size_t n);
Algebra s3_group_algebra(const FieldSpec& field);

QuiverPresentation random_quiver_presentation(const FieldSpec& field, std::uint64_t seed, const RandomQuiverParams& params);
Algebra random_quiver(const FieldSpec& field, std::uint64_t seed, const RandomQuiverParams& params = {});
/// Local algebra F<x_1..x_g> / (random homogeneous relations + all words of
/// length `truncation`), returned without quiver provenance.
Algebra random_local(const FieldSpec& field, std::uint64_t seed, const RandomLocalParams& params = {});

/// The deterministic family list: every family over F_2, F_3, F_5 and Q at
/// small parameters.
std::vector<GeneratorSpec> standard_corpus();

}  // namespace fdalg
