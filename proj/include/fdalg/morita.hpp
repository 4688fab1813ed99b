#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "fdalg/algebra.hpp"
#include "fdalg/structure.hpp"

namespace fdalg {

/// Sum of one primitive idempotent per isomorphism class.
Vector basic_idempotent(const Algebra& a, const IdempotentSet& idems);
/// eAe for the basic idempotent e. Throws Error(not_split).
Corner basic_algebra(const Algebra& a, std::uint64_t seed = 0);
Corner basic_algebra(const Algebra& a, const StructureReport& s);

struct FullnessWitness {
  Vector e;
  /// Pairs (u_k, v_k) with sum_k u_k e v_k = 1.
  std::vector<std::pair<Vector, Vector>> pairs;
};

/// Throws Error(not_full) if A e A is a proper ideal, Error(not_idempotent) if e*e != e.
FullnessWitness fullness_witness(const Algebra& a, const Vector& e);
bool check_witness(const Algebra& a, const FullnessWitness& w);

/// The induced map A/K(A) -> B/K(B), a + K(A) -> sum_k e v_k a u_k e + K(B),
/// in the bases given by the free coordinates of K(A) and K(B).
struct TauMap {
  Matrix matrix;
  std::vector<std::size_t> source_representatives;
  std::vector<std::size_t> target_representatives;
  bool well_defined = false;
  bool bijective = false;
};

TauMap tau_map(const Algebra& a, const Corner& b, const FullnessWitness& w);
/// b + K(B) -> b + K(A).
Matrix sigma_map(const Algebra& a, const Corner& b);

struct MoritaLevel {
  std::size_t n = 0;
  std::size_t codim_a = 0;
  std::size_t codim_b = 0;
  bool tau_matches = false;  ///< tau(K_n(A)/K(A)) = K_n(B)/K(B)
};

struct MoritaReport {
  Corner basic;
  FullnessWitness witness;
  TauMap tau;
  bool witness_valid = false;
  bool sigma_well_defined = false;
  bool round_trip = false;  ///< tau o sigma and sigma o tau are identities
  std::vector<MoritaLevel> levels;

  bool passed() const;
};

/// Checks the Morita invariance of A/K_n(A) against its basic algebra.
MoritaReport verify_morita_invariance(const Algebra& a, std::uint64_t seed = 0);
MoritaReport verify_morita_invariance(const Algebra& a, const StructureReport& s);

/// Endomorphism algebra of the sum of m_i copies of e_i A over basic
/// representatives e_i: block matrices with (s, t) entry in e_s A e_t.
Algebra inflate(const Algebra& a, const std::vector<std::size_t>& multiplicities, std::uint64_t seed = 0);
Algebra inflate(const Algebra& a, const IdempotentSet& idems, const std::vector<std::size_t>& multiplicities);

}  // namespace fdalg
