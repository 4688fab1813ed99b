#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fdalg/classify.hpp"
#include "fdalg/invariants.hpp"
#include "fdalg/morita.hpp"
#include "fdalg/structure.hpp"

namespace fdalg {

struct Report {
  std::string descriptor;
  FieldSpec field = FieldSpec::rationals();
  std::size_t dim = 0;
  std::uint64_t seed = 0;
  SplitStatus split_status = SplitStatus::undecided;
  std::string split_note;
  std::size_t k = 0;
  std::size_t k_star = 0;
  std::optional<std::size_t> ell;
  std::size_t radical_dim = 0;
  std::size_t loewy_length = 1;
  std::vector<std::size_t> codim_series;
  std::optional<std::vector<std::size_t>> otokita_bounds;
  std::optional<CountMatrix> cartan;
  std::optional<std::vector<std::size_t>> ext1_diag;
  bool rad_in_K = false;
  SymmetricResult symmetric;
  Verdict verdict;
  TheoremReport theorems;
};

/// Every number is a function of the algebra, the seed and the budget.
Report build_report(const Algebra& a, std::uint64_t seed = 0, std::uint64_t symmetric_budget = default_symmetric_budget);

nlohmann::json to_json(const Report& r);
nlohmann::json to_json(const Verdict& v);
nlohmann::json to_json(const TheoremReport& t);
nlohmann::json to_json(const MoritaReport& m);

std::string to_text(const Report& r);
std::string to_text(const Verdict& v);
std::string to_text(const TheoremReport& t);
std::string to_text(const MoritaReport& m);

}  // namespace fdalg
