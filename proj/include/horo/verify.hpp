#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "horo/report.hpp"

namespace horo {

struct VerifyOptions {
  std::uint64_t seed = 12345;
  double h = 1e-4;
  int property_draws = 100000;
  // Criteria to run (1..11); empty means all.
  std::set<int> only;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  double seconds = 0.0;
  std::vector<InvariantCheck> checks;
  Json details = Json::object();
};

inline constexpr int kCriterionCount = 11;

/// Runs the acceptance criteria. Numerical failures inside a criterion are
/// caught and reported as a failing check named "exception".
std::vector<CriterionResult> run_acceptance(const VerifyOptions& options = {});

/// One criterion by id (1..11).
CriterionResult run_criterion(int id, const VerifyOptions& options = {});

Json criterion_json(const CriterionResult& r);

}  // namespace horo
