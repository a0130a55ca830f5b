#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "horo/kernels.hpp"
#include "horo/mesh.hpp"

namespace horo {

using Json = nlohmann::ordered_json;

struct InvariantCheck {
  std::string name;
  double max_error = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// pass = max_error <= tolerance (NaN fails).
InvariantCheck make_check(std::string name, double max_error, double tolerance);

/// Top-level JSON report: {config, results, invariant_checks}.
struct Report {
  Json config = Json::object();
  Json results = Json::object();
  std::vector<InvariantCheck> checks;

  bool all_pass() const;
  Json to_json() const;
};

/// Columns: u1..un, rho, lambda1..n, kappa_ext1..n, kappa_lk1..n,
/// max_discrepancy, constraint_error, pullback_error. Failed rows carry nan.
std::vector<std::string> sweep_csv_columns(int n);
void write_sweep_csv(const std::vector<SweepRow>& rows, int n, std::ostream& out);
Json sweep_json(const std::vector<SweepRow>& rows);

/// ASCII OBJ: all `v x y z` lines, then `f i j k` lines (1-indexed).
void write_obj(const MeshImmersion& mesh, std::ostream& out);

/// Largest max_discrepancy / constraint_error / pullback_error over ok rows;
/// counts failed rows.
struct SweepSummary {
  double max_discrepancy = 0.0;
  double constraint_error = 0.0;
  double pullback_error = 0.0;
  std::size_t ok = 0;
  std::size_t failed = 0;
};
SweepSummary summarize(const std::vector<SweepRow>& rows);

}  // namespace horo
