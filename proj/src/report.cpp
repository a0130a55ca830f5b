#include "horo/report.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>

namespace horo {
namespace {

Json vec(const Eigen::VectorXd& v) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

void put(std::ostream& out, const Eigen::VectorXd& v, int n) {
  for (int i = 0; i < n; ++i) {
    out << ',';
    if (i < v.size()) out << v(i); else out << "nan";
  }
}

}  // namespace

InvariantCheck make_check(std::string name, double max_error, double tolerance) {
  return {std::move(name), max_error, tolerance, max_error <= tolerance};
}

bool Report::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const InvariantCheck& c) { return c.pass; });
}

Json Report::to_json() const {
  Json j;
  j["config"] = config;
  j["results"] = results;
  j["invariant_checks"] = Json::array();
  for (const auto& c : checks) {
    // JSON has no NaN/inf; non-finite errors are written as null.
    Json e = std::isfinite(c.max_error) ? Json(c.max_error) : Json(nullptr);
    j["invariant_checks"].push_back(
        {{"name", c.name}, {"max_error", e}, {"tolerance", c.tolerance}, {"pass", c.pass}});
  }
  return j;
}

std::vector<std::string> sweep_csv_columns(int n) {
  std::vector<std::string> cols;
  for (int i = 1; i <= n; ++i) cols.push_back("u" + std::to_string(i));
  cols.push_back("rho");
  for (const char* p : {"lambda", "kappa_ext", "kappa_lk"}) {
    for (int i = 1; i <= n; ++i) cols.push_back(p + std::to_string(i));
  }
  cols.insert(cols.end(), {"max_discrepancy", "constraint_error", "pullback_error"});
  return cols;
}

void write_sweep_csv(const std::vector<SweepRow>& rows, int n, std::ostream& out) {
  const auto cols = sweep_csv_columns(n);
  for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
  out << '\n' << std::setprecision(17);
  for (const auto& r : rows) {
    for (int i = 0; i < n; ++i) out << (i ? "," : "") << r.u(i);
    if (r.ok) {
      out << ',' << r.rho;
      put(out, r.lambda, n);
      put(out, r.kappa_extrinsic, n);
      put(out, r.kappa_from_lambda, n);
      out << ',' << r.max_discrepancy << ',' << r.constraint_error << ',' << r.pullback_error;
    } else {
      out << ",nan";
      for (int i = 0; i < 3 * n + 3; ++i) out << ",nan";
    }
    out << '\n';
  }
}

Json sweep_json(const std::vector<SweepRow>& rows) {
  Json a = Json::array();
  for (const auto& r : rows) {
    Json row{{"u", vec(r.u)}, {"ok", r.ok}};
    if (r.ok) {
      row["rho"] = r.rho;
      row["lambda"] = vec(r.lambda);
      row["kappa_ext"] = vec(r.kappa_extrinsic);
      row["kappa_lk"] = vec(r.kappa_from_lambda);
      row["max_discrepancy"] = r.max_discrepancy;
      row["constraint_error"] = r.constraint_error;
      row["pullback_error"] = r.pullback_error;
    } else {
      row["error"] = r.error;
    }
    a.push_back(std::move(row));
  }
  return a;
}

void write_obj(const MeshImmersion& mesh, std::ostream& out) {
  out << std::setprecision(17);
  for (const auto& v : mesh.vertices) out << "v " << v[0] << ' ' << v[1] << ' ' << v[2] << '\n';
  for (const auto& f : mesh.faces) {
    out << "f " << f[0] + 1 << ' ' << f[1] + 1 << ' ' << f[2] + 1 << '\n';
  }
}

SweepSummary summarize(const std::vector<SweepRow>& rows) {
  SweepSummary s;
  for (const auto& r : rows) {
    if (!r.ok) {
      ++s.failed;
      continue;
    }
    ++s.ok;
    s.max_discrepancy = std::max(s.max_discrepancy, r.max_discrepancy);
    s.constraint_error = std::max(s.constraint_error, r.constraint_error);
    s.pullback_error = std::max(s.pullback_error, r.pullback_error);
  }
  return s;
}

}  // namespace horo
