#include "horo/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <optional>
#include <random>
#include <sstream>

#include "horo/boundary.hpp"
#include "horo/correspondence.hpp"
#include "horo/error.hpp"
#include "horo/gallery.hpp"
#include "horo/kernels.hpp"
#include "horo/linalg.hpp"
#include "horo/report.hpp"
#include "horo/verify.hpp"
#include "horo/weingarten.hpp"

namespace horo::cli {
namespace {

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string subcommand;
  std::string action;  // gallery list|show
  std::string example;
  std::optional<int> samples;
  std::optional<double> t;
  double h = kDefaultStep;
  double eps = kIntersectionEps;
  std::string out;
  std::string format;
  std::uint64_t seed = 12345;
  double rho0 = 0.5 * std::log(2.0);
  double cylinder_t = 1.0;
  double t_max = 5.0;
  std::vector<int> only;
};

Json vec(const Eigen::VectorXd& v) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

Json mat(const Eigen::MatrixXd& m) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) a.push_back(vec(m.row(i).transpose()));
  return a;
}

Json config_json(const RunConfig& c) {
  Json j;
  j["subcommand"] = c.subcommand;
  if (!c.action.empty()) j["action"] = c.action;
  j["example"] = c.example;
  j["samples"] = c.samples ? Json(*c.samples) : Json(nullptr);
  j["t"] = c.t ? Json(*c.t) : Json(nullptr);
  j["h"] = c.h;
  j["eps"] = c.eps;
  j["out"] = c.out;
  j["format"] = c.format;
  j["seed"] = c.seed;
  j["rho0"] = c.rho0;
  j["cylinder_t"] = c.cylinder_t;
  j["t_max"] = c.t_max;
  j["only"] = c.only;
  return j;
}

GalleryEntry load_example(const RunConfig& c) {
  const auto names = gallery_names();
  if (c.example.empty()) throw UsageError("missing example name");
  if (c.example != "alpha" && std::find(names.begin(), names.end(), c.example) == names.end()) {
    throw UsageError("unknown example: " + c.example);
  }
  GalleryParams p;
  p.rho0 = c.rho0;
  p.cylinder_t = c.cylinder_t;
  if (c.samples && (c.example == "alpha" || c.example == "alpha-curve" || c.example == "alpha-product")) {
    p.resolution = *c.samples;
  }
  return make_example(c.example, p);
}

const ConformalMetric& require_metric(const GalleryEntry& e, const std::string& what) {
  if (!e.metric) throw UsageError(what + " needs a metric example; " + e.name + " is not one");
  return *e.metric;
}

const CurveImmersion& require_curve(const GalleryEntry& e, const std::string& what) {
  if (!e.curve) throw UsageError(what + " needs a curve example; " + e.name + " is not one");
  return *e.curve;
}

void require_format(const RunConfig& c, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed) {
    if (c.format == f) return;
  }
  throw UsageError("format '" + c.format + "' is not available for " + c.subcommand);
}

// Grid of the band's inner 80% or of a sphere cap for metric meshes.
double mesh_lat_max(const GalleryEntry& e) {
  return e.band_half_width > 0.0 ? 0.8 * e.band_half_width : 1.4;
}

struct Output {
  std::string body;
  bool failed = false;
};

std::string report_text(Report& rep, const RunConfig& c) {
  rep.config = config_json(c);
  return rep.to_json().dump(2) + "\n";
}

// --- subcommands --------------------------------------------------------------

Output run_gallery(RunConfig& c) {
  if (c.action == "list") {
    std::string body;
    for (const auto& n : gallery_names()) body += n + "\n";
    return {body};
  }
  const GalleryEntry e = load_example(c);
  c.format = "json";
  Report rep;
  const char* kinds[] = {"metric", "curve", "mesh"};
  rep.results = {{"name", e.name},
                 {"kind", kinds[static_cast<int>(e.kind)]},
                 {"description", e.description},
                 {"default_t", e.default_t},
                 {"band_half_width", e.band_half_width},
                 {"params",
                  {{"rho0", e.params.rho0},
                   {"cylinder_t", e.params.cylinder_t},
                   {"resolution", e.params.resolution},
                   {"mesh_u", e.params.mesh_u},
                   {"mesh_v", e.params.mesh_v},
                   {"mesh_half_length", e.params.mesh_half_length}}}};
  return {report_text(rep, c)};
}

Output run_schouten(RunConfig& c) {
  const GalleryEntry e = load_example(c);
  ConformalMetric m = require_metric(e, "schouten");
  m.rho = m.rho.with_step(c.h);
  if (c.format.empty()) c.format = "json";
  require_format(c, {"json", "csv"});
  if (!c.samples) c.samples = 100;
  const auto samples = sample_points(e, *c.samples);
  const int n = m.chart.dim();

  std::ostringstream csv;
  csv << std::setprecision(17);
  for (int i = 1; i <= n; ++i) csv << (i > 1 ? "," : "") << "u" << i;
  for (int i = 1; i <= n; ++i) csv << ",lambda" << i;
  csv << '\n';
  Json rows = Json::array();
  double asym = 0.0;
  for (const auto& u : samples) {
    const SchoutenReport s = schouten(m, u);
    asym = std::max(asym, asymmetry(s.tensor));
    rows.push_back({{"u", vec(u)}, {"eigenvalues", vec(s.eigenvalues)}, {"tensor", mat(s.tensor)},
                    {"conformal_part", mat(s.conformal_part)}});
    for (int i = 0; i < n; ++i) csv << (i ? "," : "") << u(i);
    for (int i = 0; i < n; ++i) csv << ',' << s.eigenvalues(i);
    csv << '\n';
  }
  if (c.format == "csv") return {csv.str()};

  const RealizabilityReport rr = realizability_report(m, samples);
  Report rep;
  rep.results = {{"samples", rows},
                 {"realizability",
                  {{"lambda_min", rr.lambda_min},
                   {"lambda_max", rr.lambda_max},
                   {"bounded_below", rr.bounded_below},
                   {"bounded_above", rr.bounded_above},
                   {"realizable", rr.realizable},
                   {"flags", rr.flags}}}};
  rep.checks.push_back(make_check("Schouten tensor symmetry", asym, 1e-10));
  return {report_text(rep, c), !rep.all_pass()};
}

Output run_immerse(RunConfig& c) {
  const GalleryEntry e = load_example(c);
  const double t = c.t.value_or(e.default_t);
  c.t = t;
  Report rep;

  if (e.kind == PayloadKind::curve) {
    if (c.format.empty()) c.format = "csv";
    require_format(c, {"csv", "json"});
    const CurveImmersion curve = e.curve->flowed(t);
    const auto pts = curve_ball_points(curve);
    const auto us = curve.parameters();
    std::ostringstream csv;
    csv << std::setprecision(17) << "u,x,y\n";
    Json rows = Json::array();
    double radius = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      csv << us[i] << ',' << pts[i](0) << ',' << pts[i](1) << '\n';
      rows.push_back({{"u", us[i]}, {"ball", {pts[i](0), pts[i](1)}}});
      radius = std::max(radius, pts[i].norm());
    }
    if (c.format == "csv") return {csv.str()};
    rep.results = {{"points", rows}};
    rep.checks.push_back(make_check("inside the unit ball (max radius)", radius, 1.0));
    return {report_text(rep, c), !rep.all_pass()};
  }

  if (c.format.empty()) c.format = "obj";
  require_format(c, {"obj", "json"});
  MeshImmersion mesh;
  if (e.kind == PayloadKind::mesh) {
    const GalleryParams& p = e.params;
    mesh = curve_product_mesh(e.curve->flowed(t), p.mesh_u, p.mesh_v, p.mesh_half_length);
  } else {
    ConformalMetric m = *e.metric;
    m.rho = m.rho.with_step(c.h);
    if (!c.samples) c.samples = 64;
    mesh = mesh_metric_immersion(m, t, std::max(2, *c.samples / 2), std::max(3, *c.samples),
                                 mesh_lat_max(e));
  }
  if (c.format == "obj") {
    std::ostringstream obj;
    write_obj(mesh, obj);
    return {obj.str()};
  }
  Json verts = Json::array();
  double radius = 0.0;
  for (const auto& v : mesh.vertices) {
    verts.push_back(vec(v.coords()));
    radius = std::max(radius, v.coords().norm());
  }
  Json faces = Json::array();
  for (const auto& f : mesh.faces) faces.push_back({f[0], f[1], f[2]});
  rep.results = {{"vertices", verts}, {"faces", faces}};
  rep.checks.push_back(make_check("inside the unit ball (max radius)", radius, 1.0));
  return {report_text(rep, c), !rep.all_pass()};
}

Output run_flow(RunConfig& c) {
  const GalleryEntry e = load_example(c);
  const double t = c.t.value_or(e.default_t);
  c.t = t;
  if (c.format.empty()) c.format = "csv";
  require_format(c, {"csv", "json"});
  Report rep;

  if (e.kind != PayloadKind::metric) {
    const CurveImmersion& curve = require_curve(e, "flow");
    const CurveImmersion moved = curve.flowed(t);
    const auto base = curve_curvatures(curve);
    const auto flowed = curve_curvatures(moved);
    const auto us = curve.parameters();
    std::ostringstream csv;
    csv << std::setprecision(17) << "u,kappa0,kappa_t,kappa_ricatti\n";
    Json rows = Json::array();
    double err = 0.0;
    for (std::size_t i = 0; i < us.size(); ++i) {
      const double pred = ricatti(base[i], t);
      err = std::max(err, std::abs(flowed[i] - pred));
      csv << us[i] << ',' << base[i] << ',' << flowed[i] << ',' << pred << '\n';
      rows.push_back({{"u", us[i]}, {"kappa0", base[i]}, {"kappa_t", flowed[i]}, {"kappa_ricatti", pred}});
    }
    rep.checks.push_back(make_check("flowed curvature vs ricatti", err, 1e-3));
    if (c.format == "csv") return {csv.str(), !rep.all_pass()};
    rep.results = {{"samples", rows}};
    return {report_text(rep, c), !rep.all_pass()};
  }

  ConformalMetric m = *e.metric;
  m.rho = m.rho.with_step(c.h);
  if (!c.samples) c.samples = 500;
  const auto samples = sample_points(e, *c.samples);
  const auto rows = omp::curvature_sweep(m, samples, t);
  const SweepSummary s = summarize(rows);
  rep.checks.push_back(make_check("failed samples", static_cast<double>(s.failed), 0));
  rep.checks.push_back(make_check("max |kappa_ext - lambda_kappa(lambda)|", s.max_discrepancy, 1e-3));
  rep.checks.push_back(make_check("Minkowski constraints", s.constraint_error, 1e-5));
  rep.checks.push_back(make_check("pullback relative error", s.pullback_error, 1e-5));
  if (c.format == "csv") {
    std::ostringstream csv;
    write_sweep_csv(rows, m.chart.dim(), csv);
    return {csv.str(), !rep.all_pass()};
  }
  rep.results = {{"columns", sweep_csv_columns(m.chart.dim())}, {"samples", sweep_json(rows)}};
  return {report_text(rep, c), !rep.all_pass()};
}

Output run_embed_check(RunConfig& c) {
  const GalleryEntry e = load_example(c);
  const double t = c.t.value_or(e.default_t);
  c.t = t;
  if (c.format.empty()) c.format = "json";
  require_format(c, {"json"});
  Report rep;
  if (e.kind == PayloadKind::curve) {
    const std::size_t count = self_intersections(e.curve->flowed(t), c.eps).size();
    Json emb;
    try {
      const EmbeddedTime et = first_embedded_time(*e.curve, c.t_max, 1e-3, c.eps);
      emb = {{"embedded_by_t_max", true}, {"t_emb", et.t_emb}, {"t_below", et.t_below},
             {"t_above", et.t_above}};
    } catch (const NumericalError& ex) {
      emb = {{"embedded_by_t_max", false}, {"t_emb", nullptr}, {"message", ex.what()}};
    }
    rep.results = {{"kind", "curve"}, {"crossings", count}, {"first_embedded_time", emb}};
    return {report_text(rep, c)};
  }
  MeshImmersion mesh;
  if (e.kind == PayloadKind::mesh) {
    const GalleryParams& p = e.params;
    mesh = curve_product_mesh(e.curve->flowed(t), p.mesh_u, p.mesh_v, p.mesh_half_length);
  } else {
    ConformalMetric m = *e.metric;
    m.rho = m.rho.with_step(c.h);
    if (!c.samples) c.samples = 64;
    mesh = mesh_metric_immersion(m, t, std::max(2, *c.samples / 2), std::max(3, *c.samples),
                                 mesh_lat_max(e));
  }
  const auto hits = self_intersections(mesh, c.eps);
  rep.results = {{"kind", "mesh"},
                 {"vertices", mesh.vertices.size()},
                 {"faces", mesh.faces.size()},
                 {"crossings", hits.size()}};
  return {report_text(rep, c)};
}

Output run_gauss_degree(RunConfig& c) {
  if (!c.samples) c.samples = 4096;
  const GalleryEntry e = load_example(c);
  const CurveImmersion& curve = require_curve(e, "gauss-degree");
  const double t = c.t.value_or(0.0);
  c.t = t;
  const int degree = gauss_winding(curve.flowed(t));
  if (c.format.empty()) return {std::to_string(degree) + "\n"};
  require_format(c, {"json"});
  Report rep;
  rep.results = {{"degree", degree}, {"resolution", curve.resolution}};
  return {report_text(rep, c)};
}

Output run_boundary(RunConfig& c) {
  const GalleryEntry e = load_example(c);
  if (c.format.empty()) c.format = "json";
  require_format(c, {"json"});
  BoundaryOptions opt;
  if (c.t) opt.t = *c.t;
  const BoundaryReport b = boundary_at_infinity(e, opt);
  Json clusters = Json::array();
  for (const auto& cl : b.clusters) clusters.push_back({{"center", vec(cl.center)}, {"members", cl.members}});
  Report rep;
  rep.results = {{"t", b.t}, {"probes", b.probes}, {"escaped", b.escaped}, {"clusters", clusters}};
  return {report_text(rep, c)};
}

Output run_weingarten(RunConfig& c) {
  if (c.format.empty()) c.format = "json";
  require_format(c, {"json"});
  if (!c.samples) c.samples = 200;
  const int n = 3;
  std::mt19937_64 rng(c.seed);
  // T maps kappa > 1 to lambda > 0: the positive cone, where every sigma_k is elliptic.
  std::uniform_real_distribution<double> lam(0.0, 0.49), kap(1.0, 4.0);

  std::vector<CurvatureFunction> fns;
  for (int k = 1; k <= n; ++k) {
    fns.push_back(sigma_k(k, Side::metric));
    fns.push_back(conjugate(sigma_k(k, Side::metric)));
  }
  fns.push_back(mean_curvature(Side::hypersurface));
  fns.push_back(power_mean(2.0, Side::hypersurface));

  Report rep;
  Json per = Json::array();
  for (const auto& f : fns) {
    std::vector<Eigen::VectorXd> pts;
    for (int tries = 0; tries < 100 * *c.samples && static_cast<int>(pts.size()) < *c.samples; ++tries) {
      Eigen::VectorXd x(n);
      for (int i = 0; i < n; ++i) x(i) = f.side == Side::metric ? lam(rng) : kap(rng);
      if (f.contains(x)) pts.push_back(x);
    }
    const EllipticityReport er = ellipticity_check(f, pts);
    std::size_t bad = 0;
    for (const auto& p : er.points) bad += p.elliptic ? 0 : 1;
    per.push_back({{"name", f.name}, {"points", pts.size()}, {"all_elliptic", er.all_elliptic},
                   {"all_smooth", er.all_smooth}});
    rep.checks.push_back(make_check(f.name + ": non-elliptic points", static_cast<double>(bad), 0));
  }

  std::uniform_real_distribution<double> a(-1.0, 10.0);
  double hr = 0.0;
  for (int k = 0; k < 100 * *c.samples; ++k) {
    Eigen::VectorXd x(n);
    for (int i = 0; i < n; ++i) x(i) = std::max(a(rng), std::nextafter(-1.0, 0.0));
    const HrResult r = hr_inequality(x);
    hr = std::max(hr, r.lhs - r.rhs);
  }
  rep.checks.push_back(make_check("H-R inequality (max lhs - rhs)", std::max(hr, 0.0), 1e-12));

  Json consts = Json::array();
  for (int k = 1; k <= n; ++k) {
    const CurvatureFunction f = sigma_k(k, Side::metric);
    const double root = admissible_constant(f, n, 0.1, 0.0, 0.49);
    consts.push_back({{"name", f.name}, {"c", 0.1}, {"lambda_bar", root}});
  }
  rep.results = {{"functions", per}, {"admissible_constants", consts}};
  return {report_text(rep, c), !rep.all_pass()};
}

Output run_verify(RunConfig& c) {
  if (c.format.empty()) c.format = "json";
  require_format(c, {"json"});
  VerifyOptions opt;
  opt.seed = c.seed;
  opt.h = c.h;
  for (int id : c.only) {
    if (id < 1 || id > kCriterionCount) throw UsageError("--only: criterion ids are 1.." + std::to_string(kCriterionCount));
    opt.only.insert(id);
  }
  const auto results = run_acceptance(opt);
  std::ostringstream text;
  Report rep;
  Json arr = Json::array();
  bool ok = true;
  for (const auto& r : results) {
    text << (r.pass ? "PASS " : "FAIL ") << std::setw(2) << r.id << "  " << r.title << "  ("
         << std::fixed << std::setprecision(2) << r.seconds << " s)\n";
    ok = ok && r.pass;
    arr.push_back(criterion_json(r));
    for (const auto& ch : r.checks) {
      InvariantCheck named = ch;
      named.name = std::to_string(r.id) + ": " + ch.name;
      rep.checks.push_back(named);
    }
  }
  rep.results = {{"criteria", arr}};
  if (c.out.empty()) return {text.str(), !ok};
  return {report_text(rep, c), !ok};
}

// Values from --config fill in every flag that was not given explicitly.
void apply_config(RunConfig& c, const CLI::App& sub, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const std::exception& ex) {
    throw UsageError("invalid config " + path + ": " + ex.what());
  }
  if (j.contains("config")) j = j["config"];
  auto given = [&](const char* flag) {
    const CLI::Option* o = sub.get_option_no_throw(flag);
    return o != nullptr && o->count() > 0;
  };
  auto take = [&](const char* key) { return j.contains(key) && !j[key].is_null(); };
  if (c.example.empty() && take("example")) c.example = j["example"].get<std::string>();
  if (!given("--samples") && take("samples")) c.samples = j["samples"].get<int>();
  if (!given("--t") && take("t")) c.t = j["t"].get<double>();
  if (!given("--h") && take("h")) c.h = j["h"].get<double>();
  if (!given("--eps") && take("eps")) c.eps = j["eps"].get<double>();
  if (!given("--format") && take("format")) c.format = j["format"].get<std::string>();
  if (!given("--seed") && take("seed")) c.seed = j["seed"].get<std::uint64_t>();
  if (!given("--rho0") && take("rho0")) c.rho0 = j["rho0"].get<double>();
  if (!given("--cylinder-t") && take("cylinder_t")) c.cylinder_t = j["cylinder_t"].get<double>();
  if (!given("--t-max") && take("t_max")) c.t_max = j["t_max"].get<double>();
  if (!given("--only") && take("only")) c.only = j["only"].get<std::vector<int>>();
}

void add_common(CLI::App* sub, RunConfig& c, std::optional<int>& samples, std::optional<double>& t,
                std::string& config) {
  sub->add_option("--samples", samples, "sample count / curve resolution")->check(CLI::PositiveNumber);
  sub->add_option("--t", t, "flow time");
  sub->add_option("--h", c.h, "finite-difference step")->check(CLI::PositiveNumber);
  sub->add_option("--eps", c.eps, "intersection tolerance")->check(CLI::NonNegativeNumber);
  sub->add_option("--out", c.out, "output path (default: stdout)");
  sub->add_option("--format", c.format, "json, csv or obj")->check(CLI::IsMember({"json", "csv", "obj"}));
  sub->add_option("--seed", c.seed, "seed for random property sweeps");
  sub->add_option("--rho0", c.rho0, "geodesic-sphere radius");
  sub->add_option("--cylinder-t", c.cylinder_t, "cylinder-delaunay scale");
  sub->add_option("--t-max", c.t_max, "embed-check search limit");
  sub->add_option("--config", config, "JSON config (or a previous report) to re-run");
}

}  // namespace

int execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  std::optional<int> samples;
  std::optional<double> t;
  std::string config;

  CLI::App app{"horocorr: horospherically convex hypersurfaces from conformal metrics", "horocorr"};
  // --h is the FD step, so help is long-form only.
  app.set_help_flag("--help", "print help");
  app.require_subcommand(1);

  auto* gallery = app.add_subcommand("gallery", "list or describe gallery examples");
  gallery->require_subcommand(1);
  gallery->add_subcommand("list", "print the example names");
  auto* show = gallery->add_subcommand("show", "describe one example");
  show->add_option("example", c.example)->required();
  add_common(show, c, samples, t, config);

  std::vector<CLI::App*> subs;
  for (const auto& [name, help] : std::vector<std::pair<std::string, std::string>>{
           {"schouten", "Schouten eigenvalues at sample points"},
           {"immerse", "immersion as OBJ (surfaces) or CSV (curves)"},
           {"flow", "curvature sweep at flow time t"},
           {"embed-check", "self-intersections and first embedded time"},
           {"gauss-degree", "degree of the Gauss map of a closed curve"},
           {"boundary", "ideal boundary clusters"},
           {"weingarten-check", "ellipticity and inequality checks of curvature functions"},
           {"verify", "run the acceptance suite"}}) {
    auto* sub = app.add_subcommand(name, help);
    if (name != "weingarten-check" && name != "verify") sub->add_option("example", c.example);
    add_common(sub, c, samples, t, config);
    if (name == "verify") sub->add_option("--only", c.only, "criterion ids to run")->delimiter(',');
    subs.push_back(sub);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    for (auto* sub : app.get_subcommands()) out << sub->help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "horocorr: " << e.what() << "\n";
    return kExitUsage;
  }

  CLI::App* active = app.get_subcommands().front();
  c.subcommand = active->get_name();
  if (c.subcommand == "gallery") {
    CLI::App* leaf = active->get_subcommands().front();
    c.action = leaf->get_name();
    active = leaf;
  }
  c.samples = samples;
  c.t = t;

  Output result;
  try {
    if (!config.empty()) apply_config(c, *active, config);
    if (c.subcommand == "gallery") result = run_gallery(c);
    else if (c.subcommand == "schouten") result = run_schouten(c);
    else if (c.subcommand == "immerse") result = run_immerse(c);
    else if (c.subcommand == "flow") result = run_flow(c);
    else if (c.subcommand == "embed-check") result = run_embed_check(c);
    else if (c.subcommand == "gauss-degree") result = run_gauss_degree(c);
    else if (c.subcommand == "boundary") result = run_boundary(c);
    else if (c.subcommand == "weingarten-check") result = run_weingarten(c);
    else result = run_verify(c);
  } catch (const UsageError& e) {
    err << "horocorr: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "horocorr: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "horocorr: " << e.what() << "\n";
    return kExitFailure;
  }

  if (c.out.empty()) {
    out << result.body;
  } else {
    std::ofstream file(c.out);
    file << result.body;
    file.close();
    if (!file) {
      err << "horocorr: cannot write " << c.out << "\n";
      return kExitFailure;
    }
  }
  if (result.failed) {
    err << "horocorr: one or more invariant checks failed\n";
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace horo::cli
