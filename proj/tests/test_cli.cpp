#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "horo/cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = horo::cli::execute(args, out, err);
  return {code, out.str(), err.str()};
}

std::string tmp(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("horocorr_test_" + name)).string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("gallery list prints six names") {
  const Run r = run({"gallery", "list"});
  CHECK(r.code == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 6);
  CHECK(r.out.find("alpha-product") != std::string::npos);
}

TEST_CASE("gauss-degree alpha prints 3") {
  const Run r = run({"gauss-degree", "alpha", "--samples", "4096"});
  CHECK(r.code == 0);
  CHECK(r.out == "3\n");
}

TEST_CASE("immerse geodesic-sphere OBJ lies on the ball sphere of radius tanh(rho0/2)") {
  const std::string path = tmp("s.obj");
  const Run r = run({"immerse", "geodesic-sphere", "--rho0", "0.346574", "--t", "0", "--out", path});
  REQUIRE(r.code == 0);
  std::istringstream in(slurp(path));
  std::string tag;
  int nv = 0, nf = 0;
  bool faces_started = false, order_ok = true, index_ok = true;
  std::vector<std::array<int, 3>> faces;
  while (in >> tag) {
    if (tag == "v") {
      double x, y, z;
      in >> x >> y >> z;
      order_ok = order_ok && !faces_started;
      ++nv;
      CHECK(std::sqrt(x * x + y * y + z * z) == doctest::Approx(0.171573).epsilon(1e-5).scale(1.0));
    } else if (tag == "f") {
      int a, b, c;
      in >> a >> b >> c;
      faces_started = true;
      ++nf;
      faces.push_back({a, b, c});
    }
  }
  for (const auto& f : faces) {
    for (int i : f) index_ok = index_ok && i >= 1 && i <= nv;
  }
  CHECK(nv > 0);
  CHECK(nf > 0);
  CHECK(order_ok);
  CHECK(index_ok);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"flow", "no-such-example"}).code == 2);
  CHECK(run({"flow", "incomplete-band", "--format", "xml"}).code == 2);
  CHECK(run({"gauss-degree", "geodesic-sphere"}).code == 2);
  CHECK(run({"schouten", "incomplete-band", "--format", "obj"}).code == 2);
  CHECK(run({"immerse", "geodesic-sphere", "--rho0", "0"}).code == 2);
}

TEST_CASE("unwritable output exits 1") {
  const Run r = run({"gallery", "show", "alpha-curve", "--out", "/nonexistent-dir/x.json"});
  CHECK(r.code == 1);
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("flow CSV has the documented columns") {
  const Run r = run({"flow", "incomplete-band", "--samples", "16", "--format", "csv"});
  CHECK(r.code == 0);
  const std::string header = r.out.substr(0, r.out.find('\n'));
  CHECK(header ==
        "u1,u2,rho,lambda1,lambda2,kappa_ext1,kappa_ext2,kappa_lk1,kappa_lk2,max_discrepancy,"
        "constraint_error,pullback_error");
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 17);
}

TEST_CASE("JSON reports embed the resolved config and re-run bit-for-bit") {
  const std::string first = tmp("flow1.json"), second = tmp("flow2.json");
  REQUIRE(run({"flow", "cylinder-delaunay", "--samples", "9", "--format", "json", "--out", first}).code == 0);
  const auto j = nlohmann::json::parse(slurp(first));
  for (const char* key : {"config", "results", "invariant_checks"}) CHECK(j.contains(key));
  CHECK(j["config"]["t"] == 0.0);
  CHECK(j["config"]["samples"] == 9);
  CHECK(j["config"]["cylinder_t"] == 1.0);
  for (const auto& c : j["invariant_checks"]) {
    for (const char* key : {"name", "max_error", "tolerance", "pass"}) CHECK(c.contains(key));
  }
  REQUIRE(run({"flow", "cylinder-delaunay", "--config", first, "--out", second}).code == 0);
  const auto k = nlohmann::json::parse(slurp(second));
  CHECK(k["results"] == j["results"]);
  // Explicit flags override the config.
  REQUIRE(run({"flow", "cylinder-delaunay", "--config", first, "--samples", "4", "--out", second}).code == 0);
  CHECK(nlohmann::json::parse(slurp(second))["results"]["samples"].size() == 4);
}

TEST_CASE("other subcommands") {
  Run r = run({"schouten", "incomplete-band", "--samples", "4", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("u1,u2,lambda1,lambda2\n", 0) == 0);

  r = run({"boundary", "cylinder-delaunay"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["results"]["clusters"].size() == 2);

  r = run({"embed-check", "alpha-curve", "--samples", "1024", "--t-max", "0.5"});
  CHECK(r.code == 0);
  const auto e = nlohmann::json::parse(r.out)["results"];
  CHECK(e["crossings"].get<int>() > 0);
  CHECK(e["first_embedded_time"]["embedded_by_t_max"] == false);

  r = run({"immerse", "alpha-curve", "--samples", "64"});
  CHECK(r.code == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 65);

  r = run({"flow", "alpha-curve", "--samples", "512", "--t", "1", "--format", "json"});
  CHECK(r.code == 0);

  r = run({"weingarten-check", "--samples", "20"});
  CHECK(r.code == 0);

  r = run({"verify", "--only", "10"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("PASS 10", 0) == 0);
}
