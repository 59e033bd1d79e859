#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "fracwave/cli.hpp"
#include "fracwave/error.hpp"

using namespace fracwave;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path p = fs::path(FRACWAVE_TEST_TMP) / name;
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

int count_lines(const std::string& s) { return static_cast<int>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_CASE("list") {
  const auto r = invoke({"list"});
  CHECK(r.code == 0);
  CHECK(count_lines(r.out) == 6);
  CHECK(r.out.find("ex5-bbm") != std::string::npos);

  const auto j = invoke({"list", "--json"});
  CHECK(j.code == 0);
  const auto doc = json::parse(j.out);
  REQUIRE(doc.size() == 6);
  CHECK(doc[5]["domain"]["x_left"] == -100.0);
  CHECK(doc[5]["t_end"] == 50.0);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"frobnicate"}).code == 2);
  CHECK(invoke({"run", "ex9-nothing"}).code == 2);
  CHECK(invoke({"run", "ex1-smooth", "--dt", "fast"}).code == 2);
  CHECK(invoke({"run", "ex1-smooth", "--filter", "maybe"}).code == 2);
  CHECK(invoke({"run", "ex1-smooth", "--alpha", "0.2"}).code == 2);
  CHECK(invoke({"run", "ex1-smooth", "--converge", "-N", "64"}).code == 2);
  CHECK(invoke({"verify", "extreme"}).code == 2);
  CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("convergence run writes the CSV and a manifest") {
  const auto dir = scratch("converge");
  const auto r = invoke({"run", "ex1-smooth", "--converge", "--t-end", "0.05", "-o", dir.string()});
  REQUIRE(r.code == 0);
  const std::string csv = slurp(dir / "ex1-smooth_convergence.csv");
  CHECK(csv.rfind("N,l2_error,l2_order,linf_error,linf_order\n", 0) == 0);
  CHECK(count_lines(csv) == 6);
  CHECK(csv.find("\n16,") != std::string::npos);
  CHECK(csv.find("\n256,") != std::string::npos);
  // first row has empty orders
  std::istringstream lines(csv);
  std::string header, first;
  std::getline(lines, header);
  std::getline(lines, first);
  CHECK(first.find(",,") != std::string::npos);
  CHECK(first.back() == ',');

  const auto manifest = json::parse(slurp(dir / "ex1-smooth_manifest.json"));
  CHECK(manifest["experiment"] == "ex1-smooth");
  CHECK(manifest["spec"]["t_end"] == 0.05);
  CHECK(manifest["spec"]["schema_version"] == 1);
  CHECK(manifest["rows"].size() == 5);
  CHECK(manifest.contains("git_describe"));
  CHECK(manifest["wall_time_s"].get<double>() >= 0.0);
  CHECK(manifest["dt"].get<double>() > 0.0);
  for (const auto& e : fs::directory_iterator(dir)) {
    CHECK(e.path().string().find(".tmp.") == std::string::npos);
  }
}

TEST_CASE("single run writes snapshots, diagnostics and manifest") {
  const auto dir = scratch("single");
  const auto r =
      invoke({"run", "ex3-three-peakon", "-N", "128", "--t-end", "2", "-o", dir.string()});
  REQUIRE(r.code == 0);
  for (const char* f : {"ex3-three-peakon_t0_N128.csv", "ex3-three-peakon_t1_N128.csv",
                        "ex3-three-peakon_t2_N128.csv", "ex3-three-peakon_diagnostics_N128.csv",
                        "ex3-three-peakon_manifest.json"}) {
    CHECK_MESSAGE(fs::exists(dir / f), f);
  }
  const std::string snap = slurp(dir / "ex3-three-peakon_t1_N128.csv");
  CHECK(snap.rfind("x,u\n", 0) == 0);
  CHECK(count_lines(snap) == 129);
  CHECK(slurp(dir / "ex3-three-peakon_diagnostics_N128.csv").rfind("t,mass,energy,l2,linf\n", 0) == 0);
  const auto manifest = json::parse(slurp(dir / "ex3-three-peakon_manifest.json"));
  CHECK(manifest["runs"][0]["error"].is_null());
  CHECK(manifest["N"] == 128);
}

TEST_CASE("alpha sweep writes one snapshot per alpha") {
  const auto dir = scratch("sweep");
  const auto r = invoke({"run", "ex4-alpha-sweep", "-N", "64", "--t-end", "0.1", "--dt", "0.01",
                      "-o", dir.string()});
  REQUIRE(r.code == 0);
  for (const char* a : {"1", "1.4", "1.7", "2"}) {
    const std::string f = std::string("ex4-alpha-sweep_alpha") + a + "_t0.1_N64.csv";
    CHECK_MESSAGE(fs::exists(dir / f), f);
  }
}

TEST_CASE("reruns produce identical bytes") {
  const auto a = scratch("rerun-a");
  const auto b = scratch("rerun-b");
  for (const auto& dir : {a, b}) {
    REQUIRE(invoke({"run", "ex5-bbm", "-N", "64", "--t-end", "5", "-o", dir.string()}).code == 0);
  }
  for (const char* f : {"ex5-bbm_t0_N64.csv", "ex5-bbm_t5_N64.csv", "ex5-bbm_diagnostics_N64.csv"}) {
    CHECK(slurp(a / f) == slurp(b / f));
  }
}

TEST_CASE("numeric blow-up exits with 3 and a JSON record") {
  const auto dir = scratch("blowup");
  const auto r = invoke({"run", "ex2-peakon", "-N", "1024", "--dt", "0.5", "-o", dir.string()});
  CHECK(r.code == 3);
  const auto record = json::parse(r.err);
  CHECK(record["error"] == "blow-up");
  CHECK(record["experiment"] == "ex2-peakon");
  CHECK(record["time"].is_number());
}

TEST_CASE("config files: strict schema and round trip") {
  const auto dir = scratch("config");
  cli::RunConfig rc;
  rc.spec = find_experiment("ex5-bbm");
  rc.spec.t_end = 2.0;
  rc.spec.nodes = 64;
  rc.out = dir / "out";
  const json doc = cli::config_json(rc);
  const auto back = cli::parse_config(doc);
  CHECK(cli::config_json(back) == doc);

  const auto path = dir / "bbm.json";
  std::ofstream(path) << doc.dump(2);
  const auto r = invoke({"run", path.string()});
  CHECK(r.code == 0);
  CHECK(fs::exists(dir / "out" / "ex5-bbm_t2_N64.csv"));

  json bad = doc;
  bad["colour"] = "blue";
  CHECK_THROWS_AS(cli::parse_config(bad), ConfigError);
  bad = doc;
  bad["params"]["beta"] = 1.0;
  CHECK_THROWS_AS(cli::parse_config(bad), ConfigError);
  bad = doc;
  bad.erase("schema_version");
  CHECK_THROWS_AS(cli::parse_config(bad), ConfigError);
  bad = doc;
  bad["schema_version"] = 2;
  CHECK_THROWS_AS(cli::parse_config(bad), ConfigError);
  bad = doc;
  bad["params"]["gamma"] = -1.0;
  CHECK_THROWS_AS(cli::parse_config(bad), ConfigError);
  bad = doc;
  bad["N"] = 64.5;
  CHECK_THROWS_AS(cli::parse_config(bad), ConfigError);

  std::ofstream(dir / "broken.json") << "{ not json";
  CHECK(invoke({"run", (dir / "broken.json").string()}).code == 2);
}

TEST_CASE("verify") {
  const auto ok = invoke({"verify", "quick", "--trials", "20"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("product-oracle") != std::string::npos);

  const auto tampered = invoke({"verify", "--trials", "20", "--tamper-dealias", "--json"});
  CHECK(tampered.code == 1);
  const auto report = json::parse(tampered.out);
  CHECK_FALSE(report["passed"].get<bool>());
  for (const auto& c : report["checks"]) {
    if (c["name"] == "product-oracle") {
      CHECK_FALSE(c["passed"].get<bool>());
      CHECK_FALSE(c["witness"].get<std::string>().empty());
    }
  }
}
