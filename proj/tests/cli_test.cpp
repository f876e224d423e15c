#include "doctest.h"
#include "golden_reference.hpp"
#include "golden_util.hpp"

#include "cli.hpp"
#include "sopq/io/serialize.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace sopq;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  fs::path p = fs::temp_directory_path() / ("sopq_cli_test_" + name);
  fs::remove_all(p);
  return p;
}

Json read_json(const fs::path& p) {
  std::ifstream in(p);
  return Json::parse(in);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

PMatrix json_matrix(const Json& j, const UniverseRef& u) {
  PMatrix m(j.size(), j.front().size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    for (std::size_t k = 0; k < j[i].size(); ++k) m(i, k) = parse_polynomial(j[i][k].get<std::string>(), u);
  }
  return m;
}

}  // namespace

TEST_CASE("build so(6,5) writes the reference L") {
  fs::path dir = scratch("build65");
  Run r = run({"build", "--sopq", "3,2", "--out", dir.string()});
  REQUIRE(r.code == 0);
  Json j = read_json(dir / "build.json");
  auto u = SystemSpec::sopq(3, 2).phase_universe();
  CHECK(json_matrix(j["L"], u) == golden::parse_matrix(golden::kL, u));
  CHECK(j["spec"]["label"] == "so(6,5)");
  CHECK(j["root_datum"]["dimension"] == 55);
}

TEST_CASE("build pattern +- writes the example M") {
  fs::path dir = scratch("buildpm");
  Run r = run({"build", "--pattern", "+-", "--n", "3", "--out", dir.string()});
  REQUIRE(r.code == 0);
  Json j = read_json(dir / "build.json");
  auto u = SystemSpec::pattern("+-", 3).phase_universe();
  const golden::Example3* ex = nullptr;
  for (const auto& e : golden::kExamples3) {
    if (std::string(e.signs) == "+-") ex = &e;
  }
  REQUIRE(ex);
  CHECK(json_matrix(j["M"], u) == golden::parse_matrix(ex->M, u));
}

TEST_CASE("invalid configurations exit with 2") {
  Run r = run({"build", "--sopq", "0,2"});
  CHECK(r.code == 2);
  CHECK(r.err.find("m must be ≥ 1") != std::string::npos);
  CHECK(run({"build", "--pattern", "+x"}).code == 2);
  CHECK(run({"simulate", "--h", "-1"}).code == 2);
  CHECK(run({"verify", "--suite", "nonsense"}).code == 2);
  CHECK(run({"verify", "--mutate", "other"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"build", "--config", "/nonexistent.json"}).code == 2);
}

TEST_CASE("simulate writes CSV and drift report") {
  fs::path dir = scratch("sim");
  Run r = run({"simulate", "--sopq", "3,2", "--T", "0.2", "--h", "0.01", "--out", dir.string()});
  REQUIRE(r.code == 0);
  std::string csv = slurp(dir / "trajectory.csv");
  std::string header = csv.substr(0, csv.find('\n'));
  CHECK(header.rfind("t,a_1,a_2,a_3,a_4,b_1,b_2,b_3,b_4,b_5,H_1,H_2", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 22);
  Json j = read_json(dir / "drift.json");
  CHECK(j["drift"]["aborted"] == false);
  CHECK(j["drift"]["invariant_drift"]["H1"].get<double>() <= 1e-12);
}

TEST_CASE("zero-a initial condition gives constant rows") {
  fs::path dir = scratch("zeroa");
  REQUIRE(run({"simulate", "--ic", "zero-a", "--T", "0.1", "--h", "0.01", "--out", dir.string()}).code == 0);
  std::istringstream csv(slurp(dir / "trajectory.csv"));
  std::string line, first;
  std::getline(csv, line);
  std::getline(csv, first);
  first = first.substr(first.find(','));
  while (std::getline(csv, line)) CHECK(line.substr(line.find(',')) == first);
}

TEST_CASE("blow-up exits with 3 and records the last valid time") {
  fs::path dir = scratch("blowup");
  Run r = run({"simulate", "--T", "10", "--h", "0.001", "--out", dir.string()});
  CHECK(r.code == 3);
  Json j = read_json(dir / "drift.json");
  CHECK(j["drift"]["aborted"] == true);
  CHECK(j["drift"]["last_valid_time"].get<double>() == doctest::Approx(0.649).epsilon(1e-3));
}

TEST_CASE("check-order reports a ratio near 16") {
  fs::path dir = scratch("order");
  REQUIRE(run({"simulate", "--T", "0.5", "--h", "1e-3", "--check-order", "--out", dir.string()}).code == 0);
  double ratio = read_json(dir / "drift.json")["drift"]["order_ratio"].get<double>();
  CHECK(ratio >= 12);
  CHECK(ratio <= 20);
}

TEST_CASE("simulate is deterministic") {
  fs::path a = scratch("det_a"), b = scratch("det_b");
  for (const fs::path& d : {a, b}) {
    REQUIRE(run({"simulate", "--ic", "random", "--seed", "9", "--T", "0.3", "--h", "0.01", "--out", d.string()}).code == 0);
  }
  CHECK(slurp(a / "trajectory.csv") == slurp(b / "trajectory.csv"));
  CHECK(slurp(a / "drift.json") == slurp(b / "drift.json"));
}

TEST_CASE("verify with the mutated Adler bracket fails exactly once") {
  fs::path dir = scratch("mutate");
  Run r = run({"verify", "--suite", "poisson", "--N", "3", "--mutate", "adler:ab-sign", "--out", dir.string()});
  CHECK(r.code == 1);
  Json j = read_json(dir / "verify.json");
  CHECK(j["summary"]["failed"] == 1);
  for (const auto& e : j["results"]) {
    if (e["status"] == "fail") CHECK(e["residual"].get<std::string>().find("(a1,b1,b2): -4*a1^3") != std::string::npos);
  }
}

TEST_CASE("verify lax for the (-,-) pattern confirms the alternative pair") {
  fs::path dir = scratch("laxmm");
  Run r = run({"verify", "--suite", "lax", "--pattern", "--", "--n", "3", "--out", dir.string()});
  CHECK(r.code == 0);
  Json j = read_json(dir / "verify.json");
  bool alt = false;
  for (const auto& e : j["results"]) alt = alt || e["identity"] == "lax.consistency.alternative.eq";
  CHECK(alt);
}

TEST_CASE("verify output is sorted and independent of jobs") {
  fs::path a = scratch("jobs1"), b = scratch("jobs3");
  REQUIRE(run({"verify", "--suite", "lenard", "--N", "3..4", "--jobs", "1", "--out", a.string()}).code == 0);
  REQUIRE(run({"verify", "--suite", "lenard", "--N", "3..4", "--jobs", "3", "--out", b.string()}).code == 0);
  Json ja = read_json(a / "verify.json"), jb = read_json(b / "verify.json");
  CHECK(ja["results"] == jb["results"]);
  std::vector<std::string> ids;
  for (const auto& e : ja["results"]) ids.push_back(e["identity"].get<std::string>());
  CHECK(std::is_sorted(ids.begin(), ids.end()));
  CHECK_FALSE(ja["results"][0].contains("wall_ms"));
}

TEST_CASE("config file with flag override") {
  fs::path dir = scratch("config");
  fs::create_directories(dir);
  {
    std::ofstream os(dir / "run.json");
    os << R"({"system": {"sopq": [2, 1]}, "T": 0.05, "h": 0.01, "stride": 5})";
  }
  REQUIRE(run({"simulate", "--config", (dir / "run.json").string(), "--h", "0.005", "--out", dir.string()}).code == 0);
  Json j = read_json(dir / "drift.json");
  CHECK(j["spec"]["label"] == "so(4,3)");
  CHECK(j["config"]["h"].get<double>() == 0.005);
  CHECK(j["drift"]["steps"] == 10);
}

TEST_CASE("report summarises verify and drift files") {
  fs::path dir = scratch("report");
  REQUIRE(run({"verify", "--suite", "flaschka", "--N", "3", "--samples", "5", "--out", dir.string()}).code == 0);
  Run r = run({"report", (dir / "verify.json").string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("0 failed") != std::string::npos);
  CHECK(run({"report", (dir / "missing.json").string()}).code == 2);
}
