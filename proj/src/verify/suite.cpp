#include "sopq/verify/suite.hpp"

#include "sopq/flows/flaschka.hpp"
#include "sopq/flows/independence.hpp"
#include "sopq/lax/invariants.hpp"
#include "sopq/liealg/root_data.hpp"
#include "sopq/poisson/relations.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <mutex>
#include <thread>

namespace sopq {
namespace {

using Task = std::function<CheckReport()>;

CheckReport lax_part(const SystemSpec& s) {
  CheckReport rep;
  if (s.is_block()) {
    rep.merge(lax_consistency_check(build_lax_block(s), s));
    rep.merge(compare_block_routes(s));
    RootDatum rd = build_so_pq_root_data(SoPqStructure{s.m(), s.N() - s.m()}, s.periodic());
    rep.merge(verify_root_structure(rd));
    rep.merge(verify_kronecker_forms(rd));
  }
  rep.merge(lax_consistency_check(build_lax_tridiag(s.as_pattern()), s));
  if (!s.is_block() && !s.periodic() && s.N() == 3 && s.sign_string() == "--") {
    rep.merge(lax_consistency_check(build_lax_alternative(s), s));
  }
  rep.merge(relation_checks(s));
  rep.merge(conservation_checks(s));
  return rep;
}

void add_tasks(const std::string& suite, const SystemSpec& s, const SuiteOptions& opt, std::vector<Task>& tasks) {
  bool symbolic = opt.mode != Mode::numeric;
  bool numeric = opt.mode != Mode::symbolic;
  if (suite == "poisson" && symbolic) {
    tasks.emplace_back([s] { return poisson_checks(s); });
    tasks.emplace_back([s] { return casimir_checks(s, invariants(s)); });
    tasks.emplace_back([s] { return complex_equivalence_check(s); });
  } else if (suite == "lenard" && symbolic) {
    tasks.emplace_back([s] {
      InvariantFamily fam = invariants(s);
      CheckReport r = lenard_checks(s, fam);
      r.merge(involution_checks(s, fam));
      return r;
    });
  } else if (suite == "symmetry" && symbolic && !s.periodic()) {
    tasks.emplace_back([s] { return symmetry_relation_check(s, invariants(s)); });
    if (s.N() <= 4) tasks.emplace_back([s] { return deformation_checks(s); });
  } else if (suite == "lax" && symbolic) {
    tasks.emplace_back([s] { return lax_part(s); });
  } else if (suite == "flaschka") {
    if (symbolic) tasks.emplace_back([s] { return pushforward_symbolic_check(s); });
    if (numeric) {
      int samples = opt.samples;
      std::uint64_t seed = opt.seed;
      tasks.emplace_back([s, samples, seed] { return pushforward_check(s, samples, seed); });
    }
    if (symbolic && s.is_block()) tasks.emplace_back([s] { return independence_check(s); });
  }
}

}  // namespace

std::size_t VerifyReport::passed() const {
  return static_cast<std::size_t>(std::count_if(items.begin(), items.end(), [](const auto& i) { return i.pass; }));
}

std::size_t VerifyReport::failed() const { return items.size() - passed(); }

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"poisson", "lenard", "symmetry", "lax", "flaschka", "all"};
  return names;
}

std::vector<SystemSpec> default_sweep(const std::vector<int>& ns) {
  std::vector<SystemSpec> out;
  for (bool periodic : {false, true}) {
    for (int N : ns) {
      for (int m = 1; m < N; ++m) out.push_back(SystemSpec::block(N, m, periodic));
    }
    const int k = periodic ? 3 : 2;
    for (int mask = 0; mask < (1 << k); ++mask) {
      std::vector<int> eps;
      for (int j = 0; j < k; ++j) eps.push_back((mask >> j) & 1 ? -1 : 1);
      out.push_back(SystemSpec::pattern(eps, periodic));
    }
  }
  return out;
}

VerifyReport run_suite(const std::string& suite, const std::vector<SystemSpec>& specs, const SuiteOptions& opt) {
  if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end()) {
    throw ConfigError("unknown suite '" + suite + "'");
  }
  if (!opt.mutate.empty() && opt.mutate != "adler:ab-sign") throw ConfigError("unknown mutation '" + opt.mutate + "'");
  std::vector<Task> tasks;
  for (const std::string& name : suite_names()) {
    if (name == "all" || (suite != "all" && suite != name)) continue;
    for (const SystemSpec& s : specs) add_tasks(name, s, opt, tasks);
  }
  if (!opt.mutate.empty() && (suite == "poisson" || suite == "all")) {
    tasks.emplace_back([] {
      PoissonTensor t = mutated_adler();
      return jacobi_check(t, SystemSpec::classical(2).label());
    });
  }

  VerifyReport report;
  std::mutex mu;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < tasks.size(); k = next++) {
      auto t0 = std::chrono::steady_clock::now();
      CheckReport r = tasks[k]();
      double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
      std::lock_guard<std::mutex> lock(mu);
      for (const auto& it : r.items) report.items.push_back({it.identity, it.detail, it.pass, it.residual, ms});
    }
  };
  const int jobs = std::max(1, opt.jobs);
  std::vector<std::thread> pool;
  for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  std::sort(report.items.begin(), report.items.end(), [](const VerifyItem& a, const VerifyItem& b) {
    return std::tie(a.identity, a.spec, a.pass, a.residual) < std::tie(b.identity, b.spec, b.pass, b.residual);
  });
  return report;
}

Json verify_json(const VerifyReport& r, const RunConfig& config, bool timings) {
  Json j;
  j["config"] = config_json(config);
  j["summary"] = {{"total", r.items.size()}, {"passed", r.passed()}, {"failed", r.failed()}};
  Json items = Json::array();
  for (const auto& it : r.items) {
    Json e;
    e["identity"] = it.identity;
    e["spec"] = it.spec;
    e["status"] = it.pass ? "pass" : "fail";
    if (!it.residual.empty()) e["residual"] = it.residual;
    if (timings) e["wall_ms"] = it.wall_ms;
    items.push_back(e);
  }
  j["results"] = items;
  return j;
}

}  // namespace sopq
