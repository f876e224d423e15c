#include "cli.hpp"

#include "sopq/flows/drift.hpp"
#include "sopq/io/serialize.hpp"
#include "sopq/lax/invariants.hpp"
#include "sopq/poisson/fields.hpp"
#include "sopq/poly/errors.hpp"
#include "sopq/verify/suite.hpp"

#include "CLI11.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>

namespace sopq {
namespace {

namespace fs = std::filesystem;

enum Exit { kOk = 0, kVerifyFailed = 1, kBadConfig = 2, kNumericAbort = 3 };

struct Flags {
  std::string sopq;
  std::string pattern;
  std::string n;
  bool periodic = false;
  double T = 0;
  double h = 0;
  int stride = 0;
  std::uint64_t seed = 0;
  int samples = 0;
  std::string suite;
  int jobs = 0;
  std::string out;
  std::string mode;
  std::string config;
  bool timings = false;
  std::string mutate;
  bool check_order = false;
  std::string ic;
  std::string input;
};

/// "--pattern --" would otherwise read as the end-of-options marker.
std::vector<std::string> join_pattern_values(std::vector<std::string> args) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--pattern" && i + 1 < args.size() && !args[i + 1].empty() &&
        args[i + 1].find_first_not_of("+-") == std::string::npos) {
      out.push_back("--pattern=" + args[i + 1]);
      ++i;
    } else {
      out.push_back(args[i]);
    }
  }
  return out;
}

void add_system_options(CLI::App* app, Flags& f) {
  app->add_option("--sopq", f.sopq, "so(2m,2n+1) system as m,n");
  app->add_option("--pattern", f.pattern, "tridiagonal sign pattern such as +- ");
  app->add_option("--n,--N", f.n, "number of particles (verify: range like 3..5)");
  app->add_flag("--periodic", f.periodic, "periodic system");
  app->add_option("--config", f.config, "JSON config file; flags override it");
  app->add_option("--out", f.out, "output directory");
}

RunConfig resolve(const CLI::App& app, const Flags& f) {
  RunConfig c;
  if (!f.config.empty()) {
    std::ifstream in(f.config);
    if (!in) throw ConfigError("cannot read config file " + f.config);
    Json j;
    try {
      j = Json::parse(in);
    } catch (const Json::exception& e) {
      throw ConfigError(std::string("config: ") + e.what());
    }
    apply_config_json(c, j);
  }
  auto given = [&](const char* name) {
    try {
      return app.get_option(name)->count() > 0;
    } catch (const CLI::OptionNotFound&) {
      return false;
    }
  };
  if (!f.sopq.empty() && !f.pattern.empty()) throw ConfigError("--sopq and --pattern are exclusive");
  if (!f.sopq.empty()) {
    int m = 0, n = 0;
    char comma = 0;
    std::istringstream is(f.sopq);
    if (!(is >> m >> comma >> n) || comma != ',' || !is.eof()) throw ConfigError("--sopq expects m,n");
    if (m < 1) throw ConfigError("m must be ≥ 1");
    if (n < 0) throw ConfigError("n must be ≥ 0");
    c.system = SystemConfig{"block", m + n, m, "", false};
  }
  if (!f.pattern.empty()) c.system = SystemConfig{"pattern", 0, 0, f.pattern, false};
  if (!f.n.empty()) {
    std::vector<int> ns = parse_n_range(f.n);
    if (c.system && c.system->variant == "pattern") {
      if (ns.size() != 1) throw ConfigError("--n must be a single value with --pattern");
      c.system->N = ns.front();
    } else if (c.system && !f.sopq.empty()) {
      throw ConfigError("--n conflicts with --sopq");
    } else {
      c.n_values = ns;
    }
  }
  if (f.periodic) {
    if (c.system) c.system->periodic = true;
  }
  if (given("--T")) c.T = f.T;
  if (given("--h")) c.h = f.h;
  if (given("--stride")) c.stride = f.stride;
  if (given("--seed")) c.seed = f.seed;
  if (given("--samples")) c.samples = f.samples;
  if (given("--suite")) c.suite = f.suite;
  if (given("--jobs")) c.jobs = f.jobs;
  if (given("--out")) c.out = f.out;
  if (given("--mode")) c.mode = parse_mode(f.mode);
  if (f.timings) c.timings = true;
  if (given("--mutate")) c.mutate = f.mutate;
  if (f.check_order) c.check_order = true;
  if (given("--ic")) c.ic = f.ic;
  if (c.stride < 1) throw ConfigError("--stride must be ≥ 1");
  if (c.samples < 1) throw ConfigError("--samples must be ≥ 1");
  if (c.jobs < 1) throw ConfigError("--jobs must be ≥ 1");
  if (!(c.h > 0)) throw ConfigError("--h must be positive");
  if (!(c.T >= c.h)) throw ConfigError("--T must be at least h");
  return c;
}

SystemSpec single_spec(const RunConfig& c, bool periodic_flag) {
  SystemConfig sc = c.system.value_or(SystemConfig{"block", 5, 3, "", periodic_flag});
  return to_spec(sc);
}

void write_json(const fs::path& path, const Json& j) {
  fs::create_directories(path.parent_path().empty() ? fs::path(".") : path.parent_path());
  std::ofstream os(path);
  if (!os) throw ConfigError("cannot write " + path.string());
  os << std::setw(2) << j << "\n";
}

int cmd_build(const RunConfig& c, const SystemSpec& spec, std::ostream& out) {
  Json j;
  j["config"] = config_json(c);
  j["spec"] = spec_json(spec);
  if (spec.is_block()) {
    j["root_datum"] = root_datum_json(build_so_pq_root_data(SoPqStructure{spec.m(), spec.N() - spec.m()}, spec.periodic()));
  }
  Json pairs = Json::array();
  if (spec.is_block()) pairs.push_back(lax_pair_json(build_lax_block(spec)));
  LaxPair tri = build_lax_tridiag(spec.as_pattern());
  pairs.push_back(lax_pair_json(tri));
  if (!spec.is_block() && !spec.periodic() && spec.N() == 3 && spec.sign_string() == "--") {
    pairs.push_back(lax_pair_json(build_lax_alternative(spec)));
  }
  j["lax_pairs"] = pairs;
  if (spec.is_block()) {
    j["L"] = matrix_json(build_lax_block(spec).L);
  }
  j["M"] = matrix_json(tri.L);
  j["A"] = matrix_json(tri.B);
  Json tensors = Json::array();
  for (TensorKind k : {TensorKind::pi1, TensorKind::pi2, TensorKind::pi3, TensorKind::adler, TensorKind::J1,
                       TensorKind::J2}) {
    if (spec.periodic() && (k == TensorKind::pi3 || k == TensorKind::J2)) continue;
    tensors.push_back(tensor_json(build_tensor(k, spec)));
  }
  j["tensors"] = tensors;
  if (!spec.periodic()) {
    Json fields = Json::object();
    for (auto [name, kind] : {std::pair{"X1", FieldKind::X1}, std::pair{"X2", FieldKind::X2}}) {
      VectorField x = build_field(kind, spec);
      Json comps = Json::array();
      for (const auto& p : x.components) comps.push_back(p.to_string());
      fields[name] = comps;
    }
    j["fields"] = fields;
  }
  j["invariants"] = family_json(invariants(spec));
  fs::path path = fs::path(c.out) / "build.json";
  write_json(path, j);
  out << "built " << spec.label() << " -> " << path.string() << "\n";
  return kOk;
}

int cmd_simulate(const RunConfig& c, const SystemSpec& spec, std::ostream& out, std::ostream& err) {
  std::vector<double> x0 = initial_state(c, spec);
  InvariantFamily fam = invariants(spec);
  PMatrix L = spec.is_block() ? build_lax_block(spec).L : build_lax_tridiag(spec).L;
  bool real_l = true;
  for (std::size_t i = 0; i < L.rows(); ++i) {
    for (std::size_t k = 0; k < L.cols(); ++k) real_l = real_l && L(i, k).is_real();
  }
  if (!real_l) L = PMatrix(0, 0);
  Trajectory traj = integrate(spec, x0, c.T, c.h);
  DriftReport drift = drift_metrics(spec, traj, fam, L);
  if (c.check_order && !traj.aborted) {
    std::string name = spec.is_block() ? "H2" : "I2";
    drift.order_ratio = convergence_ratio(spec, x0, c.T, c.h, fam, name);
    drift.order_invariant = name;
  }
  fs::create_directories(c.out);
  {
    std::ofstream csv(fs::path(c.out) / "trajectory.csv");
    write_trajectory_csv(csv, spec, traj, fam, c.stride);
  }
  Json j;
  j["config"] = config_json(c);
  j["spec"] = spec_json(spec);
  j["initial_state"] = x0;
  j["drift"] = drift_json(drift);
  write_json(fs::path(c.out) / "drift.json", j);
  if (traj.aborted) {
    err << "integration aborted: non-finite state after t = " << traj.last_valid_time() << "\n";
    return kNumericAbort;
  }
  out << "simulated " << spec.label() << " to T = " << c.T << " (" << drift.steps << " steps)";
  if (drift.order_ratio) out << ", order ratio " << *drift.order_ratio;
  out << "\n";
  return kOk;
}

int cmd_verify(const RunConfig& c, bool periodic_flag, std::ostream& out) {
  std::vector<SystemSpec> specs;
  if (c.system) {
    specs.push_back(to_spec(*c.system));
  } else {
    specs = default_sweep(c.n_values.empty() ? std::vector<int>{3, 4, 5} : c.n_values);
    if (periodic_flag) std::erase_if(specs, [](const SystemSpec& s) { return !s.periodic(); });
  }
  SuiteOptions opt{c.mode, c.samples, c.seed, c.jobs, c.mutate};
  VerifyReport r = run_suite(c.suite, specs, opt);
  write_json(fs::path(c.out) / "verify.json", verify_json(r, c, c.timings));
  for (const auto& it : r.items) {
    if (!it.pass) out << "FAIL " << it.identity << " [" << it.spec << "] " << it.residual << "\n";
  }
  out << r.passed() << "/" << r.items.size() << " identities pass\n";
  return r.ok() ? kOk : kVerifyFailed;
}

int cmd_report(const std::string& input, std::ostream& out) {
  std::ifstream in(input);
  if (!in) throw ConfigError("cannot read " + input);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::exception& e) {
    throw ConfigError(input + ": " + e.what());
  }
  if (j.contains("results")) {
    const auto& s = j.at("summary");
    out << "verify: " << s.at("passed").get<std::size_t>() << " passed, " << s.at("failed").get<std::size_t>()
        << " failed of " << s.at("total").get<std::size_t>() << "\n";
    std::map<std::string, std::pair<int, int>> by_prefix;
    for (const auto& e : j.at("results")) {
      std::string id = e.at("identity").get<std::string>();
      auto& [pass, total] = by_prefix[id.substr(0, id.find('.'))];
      ++total;
      if (e.at("status") == "pass") ++pass;
    }
    for (const auto& [k, v] : by_prefix) out << "  " << std::left << std::setw(12) << k << v.first << "/" << v.second << "\n";
    for (const auto& e : j.at("results")) {
      if (e.at("status") != "pass") {
        out << "  FAIL " << e.at("identity").get<std::string>() << " [" << e.at("spec").get<std::string>() << "]\n";
      }
    }
    return s.at("failed").get<std::size_t>() == 0 ? kOk : kVerifyFailed;
  }
  if (j.contains("drift")) {
    const auto& d = j.at("drift");
    out << "simulate " << j.at("spec").at("label").get<std::string>() << ": h = " << d.at("h").get<double>()
        << ", steps = " << d.at("steps").get<std::size_t>();
    if (d.at("aborted").get<bool>()) out << ", aborted at t = " << d.at("last_valid_time").get<double>();
    out << "\n";
    for (const auto& [k, v] : d.at("invariant_drift").items()) out << "  " << k << " drift " << v.get<double>() << "\n";
    if (d.contains("max_charpoly_drift")) out << "  charpoly drift " << d.at("max_charpoly_drift").get<double>() << "\n";
    if (d.contains("order_ratio")) out << "  order ratio " << d.at("order_ratio").get<double>() << "\n";
    return d.at("aborted").get<bool>() ? kNumericAbort : kOk;
  }
  throw ConfigError(input + " is neither a verify nor a simulate report");
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"so(p,q) Toda lattice toolkit", "sopq"};
  app.set_help_flag("--help", "print help");
  app.require_subcommand(1);
  Flags f;
  CLI::App* build = app.add_subcommand("build", "construct Lax pairs, tensors and invariants as JSON");
  CLI::App* simulate = app.add_subcommand("simulate", "integrate the flow and report drift");
  CLI::App* verify = app.add_subcommand("verify", "check the symbolic and numeric identities");
  CLI::App* report = app.add_subcommand("report", "summarise a verify.json or drift.json");
  for (CLI::App* sub : {build, simulate, verify}) add_system_options(sub, f);
  simulate->add_option("--T", f.T, "final time");
  simulate->add_option("--h", f.h, "step size");
  simulate->add_option("--stride", f.stride, "write every k-th step");
  simulate->add_option("--seed", f.seed, "seed for --ic random");
  simulate->add_option("--ic", f.ic, "default | zero-a | random");
  simulate->add_flag("--check-order", f.check_order, "estimate the convergence order from a half-step run");
  simulate->add_option("--mode", f.mode, "symbolic | numeric | both");
  verify->add_option("--suite", f.suite, "poisson | lenard | symmetry | lax | flaschka | all");
  verify->add_option("--jobs", f.jobs, "worker threads");
  verify->add_option("--seed", f.seed, "sampling seed");
  verify->add_option("--samples", f.samples, "numeric samples");
  verify->add_option("--mode", f.mode, "symbolic | numeric | both");
  verify->add_option("--mutate", f.mutate, "inject a known-bad tensor (adler:ab-sign)");
  verify->add_flag("--timings", f.timings, "record wall times in the report");
  report->add_option("input", f.input, "report file")->required();

  std::vector<std::string> argv = join_pattern_values(std::move(args));
  std::reverse(argv.begin(), argv.end());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kBadConfig;
  }

  try {
    if (report->parsed()) return cmd_report(f.input, out);
    CLI::App* sub = build->parsed() ? build : simulate->parsed() ? simulate : verify;
    RunConfig c = resolve(*sub, f);
    if (verify->parsed()) return cmd_verify(c, f.periodic, out);
    if (f.periodic && !c.system) c.system = SystemConfig{"block", 5, 3, "", true};
    SystemSpec spec = single_spec(c, f.periodic);
    if (build->parsed()) return cmd_build(c, spec, out);
    return cmd_simulate(c, spec, out, err);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kBadConfig;
  } catch (const UnsupportedError& e) {
    err << "error: " << e.what() << "\n";
    return kBadConfig;
  } catch (const RangeError& e) {
    err << "error: " << e.what() << "\n";
    return kNumericAbort;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kBadConfig;
  }
}

}  // namespace sopq
