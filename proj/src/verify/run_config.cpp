#include "sopq/verify/run_config.hpp"

#include "sopq/poly/errors.hpp"

#include <random>

namespace sopq {

std::string to_string(Mode m) {
  switch (m) {
    case Mode::symbolic: return "symbolic";
    case Mode::numeric: return "numeric";
    case Mode::both: return "both";
  }
  return "both";
}

Mode parse_mode(const std::string& s) {
  if (s == "symbolic") return Mode::symbolic;
  if (s == "numeric") return Mode::numeric;
  if (s == "both") return Mode::both;
  throw ConfigError("unknown mode '" + s + "'");
}

SystemSpec to_spec(const SystemConfig& c) {
  if (c.variant == "block") return SystemSpec::block(c.N, c.m, c.periodic);
  if (c.variant == "pattern") return SystemSpec::pattern(c.signs, c.N, c.periodic);
  throw ConfigError("unknown system variant '" + c.variant + "'");
}

std::vector<int> parse_n_range(const std::string& s) {
  std::vector<int> out;
  try {
    auto dots = s.find("..");
    if (dots != std::string::npos) {
      int lo = std::stoi(s.substr(0, dots));
      int hi = std::stoi(s.substr(dots + 2));
      if (lo > hi) throw ConfigError("empty range '" + s + "'");
      for (int n = lo; n <= hi; ++n) out.push_back(n);
      return out;
    }
    std::size_t pos = 0;
    while (pos <= s.size()) {
      auto comma = s.find(',', pos);
      std::string part = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      std::size_t used = 0;
      out.push_back(std::stoi(part, &used));
      if (used != part.size()) throw ConfigError("bad N value '" + part + "'");
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  } catch (const std::logic_error&) {
    throw ConfigError("bad N range '" + s + "'");
  }
  return out;
}

Json config_json(const RunConfig& c) {
  Json j;
  if (c.system) {
    Json s;
    s["variant"] = c.system->variant;
    s["N"] = c.system->N;
    if (c.system->variant == "block") s["m"] = c.system->m;
    if (c.system->variant == "pattern") s["signs"] = c.system->signs;
    s["periodic"] = c.system->periodic;
    j["system"] = s;
  }
  if (!c.n_values.empty()) j["n_values"] = c.n_values;
  j["T"] = c.T;
  j["h"] = c.h;
  j["stride"] = c.stride;
  j["seed"] = c.seed;
  j["samples"] = c.samples;
  j["suite"] = c.suite;
  j["jobs"] = c.jobs;
  j["mode"] = to_string(c.mode);
  j["timings"] = c.timings;
  if (!c.mutate.empty()) j["mutate"] = c.mutate;
  j["check_order"] = c.check_order;
  j["ic"] = c.ic;
  if (!c.ic_values.empty()) j["ic_values"] = c.ic_values;
  return j;
}

void apply_config_json(RunConfig& c, const Json& j) {
  try {
    if (!j.is_object()) throw ConfigError("config must be a JSON object");
    if (j.contains("system")) {
      const Json& s = j.at("system");
      SystemConfig sc = c.system.value_or(SystemConfig{});
      if (s.contains("sopq")) {
        auto mn = s.at("sopq").get<std::vector<int>>();
        if (mn.size() != 2) throw ConfigError("system.sopq needs [m, n]");
        sc.variant = "block";
        sc.m = mn[0];
        sc.N = mn[0] + mn[1];
        if (mn[0] < 1) throw ConfigError("m must be ≥ 1");
      }
      if (s.contains("variant")) sc.variant = s.at("variant").get<std::string>();
      if (s.contains("N")) sc.N = s.at("N").get<int>();
      if (s.contains("m")) sc.m = s.at("m").get<int>();
      if (s.contains("signs")) {
        sc.signs = s.at("signs").get<std::string>();
        if (!s.contains("variant")) sc.variant = "pattern";
      }
      if (s.contains("periodic")) sc.periodic = s.at("periodic").get<bool>();
      c.system = sc;
    }
    if (j.contains("n_values")) c.n_values = j.at("n_values").get<std::vector<int>>();
    if (j.contains("T")) c.T = j.at("T").get<double>();
    if (j.contains("h")) c.h = j.at("h").get<double>();
    if (j.contains("stride")) c.stride = j.at("stride").get<int>();
    if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("samples")) c.samples = j.at("samples").get<int>();
    if (j.contains("suite")) c.suite = j.at("suite").get<std::string>();
    if (j.contains("jobs")) c.jobs = j.at("jobs").get<int>();
    if (j.contains("out")) c.out = j.at("out").get<std::string>();
    if (j.contains("mode")) c.mode = parse_mode(j.at("mode").get<std::string>());
    if (j.contains("timings")) c.timings = j.at("timings").get<bool>();
    if (j.contains("mutate")) c.mutate = j.at("mutate").get<std::string>();
    if (j.contains("check_order")) c.check_order = j.at("check_order").get<bool>();
    if (j.contains("ic")) c.ic = j.at("ic").get<std::string>();
    if (j.contains("ic_values")) {
      c.ic_values = j.at("ic_values").get<std::vector<double>>();
      if (!j.contains("ic")) c.ic = "values";
    }
  } catch (const Json::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
}

std::vector<double> initial_state(const RunConfig& c, const SystemSpec& spec) {
  const auto k = static_cast<std::size_t>(spec.K());
  const auto n = static_cast<std::size_t>(spec.N());
  std::vector<double> x;
  if (c.ic == "default") {
    x.assign(k, 1.0);
    x.resize(k + n, 0.0);
  } else if (c.ic == "zero-a") {
    x.assign(k, 0.0);
    for (std::size_t i = 1; i <= n; ++i) x.push_back(static_cast<double>(i));
  } else if (c.ic == "random") {
    std::mt19937_64 rng(c.seed);
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    for (std::size_t i = 0; i < k + n; ++i) x.push_back(d(rng));
  } else if (c.ic == "values") {
    if (c.ic_values.size() != k + n) {
      throw ConfigError("ic_values needs " + std::to_string(k + n) + " numbers (a then b)");
    }
    x = c.ic_values;
  } else {
    throw ConfigError("unknown initial condition '" + c.ic + "'");
  }
  return x;
}

}  // namespace sopq
