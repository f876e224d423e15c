#include "sopq/io/serialize.hpp"

#include "sopq/poly/numeric.hpp"

#include <iomanip>

namespace sopq {

Json spec_json(const SystemSpec& spec) {
  Json j;
  j["label"] = spec.label();
  j["variant"] = spec.is_block() ? "block" : "tridiag";
  j["N"] = spec.N();
  if (spec.is_block()) j["m"] = spec.m();
  j["signs"] = spec.sign_string();
  j["periodic"] = spec.periodic();
  return j;
}

Json matrix_json(const PMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json r = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) r.push_back(m(i, k).to_string());
    rows.push_back(r);
  }
  return rows;
}

Json matrix_json(const CMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json r = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) r.push_back(m(i, k).to_string());
    rows.push_back(r);
  }
  return rows;
}

Json lax_pair_json(const LaxPair& pair) {
  Json j;
  j["form"] = pair.form;
  j["L"] = matrix_json(pair.L);
  j["B"] = matrix_json(pair.B);
  if (pair.kron) {
    j["kron"] = {{"L1", matrix_json(pair.kron->L1)}, {"L2", matrix_json(pair.kron->L2)},
                 {"L3", matrix_json(pair.kron->L3)}, {"B1", matrix_json(pair.kron->B1)},
                 {"B2", matrix_json(pair.kron->B2)}};
  }
  return j;
}

Json tensor_json(const PoissonTensor& t) {
  Json coords = Json::array();
  for (GenId g : t.chart->coords()) coords.push_back(gen_name(g));
  return Json{{"name", t.name}, {"coords", coords}, {"entries", matrix_json(t.entries)}};
}

Json family_json(const InvariantFamily& fam) {
  Json j;
  for (const auto& [k, h] : fam.H) j["H"]["H" + std::to_string(k)] = h.to_string();
  for (const auto& [k, i] : fam.I) j["I"]["I" + std::to_string(k)] = i.to_string();
  for (const auto& [name, c] : fam.casimirs) j["casimirs"][name] = c.to_string();
  return j;
}

Json root_datum_json(const RootDatum& rd) {
  Json j;
  j["algebra"] = "so(" + std::to_string(rd.s.p()) + "," + std::to_string(rd.s.q()) + ")";
  j["size"] = rd.s.size();
  j["periodic"] = rd.periodic;
  j["dimension"] = rd.basis.size();
  j["signature"] = matrix_json(signature_matrix(rd.s));
  Json roots = Json::array();
  for (const auto& r : rd.simple_roots) {
    Json v = Json::array();
    for (const auto& c : r) v.push_back(c.to_string());
    roots.push_back(v);
  }
  j["simple_roots"] = roots;
  Json cartan = Json::array();
  for (const auto& h : rd.cartan) cartan.push_back(matrix_json(h));
  j["cartan"] = cartan;
  Json vecs = Json::array();
  for (const auto& [xp, xm] : rd.root_vectors) vecs.push_back({{"x_plus", matrix_json(xp)}, {"x_minus", matrix_json(xm)}});
  j["root_vectors"] = vecs;
  return j;
}

Json drift_json(const DriftReport& d) {
  Json j;
  j["h"] = d.h;
  j["steps"] = d.steps;
  j["aborted"] = d.aborted;
  j["last_valid_time"] = d.last_valid_time;
  Json inv = Json::object();
  for (const auto& [k, v] : d.invariant_drift) inv[k] = v;
  j["invariant_drift"] = inv;
  j["charpoly_drift"] = d.charpoly_drift;
  j["max_charpoly_drift"] = d.max_charpoly_drift();
  if (d.order_ratio) {
    j["order_ratio"] = *d.order_ratio;
    j["order_invariant"] = d.order_invariant;
  }
  return j;
}

void write_trajectory_csv(std::ostream& os, const SystemSpec& spec, const Trajectory& traj,
                          const InvariantFamily& fam, int stride) {
  const std::vector<GenId> layout = spec.phase_coords();
  std::vector<std::pair<std::string, NumericPolynomial>> cols;
  for (const auto& [k, h] : fam.H) cols.emplace_back("H_" + std::to_string(k), NumericPolynomial(h, layout));
  for (const auto& [k, i] : fam.I) {
    if (i.is_real() && !fam.H.count(k)) cols.emplace_back("I_" + std::to_string(k), NumericPolynomial(i, layout));
  }
  os << "t";
  for (int i = 1; i <= spec.K(); ++i) os << ",a_" << i;
  for (int i = 1; i <= spec.N(); ++i) os << ",b_" << i;
  for (const auto& c : cols) os << "," << c.first;
  os << "\n" << std::setprecision(17);
  const std::size_t n = traj.points.size();
  const auto step = static_cast<std::size_t>(std::max(stride, 1));
  for (std::size_t k = 0; k < n; ++k) {
    if (k % step != 0 && k + 1 != n) continue;
    os << traj.times[k];
    for (double v : traj.points[k]) os << "," << v;
    for (const auto& c : cols) os << "," << c.second(traj.points[k]);
    os << "\n";
  }
}

}  // namespace sopq
