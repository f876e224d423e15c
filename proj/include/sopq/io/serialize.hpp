#pragma once

#include "sopq/flows/drift.hpp"
#include "sopq/liealg/root_data.hpp"
#include "sopq/poisson/tensor.hpp"

#include "json.hpp"

#include <ostream>

namespace sopq {

using Json = nlohmann::ordered_json;

Json spec_json(const SystemSpec& spec);
/// Rows of canonical polynomial text.
Json matrix_json(const PMatrix& m);
Json matrix_json(const CMatrix& m);
Json lax_pair_json(const LaxPair& pair);
Json tensor_json(const PoissonTensor& t);
Json family_json(const InvariantFamily& fam);
Json root_datum_json(const RootDatum& rd);
Json drift_json(const DriftReport& d);

/// Header t,a_1..a_K,b_1..b_N,<family members>; every stride-th point plus
/// the last one. Values printed with 17 significant digits.
void write_trajectory_csv(std::ostream& os, const SystemSpec& spec, const Trajectory& traj,
                          const InvariantFamily& fam, int stride);

}  // namespace sopq
