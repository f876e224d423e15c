#pragma once

#include "sopq/lax/system_spec.hpp"
#include "sopq/poly/matrix.hpp"
#include "sopq/report.hpp"

#include <optional>
#include <string>

namespace sopq {

using PMatrix = Matrix<Polynomial>;

/// N x N factors of the block form; L3 and B2 are zero unless periodic.
struct KronBlocks {
  PMatrix L1, L2, L3, B1, B2;
};

struct LaxPair {
  std::string form;  // "block", "tridiag" or "alternative"
  PMatrix L;
  PMatrix B;
  std::optional<KronBlocks> kron;
};

/// Trimmed 2N x 2N block pair assembled from the Kronecker factors.
/// Throws UnsupportedError for non-block specs.
LaxPair build_lax_block(const SystemSpec& spec);

/// The same pair as the root-space sum over h_{alpha_j}, x_{+-alpha_j},
/// built at size 2N+1 and trimmed.
LaxPair build_lax_block_roots(const SystemSpec& spec);

/// Entrywise comparison of the two block routes.
CheckReport compare_block_routes(const SystemSpec& spec);

/// (M, A): M complex symmetric tridiagonal with i a_j where eps_j = -1.
LaxPair build_lax_tridiag(const SystemSpec& spec);

/// Second real pair for N = 3, eps = (-,-), obtained from the block form by
/// flipping the lower-diagonal signs of L2 and B1.
LaxPair build_lax_alternative(const SystemSpec& spec);

/// Reads x' off [B, L] = sum_c x'_c dL/dx_c and compares it with the flow of
/// the spec. Entries of [B, L] outside the span are reported.
CheckReport lax_consistency_check(const LaxPair& pair, const SystemSpec& spec);

/// Implied derivatives read off [B, L]; empty when L does not determine them.
std::optional<std::vector<Polynomial>> read_off_flow(const LaxPair& pair, const SystemSpec& spec);

std::string matrix_text(const PMatrix& m);

}  // namespace sopq
