#pragma once

#include "sopq/poly/coefficient.hpp"
#include "sopq/poly/matrix.hpp"
#include "sopq/report.hpp"

#include <utility>
#include <vector>

namespace sopq {

using CMatrix = Matrix<Coefficient>;

/// so(p,q) with p = 2m, q = 2n+1, N = m + n.
struct SoPqStructure {
  int m = 1;
  int n = 0;
  int N() const { return m + n; }
  int p() const { return 2 * m; }
  int q() const { return 2 * n + 1; }
  int size() const { return 2 * N() + 1; }
};

/// x_{alpha_k} as a sum of Kronecker products X (N x N) (x) J (2 x 2). The
/// periodic root alpha_N needs two terms, every other root one.
struct KronPart {
  int k = 0;
  std::vector<std::pair<CMatrix, CMatrix>> terms;
};

struct RootDatum {
  SoPqStructure s;
  bool periodic = false;
  /// e_ij (1-based labels), type (a) pairs first, then type (b).
  std::vector<std::pair<int, int>> basis_labels;
  std::vector<CMatrix> basis;
  /// h_{alpha_k}, k = 1..N, full size 2N+1.
  std::vector<CMatrix> cartan;
  /// alpha_k(h_{alpha_j}) for j = 1..N; N-1 roots, N when periodic.
  std::vector<std::vector<Coefficient>> simple_roots;
  /// (x_{alpha_k}, x_{-alpha_k}), full size 2N+1.
  std::vector<std::pair<CMatrix, CMatrix>> root_vectors;
  std::vector<KronPart> kron_parts;
};

/// I_{p,q} = diag(1 (p times), -1 (q times)).
CMatrix signature_matrix(const SoPqStructure& s);

/// e_ij of the so(p,q) basis (1-based, i < j).
CMatrix basis_element(const SoPqStructure& s, int i, int j);

/// Throws UnsupportedError unless m >= 1, n >= 0 and N >= 2.
RootDatum build_so_pq_root_data(const SoPqStructure& s, bool periodic);

/// X^T I + I X == 0 exactly.
bool in_so_pq(const SoPqStructure& s, const CMatrix& x);

/// Entrywise check x_{alpha_k} = sum X (x) J and h_{alpha_k} = d_kk (x) J
/// after dropping the last row and column. Mismatching k are listed.
CheckReport verify_kronecker_forms(const RootDatum& rd);

/// Membership of every matrix, root action [h_j, x_k] = alpha_k(h_j) x_k, and
/// [x_k, x_{-k}] in the Cartan span.
CheckReport verify_root_structure(const RootDatum& rd);

}  // namespace sopq
