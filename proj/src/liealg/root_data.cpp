#include "sopq/liealg/root_data.hpp"

#include "sopq/poly/errors.hpp"

#include <string>

namespace sopq {
namespace {

Coefficient sign(int k) { return Coefficient(k % 2 == 0 ? 1 : -1); }
Coefficient half() { return Coefficient::rational(1, 2); }
const Coefficient kI = Coefficient::imaginary_unit();

CMatrix small(std::initializer_list<std::initializer_list<Coefficient>> rows) {
  CMatrix r(rows.size(), rows.begin()->size());
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (const auto& c : row) r(i, j++) = c;
    ++i;
  }
  return r;
}

CMatrix unit(std::size_t n, int i, int j) {
  CMatrix r(n, n);
  r(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = Coefficient(1);
  return r;
}

CMatrix combination(std::initializer_list<std::pair<Coefficient, CMatrix>> parts) {
  CMatrix r = parts.begin()->second.scaled(Coefficient());
  for (const auto& [c, m] : parts) r += m.scaled(c);
  return r;
}

std::string matrix_text(const CMatrix& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    s += i ? ",[" : "[";
    for (std::size_t j = 0; j < m.cols(); ++j) s += (j ? "," : "") + m(i, j).to_string();
    s += "]";
  }
  return s + "]";
}

}  // namespace

CMatrix signature_matrix(const SoPqStructure& s) {
  CMatrix r(static_cast<std::size_t>(s.size()), static_cast<std::size_t>(s.size()));
  for (int i = 0; i < s.size(); ++i) r(i, i) = Coefficient(i < s.p() ? 1 : -1);
  return r;
}

CMatrix basis_element(const SoPqStructure& s, int i, int j) {
  if (i < 1 || j <= i || j > s.size()) throw StructuralError("e_ij needs 1 <= i < j <= p+q");
  CMatrix r(static_cast<std::size_t>(s.size()), static_cast<std::size_t>(s.size()));
  bool mixed = i <= s.p() && j > s.p();
  r(i - 1, j - 1) = Coefficient(1);
  r(j - 1, i - 1) = Coefficient(mixed ? 1 : -1);
  return r;
}

bool in_so_pq(const SoPqStructure& s, const CMatrix& x) {
  CMatrix ipq = signature_matrix(s);
  return (x.transpose() * ipq + ipq * x).is_zero();
}

RootDatum build_so_pq_root_data(const SoPqStructure& s, bool periodic) {
  if (s.m < 1 || s.n < 0) throw UnsupportedError("so(p,q) needs m >= 1 and n >= 0");
  if (s.N() < 2) throw UnsupportedError("so(p,q) root data needs N >= 2");
  if (periodic && s.n < 1) throw UnsupportedError("the periodic root alpha_N needs n >= 1");
  const int N = s.N();
  const int dim = s.size();
  RootDatum rd;
  rd.s = s;
  rd.periodic = periodic;

  for (int pass = 0; pass < 2; ++pass) {
    for (int i = 1; i <= dim; ++i) {
      for (int j = i + 1; j <= dim; ++j) {
        bool mixed = i <= s.p() && j > s.p();
        if (mixed == (pass == 1)) {
          rd.basis_labels.emplace_back(i, j);
          rd.basis.push_back(basis_element(s, i, j));
        }
      }
    }
  }

  for (int k = 1; k <= N; ++k) rd.cartan.push_back(basis_element(s, 2 * k - 1, 2 * k));

  auto e = [&](int i, int j) { return basis_element(s, i, j); };
  for (int k = 1; k <= N - 1; ++k) {
    std::vector<Coefficient> alpha(static_cast<std::size_t>(N));
    alpha[k - 1] = sign(k) * kI;
    alpha[k] = sign(k) * kI;
    rd.simple_roots.push_back(alpha);

    CMatrix real = e(2 * k - 1, 2 * k + 1) - e(2 * k, 2 * k + 2);
    CMatrix imag = e(2 * k - 1, 2 * k + 2) + e(2 * k, 2 * k + 1);
    rd.root_vectors.emplace_back(combination({{half(), real}, {half() * sign(k) * kI, imag}}),
                                 combination({{half(), real}, {half() * sign(k + 1) * kI, imag}}));

    CMatrix x(static_cast<std::size_t>(N), static_cast<std::size_t>(N));
    x(k - 1, k) = half();
    x(k, k - 1) = k == s.m ? half() : -half();
    CMatrix jk = small({{Coefficient(1), sign(k) * kI}, {sign(k) * kI, Coefficient(-1)}});
    rd.kron_parts.push_back({k, {{x, jk}}});
  }

  if (periodic) {
    std::vector<Coefficient> alpha(static_cast<std::size_t>(N));
    alpha[0] = kI;
    alpha[N - 1] = sign(N) * kI;
    rd.simple_roots.push_back(alpha);

    CMatrix real = e(1, 2 * N - 1) + e(2, 2 * N).scaled(sign(N + 1));
    CMatrix imag = e(2, 2 * N - 1) + e(1, 2 * N).scaled(sign(N));
    rd.root_vectors.emplace_back(combination({{half(), real}, {half() * kI, imag}}),
                                 combination({{half(), real}, {-half() * kI, imag}}));

    CMatrix k = small({{Coefficient(1), sign(N) * kI}, {kI, sign(N + 1)}});
    rd.kron_parts.push_back({N,
                             {{unit(static_cast<std::size_t>(N), 1, N).scaled(half()), k},
                              {unit(static_cast<std::size_t>(N), N, 1).scaled(half()), k.transpose()}}});
  }
  return rd;
}

CheckReport verify_kronecker_forms(const RootDatum& rd) {
  CheckReport rep;
  const auto N = static_cast<std::size_t>(rd.s.N());
  CMatrix j = small({{Coefficient(0), Coefficient(1)}, {Coefficient(-1), Coefficient(0)}});
  for (std::size_t k = 0; k < rd.kron_parts.size(); ++k) {
    const KronPart& part = rd.kron_parts[k];
    CMatrix sum(2 * N, 2 * N);
    for (const auto& [x, jk] : part.terms) sum += kron(x, jk);
    CMatrix diff = rd.root_vectors[k].first.trimmed() - sum;
    rep.add("liealg.kron.root", "k=" + std::to_string(part.k), diff.is_zero(),
            diff.is_zero() ? "" : matrix_text(diff));
  }
  for (std::size_t k = 0; k < N; ++k) {
    CMatrix d(N, N);
    d(k, k) = Coefficient(1);
    CMatrix diff = rd.cartan[k].trimmed() - kron(d, j);
    rep.add("liealg.kron.cartan", "k=" + std::to_string(k + 1), diff.is_zero(),
            diff.is_zero() ? "" : matrix_text(diff));
  }
  return rep;
}

CheckReport verify_root_structure(const RootDatum& rd) {
  CheckReport rep;
  bool members = true;
  std::string bad;
  auto member = [&](const CMatrix& x, const std::string& what) {
    if (!in_so_pq(rd.s, x)) {
      members = false;
      bad += (bad.empty() ? "" : ",") + what;
    }
  };
  for (std::size_t b = 0; b < rd.basis.size(); ++b) {
    member(rd.basis[b], "e" + std::to_string(rd.basis_labels[b].first) + "_" +
                            std::to_string(rd.basis_labels[b].second));
  }
  for (std::size_t k = 0; k < rd.cartan.size(); ++k) member(rd.cartan[k], "h" + std::to_string(k + 1));
  for (std::size_t k = 0; k < rd.root_vectors.size(); ++k) {
    member(rd.root_vectors[k].first, "x+" + std::to_string(k + 1));
    member(rd.root_vectors[k].second, "x-" + std::to_string(k + 1));
  }
  rep.add("liealg.membership", std::to_string(rd.basis.size()) + " basis elements", members, bad);

  for (std::size_t k = 0; k < rd.root_vectors.size(); ++k) {
    for (std::size_t j = 0; j < rd.cartan.size(); ++j) {
      const Coefficient& value = rd.simple_roots[k][j];
      const auto& [xp, xm] = rd.root_vectors[k];
      CMatrix rp = commutator(rd.cartan[j], xp) - xp.scaled(value);
      CMatrix rm = commutator(rd.cartan[j], xm) + xm.scaled(value);
      bool ok = rp.is_zero() && rm.is_zero();
      rep.add("liealg.root_action", "j=" + std::to_string(j + 1) + ",k=" + std::to_string(k + 1), ok,
              ok ? "" : matrix_text(rp) + " " + matrix_text(rm));
    }
    const auto& [xp, xm] = rd.root_vectors[k];
    CMatrix c = commutator(xp, xm);
    CMatrix rest = c;
    for (std::size_t j = 0; j < rd.cartan.size(); ++j) {
      rest -= rd.cartan[j].scaled(c(2 * j, 2 * j + 1));
    }
    rep.add("liealg.sl2", "k=" + std::to_string(k + 1), rest.is_zero() && !c.is_zero(),
            rest.is_zero() ? "" : matrix_text(rest));
  }
  return rep;
}

}  // namespace sopq
