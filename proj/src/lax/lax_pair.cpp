#include "sopq/lax/lax_pair.hpp"

#include "sopq/lax/equations.hpp"
#include "sopq/liealg/root_data.hpp"
#include "sopq/poly/derivation.hpp"
#include "sopq/poly/errors.hpp"

namespace sopq {
namespace {

long sgn(int k) { return k % 2 == 0 ? 1 : -1; }

PMatrix small(long a, long b, long c, long d) {
  PMatrix r(2, 2);
  r(0, 0) = Polynomial(a);
  r(0, 1) = Polynomial(b);
  r(1, 0) = Polynomial(c);
  r(1, 1) = Polynomial(d);
  return r;
}

PMatrix lift(const CMatrix& m) {
  return m.map([](const Coefficient& c) { return Polynomial(c); });
}

std::size_t ix(int i) { return static_cast<std::size_t>(i - 1); }

KronBlocks block_factors(const SystemSpec& spec, bool flip_lower) {
  const int N = spec.N();
  const auto n = static_cast<std::size_t>(N);
  KronBlocks k{PMatrix(n, n), PMatrix(n, n), PMatrix(n, n), PMatrix(n, n), PMatrix(n, n)};
  for (int i = 1; i <= N; ++i) k.L1(ix(i), ix(i)) = Polynomial(sgn(i + 1)) * spec.b(i);
  for (int j = 1; j <= N - 1; ++j) {
    Polynomial a = spec.a(j);
    k.L2(ix(j), ix(j + 1)) = Polynomial(sgn(j)) * a;
    k.B1(ix(j), ix(j + 1)) = a;
    if (flip_lower) {
      k.L2(ix(j + 1), ix(j)) = Polynomial(sgn(j + 1) * spec.eps(j)) * a;
      k.B1(ix(j + 1), ix(j)) = Polynomial(-static_cast<long>(spec.eps(j))) * a;
    } else {
      k.L2(ix(j + 1), ix(j)) = Polynomial(j == spec.m() ? sgn(j) : sgn(j + 1)) * a;
      k.B1(ix(j + 1), ix(j)) = j == spec.m() ? a : -a;
    }
  }
  if (spec.periodic()) {
    Polynomial aN = spec.a(N);
    k.L3(0, ix(N)) = Polynomial(sgn(N)) * aN;
    k.L3(ix(N), 0) = Polynomial(sgn(N)) * aN;
    k.B2(0, ix(N)) = aN;
    k.B2(ix(N), 0) = Polynomial(sgn(N)) * aN;
  }
  return k;
}

LaxPair assemble(const SystemSpec& spec, KronBlocks k, std::string form) {
  const int N = spec.N();
  LaxPair pair;
  pair.form = std::move(form);
  pair.L = kron(k.L1, small(0, -1, 1, 0)) + kron(k.L2, small(1, 0, 0, -1));
  pair.B = kron(k.B1, small(0, 1, 1, 0));
  if (spec.periodic()) {
    pair.L += kron(k.L3, small(1, 0, 0, sgn(N + 1)));
    pair.B += kron(k.B2, small(0, 1, sgn(N), 0));
  }
  pair.kron = std::move(k);
  return pair;
}

}  // namespace

std::string matrix_text(const PMatrix& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    s += i ? ",[" : "[";
    for (std::size_t j = 0; j < m.cols(); ++j) s += (j ? "," : "") + m(i, j).to_string();
    s += "]";
  }
  return s + "]";
}

LaxPair build_lax_block(const SystemSpec& spec) {
  if (!spec.is_block()) throw UnsupportedError("block Lax pair needs a block so(p,q) spec");
  return assemble(spec, block_factors(spec, false), "block");
}

LaxPair build_lax_block_roots(const SystemSpec& spec) {
  if (!spec.is_block()) throw UnsupportedError("block Lax pair needs a block so(p,q) spec");
  const int N = spec.N();
  RootDatum rd = build_so_pq_root_data({spec.m(), N - spec.m()}, spec.periodic());
  const auto dim = static_cast<std::size_t>(2 * N + 1);
  PMatrix L(dim, dim);
  PMatrix B(dim, dim);
  Polynomial minus_i(-Coefficient::imaginary_unit());
  for (int j = 1; j <= N; ++j) {
    L += lift(rd.cartan[ix(j)]).scaled(Polynomial(sgn(j)) * spec.b(j));
  }
  for (int j = 1; j <= spec.K(); ++j) {
    const auto& [xp, xm] = rd.root_vectors[ix(j)];
    Polynomial coef = Polynomial(sgn(j)) * spec.a(j);
    L += lift(xp + xm).scaled(coef);
    B += lift(xp - xm).scaled(minus_i * coef);
  }
  LaxPair pair;
  pair.form = "block";
  pair.L = L.trimmed();
  pair.B = B.trimmed();
  return pair;
}

CheckReport compare_block_routes(const SystemSpec& spec) {
  CheckReport rep;
  LaxPair k = build_lax_block(spec);
  LaxPair r = build_lax_block_roots(spec);
  PMatrix dl = k.L - r.L;
  PMatrix db = k.B - r.B;
  rep.add("lax.kron_equals_roots.L", spec.label(), dl.is_zero(), dl.is_zero() ? "" : matrix_text(dl));
  rep.add("lax.kron_equals_roots.B", spec.label(), db.is_zero(), db.is_zero() ? "" : matrix_text(db));
  return rep;
}

LaxPair build_lax_tridiag(const SystemSpec& spec) {
  const int N = spec.N();
  const auto n = static_cast<std::size_t>(N);
  LaxPair pair;
  pair.form = "tridiag";
  pair.L = PMatrix(n, n);
  pair.B = PMatrix(n, n);
  Polynomial i(Coefficient::imaginary_unit());
  for (int j = 1; j <= N; ++j) pair.L(ix(j), ix(j)) = spec.b(j);
  for (int j = 1; j <= spec.K(); ++j) {
    Polynomial entry = spec.eps(j) < 0 ? i * spec.a(j) : spec.a(j);
    std::size_t r = ix(j);
    std::size_t c = ix(j % N + 1);
    pair.L(r, c) += entry;
    pair.L(c, r) += entry;
    pair.B(r, c) += entry;
    pair.B(c, r) -= entry;
  }
  return pair;
}

LaxPair build_lax_alternative(const SystemSpec& spec) {
  if (spec.N() != 3 || spec.periodic() || spec.eps() != std::vector<int>{-1, -1}) {
    throw UnsupportedError("the alternative real pair is only available for N=3, eps=(-,-)");
  }
  return assemble(spec, block_factors(spec, true), "alternative");
}

std::optional<std::vector<Polynomial>> read_off_flow(const LaxPair& pair, const SystemSpec& spec) {
  auto coords = spec.phase_coords();
  auto u = spec.phase_universe();
  const std::size_t n = pair.L.rows();
  std::vector<PMatrix> dl;
  for (GenId c : coords) {
    Derivation d = Derivation::partial(u, c);
    dl.push_back(pair.L.map([&](const Polynomial& p) { return d(p); }));
  }
  PMatrix comm = commutator(pair.B, pair.L);
  std::vector<Polynomial> flow;
  for (std::size_t c = 0; c < coords.size(); ++c) {
    bool found = false;
    for (std::size_t r = 0; r < n && !found; ++r) {
      for (std::size_t s = 0; s < n && !found; ++s) {
        if (dl[c](r, s).is_zero()) continue;
        bool alone = true;
        for (std::size_t o = 0; o < coords.size(); ++o) {
          if (o != c && !dl[o](r, s).is_zero()) alone = false;
        }
        if (!alone) continue;
        Coefficient k = dl[c](r, s).constant_term();
        Polynomial v = comm(r, s);
        flow.push_back(v.scale(Coefficient(1) / k));
        found = true;
      }
    }
    if (!found) return std::nullopt;
  }
  return flow;
}

CheckReport lax_consistency_check(const LaxPair& pair, const SystemSpec& spec) {
  CheckReport rep;
  const std::string tag = "lax.consistency." + pair.form;
  auto flow = read_off_flow(pair, spec);
  if (!flow) {
    rep.add(tag, spec.label(), false, "L does not determine every coordinate");
    return rep;
  }
  auto coords = spec.phase_coords();
  auto u = spec.phase_universe();
  PMatrix implied(pair.L.rows(), pair.L.cols());
  for (std::size_t c = 0; c < coords.size(); ++c) {
    Derivation d = Derivation::partial(u, coords[c]);
    implied += pair.L.map([&](const Polynomial& p) { return d(p); }).scaled((*flow)[c]);
  }
  PMatrix outside = commutator(pair.B, pair.L) - implied;
  rep.add(tag + ".shape", spec.label(), outside.is_zero(), outside.is_zero() ? "" : matrix_text(outside));
  auto expected = equations_of_motion(spec);
  for (std::size_t c = 0; c < coords.size(); ++c) {
    Polynomial diff = (*flow)[c] - expected[c];
    rep.add(tag + ".eq", spec.label() + " d" + gen_name(coords[c]) + "/dt = " + (*flow)[c].to_string(),
            diff.is_zero(), diff.is_zero() ? "" : diff.to_string());
  }
  return rep;
}

}  // namespace sopq
