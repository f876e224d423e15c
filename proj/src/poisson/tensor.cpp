#include "sopq/poisson/tensor.hpp"

#include "sopq/poly/errors.hpp"

namespace sopq {
namespace {

Polynomial half() { return Polynomial(Coefficient::rational(1, 2)); }

PoissonTensor empty_tensor(std::string name, ChartRef chart) {
  std::size_t n = chart->dim();
  return PoissonTensor{std::move(name), std::move(chart), PMatrix(n, n)};
}

void fill_quadratic(PoissonTensor& t, const SystemSpec& spec, bool all_plus) {
  const int N = spec.N();
  const int K = spec.K();
  auto eps = [&](int i) { return all_plus ? 1L : static_cast<long>(spec.eps(i)); };
  for (int i = 1; i <= K; ++i) {
    int next = i % N + 1;
    if (i < K || (spec.periodic() && K >= 3)) {
      int ai = i % K + 1;
      set_bracket(t, gen_a(i), gen_a(ai), half() * spec.a(i) * spec.a(ai));
    }
    set_bracket(t, gen_a(i), gen_b(i), -(spec.a(i) * spec.b(i)));
    set_bracket(t, gen_a(i), gen_b(next), spec.a(i) * spec.b(next));
    set_bracket(t, gen_b(i), gen_b(next), Polynomial(2 * eps(i)) * spec.a(i).pow(2));
  }
}

}  // namespace

std::string to_string(TensorKind k) {
  switch (k) {
    case TensorKind::pi1: return "pi1";
    case TensorKind::pi2: return "pi2";
    case TensorKind::pi3: return "pi3";
    case TensorKind::adler: return "adler";
    case TensorKind::J1: return "J1";
    case TensorKind::J2: return "J2";
  }
  return "?";
}

void set_bracket(PoissonTensor& t, GenId xi, GenId xj, const Polynomial& v) {
  std::size_t i = t.chart->index(xi);
  std::size_t j = t.chart->index(xj);
  t.entries(i, j) = v.in(t.chart->universe());
  t.entries(j, i) = -t.entries(i, j);
}

PoissonTensor build_tensor(TensorKind kind, const SystemSpec& spec) {
  const int N = spec.N();
  const int K = spec.K();
  switch (kind) {
    case TensorKind::pi1: {
      PoissonTensor t = empty_tensor("pi1", Chart::phase(spec));
      for (int i = 1; i <= K; ++i) {
        set_bracket(t, gen_a(i), gen_b(i), -spec.a(i));
        set_bracket(t, gen_a(i), gen_b(i % N + 1), spec.a(i));
      }
      return t;
    }
    case TensorKind::pi2:
    case TensorKind::adler: {
      PoissonTensor t = empty_tensor(to_string(kind), Chart::phase(spec));
      fill_quadratic(t, spec, kind == TensorKind::adler);
      return t;
    }
    case TensorKind::pi3: {
      if (spec.periodic()) throw UnsupportedError("pi3 is only defined for non-periodic systems");
      PoissonTensor t = empty_tensor("pi3", Chart::phase(spec));
      auto a = [&](int i) { return spec.a(i); };
      auto b = [&](int i) { return spec.b(i); };
      auto e = [&](int i) { return Polynomial(static_cast<long>(spec.eps(i))); };
      for (int i = 1; i <= K; ++i) {
        set_bracket(t, gen_a(i), gen_b(i), -(a(i) * b(i).pow(2)) - e(i) * a(i).pow(3));
        set_bracket(t, gen_a(i), gen_b(i + 1), a(i) * b(i + 1).pow(2) + e(i) * a(i).pow(3));
        set_bracket(t, gen_b(i), gen_b(i + 1), Polynomial(2) * e(i) * a(i).pow(2) * (b(i) + b(i + 1)));
        if (i + 1 <= K) {
          set_bracket(t, gen_a(i), gen_a(i + 1), a(i) * a(i + 1) * b(i + 1));
          set_bracket(t, gen_a(i), gen_b(i + 2), e(i + 1) * a(i) * a(i + 1).pow(2));
          set_bracket(t, gen_a(i + 1), gen_b(i), -(e(i) * a(i).pow(2) * a(i + 1)));
        }
      }
      return t;
    }
    case TensorKind::J1: {
      PoissonTensor t = empty_tensor("J1", Chart::canonical(spec));
      for (int i = 1; i <= N; ++i) set_bracket(t, gen_q(i), gen_p(i), Polynomial(4));
      return t;
    }
    case TensorKind::J2: {
      if (spec.periodic()) throw UnsupportedError("J2 is only defined for non-periodic systems");
      PoissonTensor t = empty_tensor("J2", Chart::canonical(spec));
      const UniverseRef& u = t.chart->universe();
      for (int i = 1; i <= N; ++i) {
        for (int j = i + 1; j <= N; ++j) set_bracket(t, gen_q(i), gen_q(j), Polynomial(2));
        set_bracket(t, gen_q(i), gen_p(i), Polynomial(-2) * Polynomial::generator(u, gen_p(i)));
      }
      for (int i = 1; i <= K; ++i) {
        set_bracket(t, gen_p(i), gen_p(i + 1),
                    Polynomial(2L * spec.eps(i)) * Polynomial::generator(u, gen_u(i)));
      }
      return t;
    }
  }
  throw UnsupportedError("unknown tensor kind");
}

bool is_antisymmetric(const PoissonTensor& t) { return (t.entries + t.entries.transpose()).is_zero(); }

std::vector<Polynomial> hamiltonian_components(const PoissonTensor& t, const Polynomial& h) {
  auto grad = t.chart->gradient(h);
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < t.dim(); ++i) {
    Polynomial v = Polynomial().in(t.chart->universe());
    for (std::size_t j = 0; j < t.dim(); ++j) {
      if (!t(i, j).is_zero() && !grad[j].is_zero()) v += t(i, j) * grad[j];
    }
    out.push_back(v);
  }
  return out;
}

Polynomial bracket(const PoissonTensor& t, const Polynomial& f, const Polynomial& g) {
  auto gf = t.chart->gradient(f);
  auto xg = hamiltonian_components(t, g);
  Polynomial v = Polynomial().in(t.chart->universe());
  for (std::size_t i = 0; i < t.dim(); ++i) v += gf[i] * xg[i];
  return v;
}

std::vector<TrivectorComponent> jacobi_trivector(const PoissonTensor& t) {
  const std::size_t n = t.dim();
  std::vector<PMatrix> d;
  for (std::size_t l = 0; l < n; ++l) {
    d.push_back(t.entries.map([&](const Polynomial& p) { return t.chart->partial(l, p); }));
  }
  auto cyc = [&](std::size_t i, std::size_t j, std::size_t k) {
    Polynomial v;
    for (std::size_t l = 0; l < n; ++l) {
      if (!t(i, l).is_zero() && !d[l](j, k).is_zero()) v += t(i, l) * d[l](j, k);
    }
    return v;
  };
  std::vector<TrivectorComponent> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        Polynomial v = cyc(i, j, k) + cyc(j, k, i) + cyc(k, i, j);
        if (!v.is_zero()) out.push_back({i, j, k, v});
      }
    }
  }
  return out;
}

CheckReport jacobi_check(const PoissonTensor& t, const std::string& detail) {
  CheckReport rep;
  auto comps = jacobi_trivector(t);
  std::string residual;
  for (const auto& c : comps) {
    if (!residual.empty()) residual += "; ";
    residual += "(" + gen_name(t.chart->coords()[c.i]) + "," + gen_name(t.chart->coords()[c.j]) + "," +
                gen_name(t.chart->coords()[c.k]) + "): " + c.value.to_string();
  }
  rep.add("poisson.jacobi." + t.name, detail, comps.empty() && is_antisymmetric(t), residual);
  return rep;
}

PoissonTensor operator+(const PoissonTensor& t, const PoissonTensor& r) {
  if (t.chart->coords() != r.chart->coords() || t.chart->universe() != r.chart->universe()) {
    throw StructuralError("tensors " + t.name + " and " + r.name + " live on different coordinates");
  }
  return PoissonTensor{t.name + "+" + r.name, t.chart, t.entries + r.entries};
}

PoissonTensor scaled(const PoissonTensor& t, const Polynomial& c) {
  return PoissonTensor{t.name, t.chart, t.entries.scaled(c)};
}

CheckReport pencil_compat_check(const PoissonTensor& t, const PoissonTensor& r, const std::string& detail) {
  CheckReport rep = jacobi_check(t + r, detail);
  for (auto& it : rep.items) it.identity = "poisson.pencil." + t.name + "+" + r.name;
  return rep;
}

PoissonTensor complex_change(const PoissonTensor& t, const SystemSpec& spec) {
  const Coefficient i = Coefficient::imaginary_unit();
  std::map<GenId, Polynomial> images;
  std::vector<Coefficient> c(t.dim(), Coefficient(1));
  for (int j = 1; j <= spec.K(); ++j) {
    if (spec.eps(j) < 0) {
      images[gen_a(j)] = Polynomial(i) * spec.a(j);
      c[t.chart->index(gen_a(j))] = i;
    }
  }
  PoissonTensor out{t.name + "'", t.chart, PMatrix(t.dim(), t.dim())};
  for (std::size_t k = 0; k < t.dim(); ++k) {
    for (std::size_t l = 0; l < t.dim(); ++l) {
      Polynomial v = substitute(t(k, l), images, t.chart->universe());
      out.entries(k, l) = v.scale(Coefficient(1) / (c[k] * c[l]));
    }
  }
  return out;
}

PoissonTensor mutated_adler() {
  SystemSpec s = SystemSpec::classical(2);
  PoissonTensor t = build_tensor(TensorKind::adler, s);
  set_bracket(t, gen_a(1), gen_b(1), s.a(1) * s.b(1));
  t.name = "adler.mutated";
  return t;
}

std::string tensor_text(const PoissonTensor& t) { return matrix_text(t.entries); }

}  // namespace sopq
