#include "sopq/poisson/vector_field.hpp"

#include "sopq/poly/errors.hpp"

namespace sopq {
namespace {

void same_chart(const ChartRef& x, const ChartRef& y) {
  if (x->coords() != y->coords() || x->universe() != y->universe()) {
    throw StructuralError("vector fields on different coordinates");
  }
}

}  // namespace

VectorField hamiltonian_vf(const PoissonTensor& t, const Polynomial& h, std::string name) {
  return VectorField{name.empty() ? t.name + " dH" : std::move(name), t.chart, hamiltonian_components(t, h)};
}

Polynomial apply(const VectorField& z, const Polynomial& f) {
  Polynomial v = Polynomial().in(z.chart->universe());
  for (std::size_t l = 0; l < z.components.size(); ++l) {
    if (!z.components[l].is_zero()) v += z.components[l] * z.chart->partial(l, f);
  }
  return v;
}

Polynomial lie_derivative(const VectorField& z, const Polynomial& f) { return apply(z, f); }

PoissonTensor lie_derivative(const VectorField& z, const PoissonTensor& t) {
  same_chart(z.chart, t.chart);
  const std::size_t n = t.dim();
  // dz(l, i) = d_l Z^i
  PMatrix dz(n, n);
  for (std::size_t l = 0; l < n; ++l) {
    for (std::size_t i = 0; i < n; ++i) dz(l, i) = z.chart->partial(l, z.components[i]);
  }
  PoissonTensor out{"L_" + z.name + " " + t.name, t.chart, PMatrix(n, n)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Polynomial v = apply(z, t(i, j));
      for (std::size_t l = 0; l < n; ++l) {
        if (!t(l, j).is_zero() && !dz(l, i).is_zero()) v -= t(l, j) * dz(l, i);
        if (!t(i, l).is_zero() && !dz(l, j).is_zero()) v -= t(i, l) * dz(l, j);
      }
      out.entries(i, j) = v;
    }
  }
  return out;
}

VectorField vf_bracket(const VectorField& x, const VectorField& y) {
  same_chart(x.chart, y.chart);
  VectorField out{"[" + x.name + "," + y.name + "]", x.chart, {}};
  for (std::size_t i = 0; i < x.components.size(); ++i) {
    out.components.push_back(apply(x, y.components[i]) - apply(y, x.components[i]));
  }
  return out;
}

VectorField operator+(const VectorField& x, const VectorField& y) {
  same_chart(x.chart, y.chart);
  VectorField out{x.name + "+" + y.name, x.chart, x.components};
  for (std::size_t i = 0; i < out.components.size(); ++i) out.components[i] += y.components[i];
  return out;
}

VectorField operator-(const VectorField& x, const VectorField& y) {
  same_chart(x.chart, y.chart);
  VectorField out{x.name + "-" + y.name, x.chart, x.components};
  for (std::size_t i = 0; i < out.components.size(); ++i) out.components[i] -= y.components[i];
  return out;
}

VectorField scaled(const VectorField& x, const Polynomial& c) {
  VectorField out = x;
  for (auto& p : out.components) p = c * p;
  return out;
}

bool is_zero(const VectorField& x) {
  for (const auto& p : x.components) {
    if (!p.is_zero()) return false;
  }
  return true;
}

std::string field_text(const VectorField& x) {
  std::string s = "[";
  for (std::size_t i = 0; i < x.components.size(); ++i) s += (i ? "," : "") + x.components[i].to_string();
  return s + "]";
}

std::string tensor_residual(const PoissonTensor& t) {
  std::string s;
  for (std::size_t i = 0; i < t.dim(); ++i) {
    for (std::size_t j = i + 1; j < t.dim(); ++j) {
      if (t(i, j).is_zero()) continue;
      if (!s.empty()) s += "; ";
      s += "{" + gen_name(t.chart->coords()[i]) + "," + gen_name(t.chart->coords()[j]) + "}: " + t(i, j).to_string();
    }
  }
  return s;
}

}  // namespace sopq
