#pragma once

#include "sopq/poisson/tensor.hpp"

#include <string>
#include <vector>

namespace sopq {

struct VectorField {
  std::string name;
  ChartRef chart;
  std::vector<Polynomial> components;
};

VectorField hamiltonian_vf(const PoissonTensor& t, const Polynomial& h, std::string name = {});

/// Z(f) = sum_l Z^l d_l f.
Polynomial apply(const VectorField& z, const Polynomial& f);

/// (L_Z pi)^{ij} = sum_l Z^l d_l pi^{ij} - pi^{lj} d_l Z^i - pi^{il} d_l Z^j.
PoissonTensor lie_derivative(const VectorField& z, const PoissonTensor& t);
Polynomial lie_derivative(const VectorField& z, const Polynomial& f);

/// [X, Y]^i = X(Y^i) - Y(X^i).
VectorField vf_bracket(const VectorField& x, const VectorField& y);

VectorField operator+(const VectorField& x, const VectorField& y);
VectorField operator-(const VectorField& x, const VectorField& y);
VectorField scaled(const VectorField& x, const Polynomial& c);

bool is_zero(const VectorField& x);
std::string field_text(const VectorField& x);
std::string tensor_residual(const PoissonTensor& t);

}  // namespace sopq
