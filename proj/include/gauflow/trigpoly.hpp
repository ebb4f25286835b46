#pragma once

#include <vector>

#include "gauflow/grid.hpp"

namespace gauflow {

// One term amp * cos(w <k,x> + phase) with integer frequency vector k over the
// 2n real axes and w = 2*pi/period. Everything below is evaluated exactly, so
// trig-polynomial data carries its own derivatives.
struct TrigTerm {
  double amp = 0.0;
  std::vector<int> freq;  // length 2n
  double phase = 0.0;
};

struct TrigPoly {
  std::vector<TrigTerm> terms;

  bool empty() const { return terms.empty(); }

  double eval(const Grid& g, const double* x) const;
  double d1(const Grid& g, const double* x, int axis) const;
  double d2(const Grid& g, const double* x, int a, int b) const;

  ScalarField sample(const Grid& g) const;
  // analytic dz_i and Hermitian hessian, sampled on the grid
  ComplexField sample_dz(const Grid& g, int i) const;
  ComplexMatrixField sample_hessian(const Grid& g) const;

  // amp * sin(x_a) * sin(x_b) expanded into two cosine terms
  static TrigPoly product_of_sines(int dim, double amp, int axis_a, int axis_b);
  static TrigPoly single(int dim, double amp, const std::vector<int>& freq, double phase);
};

}  // namespace gauflow
