#include "gauflow/trigpoly.hpp"

#include <cmath>

namespace gauflow {

namespace {
constexpr double kTwoPi = 2.0 * 3.14159265358979323846;

inline double term_arg(const TrigTerm& t, double w, const double* x, int dim) {
  double a = t.phase;
  for (int i = 0; i < dim; ++i) a += w * t.freq[i] * x[i];
  return a;
}
}  // namespace

double TrigPoly::eval(const Grid& g, const double* x) const {
  const double w = kTwoPi / g.period;
  double s = 0.0;
  for (const auto& t : terms) s += t.amp * std::cos(term_arg(t, w, x, g.dim()));
  return s;
}

double TrigPoly::d1(const Grid& g, const double* x, int axis) const {
  const double w = kTwoPi / g.period;
  double s = 0.0;
  for (const auto& t : terms)
    s -= t.amp * w * t.freq[axis] * std::sin(term_arg(t, w, x, g.dim()));
  return s;
}

double TrigPoly::d2(const Grid& g, const double* x, int a, int b) const {
  const double w = kTwoPi / g.period;
  double s = 0.0;
  for (const auto& t : terms)
    s -= t.amp * w * w * t.freq[a] * t.freq[b] * std::cos(term_arg(t, w, x, g.dim()));
  return s;
}

ScalarField TrigPoly::sample(const Grid& g) const {
  ScalarField f(g);
  int c[6];
  double x[6];
  for (std::size_t p = 0; p < g.npts; ++p) {
    g.coords(p, c);
    for (int a = 0; a < g.dim(); ++a) x[a] = g.coord_value(c[a]);
    f[p] = eval(g, x);
  }
  return f;
}

ComplexField TrigPoly::sample_dz(const Grid& g, int i) const {
  ComplexField f(g);
  int c[6];
  double x[6];
  for (std::size_t p = 0; p < g.npts; ++p) {
    g.coords(p, c);
    for (int a = 0; a < g.dim(); ++a) x[a] = g.coord_value(c[a]);
    f[p] = 0.5 * cplx(d1(g, x, i), -d1(g, x, g.n + i));
  }
  return f;
}

ComplexMatrixField TrigPoly::sample_hessian(const Grid& g) const {
  // u_{i jbar} = (u_{x_i x_j} + u_{y_i y_j})/4 + i (u_{x_i y_j} - u_{y_i x_j})/4
  ComplexMatrixField H(g, /*herm=*/true);
  const int n = g.n;
  int c[6];
  double x[6];
  for (std::size_t p = 0; p < g.npts; ++p) {
    g.coords(p, c);
    for (int a = 0; a < g.dim(); ++a) x[a] = g.coord_value(c[a]);
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) {
        const double re = 0.25 * (d2(g, x, i, j) + d2(g, x, n + i, n + j));
        const double im = 0.25 * (d2(g, x, i, n + j) - d2(g, x, n + i, j));
        if (i == j) {
          H.at(p, i, i) = re;
        } else {
          H.at(p, i, j) = cplx(re, im);
          H.at(p, j, i) = cplx(re, -im);
        }
      }
    }
  }
  return H;
}

TrigPoly TrigPoly::product_of_sines(int dim, double amp, int axis_a, int axis_b) {
  // sin(a)sin(b) = (cos(a-b) - cos(a+b))/2
  TrigPoly p;
  TrigTerm t1, t2;
  t1.freq.assign(dim, 0);
  t2.freq.assign(dim, 0);
  t1.freq[axis_a] = 1;
  t1.freq[axis_b] = -1;
  t1.amp = 0.5 * amp;
  t2.freq[axis_a] = 1;
  t2.freq[axis_b] = 1;
  t2.amp = -0.5 * amp;
  p.terms = {t1, t2};
  return p;
}

TrigPoly TrigPoly::single(int dim, double amp, const std::vector<int>& freq, double phase) {
  TrigTerm t;
  t.amp = amp;
  t.freq = freq;
  t.freq.resize(dim, 0);
  t.phase = phase;
  TrigPoly p;
  p.terms = {t};
  return p;
}

}  // namespace gauflow
