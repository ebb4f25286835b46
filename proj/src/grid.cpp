#include "gauflow/grid.hpp"

#include <algorithm>
#include <cmath>

namespace gauflow {

void Grid::init() {
  if (n < 2 || n > 3) throw std::invalid_argument("Grid: complex dimension must be 2 or 3");
  if (N < 8) throw std::invalid_argument("Grid: need at least 8 points per axis");
  if (N % 2 != 0) throw std::invalid_argument("Grid: N must be even");
  if (period <= 0.0) throw std::invalid_argument("Grid: period must be positive");
  if (order != 2 && order != 4 && order != 6)
    throw std::invalid_argument("Grid: stencil order must be 2, 4 or 6");
  npts = 1;
  for (int a = 0; a < dim(); ++a) npts *= static_cast<std::size_t>(N);
  std::size_t s = 1;
  for (int a = dim() - 1; a >= 0; --a) {
    stride[a] = s;
    s *= static_cast<std::size_t>(N);
  }
}

namespace {

struct Stencil {
  int half;
  std::array<double, 3> c;  // coefficients of f_{+1},f_{+2},f_{+3}; antisymmetric
};

Stencil first_derivative_stencil(int order, double h) {
  switch (order) {
    case 2: return {1, {1.0 / (2.0 * h), 0.0, 0.0}};
    case 4: return {2, {8.0 / (12.0 * h), -1.0 / (12.0 * h), 0.0}};
    default: return {3, {45.0 / (60.0 * h), -9.0 / (60.0 * h), 1.0 / (60.0 * h)}};
  }
}

// Applies the antisymmetric stencil along one axis. Lines along the axis are
// enumerated by an odometer over the remaining axes.
template <typename T>
void deriv_axis_impl(const Grid& g, const T* in, T* out, int axis) {
  const int N = g.N;
  const std::size_t s = g.stride[axis];
  const Stencil st = first_derivative_stencil(g.order, g.spacing());
  const int D = g.dim();

  const std::size_t nlines = g.npts / static_cast<std::size_t>(N);

#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (long long li = 0; li < static_cast<long long>(nlines); ++li) {
    // decode line index into a base point with coordinate 0 on `axis`
    std::size_t rem = static_cast<std::size_t>(li);
    std::size_t base = 0;
    for (int a = D - 1; a >= 0; --a) {
      if (a == axis) continue;
      base += (rem % N) * g.stride[a];
      rem /= N;
    }
    for (int k = 0; k < N; ++k) {
      T acc = T();
      for (int m = 1; m <= st.half; ++m) {
        const int kp = k + m < N ? k + m : k + m - N;
        const int km = k - m >= 0 ? k - m : k - m + N;
        acc += st.c[m - 1] * (in[base + kp * s] - in[base + km * s]);
      }
      out[base + k * s] = acc;
    }
  }
}

}  // namespace

void deriv_axis(const Grid& g, const double* in, double* out, int axis) {
  deriv_axis_impl(g, in, out, axis);
}
void deriv_axis(const Grid& g, const cplx* in, cplx* out, int axis) {
  deriv_axis_impl(g, in, out, axis);
}

ComplexField dz(const ScalarField& f, int i) {
  const Grid& g = *f.grid;
  std::vector<double> dx(g.npts), dy(g.npts);
  deriv_axis(g, f.v.data(), dx.data(), i);
  deriv_axis(g, f.v.data(), dy.data(), g.n + i);
  ComplexField out(g);
  for (std::size_t p = 0; p < g.npts; ++p) out[p] = 0.5 * cplx(dx[p], -dy[p]);
  return out;
}

ComplexField dzbar(const ScalarField& f, int i) {
  const Grid& g = *f.grid;
  std::vector<double> dx(g.npts), dy(g.npts);
  deriv_axis(g, f.v.data(), dx.data(), i);
  deriv_axis(g, f.v.data(), dy.data(), g.n + i);
  ComplexField out(g);
  for (std::size_t p = 0; p < g.npts; ++p) out[p] = 0.5 * cplx(dx[p], dy[p]);
  return out;
}

ComplexField dz(const ComplexField& f, int i) {
  const Grid& g = *f.grid;
  std::vector<cplx> dx(g.npts), dy(g.npts);
  deriv_axis(g, f.v.data(), dx.data(), i);
  deriv_axis(g, f.v.data(), dy.data(), g.n + i);
  ComplexField out(g);
  for (std::size_t p = 0; p < g.npts; ++p) out[p] = 0.5 * (dx[p] - cplx(0, 1) * dy[p]);
  return out;
}

ComplexField dzbar(const ComplexField& f, int i) {
  const Grid& g = *f.grid;
  std::vector<cplx> dx(g.npts), dy(g.npts);
  deriv_axis(g, f.v.data(), dx.data(), i);
  deriv_axis(g, f.v.data(), dy.data(), g.n + i);
  ComplexField out(g);
  for (std::size_t p = 0; p < g.npts; ++p) out[p] = 0.5 * (dx[p] + cplx(0, 1) * dy[p]);
  return out;
}

ComplexMatrixField hessian(const ScalarField& u) {
  const Grid& g = *u.grid;
  ComplexMatrixField H(g, /*herm=*/true);
  std::vector<ComplexField> db(g.n);
  for (int j = 0; j < g.n; ++j) db[j] = dzbar(u, j);
  for (int i = 0; i < g.n; ++i) {
    for (int j = i; j < g.n; ++j) {
      ComplexField hij = dz(db[j], i);
      if (i == j) {
        for (std::size_t p = 0; p < g.npts; ++p) H.at(p, i, i) = hij[p].real();
      } else {
        for (std::size_t p = 0; p < g.npts; ++p) {
          H.at(p, i, j) = hij[p];
          H.at(p, j, i) = std::conj(hij[p]);
        }
      }
    }
  }
  return H;
}

namespace {

// pairwise summation: deterministic and accurate for long sums
double pairwise_sum(const double* x, std::size_t len) {
  if (len <= 16) {
    double s = 0.0;
    for (std::size_t i = 0; i < len; ++i) s += x[i];
    return s;
  }
  const std::size_t half = len / 2;
  return pairwise_sum(x, half) + pairwise_sum(x + half, len - half);
}

}  // namespace

double integrate(const ScalarField& f, const ScalarField& vol) {
  const Grid& g = *f.grid;
  std::vector<double> terms(g.npts);
  for (std::size_t p = 0; p < g.npts; ++p) terms[p] = f[p] * vol[p];
  const double cell = std::pow(g.spacing(), g.dim());
  return pairwise_sum(terms.data(), terms.size()) * cell;
}

double integrate(const ScalarField& f) {
  const Grid& g = *f.grid;
  const double cell = std::pow(g.spacing(), g.dim());
  return pairwise_sum(f.v.data(), f.v.size()) * cell;
}

double sup(const ScalarField& f) {
  double m = f[0];
#ifdef _OPENMP
#pragma omp parallel for reduction(max : m) schedule(static)
#endif
  for (long long p = 0; p < static_cast<long long>(f.size()); ++p) m = std::max(m, f[p]);
  return m;
}

double inf(const ScalarField& f) {
  double m = f[0];
#ifdef _OPENMP
#pragma omp parallel for reduction(min : m) schedule(static)
#endif
  for (long long p = 0; p < static_cast<long long>(f.size()); ++p) m = std::min(m, f[p]);
  return m;
}

double sup_abs(const ScalarField& f) { return std::max(std::abs(sup(f)), std::abs(inf(f))); }

double oscillation(const ScalarField& f) { return sup(f) - inf(f); }

double max_abs(const ComplexField& f) {
  double m = 0.0;
#ifdef _OPENMP
#pragma omp parallel for reduction(max : m) schedule(static)
#endif
  for (long long p = 0; p < static_cast<long long>(f.size()); ++p) m = std::max(m, std::abs(f[p]));
  return m;
}

double max_abs(const ComplexMatrixField& f) {
  double m = 0.0;
#ifdef _OPENMP
#pragma omp parallel for reduction(max : m) schedule(static)
#endif
  for (long long i = 0; i < static_cast<long long>(f.v.size()); ++i)
    m = std::max(m, std::abs(f.v[i]));
  return m;
}

ScalarField operator+(const ScalarField& a, const ScalarField& b) {
  ScalarField r(*a.grid);
  for (std::size_t p = 0; p < a.size(); ++p) r[p] = a[p] + b[p];
  return r;
}

ScalarField operator-(const ScalarField& a, const ScalarField& b) {
  ScalarField r(*a.grid);
  for (std::size_t p = 0; p < a.size(); ++p) r[p] = a[p] - b[p];
  return r;
}

ScalarField operator*(double s, const ScalarField& a) {
  ScalarField r(*a.grid);
  for (std::size_t p = 0; p < a.size(); ++p) r[p] = s * a[p];
  return r;
}

void axpy(double s, const ScalarField& x, ScalarField& y) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (long long p = 0; p < static_cast<long long>(y.size()); ++p) y[p] += s * x[p];
}

}  // namespace gauflow
