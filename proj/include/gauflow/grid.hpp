#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gauflow {

using cplx = std::complex<double>;

// Uniform periodic lattice on the real 2n-torus. Axes 0..n-1 are the real
// parts x^1..x^n, axes n..2n-1 the imaginary parts, so z^i = x_i + sqrt(-1) x_{n+i}.
// Flat storage is lexicographic with the last axis varying fastest.
struct Grid {
  int n = 2;            // complex dimension, 2 or 3
  int N = 24;           // points per real axis
  double period = 2.0 * 3.14159265358979323846;
  int order = 4;        // centered stencil order: 2, 4 or 6

  std::size_t npts = 0;
  std::array<std::size_t, 6> stride{};  // stride per axis, axis 2n-1 fastest

  Grid() { init(); }
  Grid(int n_, int N_, double period_ = 2.0 * 3.14159265358979323846, int order_ = 4)
      : n(n_), N(N_), period(period_), order(order_) {
    init();
  }

  int dim() const { return 2 * n; }
  double spacing() const { return period / N; }

  std::size_t index(const int* coords) const {
    std::size_t idx = 0;
    for (int a = 0; a < dim(); ++a) idx += static_cast<std::size_t>(coords[a]) * stride[a];
    return idx;
  }
  void coords(std::size_t idx, int* out) const {
    for (int a = 0; a < dim(); ++a) {
      out[a] = static_cast<int>(idx / stride[a]);
      idx %= stride[a];
    }
  }
  double coord_value(int c) const { return c * spacing(); }

 private:
  void init();
};

struct ScalarField {
  const Grid* grid = nullptr;
  std::vector<double> v;

  ScalarField() = default;
  explicit ScalarField(const Grid& g, double fill = 0.0) : grid(&g), v(g.npts, fill) {}
  double& operator[](std::size_t i) { return v[i]; }
  double operator[](std::size_t i) const { return v[i]; }
  std::size_t size() const { return v.size(); }
};

struct ComplexField {
  const Grid* grid = nullptr;
  std::vector<cplx> v;

  ComplexField() = default;
  explicit ComplexField(const Grid& g, cplx fill = {}) : grid(&g), v(g.npts, fill) {}
  cplx& operator[](std::size_t i) { return v[i]; }
  cplx operator[](std::size_t i) const { return v[i]; }
  std::size_t size() const { return v.size(); }
};

// n x n complex matrix per point, point-major: entry (i,j) of point p sits at
// v[p*n*n + i*n + j]. When hermitian is set, M(j,i) == conj(M(i,j)) holds
// exactly (enforced by the producers, checked in tests).
struct ComplexMatrixField {
  const Grid* grid = nullptr;
  int n = 0;
  bool hermitian = false;
  std::vector<cplx> v;

  ComplexMatrixField() = default;
  ComplexMatrixField(const Grid& g, bool herm = false)
      : grid(&g), n(g.n), hermitian(herm), v(g.npts * g.n * g.n) {}
  cplx& at(std::size_t p, int i, int j) { return v[(p * n + i) * n + j]; }
  cplx at(std::size_t p, int i, int j) const { return v[(p * n + i) * n + j]; }
};

// ---- derivatives ----------------------------------------------------------

// d/dx_axis by centered differences of the grid's order, periodic wrap.
void deriv_axis(const Grid& g, const double* in, double* out, int axis);
void deriv_axis(const Grid& g, const cplx* in, cplx* out, int axis);

// dz_i = (d/dx_i - sqrt(-1) d/dx_{n+i})/2,  dzbar_i the conjugate stencil.
ComplexField dz(const ScalarField& f, int i);
ComplexField dzbar(const ScalarField& f, int i);
ComplexField dz(const ComplexField& f, int i);
ComplexField dzbar(const ComplexField& f, int i);

// u_{i jbar} = dz_i(dzbar_j(u)). Upper triangle is computed and mirrored so
// the result is Hermitian exactly; the diagonal keeps only its real part.
ComplexMatrixField hessian(const ScalarField& u);

// ---- quadrature and norms -------------------------------------------------

// sum f * vol * h^{2n} with deterministic pairwise summation.
double integrate(const ScalarField& f, const ScalarField& vol);
double integrate(const ScalarField& f);

double sup(const ScalarField& f);
double inf(const ScalarField& f);
double sup_abs(const ScalarField& f);
double oscillation(const ScalarField& f);

double max_abs(const ComplexField& f);
double max_abs(const ComplexMatrixField& f);

// ---- misc -----------------------------------------------------------------

ScalarField operator+(const ScalarField& a, const ScalarField& b);
ScalarField operator-(const ScalarField& a, const ScalarField& b);
ScalarField operator*(double s, const ScalarField& a);

// y += s*x
void axpy(double s, const ScalarField& x, ScalarField& y);

}  // namespace gauflow
