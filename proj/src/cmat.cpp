#include "gauflow/cmat.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gauflow {

CMat CMat::identity(int n) {
  CMat m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMat operator+(const CMat& x, const CMat& y) {
  CMat r(x.n);
  for (int i = 0; i < x.n * x.n; ++i) r.a[i] = x.a[i] + y.a[i];
  return r;
}

CMat operator-(const CMat& x, const CMat& y) {
  CMat r(x.n);
  for (int i = 0; i < x.n * x.n; ++i) r.a[i] = x.a[i] - y.a[i];
  return r;
}

CMat operator*(const CMat& x, const CMat& y) {
  CMat r(x.n);
  for (int i = 0; i < x.n; ++i)
    for (int j = 0; j < x.n; ++j) {
      cplx s = 0.0;
      for (int k = 0; k < x.n; ++k) s += x(i, k) * y(k, j);
      r(i, j) = s;
    }
  return r;
}

CMat operator*(cplx s, const CMat& x) {
  CMat r(x.n);
  for (int i = 0; i < x.n * x.n; ++i) r.a[i] = s * x.a[i];
  return r;
}

CMat operator*(double s, const CMat& x) { return cplx(s, 0.0) * x; }

CMat conj_transpose(const CMat& x) {
  CMat r(x.n);
  for (int i = 0; i < x.n; ++i)
    for (int j = 0; j < x.n; ++j) r(i, j) = std::conj(x(j, i));
  return r;
}

CMat conj_entries(const CMat& x) {
  CMat r(x.n);
  for (int i = 0; i < x.n * x.n; ++i) r.a[i] = std::conj(x.a[i]);
  return r;
}

cplx trace(const CMat& x) {
  cplx s = 0.0;
  for (int i = 0; i < x.n; ++i) s += x(i, i);
  return s;
}

cplx det(const CMat& x) {
  switch (x.n) {
    case 1: return x(0, 0);
    case 2: return x(0, 0) * x(1, 1) - x(0, 1) * x(1, 0);
    case 3:
      return x(0, 0) * (x(1, 1) * x(2, 2) - x(1, 2) * x(2, 1)) -
             x(0, 1) * (x(1, 0) * x(2, 2) - x(1, 2) * x(2, 0)) +
             x(0, 2) * (x(1, 0) * x(2, 1) - x(1, 1) * x(2, 0));
    default: throw std::logic_error("det: dimension out of range");
  }
}

double det_real(const CMat& x) { return det(x).real(); }

CMat adjugate(const CMat& x) {
  CMat r(x.n);
  switch (x.n) {
    case 1:
      r(0, 0) = 1.0;
      return r;
    case 2:
      r(0, 0) = x(1, 1);
      r(0, 1) = -x(0, 1);
      r(1, 0) = -x(1, 0);
      r(1, 1) = x(0, 0);
      return r;
    case 3:
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          const int r0 = (j + 1) % 3, r1 = (j + 2) % 3;
          const int c0 = (i + 1) % 3, c1 = (i + 2) % 3;
          r(i, j) = x(r0, c0) * x(r1, c1) - x(r0, c1) * x(r1, c0);
        }
      return r;
    default: throw std::logic_error("adjugate: dimension out of range");
  }
}

CMat inverse(const CMat& x) {
  const cplx d = det(x);
  if (std::abs(d) == 0.0) throw std::runtime_error("inverse: singular matrix");
  return (1.0 / d) * adjugate(x);
}

double max_abs(const CMat& x) {
  double m = 0.0;
  for (int i = 0; i < x.n * x.n; ++i) m = std::max(m, std::abs(x.a[i]));
  return m;
}

double herm_deviation(const CMat& x) {
  double m = 0.0;
  for (int i = 0; i < x.n; ++i)
    for (int j = 0; j < x.n; ++j) m = std::max(m, std::abs(x(i, j) - std::conj(x(j, i))));
  return m;
}

bool pos_def(const CMat& x) {
  if (x(0, 0).real() <= 0.0) return false;
  if (x.n == 1) return true;
  const double m2 = (x(0, 0) * x(1, 1) - x(0, 1) * x(1, 0)).real();
  if (m2 <= 0.0) return false;
  if (x.n == 2) return true;
  return det_real(x) > 0.0;
}

std::array<double, 3> herm_eig(const CMat& x) {
  std::array<double, 3> ev{0.0, 0.0, 0.0};
  if (x.n == 1) {
    ev[0] = x(0, 0).real();
    return ev;
  }
  if (x.n == 2) {
    const double tr = x(0, 0).real() + x(1, 1).real();
    const double dd = (x(0, 0).real() - x(1, 1).real());
    const double disc = std::sqrt(0.25 * dd * dd + std::norm(x(0, 1)));
    ev[0] = 0.5 * tr - disc;
    ev[1] = 0.5 * tr + disc;
    return ev;
  }
  // 3x3 Hermitian: trigonometric closed form
  const double p1 = std::norm(x(0, 1)) + std::norm(x(0, 2)) + std::norm(x(1, 2));
  const double q = (x(0, 0).real() + x(1, 1).real() + x(2, 2).real()) / 3.0;
  const double d00 = x(0, 0).real() - q, d11 = x(1, 1).real() - q, d22 = x(2, 2).real() - q;
  const double p2 = d00 * d00 + d11 * d11 + d22 * d22 + 2.0 * p1;
  if (p2 <= 0.0) {
    ev[0] = ev[1] = ev[2] = q;
    return ev;
  }
  const double p = std::sqrt(p2 / 6.0);
  CMat B(3);
  for (int i = 0; i < 9; ++i) B.a[i] = x.a[i];
  for (int i = 0; i < 3; ++i) B(i, i) -= q;
  B = (1.0 / p) * B;
  double r = det_real(B) / 2.0;
  r = std::clamp(r, -1.0, 1.0);
  const double phi = std::acos(r) / 3.0;
  const double two_pi_3 = 2.0943951023931953;
  ev[2] = q + 2.0 * p * std::cos(phi);
  ev[0] = q + 2.0 * p * std::cos(phi + 2.0 * two_pi_3);
  ev[1] = 3.0 * q - ev[0] - ev[2];
  return ev;
}

double herm_min_eig(const CMat& x) { return herm_eig(x)[0]; }
double herm_max_eig(const CMat& x) { return herm_eig(x)[x.n - 1]; }

CMat cholesky(const CMat& x) {
  CMat L(x.n);
  for (int i = 0; i < x.n; ++i) {
    for (int j = 0; j <= i; ++j) {
      cplx s = x(i, j);
      for (int k = 0; k < j; ++k) s -= L(i, k) * std::conj(L(j, k));
      if (i == j) {
        const double d = s.real();
        if (d <= 0.0) throw std::runtime_error("cholesky: matrix not positive definite");
        L(i, i) = std::sqrt(d);
      } else {
        L(i, j) = s / L(j, j).real();
      }
    }
  }
  return L;
}

namespace {

CMat forward_solve(const CMat& L, const CMat& B) {
  // X with L X = B
  CMat X(L.n);
  for (int j = 0; j < L.n; ++j)
    for (int i = 0; i < L.n; ++i) {
      cplx s = B(i, j);
      for (int k = 0; k < i; ++k) s -= L(i, k) * X(k, j);
      X(i, j) = s / L(i, i).real();
    }
  return X;
}

}  // namespace

std::array<double, 3> rel_eig_lower(const CMat& G, const CMat& A) {
  const CMat L = cholesky(A);
  // M = L^{-1} G L^{-dagger}: first Y = L^{-1} G, then M = (L^{-1} Y^dagger)^dagger
  const CMat Y = forward_solve(L, G);
  const CMat M = conj_transpose(forward_solve(L, conj_transpose(Y)));
  return herm_eig(M);
}

std::array<double, 3> rel_eig_upper(const CMat& U, const CMat& A) {
  const CMat L = cholesky(A);
  return herm_eig(conj_transpose(L) * U * L);
}

}  // namespace gauflow
