#pragma once

#include <array>
#include <complex>
#include <cstddef>

namespace gauflow {

using cplx = std::complex<double>;

// Dense complex matrix of dimension n <= 3 with closed-form determinant,
// inverse and Hermitian eigenvalues. Lower-index Hermitian tensors g_{i jbar}
// are stored with i as the row; the inverse holds g^{jbar i} with the barred
// index as the row, so contraction tr_g(X) is a plain trace(inv * X).
struct CMat {
  int n = 0;
  std::array<cplx, 9> a{};

  CMat() = default;
  explicit CMat(int n_) : n(n_) {}

  cplx& operator()(int i, int j) { return a[i * n + j]; }
  cplx operator()(int i, int j) const { return a[i * n + j]; }

  static CMat identity(int n);
  static CMat zero(int n) { return CMat(n); }
};

CMat operator+(const CMat& x, const CMat& y);
CMat operator-(const CMat& x, const CMat& y);
CMat operator*(const CMat& x, const CMat& y);
CMat operator*(cplx s, const CMat& x);
CMat operator*(double s, const CMat& x);

CMat conj_transpose(const CMat& x);
CMat conj_entries(const CMat& x);
cplx trace(const CMat& x);
cplx det(const CMat& x);
double det_real(const CMat& x);  // determinant of a Hermitian matrix
CMat adjugate(const CMat& x);
CMat inverse(const CMat& x);

double max_abs(const CMat& x);
double herm_deviation(const CMat& x);  // max |x - x^dagger| entry

// Leading principal minors all positive (Sylvester); assumes Hermitian input.
bool pos_def(const CMat& x);

// Eigenvalues of a Hermitian matrix, ascending. Only the first n entries are
// meaningful.
std::array<double, 3> herm_eig(const CMat& x);
double herm_min_eig(const CMat& x);
double herm_max_eig(const CMat& x);

// Cholesky A = L L^dagger for Hermitian positive definite A (lower L).
CMat cholesky(const CMat& x);

// Eigenvalues of G relative to Hermitian positive A (both lower-index),
// i.e. of L^{-1} G L^{-dagger} with A = L L^dagger. Ascending.
std::array<double, 3> rel_eig_lower(const CMat& G, const CMat& A);

// Same for an upper-index tensor U (barred row): eigenvalues of L^dagger U L.
std::array<double, 3> rel_eig_upper(const CMat& U, const CMat& A);

}  // namespace gauflow
