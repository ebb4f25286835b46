#pragma once

#include <vector>

#include "gauflow/cmat.hpp"

namespace gauflow {

// Pointwise (p,q)-form in canonical storage: one complex coefficient per pair
// of strictly increasing multi-indices (I holomorphic, J antiholomorphic),
// listed in lexicographic order. Expansion to arbitrary index order picks up
// permutation signs.
struct PQForm {
  int n = 0, p = 0, q = 0;
  std::vector<cplx> c;  // size C(n,p)*C(n,q), index ci(I_rank, J_rank)

  PQForm() = default;
  PQForm(int n_, int p_, int q_);

  int ncomp_p() const;
  int ncomp_q() const;
  cplx& at(int ri, int rj);
  cplx at(int ri, int rj) const;
};

// Sorted k-subsets of {0..n-1} in lexicographic order, and the sign of the
// shuffle (S, complement(S)) as a permutation of (0..n-1).
const std::vector<std::vector<int>>& combinations(int n, int k);
int comb_rank(int n, const std::vector<int>& sorted_subset);
int shuffle_sign(int n, const std::vector<int>& s);  // sign of (s, comp(s)); s sorted

PQForm operator+(const PQForm& a, const PQForm& b);
PQForm operator-(const PQForm& a, const PQForm& b);
PQForm operator*(cplx s, const PQForm& a);
PQForm operator*(double s, const PQForm& a);

double max_abs(const PQForm& a);
double max_abs_diff(const PQForm& a, const PQForm& b);

// conj of a (p,q)-form is a (q,p)-form; canonical coefficients pick up (-1)^{pq}.
PQForm conj_form(const PQForm& a);

// a ^ b with correct shuffle signs; throws on degree overflow.
PQForm wedge(const PQForm& a, const PQForm& b);

// Hodge star with respect to the Hermitian metric g (lower-index matrix),
// sending (p,q) to (n-q,n-p). Implemented combinatorially from the raised
// coefficient tensor; serves as the reference oracle for every closed form.
// sign_flip is a negative-control hook that corrupts the overall sign.
PQForm hodge_star(const PQForm& phi, const CMat& g, bool sign_flip = false);

// ---- conversions between matrix conventions and canonical storage ----------

// phi = sqrt(-1) phi_{i jbar} dz^i ^ dzbar^j
PQForm form11_to_pq(const CMat& m);
CMat pq_to_form11(const PQForm& a);

// (n-1,n-1) coefficient convention: the matrix U holds psi^{jbar i} with the
// barred index as the row; the canonical coefficient at (comp(i), comp(j)) is
// i^{n-1} (-1)^{n(n+1)/2 + i + j} U(j,i) with 1-based i, j in the sign.
PQForm formn1_to_pq(const CMat& U);
CMat pq_to_formn1(const PQForm& a);

// (n,n) top coefficient relative to the volume normalization: a real positive
// (n,n)-form has canonical coefficient density * i^n (-1)^{n(n-1)/2}.
cplx top_coefficient(const PQForm& a);
double top_density(const PQForm& a);

// ---- closed-form (1,1) operations ------------------------------------------

// P_alpha(xi) = ((tr_alpha xi) alpha - xi)/(n-1); equals star(xi ^ alpha^{n-2})/(n-1)!.
CMat project_pa(const CMat& xi, const CMat& alpha, const CMat& alpha_inv);

// phi (positive (1,1)) -> coefficient matrix of phi^{n-1}/(n-1)!: det(phi) phi^{-1}.
CMat bijection_n1(const CMat& phi);

// inverse direction: U positive -> phi = det(U)^{1/(n-1)} U^{-1}.
CMat root_n1(const CMat& U);

// star of a (1,1)-form as an (n-1,n-1) matrix: det(g) g^{-1} phi g^{-1}; and back.
CMat star11_matrix(const CMat& phi, const CMat& g, const CMat& g_inv, double detg);
CMat star_n1_matrix(const CMat& U, const CMat& g, double detg);

}  // namespace gauflow
