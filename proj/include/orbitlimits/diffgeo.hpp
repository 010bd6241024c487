#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "orbitlimits/lie.hpp"

namespace ol {

// Orbit data at x for the standard inner product on V. Tangent vectors are
// X_i = S_i x; normal is a pairwise orthogonal basis of N.
struct CurvatureModel {
  QVec x;
  std::vector<QMatrix> S;
  std::vector<QVec> normal;
};

class NotOrthonormal : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};
class NotSimplePoint : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct CurvatureData {
  std::size_t K = 0;  // tangent count
  // alpha[i][j][r] = (S_j x)^T (S_i v_r), beta[i][j][r] = v_r^T S_i S_j x.
  std::vector<std::vector<QVec>> alpha, beta;
  // Pi(X_i, X_j) = lambda_N(S_j S_i x): coefficients on the normal basis and as V vectors.
  std::vector<std::vector<QVec>> pi, piVec;
  bool skew = false;                // every S_i^T = -S_i
  bool beta_is_minus_alpha = false; // checked entrywise
  bool symmetric = false;           // Pi(X_i, X_j) = Pi(X_j, X_i)
  std::vector<Rational> riemann;    // r_{ijkl}, row-major in (i, j, k, l)
  QMatrix ricci;                    // R_{jk} = sum_i r_{ijki}
  const Rational& r(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
    return riemann[((i * K + j) * K + k) * K + l];
  }
};

// Orbit model of x under the span of the given Lie elements, N = tangent complement.
CurvatureModel orbit_model(const Representation& rep, const QVec& x, const std::vector<LieElement>& s);

// Throws NotOrthonormal unless the normal basis is pairwise orthogonal, orthogonal
// to every tangent vector, and the tangent vectors are orthonormal.
CurvatureData second_fundamental_form(const CurvatureModel& model);
// Gauss equation and the Ricci contraction; fills riemann and ricci.
void riemann_and_ricci(CurvatureData& curv);
bool gauss_antisymmetric(const CurvatureData& curv);  // r_ijkl = -r_jikl = -r_ijlk

struct ChartData {
  CurvatureData curv;        // pi on an orthogonal basis of the chart normal space
  std::vector<QVec> normal;  // that basis
  bool osculates = false;    // y^T S_i y = 0 for all i
  bool matches_projected_ambient = false;  // only meaningful when osculates
};
// Projective chart at y; throws NotSimplePoint when g.y in Qy forces more than
// the stabilizer plus the scalars.
ChartData chart_second_fundamental_form(const Representation& rep, const QVec& y,
                                        const std::vector<LieElement>& s);
bool is_simple_point(const Representation& rep, const QVec& y);

// ---- worked geometries ----

// S^n of radius r inside Q^{n+1}, x = r e_1, tangent fields from so(n+1).
CurvatureModel sphere_model(int n, const Rational& r);

struct AdjointTable {
  std::vector<Rational> lambda;
  // d[(p,q)] = diagonal part of [e_pq, e_qp], e_ij = E_ij / (lambda_j - lambda_i).
  std::map<std::pair<std::size_t, std::size_t>, QMatrix> d;
  bool only_qp_nonzero = false;  // Pi(X_rs, X_pq) = 0 unless (r,s) = (q,p)
  bool osculates = false;        // Tr([E_ij, x] x^T) = 0 for all i, j
  bool generic_agrees = false;   // Pi on the unit tangents E_pq equals (lambda_p - lambda_q) d_pq
};
// Requires distinct eigenvalues.
AdjointTable adjoint_table(const std::vector<Rational>& lambda);

// N-part of [X, Y] for x = diag(lambda I_m, mu I_m): the block-diagonal part.
QMatrix block_pi(const QMatrix& X, const QMatrix& Y);

struct CyclicShiftReport {
  int n = 0;
  QMatrix c, ell, ell_bar;
  // P[k](i, j) = p_ij^k by the trace formula, with L_i = ell_bar c^i.
  std::vector<QMatrix> P;
  std::vector<QMatrix> closedForm;
  bool closed_form_matches = false;
  bool no_identity_component = false;
  bool tangent_perpendicular = false;  // Tr([a, c] c^T) = 0
  bool lbasis_ok = false;              // l_ij = c^i ell_bar c^{-j} lies in S_{i-j} and these span it
  bool chart_matches = false;          // generic chart Pi_C(L_i, L_i) = closed form without c^1
  std::vector<int> zero_self_pi;       // i with Pi_C(L_i, L_i) = 0 in the chart
  Rational gamma_sq_ell_bar;           // ||[ell_bar, c]||^2 / ||ell_bar||^2
  double gamma_sq_min_diagonal = 0;    // minimum over traceless diagonals
  bool riemann_antisymmetric = false;  // from the P tables
};
CyclicShiftReport cyclic_shift_suite(int n);
// (n-1) - (i+j) when k != 0 and k = i+j+1 mod n, else 0.
Rational cyclic_closed_form(int n, int i, int j, int k);

}  // namespace ol
