#pragma once

#include <cstdint>
#include <vector>

#include "orbitlimits/lie.hpp"
#include "orbitlimits/parallel.hpp"

namespace ol {

using FloatVector = std::vector<double>;

struct WeightEntry {
  std::vector<int> chi;  // exponent vector, or e_i - e_j for matrix entry (i, j)
  Rational normSq;       // > 0
};
using WeightSupport = std::vector<WeightEntry>;

// Diagonal torus; entries with equal weight are grouped. Throws on v = 0.
WeightSupport kempf_support(const Representation& rep, const QVec& v);

double mu(const FloatVector& ell, const WeightSupport& support);
Rational mu(const QVec& ell, const WeightSupport& support);

// log f(t, ell) = log sum ||v_chi||^2 t^{-<ell, chi>}, with log_t = ln t.
double kempf_log_objective(const WeightSupport& support, const FloatVector& ell, double log_t);

struct KempfOptions {
  int maxIter = 4000;
  double gradTol = 1e-10;
  int randomStarts = 8;  // added to the 2n signed coordinate starts
  std::uint64_t seed = 20240601;
  bool continuation = true;  // warm start from ln t = 1, doubling
};

struct KempfResult {
  FloatVector ell;
  double logValue = 0;     // log f at ell
  double mu = 0;
  int iterations = 0;
  bool converged = false;
  bool monotone = true;       // log f never increased on an accepted step
  double maxResidual = 0;     // max |sum p| and | ||p|| - 1 | after projections
  std::size_t bestStart = 0;
};

// Minimizes f(t, .) on O_{n-2}. Requires ln t > 0.
KempfResult kempf_descent(const WeightSupport& support, std::size_t n, double log_t, const KempfOptions& opts = {},
                          Exec ex = Exec::Parallel);
// Deterministic starts: +-(e_i - mean) normalized, then seeded random directions.
std::vector<FloatVector> kempf_starts(std::size_t n, const KempfOptions& opts);
// Descent from one start; no continuation.
KempfResult kempf_descent_from(const WeightSupport& support, const FloatVector& start, double log_t,
                               const KempfOptions& opts);

struct GridOptimum {
  FloatVector bestMuPoint;
  double bestMu = 0;
  FloatVector bestFPoint;
  double bestLogF = 0;
  std::size_t points = 0;
};
// Every p in (1/res) Z^n cap [-1, 1]^n with sum p = 0, p != 0, normalized onto O_{n-2}.
GridOptimum kempf_grid(const WeightSupport& support, std::size_t n, double log_t, int res = 20);

struct PropertyCheck {
  double alpha = 0;
  std::vector<double> logTs;
  std::vector<double> mus;
  double t0_log = 0;   // ln t0: every tested t beyond it is in L_alpha
  bool holds = false;  // the largest tested t is in L_alpha
};
// Tests mu(ell_f(t), v) > alpha along increasing ln t.
PropertyCheck kempf_property(const WeightSupport& support, std::size_t n, double alpha,
                             const std::vector<double>& logTs, const KempfOptions& opts = {});

struct LeadingTerm {
  QVec component;
  Rational degree;  // min <ell, chi> over the support
};
LeadingTerm leading_term_along(const Representation& rep, const QVec& ell, const QVec& v);

}  // namespace ol
