#include "orbitlimits/kempf.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>

#include "orbitlimits/random.hpp"

namespace ol {

namespace {

std::vector<int> basis_weight(const Representation& rep, std::size_t m) {
  if (rep.kind() == RepKind::SymD) return rep.monomials()[m];
  const std::size_t n = rep.n();
  std::vector<int> chi(n, 0);
  chi[m / n] += 1;
  chi[m % n] -= 1;
  return chi;
}

double dotf(const FloatVector& a, const FloatVector& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double pair(const FloatVector& ell, const std::vector<int>& chi) {
  double s = 0;
  for (std::size_t i = 0; i < chi.size(); ++i) s += ell[i] * chi[i];
  return s;
}

// Centers and normalizes; returns the residual of the result.
double project_onto_sphere(FloatVector& p) {
  double mean = 0;
  for (double x : p) mean += x;
  mean /= static_cast<double>(p.size());
  for (double& x : p) x -= mean;
  double nrm = std::sqrt(dotf(p, p));
  if (nrm == 0) throw std::domain_error("kempf: projection hit the origin");
  for (double& x : p) x /= nrm;
  double sum = 0;
  for (double x : p) sum += x;
  return std::max(std::abs(sum), std::abs(std::sqrt(dotf(p, p)) - 1.0));
}

struct Eval {
  double value;
  FloatVector grad;  // projected onto the tangent of O_{n-2} at ell
};

Eval evaluate(const WeightSupport& sup, const FloatVector& ell, double s, bool want_grad) {
  double m = -std::numeric_limits<double>::infinity();
  std::vector<double> e(sup.size());
  for (std::size_t k = 0; k < sup.size(); ++k) {
    e[k] = std::log(sup[k].normSq.get_d()) - s * pair(ell, sup[k].chi);
    m = std::max(m, e[k]);
  }
  double z = 0;
  for (double x : e) z += std::exp(x - m);
  Eval out{m + std::log(z), {}};
  if (!want_grad) return out;
  const std::size_t n = ell.size();
  out.grad.assign(n, 0.0);
  for (std::size_t k = 0; k < sup.size(); ++k) {
    double w = std::exp(e[k] - m) / z;
    for (std::size_t i = 0; i < n; ++i) out.grad[i] -= s * w * sup[k].chi[i];
  }
  double mean = 0;
  for (double g : out.grad) mean += g;
  mean /= static_cast<double>(n);
  for (double& g : out.grad) g -= mean;
  double radial = dotf(out.grad, ell);
  for (std::size_t i = 0; i < n; ++i) out.grad[i] -= radial * ell[i];
  return out;
}

KempfResult descend(const WeightSupport& sup, FloatVector p, double s, const KempfOptions& opts, KempfResult acc) {
  acc.maxResidual = std::max(acc.maxResidual, project_onto_sphere(p));
  Eval cur = evaluate(sup, p, s, true);
  double eta = 1.0 / std::max(1.0, s);
  int it = 0;
  bool done = false;
  for (; it < opts.maxIter && !done; ++it) {
    double g2 = dotf(cur.grad, cur.grad);
    if (std::sqrt(g2) <= opts.gradTol * std::max(1.0, s)) {
      done = true;
      break;
    }
    bool accepted = false;
    while (eta > 1e-20) {
      FloatVector q = p;
      for (std::size_t i = 0; i < q.size(); ++i) q[i] -= eta * cur.grad[i];
      double res = project_onto_sphere(q);
      Eval nxt = evaluate(sup, q, s, true);
      if (nxt.value <= cur.value - 1e-4 * eta * g2) {
        acc.maxResidual = std::max(acc.maxResidual, res);
        if (nxt.value > cur.value) acc.monotone = false;
        bool stalled = cur.value - nxt.value <= 1e-15 * std::max(1.0, std::abs(cur.value));
        p = std::move(q);
        cur = std::move(nxt);
        eta = std::min(eta * 2.0, 1.0);
        accepted = true;
        done = stalled;
        break;
      }
      eta *= 0.5;
    }
    if (!accepted) done = true;  // no descent step above the floor
  }
  acc.ell = p;
  acc.logValue = cur.value;
  acc.iterations += it;
  acc.converged = done;
  acc.mu = mu(p, sup);
  return acc;
}

KempfResult run_start(const WeightSupport& sup, const FloatVector& start, double log_t, const KempfOptions& opts) {
  KempfResult acc;
  FloatVector p = start;
  if (opts.continuation) {
    for (double s = 1.0; s < log_t; s *= 2.0) {
      acc = descend(sup, p, s, opts, acc);
      p = acc.ell;
    }
  }
  return descend(sup, p, log_t, opts, acc);
}

}  // namespace

WeightSupport kempf_support(const Representation& rep, const QVec& v) {
  std::map<std::vector<int>, Rational> grouped;
  for (std::size_t m = 0; m < v.size(); ++m)
    if (sgn(v[m]) != 0) grouped[basis_weight(rep, m)] += v[m] * v[m];
  if (grouped.empty()) throw std::invalid_argument("kempf_support: v = 0");
  WeightSupport out;
  for (auto& [chi, nrm] : grouped) out.push_back({chi, nrm});
  return out;
}

double mu(const FloatVector& ell, const WeightSupport& support) {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& e : support) {
    if (e.chi.size() != ell.size()) throw std::invalid_argument("mu: length mismatch");
    m = std::min(m, pair(ell, e.chi));
  }
  return m;
}

Rational mu(const QVec& ell, const WeightSupport& support) {
  std::optional<Rational> m;
  for (const auto& e : support) {
    if (e.chi.size() != ell.size()) throw std::invalid_argument("mu: length mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < ell.size(); ++i) s += ell[i] * e.chi[i];
    if (!m || s < *m) m = s;
  }
  return *m;
}

double kempf_log_objective(const WeightSupport& support, const FloatVector& ell, double log_t) {
  return evaluate(support, ell, log_t, false).value;
}

std::vector<FloatVector> kempf_starts(std::size_t n, const KempfOptions& opts) {
  std::vector<FloatVector> out;
  for (std::size_t i = 0; i < n; ++i)
    for (double sign : {1.0, -1.0}) {
      FloatVector p(n, 0.0);
      p[i] = sign;
      project_onto_sphere(p);
      out.push_back(p);
    }
  Rng rng(opts.seed);
  for (int k = 0; k < opts.randomStarts; ++k) {
    FloatVector p(n);
    for (auto& x : p) x = rng.uniform_real(-1.0, 1.0);
    project_onto_sphere(p);
    out.push_back(p);
  }
  return out;
}

KempfResult kempf_descent_from(const WeightSupport& support, const FloatVector& start, double log_t,
                               const KempfOptions& opts) {
  KempfOptions o = opts;
  o.continuation = false;
  return run_start(support, start, log_t, o);
}

KempfResult kempf_descent(const WeightSupport& support, std::size_t n, double log_t, const KempfOptions& opts,
                          Exec ex) {
  if (!(log_t > 0)) throw std::invalid_argument("kempf_descent: need t > 1");
  if (n < 2) throw std::invalid_argument("kempf_descent: need n >= 2");
  for (const auto& e : support)
    if (e.chi.size() != n) throw std::invalid_argument("kempf_descent: weight length mismatch");
  auto starts = kempf_starts(n, opts);
  std::vector<KempfResult> res(starts.size());
  const long ns = static_cast<long>(starts.size());
  if (ex == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic) num_threads(thread_count())
    for (long k = 0; k < ns; ++k) res[static_cast<std::size_t>(k)] = run_start(support, starts[static_cast<std::size_t>(k)], log_t, opts);
  } else {
    for (long k = 0; k < ns; ++k) res[static_cast<std::size_t>(k)] = run_start(support, starts[static_cast<std::size_t>(k)], log_t, opts);
  }
  std::size_t best = 0;
  for (std::size_t k = 1; k < res.size(); ++k)
    if (res[k].logValue < res[best].logValue) best = k;
  KempfResult out = res[best];
  out.bestStart = best;
  for (const auto& r : res) {
    out.monotone = out.monotone && r.monotone;
    out.maxResidual = std::max(out.maxResidual, r.maxResidual);
  }
  return out;
}

GridOptimum kempf_grid(const WeightSupport& support, std::size_t n, double log_t, int res) {
  if (n < 2 || res < 1) throw std::invalid_argument("kempf_grid: need n >= 2 and res >= 1");
  GridOptimum out;
  out.bestMu = -std::numeric_limits<double>::infinity();
  out.bestLogF = std::numeric_limits<double>::infinity();
  std::vector<int> k(n - 1, -res);
  while (true) {
    int sum = 0;
    for (int x : k) sum += x;
    int last = -sum;
    if (last >= -res && last <= res) {
      FloatVector p(n);
      bool zero = last == 0;
      for (std::size_t i = 0; i + 1 < n; ++i) {
        p[i] = k[i];
        zero = zero && k[i] == 0;
      }
      p[n - 1] = last;
      if (!zero) {
        project_onto_sphere(p);
        ++out.points;
        double m = mu(p, support);
        if (m > out.bestMu) {
          out.bestMu = m;
          out.bestMuPoint = p;
        }
        double f = kempf_log_objective(support, p, log_t);
        if (f < out.bestLogF) {
          out.bestLogF = f;
          out.bestFPoint = p;
        }
      }
    }
    std::size_t i = 0;
    while (i < k.size() && k[i] == res) k[i++] = -res;
    if (i == k.size()) break;
    ++k[i];
  }
  return out;
}

PropertyCheck kempf_property(const WeightSupport& support, std::size_t n, double alpha,
                             const std::vector<double>& logTs, const KempfOptions& opts) {
  PropertyCheck out;
  out.alpha = alpha;
  out.logTs = logTs;
  for (double s : logTs) out.mus.push_back(kempf_descent(support, n, s, opts).mu);
  std::size_t first = out.mus.size();
  while (first > 0 && out.mus[first - 1] > alpha) --first;
  out.holds = !out.mus.empty() && out.mus.back() > alpha;
  out.t0_log = out.holds ? logTs[first] : std::numeric_limits<double>::infinity();
  return out;
}

LeadingTerm leading_term_along(const Representation& rep, const QVec& ell, const QVec& v) {
  if (ell.size() != rep.n()) throw std::invalid_argument("leading_term_along: ell length");
  LeadingTerm out;
  out.component = zero_vec(v.size());
  std::optional<Rational> best;
  std::vector<Rational> deg(v.size());
  for (std::size_t m = 0; m < v.size(); ++m) {
    if (sgn(v[m]) == 0) continue;
    auto chi = basis_weight(rep, m);
    Rational d = 0;
    for (std::size_t i = 0; i < chi.size(); ++i) d += ell[i] * chi[i];
    deg[m] = d;
    if (!best || d < *best) best = d;
  }
  if (!best) return out;
  out.degree = *best;
  for (std::size_t m = 0; m < v.size(); ++m)
    if (sgn(v[m]) != 0 && deg[m] == *best) out.component[m] = v[m];
  return out;
}

}  // namespace ol
