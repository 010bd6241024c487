#include "orbitlimits/diffgeo.hpp"

#include <cmath>
#include <numbers>

namespace ol {

namespace {

// Orthogonal basis of span(vs) without normalization.
std::vector<QVec> gram_schmidt(const std::vector<QVec>& vs) {
  std::vector<QVec> out;
  for (const auto& v : vs) {
    QVec w = v;
    for (const auto& u : out) axpy(w, -dot(w, u) / dot(u, u), u);
    bool zero = true;
    for (const auto& e : w) zero = zero && sgn(e) == 0;
    if (!zero) out.push_back(std::move(w));
  }
  return out;
}

// Orthogonal projection onto span(basis), basis pairwise orthogonal.
QVec project(const std::vector<QVec>& basis, const QVec& w, QVec* coeffs = nullptr) {
  QVec out = zero_vec(w.size());
  if (coeffs) coeffs->clear();
  for (const auto& u : basis) {
    Rational c = dot(w, u) / dot(u, u);
    axpy(out, c, u);
    if (coeffs) coeffs->push_back(c);
  }
  return out;
}

bool vec_zero(const QVec& v) {
  for (const auto& e : v)
    if (sgn(e) != 0) return false;
  return true;
}

// Pi(X_i, X_j) = projection of S_j S_i x onto the normal basis.
void fill_pi(CurvatureData& cd, const QVec& x, const std::vector<QMatrix>& S, const std::vector<QVec>& normal) {
  const std::size_t K = S.size();
  cd.K = K;
  cd.pi.assign(K, std::vector<QVec>(K));
  cd.piVec.assign(K, std::vector<QVec>(K));
  std::vector<QVec> X;
  for (const auto& s : S) X.push_back(s.apply(x));
  for (std::size_t i = 0; i < K; ++i)
    for (std::size_t j = 0; j < K; ++j) cd.piVec[i][j] = project(normal, S[j].apply(X[i]), &cd.pi[i][j]);
  cd.symmetric = true;
  for (std::size_t i = 0; i < K; ++i)
    for (std::size_t j = i + 1; j < K; ++j) cd.symmetric = cd.symmetric && cd.piVec[i][j] == cd.piVec[j][i];
}

}  // namespace

CurvatureModel orbit_model(const Representation& rep, const QVec& x, const std::vector<LieElement>& s) {
  CurvatureModel m;
  m.x = x;
  for (const auto& g : s) m.S.push_back(rep.rho(g));
  m.normal = gram_schmidt(orthogonal_complement(tangent_space(rep, x), rep.dim()));
  return m;
}

CurvatureData second_fundamental_form(const CurvatureModel& model) {
  const std::size_t K = model.S.size();
  std::vector<QVec> X;
  for (const auto& s : model.S) X.push_back(s.apply(model.x));
  for (std::size_t i = 0; i < K; ++i)
    for (std::size_t j = 0; j < K; ++j)
      if (dot(X[i], X[j]) != (i == j ? 1 : 0)) throw NotOrthonormal("second_fundamental_form: tangent basis not orthonormal");
  for (std::size_t r = 0; r < model.normal.size(); ++r) {
    if (vec_zero(model.normal[r])) throw NotOrthonormal("second_fundamental_form: zero normal vector");
    for (std::size_t q = r + 1; q < model.normal.size(); ++q)
      if (sgn(dot(model.normal[r], model.normal[q])) != 0)
        throw NotOrthonormal("second_fundamental_form: normal basis not orthogonal");
    for (const auto& t : X)
      if (sgn(dot(model.normal[r], t)) != 0)
        throw NotOrthonormal("second_fundamental_form: normal basis meets the tangent space");
  }

  CurvatureData cd;
  fill_pi(cd, model.x, model.S, model.normal);
  const std::size_t R = model.normal.size();
  cd.alpha.assign(K, std::vector<QVec>(K, zero_vec(R)));
  cd.beta = cd.alpha;
  for (std::size_t i = 0; i < K; ++i)
    for (std::size_t j = 0; j < K; ++j) {
      QVec sisjx = model.S[i].apply(X[j]);
      for (std::size_t r = 0; r < R; ++r) {
        cd.alpha[i][j][r] = dot(X[j], model.S[i].apply(model.normal[r]));
        cd.beta[i][j][r] = dot(model.normal[r], sisjx);
      }
    }
  cd.skew = true;
  for (const auto& s : model.S) cd.skew = cd.skew && s.transpose() == -s;
  cd.beta_is_minus_alpha = true;
  for (std::size_t i = 0; i < K; ++i)
    for (std::size_t j = 0; j < K; ++j)
      for (std::size_t r = 0; r < R; ++r)
        cd.beta_is_minus_alpha = cd.beta_is_minus_alpha && cd.beta[i][j][r] == -cd.alpha[i][j][r];
  return cd;
}

void riemann_and_ricci(CurvatureData& curv) {
  const std::size_t K = curv.K;
  // Gram matrix of the Pi vectors, indexed by flattened pairs.
  std::vector<Rational> g(K * K * K * K);
  for (std::size_t a = 0; a < K * K; ++a)
    for (std::size_t b = a; b < K * K; ++b) {
      Rational v = dot(curv.piVec[a / K][a % K], curv.piVec[b / K][b % K]);
      g[a * K * K + b] = v;
      g[b * K * K + a] = v;
    }
  auto G = [&](std::size_t i, std::size_t l, std::size_t j, std::size_t k) -> const Rational& {
    return g[(i * K + l) * K * K + (j * K + k)];
  };
  curv.riemann.assign(K * K * K * K, Rational(0));
  for (std::size_t i = 0; i < K; ++i)
    for (std::size_t j = 0; j < K; ++j)
      for (std::size_t k = 0; k < K; ++k)
        for (std::size_t l = 0; l < K; ++l)
          curv.riemann[((i * K + j) * K + k) * K + l] = G(i, l, j, k) - G(j, l, i, k);
  curv.ricci = QMatrix(K, K);
  for (std::size_t j = 0; j < K; ++j)
    for (std::size_t k = 0; k < K; ++k)
      for (std::size_t i = 0; i < K; ++i) curv.ricci(j, k) += curv.r(i, j, k, i);
}

bool gauss_antisymmetric(const CurvatureData& curv) {
  const std::size_t K = curv.K;
  for (std::size_t i = 0; i < K; ++i)
    for (std::size_t j = 0; j < K; ++j)
      for (std::size_t k = 0; k < K; ++k)
        for (std::size_t l = 0; l < K; ++l)
          if (curv.r(i, j, k, l) != -curv.r(j, i, k, l) || curv.r(i, j, k, l) != -curv.r(i, j, l, k)) return false;
  return true;
}

bool is_simple_point(const Representation& rep, const QVec& y) {
  if (vec_zero(y)) return false;
  QMatrix om = rep.orbit_map(y);
  QMatrix ext(om.rows(), om.cols() + 1);
  for (std::size_t i = 0; i < om.rows(); ++i) {
    for (std::size_t j = 0; j < om.cols(); ++j) ext(i, j) = om(i, j);
    ext(i, om.cols()) = -y[i];
  }
  // y != 0, so each kernel vector is determined by its g part.
  std::size_t scaling = nullspace(ext).size();
  std::size_t stab = om.cols() - rank(om);
  bool identity_moves = !vec_zero(rep.act(QMatrix::identity(rep.n()), y));
  return scaling == stab + (identity_moves ? 1 : 0);
}

ChartData chart_second_fundamental_form(const Representation& rep, const QVec& y, const std::vector<LieElement>& s) {
  if (!is_simple_point(rep, y)) throw NotSimplePoint("chart_second_fundamental_form: y is not simple");
  const std::size_t dim = rep.dim();
  const Rational yy = dot(y, y);
  QMatrix P = QMatrix::identity(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) P(i, j) -= y[i] * y[j] / yy;

  ChartData out;
  std::vector<QMatrix> St;
  out.osculates = true;
  for (const auto& g : s) {
    QMatrix S = rep.rho(g);
    out.osculates = out.osculates && sgn(dot(y, S.apply(y))) == 0;
    St.push_back(P * S);
  }
  std::vector<QVec> tt;
  for (const auto& t : tangent_space(rep, y)) tt.push_back(P.apply(t));
  tt.push_back(y);
  out.normal = gram_schmidt(orthogonal_complement(tt, dim));
  fill_pi(out.curv, y, St, out.normal);

  if (out.osculates) {
    auto amb = gram_schmidt(orthogonal_complement(tangent_space(rep, y), dim));
    bool ok = true;
    for (std::size_t i = 0; i < s.size() && ok; ++i)
      for (std::size_t j = 0; j < s.size() && ok; ++j) {
        QVec w = rep.rho(s[j]).apply(rep.rho(s[i]).apply(y));
        ok = P.apply(project(amb, w)) == out.curv.piVec[i][j];
      }
    out.matches_projected_ambient = ok;
  }
  return out;
}

CurvatureModel sphere_model(int n, const Rational& r) {
  if (n < 1 || sgn(r) <= 0) throw std::invalid_argument("sphere_model: need n >= 1 and r > 0");
  const auto dim = static_cast<std::size_t>(n) + 1;
  CurvatureModel m;
  m.x = zero_vec(dim);
  m.x[0] = r;
  for (std::size_t i = 1; i < dim; ++i) {
    QMatrix S(dim, dim);
    S(0, i) = -1 / r;
    S(i, 0) = 1 / r;
    m.S.push_back(S);
  }
  QVec e0 = zero_vec(dim);
  e0[0] = 1;
  m.normal = {e0};
  return m;
}

AdjointTable adjoint_table(const std::vector<Rational>& lambda) {
  const std::size_t n = lambda.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (lambda[i] == lambda[j]) throw std::invalid_argument("adjoint_table: eigenvalues must be distinct");
  AdjointTable out;
  out.lambda = lambda;
  auto rep = Representation::conjugation(static_cast<int>(n));
  QMatrix x(n, n);
  for (std::size_t i = 0; i < n; ++i) x(i, i) = lambda[i];
  auto e = [&](std::size_t i, std::size_t j) { return Rational(1 / (lambda[j] - lambda[i])) * unit_matrix(n, i, j); };

  std::vector<std::pair<std::size_t, std::size_t>> idx;
  std::vector<LieElement> s;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      if (p != q) {
        idx.emplace_back(p, q);
        s.push_back(e(p, q));
      }
  CurvatureData cd = second_fundamental_form(orbit_model(rep, rep.to_vec(x), s));

  out.only_qp_nonzero = true;
  out.generic_agrees = true;
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = 0; b < idx.size(); ++b) {
      auto [r, sidx] = idx[a];
      auto [p, q] = idx[b];
      QMatrix pi = rep.to_matrix(cd.piVec[a][b]);  // Pi(X_rs, X_pq)
      if (!(r == q && sidx == p)) {
        out.only_qp_nonzero = out.only_qp_nonzero && pi.is_zero();
        continue;
      }
      QMatrix br = bracket(e(p, q), e(q, p));
      QMatrix d(n, n);
      for (std::size_t i = 0; i < n; ++i) d(i, i) = br(i, i);
      out.d[{p, q}] = d;
      out.generic_agrees = out.generic_agrees && pi == Rational(lambda[p] - lambda[q]) * d;
    }
  out.osculates = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out.osculates = out.osculates && sgn(dot(lie_vec(bracket(unit_matrix(n, i, j), x)), lie_vec(x))) == 0;
  return out;
}

QMatrix block_pi(const QMatrix& X, const QMatrix& Y) {
  const std::size_t n = X.rows();
  if (n % 2 != 0 || Y.rows() != n) throw std::invalid_argument("block_pi: need matching even sizes");
  const std::size_t m = n / 2;
  QMatrix b = bracket(X, Y);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if ((i < m) != (j < m)) b(i, j) = 0;
  return b;
}

Rational cyclic_closed_form(int n, int i, int j, int k) {
  if (k == 0 || (i + j + 1) % n != k) return 0;
  return (n - 1) - (i + j);
}

CyclicShiftReport cyclic_shift_suite(int n) {
  if (n < 3) throw std::invalid_argument("cyclic_shift_suite: n >= 3");
  const auto un = static_cast<std::size_t>(n);
  CyclicShiftReport out;
  out.n = n;
  out.c = QMatrix(un, un);
  out.ell = QMatrix(un, un);
  for (std::size_t i = 0; i < un; ++i) {
    out.c(i, (i + 1) % un) = 1;
    out.ell(i, i) = static_cast<long>(i + 1);
  }
  out.ell_bar = out.ell - Rational(Rational(n + 1) / 2) * QMatrix::identity(un);
  std::vector<QMatrix> cp{QMatrix::identity(un)};
  for (std::size_t k = 1; k < un; ++k) cp.push_back(cp.back() * out.c);
  auto power = [&](long k) { return cp[static_cast<std::size_t>(((k % n) + n) % n)]; };
  auto trace = [](const QMatrix& m) {
    Rational t = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
    return t;
  };

  std::vector<QMatrix> L;
  for (std::size_t i = 0; i < un; ++i) L.push_back(out.ell_bar * cp[i]);
  out.P.assign(un, QMatrix(un, un));
  out.closedForm.assign(un, QMatrix(un, un));
  out.closed_form_matches = true;
  for (std::size_t i = 0; i < un; ++i) {
    QMatrix delta = bracket(L[i], out.c);
    for (std::size_t j = 0; j < un; ++j) {
      QMatrix m = bracket(L[j], delta);
      for (std::size_t k = 0; k < un; ++k) {
        out.P[k](i, j) = trace(m * cp[k].transpose()) / n;
        out.closedForm[k](i, j) = cyclic_closed_form(n, static_cast<int>(i), static_cast<int>(j), static_cast<int>(k));
        out.closed_form_matches = out.closed_form_matches && out.P[k](i, j) == out.closedForm[k](i, j);
      }
    }
  }
  out.no_identity_component = out.P[0].is_zero();

  out.tangent_perpendicular = true;
  for (std::size_t a = 0; a < un; ++a)
    for (std::size_t b = 0; b < un; ++b)
      out.tangent_perpendicular =
          out.tangent_perpendicular && sgn(trace(bracket(unit_matrix(un, a, b), out.c) * out.c.transpose())) == 0;

  out.lbasis_ok = true;
  for (long k = 0; k < n; ++k) {
    std::vector<QVec> members;
    for (long i = 0; i < n; ++i) {
      QMatrix lij = power(i) * out.ell_bar * power(-(i - k));
      for (std::size_t r = 0; r < un; ++r)
        for (std::size_t s = 0; s < un; ++s)
          if (static_cast<long>((s + un - r) % un) != k && sgn(lij(r, s)) != 0) out.lbasis_ok = false;
      Rational total = 0;
      for (std::size_t r = 0; r < un; ++r) total += lij(r, (r + static_cast<std::size_t>(k)) % un);
      out.lbasis_ok = out.lbasis_ok && sgn(total) == 0;
      members.push_back(lie_vec(lij));
    }
    out.lbasis_ok = out.lbasis_ok && span_rank(members, un * un) == un - 1;
  }

  auto rep = Representation::conjugation(n);
  ChartData chart = chart_second_fundamental_form(rep, rep.to_vec(out.c), L);
  out.chart_matches = chart.osculates;
  for (std::size_t i = 0; i < un; ++i) {
    QMatrix expect(un, un);
    for (std::size_t k = 0; k < un; ++k)
      if (k != 1) expect = expect + out.closedForm[k](i, i) * cp[k];
    QMatrix got = rep.to_matrix(chart.curv.piVec[i][i]);
    out.chart_matches = out.chart_matches && got == expect;
    if (got.is_zero()) out.zero_self_pi.push_back(static_cast<int>(i));
  }

  Rational num = 0, den = 0;
  QMatrix moved = bracket(out.ell_bar, out.c);
  for (const auto& e : moved.entries()) num += e * e;
  for (const auto& e : out.ell_bar.entries()) den += e * e;
  out.gamma_sq_ell_bar = num / den;
  // Smallest nonzero eigenvalue of the cyclic path Laplacian.
  out.gamma_sq_min_diagonal = 2.0 - 2.0 * std::cos(2.0 * std::numbers::pi / n);

  // r_ijkl = n sum_m (p_il^m p_jk^m - p_jl^m p_ik^m), since <c^a, c^b> = n delta_ab.
  auto rr = [&](std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
    Rational v = 0;
    for (std::size_t m = 0; m < un; ++m) v += out.P[m](i, l) * out.P[m](j, k) - out.P[m](j, l) * out.P[m](i, k);
    return Rational(n * v);
  };
  out.riemann_antisymmetric = true;
  for (std::size_t i = 0; i < un; ++i)
    for (std::size_t j = 0; j < un; ++j)
      for (std::size_t k = 0; k < un; ++k)
        for (std::size_t l = 0; l < un; ++l)
          out.riemann_antisymmetric =
              out.riemann_antisymmetric && rr(i, j, k, l) == -rr(j, i, k, l) && rr(i, j, k, l) == -rr(i, j, l, k);
  return out;
}

}  // namespace ol
