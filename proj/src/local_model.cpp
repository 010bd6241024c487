#include "orbitlimits/local_model.hpp"

#include <stdexcept>

namespace ol {

QVec LocalModel::lambda_S(const QVec& dv) const {
  QVec c = coord.apply(dv);
  return QVec(c.begin(), c.begin() + static_cast<long>(p()));
}

QVec LocalModel::lambda_N(const QVec& dv) const {
  QVec c = coord.apply(dv);
  return QVec(c.begin() + static_cast<long>(p()), c.end());
}

QVec LocalModel::n_vector(const QVec& ncoords) const {
  QVec v = zero_vec(rep.dim());
  for (std::size_t j = 0; j < N.size(); ++j) axpy(v, ncoords[j], N[j]);
  return v;
}

LieElement LocalModel::s_element(const QVec& scoords) const {
  LieElement g(rep.n(), rep.n());
  for (std::size_t i = 0; i < S.size(); ++i)
    if (sgn(scoords[i]) != 0) g = g + scoords[i] * S[i];
  return g;
}

std::pair<QVec, QVec> LocalModel::split(const LieElement& g) const {
  std::vector<QVec> basis;
  for (const auto& s : S) basis.push_back(lie_vec(s));
  for (const auto& h : H) basis.push_back(lie_vec(h));
  auto c = coordinates(basis, lie_vec(g));
  if (!c) throw std::logic_error("split: S + H does not span gl");
  QVec s(c->begin(), c->begin() + static_cast<long>(p()));
  QVec h(c->begin() + static_cast<long>(p()), c->end());
  return {s, h};
}

LocalModel build_local_model(const Representation& rep, const QVec& x, ComplementPolicy policy,
                             const std::vector<LieElement>& explicit_S,
                             const std::vector<QVec>& explicit_N, std::optional<LeviData> levi) {
  if (x.size() != rep.dim()) throw std::invalid_argument("build_local_model: point has wrong dimension");
  if (is_zero(x)) throw std::invalid_argument("build_local_model: base point is zero");
  LocalModel lm;
  lm.rep = rep;
  lm.x = x;
  lm.H = stabilizer_algebra(rep, x);
  const std::size_t g = rep.gl_dim(), dim = rep.dim();
  std::vector<QVec> hv;
  for (const auto& h : lm.H) hv.push_back(lie_vec(h));

  if (policy == ComplementPolicy::Explicit && !explicit_S.empty()) {
    lm.S = explicit_S;
  } else {
    for (const auto& v : orthogonal_complement(hv, g)) lm.S.push_back(lie_unvec(v, rep.n()));
  }
  if (lm.S.size() + lm.H.size() != g) throw std::invalid_argument("build_local_model: S has the wrong dimension");
  {
    std::vector<QVec> all(hv);
    for (const auto& s : lm.S) all.push_back(lie_vec(s));
    if (span_rank(all, g) != g) throw std::invalid_argument("build_local_model: S is not transverse to H");
  }
  for (const auto& s : lm.S) lm.TO.push_back(rep.act(s, x));

  if (policy == ComplementPolicy::Explicit && !explicit_N.empty()) {
    lm.N = explicit_N;
  } else {
    lm.N = orthogonal_complement(lm.TO, dim);
  }
  if (lm.N.size() + lm.TO.size() != dim) throw std::invalid_argument("build_local_model: N has the wrong dimension");

  std::vector<QVec> cols(lm.TO);
  cols.insert(cols.end(), lm.N.begin(), lm.N.end());
  try {
    lm.coord = inverse(QMatrix::from_columns(cols, dim));
  } catch (const SingularMatrix&) {
    throw std::invalid_argument("build_local_model: N is not transverse to the tangent space");
  }

  if (levi) {
    std::vector<QVec> rq;
    for (const auto& r : levi->R) rq.push_back(lie_vec(r));
    for (const auto& q : levi->Q) rq.push_back(lie_vec(q));
    if (!same_span(rq, hv, g)) throw std::invalid_argument("build_local_model: R + Q is not H");
    for (const auto& r : levi->R)
      for (const auto& nv : lm.N)
        if (!in_span(lm.N, rep.act(r, nv)))
          throw std::invalid_argument("build_local_model: N is not R-invariant");
  }
  lm.levi = std::move(levi);
  return lm;
}

QMatrix theta_matrix(const LocalModel& lm, const QVec& n) {
  const std::size_t dim = lm.rep.dim();
  QMatrix t(dim, dim);
  for (std::size_t i = 0; i < lm.p(); ++i) {
    QVec sn = lm.rep.act(lm.S[i], n);
    for (std::size_t r = 0; r < dim; ++r) {
      if (sgn(sn[r]) == 0) continue;
      for (std::size_t c = 0; c < dim; ++c)
        if (sgn(lm.coord(i, c)) != 0) t(r, c) += sn[r] * lm.coord(i, c);
    }
  }
  return t;
}

QVec theta(const LocalModel& lm, const QVec& n, const QVec& dv) {
  return lm.rep.act(lm.s_element(lm.lambda_S(dv)), n);
}

QVec phi(const LocalModel& lm, const QVec& s, const QVec& n) {
  return lm.lambda_S(lm.rep.act(lm.s_element(s), n));
}

QMatrix phi_matrix(const LocalModel& lm, const QVec& n) {
  QMatrix m(lm.p(), lm.p());
  for (std::size_t i = 0; i < lm.p(); ++i) m.set_col(i, lm.lambda_S(lm.rep.act(lm.S[i], n)));
  return m;
}

QVec inverse_one_plus_theta(const LocalModel& lm, const QVec& n, const QVec& dv) {
  if (lm.p() == 0) return dv;
  // (1 + U V)^{-1} = 1 - U (I + V U)^{-1} V with U = [S_i.n], V = lambda_S.
  QMatrix a = QMatrix::identity(lm.p()) + phi_matrix(lm, n);
  Rational d = det(a);
  if (sgn(d) == 0) throw SingularTheta("1 + theta(n) is singular", d);
  QVec y = *solve(a, lm.lambda_S(dv));
  return dv - lm.rep.act(lm.s_element(y), n);
}

Decomposition solve_decomposition(const LocalModel& lm, const QVec& n, const QVec& dv) {
  QVec w = inverse_one_plus_theta(lm, n, dv);
  QVec c = lm.coord.apply(w);
  Decomposition d;
  d.s.assign(c.begin(), c.begin() + static_cast<long>(lm.p()));
  d.nprime.assign(c.begin() + static_cast<long>(lm.p()), c.end());
  return d;
}

SliceTangent local_action(const LocalModel& lm, const LieElement& g, const QVec& n) {
  auto [s, hc] = lm.split(g);
  LieElement h(lm.rep.n(), lm.rep.n());
  for (std::size_t k = 0; k < lm.H.size(); ++k)
    if (sgn(hc[k]) != 0) h = h + hc[k] * lm.H[k];
  Decomposition d = solve_decomposition(lm, n, lm.rep.act(h, n));
  return {s + d.s, d.nprime};
}

SliceStabilizer slice_stabilizer(const LocalModel& lm, const QVec& n) {
  const std::size_t q = lm.H.size();
  std::vector<Decomposition> parts;
  QMatrix sys(lm.m(), q);
  for (std::size_t k = 0; k < q; ++k) {
    parts.push_back(solve_decomposition(lm, n, lm.rep.act(lm.H[k], n)));
    sys.set_col(k, parts.back().nprime);
  }
  SliceStabilizer out;
  for (const auto& c : nullspace(sys)) {
    LieElement h(lm.rep.n(), lm.rep.n());
    QVec s = zero_vec(lm.p());
    for (std::size_t k = 0; k < q; ++k) {
      if (sgn(c[k]) == 0) continue;
      h = h + c[k] * lm.H[k];
      axpy(s, c[k], parts[k].s);
    }
    out.Hn.push_back(h);
    out.elements.push_back(h - lm.s_element(s));
  }
  return out;
}

LieElement s_completion(const LocalModel& lm, const LieElement& h, const QVec& n) {
  Decomposition d = solve_decomposition(lm, n, lm.rep.act(h, n));
  return -lm.s_element(d.s);
}

}  // namespace ol
