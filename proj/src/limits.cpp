#include "orbitlimits/limits.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "orbitlimits/random.hpp"

namespace ol {

LieElement OnePS::ell() const {
  LieElement l(weights.size(), weights.size());
  for (std::size_t i = 0; i < weights.size(); ++i) l(i, i) = weights[i];
  return l;
}

int lie_weight(const OnePS& lam, std::size_t i, std::size_t j) { return lam.weights[j] - lam.weights[i]; }

std::map<int, LieElement> lie_weight_decompose(const LieElement& g, const OnePS& lam) {
  const std::size_t n = g.rows();
  std::map<int, LieElement> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(g(i, j)) == 0) continue;
      auto [it, fresh] = out.try_emplace(lie_weight(lam, i, j), n, n);
      it->second(i, j) = g(i, j);
    }
  return out;
}

std::map<int, std::size_t> graded_dims(const std::vector<LieElement>& basis, const OnePS& lam) {
  std::map<int, std::vector<QVec>> parts;
  const std::size_t n = lam.weights.size();
  for (const auto& b : basis)
    for (const auto& [w, c] : lie_weight_decompose(b, lam)) parts[w].push_back(lie_vec(c));
  std::map<int, std::size_t> out;
  for (const auto& [w, vs] : parts) {
    std::size_t r = span_rank(vs, n * n);
    if (r > 0) out[w] = r;
  }
  return out;
}

std::map<int, QVec> weight_decompose(const Representation& rep, const QVec& v, const OnePS& lam) {
  auto w = rep.basis_weights(lam.weights);
  std::map<int, QVec> out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (sgn(v[k]) == 0) continue;
    auto [it, fresh] = out.try_emplace(w[k], zero_vec(v.size()));
    it->second[k] = v[k];
  }
  return out;
}

LimitExpansion expand_orbit_curve(const Form& f, const OnePS& lam) {
  if (f.is_zero()) throw std::invalid_argument("expand_orbit_curve: zero form");
  if (lam.weights.size() != static_cast<std::size_t>(f.nvars()))
    throw std::invalid_argument("expand_orbit_curve: weight vector length");
  LimitExpansion ex;
  for (const auto& [e, c] : f.terms()) {
    int w = 0;
    for (std::size_t i = 0; i < e.size(); ++i) w += lam.weights[i] * e[i];
    auto [it, fresh] = ex.components.try_emplace(w, f.nvars(), f.degree());
    it->second.add_term(e, c);
  }
  auto it = ex.components.begin();
  ex.a = it->first;
  ex.g = it->second;
  if (++it != ex.components.end()) {
    ex.has_fb = true;
    ex.b = it->first;
    ex.fb = it->second;
  }
  auto rep = Representation::sym(f.nvars(), f.degree());
  auto to = tangent_space(rep, rep.to_vec(ex.g));
  std::vector<QVec> all(to);
  for (const auto& [w, c] : ex.components)
    if (w > ex.a) all.push_back(rep.to_vec(c));
  ex.transversal = span_rank(all, rep.dim()) == all.size();
  return ex;
}

std::map<int, Form> expand_family(const Form& f, const PMatrix& A) {
  const int n = f.nvars();
  if (A.rows() != static_cast<std::size_t>(n) || A.cols() != A.rows())
    throw std::invalid_argument("expand_family: matrix shape");
  // t is variable n of an (n+1)-variable ring.
  std::vector<MPoly> q;
  for (int i = 0; i < n; ++i) {
    MPoly qi(n + 1);
    for (int j = 0; j < n; ++j) {
      const auto& cs = A(static_cast<std::size_t>(i), static_cast<std::size_t>(j)).coeffs();
      for (std::size_t k = 0; k < cs.size(); ++k) {
        if (sgn(cs[k]) == 0) continue;
        Exponent e(static_cast<std::size_t>(n + 1), 0);
        e[static_cast<std::size_t>(j)] = 1;
        e[static_cast<std::size_t>(n)] = static_cast<int>(k);
        qi.add_term(e, cs[k]);
      }
    }
    q.push_back(std::move(qi));
  }
  MPoly sub = f.substitute(q);
  std::map<int, Form> out;
  for (const auto& [e, c] : sub.terms()) {
    int k = e.back();
    auto [it, fresh] = out.try_emplace(k, n, f.degree());
    it->second.add_term(Exponent(e.begin(), e.end() - 1), c);
  }
  return out;
}

LimitSetup prepare_limit(const Form& f, const OnePS& lam) {
  LimitSetup s;
  s.f = f;
  s.lam = lam;
  s.ex = expand_orbit_curve(f, lam);
  if (!s.ex.transversal) throw TransversalityError("prepare_limit: higher components meet the tangent space");
  s.rep = Representation::sym(f.nvars(), f.degree());
  const std::size_t dim = s.rep.dim();
  QVec g = s.rep.to_vec(s.ex.g);
  std::vector<QVec> fc;
  for (const auto& [w, c] : s.ex.components)
    if (w > s.ex.a) {
      s.fplus[w - s.ex.a] = s.rep.to_vec(c);
      fc.push_back(s.fplus[w - s.ex.a]);
    }
  std::vector<QVec> span(tangent_space(s.rep, g));
  span.insert(span.end(), fc.begin(), fc.end());
  std::vector<QVec> N(fc);
  for (auto& v : orthogonal_complement(span, dim)) N.push_back(std::move(v));
  s.lm = build_local_model(s.rep, g, ComplementPolicy::Explicit, {}, N);
  return s;
}

MNMS build_MN_MS(const LimitSetup& setup) {
  const LocalModel& lm = setup.lm;
  const std::size_t p = lm.p(), m = lm.m(), r = lm.H.size();
  PMatrix phi(p, p), lsb(p, r), lnb(m, r), lnu(m, p);
  for (const auto& [c, fc] : setup.fplus) {
    for (std::size_t i = 0; i < p; ++i) {
      QVec co = lm.coord.apply(lm.rep.act(lm.S[i], fc));
      for (std::size_t k = 0; k < p; ++k)
        if (sgn(co[k]) != 0) phi(k, i) += UniPoly::monomial(co[k], c);
      for (std::size_t k = 0; k < m; ++k)
        if (sgn(co[p + k]) != 0) lnu(k, i) += UniPoly::monomial(co[p + k], c);
    }
    for (std::size_t j = 0; j < r; ++j) {
      QVec co = lm.coord.apply(lm.rep.act(lm.H[j], fc));
      for (std::size_t k = 0; k < p; ++k)
        if (sgn(co[k]) != 0) lsb(k, j) += UniPoly::monomial(co[k], c);
      for (std::size_t k = 0; k < m; ++k)
        if (sgn(co[p + k]) != 0) lnb(k, j) += UniPoly::monomial(co[p + k], c);
    }
  }
  MNMS out;
  out.Phi = phi;
  PMatrix ip = PMatrix::identity(p) + phi;
  if (auto x = neumann_solve(phi, lsb, p + 1)) {
    out.neumann = true;
    out.MS = to_fn(*x);
    out.Delta = det(ip);
  } else {
    Adjugate adj = invert_via_adjugate(ip);
    out.Delta = adj.det;
    FMatrix ms = to_fn(adj.adj * lsb);
    RationalFn inv(UniPoly(1), adj.det);
    out.MS = inv * ms;
  }
  out.MN = to_fn(lnb) - to_fn(lnu) * out.MS;
  return out;
}

namespace {

std::vector<QVec> as_vecs(const std::vector<LieElement>& es) {
  std::vector<QVec> v;
  for (const auto& e : es) v.push_back(lie_vec(e));
  return v;
}

// Normalized f(t) at t0: sum t0^{c-a} f_c.
QVec curve_point(const LimitSetup& s, const Rational& t0) {
  QVec v = s.lm.x;
  for (const auto& [c, fc] : s.fplus) {
    Rational tc = 1;
    for (int k = 0; k < c; ++k) tc *= t0;
    axpy(v, tc, fc);
  }
  return v;
}

PolyLie column_to_lie(const PMatrix& m, std::size_t j, std::size_t n) {
  PolyLie k(n, n);
  for (std::size_t i = 0; i < n * n; ++i) k(i / n, i % n) = m(i, j);
  return k;
}

}  // namespace

LimitAlgebraData limit_algebra(const Form& f, const OnePS& lam, std::uint64_t seed) {
  return limit_algebra(prepare_limit(f, lam), seed);
}

LimitAlgebraData limit_algebra(const LimitSetup& setup, std::uint64_t seed) {
  const LocalModel& lm = setup.lm;
  const std::size_t n = lm.rep.n(), g = n * n, p = lm.p(), r = lm.H.size();
  LimitAlgebraData out;
  out.H = lm.H;
  out.gradedDimsH = graded_dims(lm.H, setup.lam);
  MNMS mm = build_MN_MS(setup);
  out.Delta = mm.Delta;

  auto ker = nullspace(mm.MN);
  out.dimK = ker.size();
  if (ker.empty()) {
    out.verified = stabilizer_algebra(lm.rep, lm.rep.to_vec(setup.f)).empty();
    return out;
  }
  FMatrix alpha = FMatrix::from_columns(ker, r);
  FMatrix sco = mm.MS * alpha;  // p x k
  FMatrix kfull(g, ker.size());
  for (std::size_t c = 0; c < ker.size(); ++c)
    for (std::size_t e = 0; e < g; ++e) {
      RationalFn acc;
      for (std::size_t j = 0; j < r; ++j) {
        const Rational& x = lm.H[j](e / n, e % n);
        if (sgn(x) != 0 && !alpha(j, c).is_zero()) acc += RationalFn(x) * alpha(j, c);
      }
      for (std::size_t i = 0; i < p; ++i) {
        const Rational& x = lm.S[i](e / n, e % n);
        if (sgn(x) != 0 && !sco(i, c).is_zero()) acc -= RationalFn(x) * sco(i, c);
      }
      kfull(e, c) = acc;
    }
  PMatrix K = column_normalize(kfull);

  // gl = S + H is a constant splitting, so the parts stay polynomial.
  std::vector<QVec> sh = as_vecs(lm.S);
  for (const auto& h : lm.H) sh.push_back(lie_vec(h));
  QMatrix split = inverse(QMatrix::from_columns(sh, g));
  for (std::size_t c = 0; c < K.cols(); ++c) {
    PolyLie kt = column_to_lie(K, c, n), st(n, n), ht(n, n);
    for (std::size_t q = 0; q < g; ++q) {
      UniPoly coef;
      for (std::size_t e = 0; e < g; ++e)
        if (sgn(split(q, e)) != 0 && !K(e, c).is_zero()) coef += split(q, e) * K(e, c);
      if (coef.is_zero()) continue;
      const LieElement& b = q < p ? lm.S[q] : lm.H[q - p];
      for (std::size_t e = 0; e < g; ++e)
        if (sgn(b(e / n, e % n)) != 0) (q < p ? st : ht)(e / n, e % n) += b(e / n, e % n) * coef;
    }
    out.Kt.push_back(kt);
    out.St.push_back(st);
    out.Ht.push_back(ht);
    out.K0.push_back(eval(kt, Rational(0)));
  }
  out.gradedDims = graded_dims(out.K0, setup.lam);

  Rng rng(seed);
  Rational t0;
  do {
    t0 = random_rational(rng, 7, 5);
  } while (sgn(t0) == 0 || sgn(mm.Delta.eval(t0)) == 0);
  out.t0 = t0;
  QVec ft = curve_point(setup, t0);
  bool ok = true;
  std::vector<QVec> kv;
  for (const auto& kt : out.Kt) {
    LieElement k = eval(kt, t0);
    ok = ok && is_zero(lm.rep.act(k, ft));
    kv.push_back(lie_vec(k));
  }
  ok = ok && span_rank(kv, g) == out.dimK;
  ok = ok && stabilizer_algebra(lm.rep, ft).size() == out.dimK;
  ok = ok && stabilizer_algebra(lm.rep, lm.rep.to_vec(setup.f)).size() == out.dimK;
  out.verified = ok;
  out.structureConstants = structure_constants(out.Kt);
  return out;
}

std::vector<std::vector<std::vector<RationalFn>>> structure_constants(const std::vector<PolyLie>& basis) {
  const std::size_t k = basis.size();
  std::vector<std::vector<std::vector<RationalFn>>> out(
      k, std::vector<std::vector<RationalFn>>(k, std::vector<RationalFn>(k)));
  if (k == 0) return out;
  const std::size_t n = basis.front().rows(), g = n * n;
  PMatrix B(g, k);
  for (std::size_t c = 0; c < k; ++c)
    for (std::size_t e = 0; e < g; ++e) B(e, c) = basis[c](e / n, e % n);
  // Rows on which B(0) is invertible; B(t) restricted to them has det != 0.
  std::vector<std::size_t> rows;
  rref(eval(B, Rational(0)).transpose(), &rows);
  if (rows.size() != k) throw std::domain_error("structure_constants: basis is degenerate at t = 0");
  PMatrix BR(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t c = 0; c < k; ++c) BR(i, c) = B(rows[i], c);
  Adjugate adj = invert_via_adjugate(BR);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      PolyLie br = basis[i] * basis[j] - basis[j] * basis[i];
      PMatrix cR(k, 1), cfull(g, 1);
      for (std::size_t e = 0; e < g; ++e) cfull(e, 0) = br(e / n, e % n);
      for (std::size_t q = 0; q < k; ++q) cR(q, 0) = cfull(rows[q], 0);
      PMatrix num = adj.adj * cR;
      if (B * num != adj.det * cfull) throw std::domain_error("structure_constants: span is not closed");
      for (std::size_t q = 0; q < k; ++q) {
        RationalFn c(num(q, 0), adj.det);
        out[i][j][q] = c;
        out[j][i][q] = -c;
      }
    }
  return out;
}

std::vector<LieElement> limit_algebra_by_conjugation(const Form& f, const OnePS& lam) {
  auto rep = Representation::sym(f.nvars(), f.degree());
  auto K = stabilizer_algebra(rep, rep.to_vec(f));
  const std::size_t n = rep.n(), g = n * n;
  if (K.empty()) return {};
  // Lowest weight first: the pivot of each row sits in its lowest weight.
  std::vector<std::size_t> order(g);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return lie_weight(lam, x / n, x % n) < lie_weight(lam, y / n, y % n);
  });
  QMatrix m(K.size(), g);
  for (std::size_t r = 0; r < K.size(); ++r)
    for (std::size_t c = 0; c < g; ++c) m(r, c) = K[r](order[c] / n, order[c] % n);
  std::vector<std::size_t> piv;
  QMatrix e = rref(m, &piv);
  std::vector<LieElement> out;
  for (std::size_t r = 0; r < piv.size(); ++r) {
    int w = lie_weight(lam, order[piv[r]] / n, order[piv[r]] % n);
    LieElement lead(n, n);
    for (std::size_t c = 0; c < g; ++c) {
      std::size_t q = order[c];
      if (lie_weight(lam, q / n, q % n) == w) lead(q / n, q % n) = e(r, c);
    }
    out.push_back(lead);
  }
  return out;
}

}  // namespace ol
