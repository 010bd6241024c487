#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "orbitlimits/limits.hpp"
#include "orbitlimits/random.hpp"

namespace ol {

namespace {

std::vector<QVec> as_vecs(const std::vector<LieElement>& es) {
  std::vector<QVec> v;
  for (const auto& e : es) v.push_back(lie_vec(e));
  return v;
}

std::vector<LieElement> as_lie(const std::vector<QVec>& vs, std::size_t n) {
  std::vector<LieElement> out;
  for (const auto& v : vs) out.push_back(lie_unvec(v, n));
  return out;
}

std::vector<QVec> weight_space(const OnePS& lam, int w) {
  const std::size_t n = lam.weights.size();
  std::vector<QVec> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (lie_weight(lam, i, j) == w) out.push_back(lie_vec(unit_matrix(n, i, j)));
  return out;
}

std::set<int> lie_weights(const OnePS& lam) {
  std::set<int> ws;
  const std::size_t n = lam.weights.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) ws.insert(lie_weight(lam, i, j));
  return ws;
}

// Basis of the Lie elements of weight w that lie in span(K).
std::vector<LieElement> pure_part(const std::vector<QVec>& K, const OnePS& lam, int w) {
  const std::size_t n = lam.weights.size();
  return as_lie(intersect(K, weight_space(lam, w), n * n), n);
}

Form fb_of(const LimitSetup& s) {
  if (!s.ex.has_fb) throw std::invalid_argument("the orbit curve is constant; there is no f_b");
  return s.ex.fb;
}

}  // namespace

QVec star_action(const LocalModel& lm, const LieElement& h, const QVec& n) {
  if (!in_span(as_vecs(lm.H), lie_vec(h))) throw std::invalid_argument("star_action: h is not in the stabilizer");
  return lm.lambda_N(lm.rep.act(h, lm.n_vector(n)));
}

ExitTangent tangent_of_exit(const Form& f, const OnePS& lam) {
  auto ex = expand_orbit_curve(f, lam);
  LieElement ell = lam.ell();
  ExitTangent out;
  out.ell_f = act_on_form(ell, f);
  // (a/d) I acts on degree-d forms as multiplication by a.
  out.ell_prime_f = out.ell_f - Rational(ex.a) * f;
  return out;
}

LieElement ell_prime(const OnePS& lam, int a, int degree) {
  Rational shift(a, degree);
  shift.canonicalize();
  LieElement l = lam.ell();
  for (std::size_t i = 0; i < l.rows(); ++i) l(i, i) -= shift;
  return l;
}

std::string TripleStabilizers::summary() const {
  std::ostringstream os;
  bool first = true;
  for (auto it = pure.rbegin(); it != pure.rend(); ++it) {
    os << (first ? "" : "+") << it->second.size();
    first = false;
  }
  return os.str();
}

TripleStabilizers triple_stabilizers(const Form& f, const OnePS& lam) {
  auto rep = Representation::sym(f.nvars(), f.degree());
  const std::size_t n = rep.n();
  auto Kl = stabilizer_algebra(rep, rep.to_vec(f));
  auto K = as_vecs(Kl);
  TripleStabilizers out;
  auto ex = expand_orbit_curve(f, lam);
  for (int w : lie_weights(lam)) {
    out.pure[w] = pure_part(K, lam, w);
    for (const auto& k : out.pure[w])
      for (const auto& [c, fc] : ex.components)
        if (!act_on_form(k, fc).is_zero()) out.pure_kill_components = false;
  }
  // {sum c_i K_i : sum c_i [K_i, l] in span K} from the kernel of [[K_i,l] | K].
  LieElement ell = lam.ell();
  std::vector<QVec> cols;
  for (const auto& k : Kl) cols.push_back(lie_vec(bracket(k, ell)));
  cols.insert(cols.end(), K.begin(), K.end());
  std::vector<QVec> span;
  for (const auto& v : nullspace(QMatrix::from_columns(cols, n * n))) {
    QVec x = zero_vec(n * n);
    for (std::size_t i = 0; i < Kl.size(); ++i) axpy(x, v[i], K[i]);
    span.push_back(x);
  }
  out.Klf = as_lie(span_basis(span, n * n), n);
  return out;
}

std::map<int, std::size_t> filtered_dims(const Form& f, const OnePS& lam) {
  auto rep = Representation::sym(f.nvars(), f.degree());
  const std::size_t n = rep.n();
  auto K = stabilizer_algebra(rep, rep.to_vec(f));
  std::map<int, std::size_t> out;
  for (int w : lie_weights(lam)) {
    std::vector<QVec> low;
    for (const auto& k : K) {
      LieElement proj(n, n);
      for (const auto& [v, c] : lie_weight_decompose(k, lam))
        if (v < w) proj = proj + c;
      low.push_back(lie_vec(proj));
    }
    out[w] = K.size() - span_rank(low, n * n);
  }
  return out;
}

CaseResult classify_case(const Form& f, const OnePS& lam, std::uint64_t seed) {
  auto rep = Representation::sym(f.nvars(), f.degree());
  const std::size_t n = rep.n();
  auto Kl = stabilizer_algebra(rep, rep.to_vec(f));
  auto K = as_vecs(Kl);
  CaseResult out;
  out.u = QMatrix::identity(n);

  for (int w : lie_weights(lam)) {
    auto pure = pure_part(K, lam, w);
    if (!pure.empty()) {
      out.tag = CaseTag::B;
      out.pure_witness = true;
      out.k = out.ku = pure.front();
      out.note = "pure element of weight " + std::to_string(w);
      return out;
    }
  }

  auto K0 = limit_algebra_by_conjugation(f, lam);
  out.lcs = lower_central_series(K0);
  bool comps = true;
  for (const auto& k : K0) {
    bool nil = minimal_polynomial(k) == UniPoly::monomial(1, minimal_polynomial(k).degree());
    out.components_nilpotent.push_back(nil);
    comps = comps && nil;
  }
  if (out.lcs.back() == 0 && comps) {
    out.tag = CaseTag::A;
    out.note = "limit algebra is nilpotent";
    return out;
  }

  // Semisimple elements of P cap K, conjugated into L by U(lambda).
  std::vector<QVec> P;
  for (int w : lie_weights(lam))
    if (w >= 0)
      for (auto& v : weight_space(lam, w)) P.push_back(std::move(v));
  auto PK = intersect(K, P, n * n);
  std::vector<QVec> candidates(PK);
  Rng rng(seed);
  for (int trial = 0; trial < 8 && PK.size() > 1; ++trial) {
    QVec v = zero_vec(n * n);
    for (const auto& b : PK) axpy(v, random_rational(rng, 3, 1), b);
    candidates.push_back(v);
  }
  auto ex = expand_orbit_curve(f, lam);
  int wmax = *lie_weights(lam).rbegin();
  for (const auto& cv : candidates) {
    LieElement k = semisimple_part(lie_unvec(cv, n));
    if (k.is_zero() || !act_on_form(k, f).is_zero()) continue;
    LieElement cur = k, u = QMatrix::identity(n);
    bool ok = true;
    for (int c = 1; c <= wmax && ok; ++c) {
      auto parts = lie_weight_decompose(cur, lam);
      if (!parts.count(c)) continue;
      LieElement k0 = parts.count(0) ? parts.at(0) : LieElement(n, n);
      auto basis = weight_space(lam, c);
      std::vector<QVec> cols;
      for (const auto& b : basis) cols.push_back(lie_vec(bracket(k0, lie_unvec(b, n))));
      auto sol = solve(QMatrix::from_columns(cols, n * n), lie_vec(-parts.at(c)));
      if (!sol) {
        ok = false;
        break;
      }
      QVec x = zero_vec(n * n);
      for (std::size_t i = 0; i < basis.size(); ++i) axpy(x, (*sol)[i], basis[i]);
      LieElement X = lie_unvec(x, n);
      cur = exp_nilpotent(-X) * cur * exp_nilpotent(X);
      u = u * exp_nilpotent(X);
    }
    if (!ok) continue;
    auto parts = lie_weight_decompose(cur, lam);
    if (parts.size() != 1 || !parts.count(0)) continue;
    std::vector<QVec> rows;
    for (std::size_t i = 0; i < n; ++i) rows.push_back(u.row(i));
    Form uf = linear_substitute(f, rows);
    if (!act_on_form(cur, uf).is_zero()) continue;
    if (expand_orbit_curve(uf, lam).g != ex.g) continue;
    out.tag = CaseTag::B;
    out.k = k;
    out.u = u;
    out.ku = cur;
    out.note = "semisimple element conjugated into the Levi part";
    return out;
  }
  out.tag = CaseTag::SearchExhausted;
  out.note = "no pure element, limit algebra not nilpotent, semisimple search exhausted";
  return out;
}

std::vector<LieElement> star_stabilizer(const LimitSetup& setup) {
  const LocalModel& lm = setup.lm;
  QVec fb = lm.rep.to_vec(fb_of(setup));
  QMatrix m(lm.m(), lm.H.size());
  for (std::size_t j = 0; j < lm.H.size(); ++j) m.set_col(j, lm.lambda_N(lm.rep.act(lm.H[j], fb)));
  std::vector<LieElement> out;
  const std::size_t n = lm.rep.n();
  for (const auto& c : nullspace(m)) {
    LieElement h(n, n);
    for (std::size_t j = 0; j < c.size(); ++j)
      if (sgn(c[j]) != 0) h = h + c[j] * lm.H[j];
    out.push_back(h);
  }
  return out;
}

namespace {

LieElement db_value(const LimitSetup& setup, const QVec& fb, const LieElement& h) {
  const LocalModel& lm = setup.lm;
  QVec v = lm.rep.act(h, fb);
  if (!is_zero(lm.lambda_N(v))) throw NotInHb("derivation_db: h.f_b is not tangent to the orbit of g");
  return lm.s_element(lm.lambda_S(v));
}

}  // namespace

DerivationData derivation_db(const LimitSetup& setup, const std::vector<LieElement>& domain) {
  QVec fb = setup.lm.rep.to_vec(fb_of(setup));
  DerivationData out;
  out.domain = domain;
  for (const auto& h : domain) out.values.push_back(db_value(setup, fb, h));
  auto H = as_vecs(setup.lm.H);
  out.identity_holds = true;
  for (std::size_t i = 0; i < domain.size() && out.identity_holds; ++i)
    for (std::size_t j = i + 1; j < domain.size(); ++j) {
      LieElement lhs;
      try {
        lhs = db_value(setup, fb, bracket(domain[i], domain[j]));
      } catch (const NotInHb&) {
        out.identity_holds = false;
        break;
      }
      LieElement rhs = bracket(domain[i], out.values[j]) - bracket(domain[j], out.values[i]);
      if (!in_span(H, lie_vec(lhs - rhs))) {
        out.identity_holds = false;
        break;
      }
    }
  return out;
}

HoffmanCase hoffman_case(const std::vector<LieElement>& K, const std::vector<LieElement>& H) {
  if (H.empty()) return HoffmanCase::NotCodimOne;
  const std::size_t g = H.front().rows() * H.front().cols(), n = H.front().rows();
  auto kv = span_basis(as_vecs(K), g);
  auto hv = span_basis(as_vecs(H), g);
  if (hv.size() != kv.size() + 1) return HoffmanCase::NotCodimOne;
  // Largest ideal of H inside K.
  std::vector<QVec> I = kv;
  for (;;) {
    // {x in I : [h, x] in I for all h}
    auto comp = orthogonal_complement(I, g);
    std::vector<QVec> eqs;
    for (const auto& h : hv)
      for (const auto& c : comp) {
        QVec row(I.size());
        for (std::size_t k = 0; k < I.size(); ++k) row[k] = dot(c, lie_vec(bracket(lie_unvec(h, n), lie_unvec(I[k], n))));
        eqs.push_back(row);
      }
    std::vector<QVec> next;
    if (eqs.empty()) {
      next = I;
    } else {
      for (const auto& c : nullspace(QMatrix::from_rows(eqs, I.size()))) {
        QVec x = zero_vec(g);
        for (std::size_t k = 0; k < I.size(); ++k) axpy(x, c[k], I[k]);
        next.push_back(x);
      }
    }
    if (next.size() == I.size()) break;
    I = span_basis(next, g);
    if (I.empty()) break;
  }
  std::size_t codim = hv.size() - I.size();
  if (codim == 1) return HoffmanCase::Ideal;
  if (codim == 2) return HoffmanCase::Parabolic;
  if (codim == 3) return HoffmanCase::SlTwo;
  return HoffmanCase::NotCodimOne;
}

ExtensionResult extension_feasible(const LimitSetup& setup, const std::vector<LieElement>& K0) {
  const LocalModel& lm = setup.lm;
  const std::size_t n = lm.rep.n(), g = n * n;
  ExtensionResult out;
  out.hoffman = hoffman_case(K0, lm.H);

  const int ba = setup.ex.b - setup.ex.a;
  out.regular_i = setup.ex.has_fb;
  for (const auto& [c, fc] : setup.fplus)
    if (c % ba != 0) out.regular_i = false;
  {
    auto K = stabilizer_algebra(lm.rep, lm.rep.to_vec(setup.f));
    auto H = as_vecs(lm.H);
    out.regular_ii = false;
    for (const auto& k : K)
      if (!in_span(H, lie_vec(k))) out.regular_ii = true;
  }

  auto kv = span_basis(as_vecs(K0), g);
  const std::size_t kk = kv.size();
  std::vector<LieElement> ks = as_lie(kv, n);
  QVec fb = lm.rep.to_vec(fb_of(setup));
  std::vector<LieElement> s0;
  try {
    for (const auto& k : ks) s0.push_back(db_value(setup, fb, k));
  } catch (const NotInHb&) {
    out.feasible = false;
    return out;
  }
  auto C = complement_within(kv, as_vecs(lm.H), g);
  const std::size_t nc = C.size();

  // Coordinates modulo K0: first g - kk coordinates in the basis [W | K0].
  std::vector<QVec> unit;
  for (std::size_t e = 0; e < g; ++e) {
    QVec v = zero_vec(g);
    v[e] = 1;
    unit.push_back(v);
  }
  auto W = complement_within(kv, unit, g);
  std::vector<QVec> basis(W);
  basis.insert(basis.end(), kv.begin(), kv.end());
  QMatrix coord = inverse(QMatrix::from_columns(basis, g));
  auto modk = [&](const LieElement& x) {
    QVec c = coord.apply(lie_vec(x));
    return QVec(c.begin(), c.begin() + static_cast<long>(W.size()));
  };

  // Unknown u[i*nc + c]: dbar(k_i) = s0_i + sum_c u C_c.
  std::vector<QVec> rows;
  QVec rhs;
  const std::size_t nu = kk * nc;
  for (std::size_t i = 0; i < kk; ++i)
    for (std::size_t j = i + 1; j < kk; ++j) {
      auto cij = coordinates(kv, lie_vec(bracket(ks[i], ks[j])));
      if (!cij) throw std::invalid_argument("extension_feasible: K0 is not a subalgebra");
      // E = sum_m c_m dbar(k_m) - [k_i, dbar k_j] + [k_j, dbar k_i] must vanish mod K0.
      LieElement e0(n, n);
      for (std::size_t m = 0; m < kk; ++m)
        if (sgn((*cij)[m]) != 0) e0 = e0 + (*cij)[m] * s0[m];
      e0 = e0 - bracket(ks[i], s0[j]) + bracket(ks[j], s0[i]);
      std::vector<QVec> lin(nu, zero_vec(W.size()));
      for (std::size_t c = 0; c < nc; ++c) {
        LieElement Cc = lie_unvec(C[c], n);
        for (std::size_t m = 0; m < kk; ++m)
          if (sgn((*cij)[m]) != 0) axpy(lin[m * nc + c], (*cij)[m], modk(Cc));
        lin[j * nc + c] = lin[j * nc + c] - modk(bracket(ks[i], Cc));
        lin[i * nc + c] = lin[i * nc + c] + modk(bracket(ks[j], Cc));
      }
      QVec b = modk(e0);
      for (std::size_t r = 0; r < W.size(); ++r) {
        QVec row(nu);
        bool any = sgn(b[r]) != 0;
        for (std::size_t q = 0; q < nu; ++q) {
          row[q] = lin[q][r];
          any = any || sgn(row[q]) != 0;
        }
        if (!any) continue;
        rows.push_back(row);
        rhs.push_back(-b[r]);
      }
    }
  QVec u(nu);
  if (!rows.empty()) {
    if (nu == 0) {
      out.feasible = false;
      return out;
    }
    auto sol = solve(QMatrix::from_rows(rows, nu), rhs);
    if (!sol) {
      out.feasible = false;
      return out;
    }
    u = *sol;
  }
  out.feasible = true;
  for (std::size_t i = 0; i < kk; ++i) {
    LieElement d = s0[i];
    for (std::size_t c = 0; c < nc; ++c)
      if (sgn(u[i * nc + c]) != 0) d = d + u[i * nc + c] * lie_unvec(C[c], n);
    out.dbar.push_back(d);
    out.epsilon_generators.emplace_back(ks[i], -d);
  }
  return out;
}

bool GradedConditionReport::all_ok() const {
  return std::all_of(entries.begin(), entries.end(), [](const Entry& e) { return e.ok; });
}

GradedConditionReport check_graded_conditions(const LimitSetup& setup, const std::vector<LieElement>& K0) {
  const LocalModel& lm = setup.lm;
  const std::size_t n = lm.rep.n();
  GradedConditionReport out;
  out.b_minus_a = setup.ex.b - setup.ex.a;
  QVec fb = lm.rep.to_vec(fb_of(setup));
  auto kv = as_vecs(K0);
  for (int w : lie_weights(setup.lam)) {
    for (const auto& h : pure_part(kv, setup.lam, w)) {
      GradedConditionReport::Entry e{w, w + out.b_minus_a, false, h, LieElement(n, n)};
      QVec target = lm.rep.act(h, fb);
      auto basis = weight_space(setup.lam, e.s_weight);
      if (basis.empty()) {
        e.ok = is_zero(target);
      } else {
        std::vector<QVec> cols;
        for (const auto& b : basis) cols.push_back(lm.rep.act(lie_unvec(b, n), lm.x));
        if (auto sol = solve(QMatrix::from_columns(cols, lm.rep.dim()), target)) {
          e.ok = true;
          QVec x = zero_vec(n * n);
          for (std::size_t i = 0; i < basis.size(); ++i) axpy(x, (*sol)[i], basis[i]);
          e.s = lie_unvec(x, n);
        }
      }
      out.entries.push_back(std::move(e));
    }
  }
  return out;
}

}  // namespace ol
