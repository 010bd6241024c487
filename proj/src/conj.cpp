#include "orbitlimits/conj.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "orbitlimits/random.hpp"

namespace ol {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p <= 0) throw std::invalid_argument("Partition: parts must be positive");
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

int Partition::n() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string Partition::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << ")";
  return os.str();
}

Partition transpose(const Partition& p) {
  std::vector<int> t;
  for (int i = 1; !p.parts().empty() && i <= p.parts().front(); ++i) {
    int c = 0;
    for (int x : p.parts()) c += x >= i ? 1 : 0;
    t.push_back(c);
  }
  return Partition(t);
}

bool dominates(const Partition& a, const Partition& b) {
  if (a.n() != b.n()) throw std::invalid_argument("dominates: partitions of different sizes");
  int sa = 0, sb = 0;
  for (std::size_t i = 0; i < std::max(a.length(), b.length()); ++i) {
    sa += a[i];
    sb += b[i];
    if (sa < sb) return false;
  }
  return true;
}

namespace {

void partitions_rec(int rem, int maxpart, std::vector<int>& cur, std::vector<Partition>& out) {
  if (rem == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(rem, maxpart); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(rem - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: negative size");
  std::vector<Partition> out;
  std::vector<int> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

int JordanSpec::n() const {
  int s = 0;
  for (const auto& b : blocks) s += b.sizes.n();
  return s;
}

bool JordanSpec::rational() const {
  return std::all_of(blocks.begin(), blocks.end(), [](const EigenBlocks& b) { return b.eig.has_value(); });
}

void JordanSpec::validate() const {
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (blocks[i].sizes.length() == 0) throw std::invalid_argument("JordanSpec: empty block list");
    for (std::size_t j = i + 1; j < blocks.size(); ++j) {
      bool same = blocks[i].eig && blocks[j].eig ? *blocks[i].eig == *blocks[j].eig
                                                 : !blocks[i].eig && !blocks[j].eig && blocks[i].label == blocks[j].label;
      if (same) throw std::invalid_argument("JordanSpec: repeated eigenvalue");
    }
  }
}

namespace {

using Key = std::pair<int, std::vector<int>>;

void structures_rec(int rem, const Key& bound, std::vector<Partition>& cur, std::vector<JordanSpec>& out) {
  if (rem == 0) {
    JordanSpec s;
    for (std::size_t i = 0; i < cur.size(); ++i)
      s.blocks.push_back({Rational(static_cast<long>(i + 1)), "mu" + std::to_string(i + 1), cur[i]});
    out.push_back(std::move(s));
    return;
  }
  for (int m = rem; m >= 1; --m)
    for (const auto& p : partitions_of(m)) {
      Key k{m, p.parts()};
      if (bound < k) continue;  // non-increasing order removes permutations
      cur.push_back(p);
      structures_rec(rem - m, k, cur, out);
      cur.pop_back();
    }
}

}  // namespace

std::vector<JordanSpec> jordan_structures(int n) {
  std::vector<JordanSpec> out;
  std::vector<Partition> cur;
  structures_rec(n, Key{n + 1, {}}, cur, out);
  return out;
}

Partition transpose_block_spectrum(const JordanSpec& spec) {
  std::vector<int> chi;
  for (const auto& b : spec.blocks)
    for (std::size_t j = 0; j < b.sizes.length(); ++j) {
      if (chi.size() <= j) chi.push_back(0);
      chi[j] += b.sizes[j];
    }
  return Partition(chi);
}

Partition spectrum_partition(const JordanSpec& spec) {
  std::vector<int> m;
  for (const auto& b : spec.blocks) m.push_back(b.sizes.n());
  return Partition(m);
}

std::vector<std::size_t> rank_sequence(const QMatrix& m) {
  std::vector<std::size_t> out;
  QMatrix p = QMatrix::identity(m.rows());
  for (std::size_t k = 0; k <= m.rows(); ++k) {
    out.push_back(rank(p));
    p = p * m;
  }
  return out;
}

namespace {

// Block sizes from ranks r_k of N^k: #blocks of size >= k is r_{k-1} - r_k.
Partition blocks_from_ranks(const std::vector<std::size_t>& r) {
  std::vector<int> t;
  for (std::size_t k = 1; k < r.size(); ++k)
    if (r[k - 1] > r[k]) t.push_back(static_cast<int>(r[k - 1] - r[k]));
  return transpose(Partition(t));
}

UniPoly char_poly(const QMatrix& m) {
  const std::size_t n = m.rows();
  PMatrix p(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) p(i, j) = UniPoly(-m(i, j)) + (i == j ? UniPoly::t() : UniPoly());
  return det(p);
}

}  // namespace

Partition nilpotent_signature(const QMatrix& m) {
  auto r = rank_sequence(m);
  if (r.back() != 0) throw NotNilpotent("nilpotent_signature: matrix is not nilpotent");
  return blocks_from_ranks(r);
}

JordanSpec jordan_spec_of(const QMatrix& m) {
  const std::size_t n = m.rows();
  UniPoly cp = char_poly(m);
  JordanSpec s;
  UniPoly rest = cp;
  for (const auto& mu : rational_roots(cp)) {
    int mult = 0;
    UniPoly lin(std::vector<Rational>{-mu, Rational(1)});
    while (rest.degree() > 0 && divmod(rest, lin).second.is_zero()) {
      rest = exact_div(rest, lin);
      ++mult;
    }
    QMatrix sh = m;
    for (std::size_t i = 0; i < n; ++i) sh(i, i) -= mu;
    std::vector<std::size_t> r;
    QMatrix p = QMatrix::identity(n);
    for (int k = 0; k <= mult; ++k) {
      r.push_back(rank(p));
      p = p * sh;
    }
    s.blocks.push_back({mu, to_string(mu), blocks_from_ranks(r)});
  }
  if (rest.degree() > 0) throw std::domain_error("jordan_spec_of: characteristic polynomial does not split over Q");
  return s;
}

QMatrix jordan_matrix(const JordanSpec& spec) {
  if (!spec.rational()) throw std::invalid_argument("jordan_matrix: eigenvalues must be rational");
  const auto n = static_cast<std::size_t>(spec.n());
  QMatrix m(n, n);
  std::size_t o = 0;
  for (const auto& b : spec.blocks)
    for (int sz : b.sizes.parts()) {
      for (int i = 0; i < sz; ++i) {
        m(o + i, o + i) = *b.eig;
        if (i + 1 < sz) m(o + i, o + i + 1) = 1;
      }
      o += static_cast<std::size_t>(sz);
    }
  return m;
}

QMatrix nilpotent_matrix(const Partition& theta) {
  JordanSpec s;
  s.blocks.push_back({Rational(0), "0", theta});
  return jordan_matrix(s);
}

QMatrix companion(const UniPoly& p) {
  if (p.degree() < 1 || p.lead() != 1) throw std::invalid_argument("companion: polynomial must be monic of degree >= 1");
  const auto n = static_cast<std::size_t>(p.degree());
  QMatrix c(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i + 1 < n) c(i, i + 1) = 1;
    c(i, 0) = -p.coeff(static_cast<int>(n - 1 - i));
  }
  return c;
}

long min_rank_Xk(const JordanSpec& spec, int k, std::vector<int>* mult) {
  if (k < 0) throw std::invalid_argument("min_rank_Xk: k must be non-negative");
  const std::size_t s = spec.blocks.size();
  auto cost = [&](std::size_t i, int m) {
    long c = 0;
    for (int l : spec.blocks[i].sizes.parts()) c += std::max(l - m, 0);
    return c;
  };
  const long inf = 1L << 40;
  // best[i][b]: minimal rank using eigenvalues i.. with budget b.
  std::vector<std::vector<long>> best(s + 1, std::vector<long>(static_cast<std::size_t>(k) + 1, inf));
  std::vector<std::vector<int>> arg(s + 1, std::vector<int>(static_cast<std::size_t>(k) + 1, 0));
  for (int b = 0; b <= k; ++b) best[s][static_cast<std::size_t>(b)] = 0;
  for (std::size_t i = s; i-- > 0;)
    for (int b = 0; b <= k; ++b)
      for (int m = 0; m <= b; ++m) {
        long v = cost(i, m) + best[i + 1][static_cast<std::size_t>(b - m)];
        if (v < best[i][static_cast<std::size_t>(b)]) {
          best[i][static_cast<std::size_t>(b)] = v;
          arg[i][static_cast<std::size_t>(b)] = m;
        }
      }
  if (mult) {
    mult->clear();
    int b = k;
    for (std::size_t i = 0; i < s; ++i) {
      int m = arg[i][static_cast<std::size_t>(b)];
      mult->push_back(m);
      b -= m;
    }
  }
  return best[0][static_cast<std::size_t>(k)];
}

bool in_Xkr(const JordanSpec& spec, int k, int r) {
  if (k < 1 || r < 0) throw std::invalid_argument("in_Xkr: need k >= 1 and r >= 0");
  return min_rank_Xk(spec, k) <= r;
}

bool in_Xkr(const Partition& theta, int k, int r) {
  if (k < 1 || r < 0) throw std::invalid_argument("in_Xkr: need k >= 1 and r >= 0");
  long rk = 0;
  for (int p : theta.parts()) rk += std::max(p - k, 0);
  return rk <= r;
}

ClosureResult closure_contains_nilpotent(const JordanSpec& spec, const Partition& theta) {
  spec.validate();
  if (theta.n() != spec.n()) throw std::invalid_argument("closure_contains_nilpotent: size mismatch");
  ClosureResult out;
  out.chi = transpose_block_spectrum(spec);
  out.theta = theta;
  out.contains = dominates(out.chi, theta);
  if (out.contains) {
    out.family = "conjugate to block companion form x' with blocks of sizes " + out.chi.str() +
                 ", then A(t) = diag(t, t^2, ..., t^n); t A(t) x' A(t)^{-1} -> J_chi";
    return out;
  }
  int sc = 0, st = 0;
  for (std::size_t l = 0;; ++l) {
    sc += out.chi[l];
    st += theta[l];
    if (st > sc) {
      out.ell = static_cast<int>(l + 1);
      break;
    }
  }
  const auto ell = static_cast<std::size_t>(out.ell);
  out.k = out.chi[ell];
  for (std::size_t i = 0; i < ell; ++i) out.r += out.chi[i] - out.chi[ell];
  for (const auto& b : spec.blocks) out.multiplicities.push_back(b.sizes[ell]);
  out.x_in = in_Xkr(spec, out.k, out.r);
  out.y_in = in_Xkr(theta, out.k, out.r);
  return out;
}

WitnessFamily witness_family(const JordanSpec& spec) {
  spec.validate();
  if (!spec.rational()) throw std::invalid_argument("witness_family: eigenvalues must be rational");
  WitnessFamily w;
  w.chi = transpose_block_spectrum(spec);
  const auto n = static_cast<std::size_t>(spec.n());
  w.xPrime = QMatrix(n, n);
  std::size_t o = 0;
  for (std::size_t j = 0; j < w.chi.length(); ++j) {
    // One Jordan block per eigenvalue: minimal = characteristic polynomial.
    UniPoly p(1);
    for (const auto& b : spec.blocks)
      for (int e = 0; e < b.sizes[j]; ++e) p = p * UniPoly(std::vector<Rational>{-*b.eig, Rational(1)});
    QMatrix c = companion(p);
    for (std::size_t r = 0; r < c.rows(); ++r)
      for (std::size_t s = 0; s < c.cols(); ++s) w.xPrime(o + r, o + s) = c(r, s);
    o += c.rows();
  }
  for (std::size_t i = 0; i < n; ++i) w.aOfT.push_back(static_cast<int>(i + 1));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(w.xPrime(i, j)) == 0) continue;
      int pw = w.aOfT[i] - w.aOfT[j];
      auto [it, fresh] = w.terms.try_emplace(pw, n, n);
      it->second(i, j) = w.xPrime(i, j);
    }
  w.leadingPower = w.terms.empty() ? 0 : w.terms.begin()->first;
  w.leadingTerm = w.terms.empty() ? QMatrix(n, n) : w.terms.begin()->second;

  JordanSpec got = jordan_spec_of(w.xPrime);
  w.similar = got.blocks.size() == spec.blocks.size();
  for (const auto& b : spec.blocks) {
    auto it = std::find_if(got.blocks.begin(), got.blocks.end(), [&](const EigenBlocks& g) { return *g.eig == *b.eig; });
    w.similar = w.similar && it != got.blocks.end() && it->sizes == b.sizes;
  }
  // For chi = 1^n the t^{-1} coefficient is J_chi = 0 and the family is scalar.
  auto m1 = w.terms.find(-1);
  QMatrix coeff = m1 == w.terms.end() ? QMatrix(n, n) : m1->second;
  w.leading_is_Jchi = w.leadingPower >= -1 && coeff == nilpotent_matrix(w.chi);
  return w;
}

std::vector<std::vector<double>> evaluate_family(const WitnessFamily& w, double t) {
  const std::size_t n = w.xPrime.rows();
  std::vector<std::vector<double>> m(n, std::vector<double>(n, 0.0));
  for (const auto& [p, term] : w.terms)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (sgn(term(i, j)) != 0) m[i][j] += term(i, j).get_d() * std::pow(t, p + 1);
  return m;
}

std::size_t numeric_rank(std::vector<std::vector<double>> a, double tol) {
  const std::size_t r = a.size(), c = r ? a[0].size() : 0;
  std::size_t rank = 0;
  std::vector<bool> used(c, false);
  for (std::size_t step = 0; step < std::min(r, c); ++step) {
    double best = 0;
    std::size_t bi = 0, bj = 0;
    for (std::size_t i = rank; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (!used[j] && std::abs(a[i][j]) > best) {
          best = std::abs(a[i][j]);
          bi = i;
          bj = j;
        }
    if (best <= tol) break;
    std::swap(a[rank], a[bi]);
    used[bj] = true;
    for (std::size_t i = rank + 1; i < r; ++i) {
      double f = a[i][bj] / a[rank][bj];
      for (std::size_t j = 0; j < c; ++j) a[i][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

std::vector<double> char_coefficients(const std::vector<std::vector<double>>& a) {
  // Faddeev-LeVerrier.
  const std::size_t n = a.size();
  std::vector<std::vector<double>> m(n, std::vector<double>(n, 0.0));
  std::vector<double> c(n + 1, 0.0);
  c[n] = 1.0;
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::vector<double>> next(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t l = 0; l < n; ++l) next[i][j] += a[i][l] * m[l][j];
      next[i][i] += c[n - k + 1];
    }
    m = next;
    double tr = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) tr += a[i][l] * m[l][i];
    c[n - k] = -tr / static_cast<double>(k);
  }
  std::vector<double> out;
  for (std::size_t k = n; k-- > 0;) out.push_back(c[k]);
  return out;
}

ProbeResult numeric_probe(const JordanSpec& spec, const std::vector<double>& ts, double rank_tol) {
  WitnessFamily w = witness_family(spec);
  ProbeResult out;
  out.ts = ts;
  out.target = rank_sequence(nilpotent_matrix(w.chi));
  const std::size_t n = w.xPrime.rows();
  for (double t : ts) {
    auto m = evaluate_family(w, t);
    std::vector<std::size_t> seq;
    std::vector<std::vector<double>> p(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) p[i][i] = 1.0;
    for (std::size_t k = 0; k <= n; ++k) {
      seq.push_back(numeric_rank(p, rank_tol));
      std::vector<std::vector<double>> q(n, std::vector<double>(n, 0.0));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < n; ++l)
          for (std::size_t j = 0; j < n; ++j) q[i][j] += p[i][l] * m[l][j];
      p = q;
    }
    out.rankSeqs.push_back(seq);
    double d = 0;
    for (double c : char_coefficients(m)) d = std::max(d, std::abs(c));
    out.invariantDistance.push_back(d);
  }
  out.stabilized = ts.size() >= 2 && out.rankSeqs[ts.size() - 1] == out.target &&
                   out.rankSeqs[ts.size() - 2] == out.target;
  return out;
}

// ---- J_n slice ----

LocalModel jn_local_model(int n) {
  if (n < 2) throw std::invalid_argument("jn_local_model: n >= 2");
  auto rep = Representation::conjugation(n);
  const auto un = static_cast<std::size_t>(n);
  std::vector<LieElement> S;
  for (std::size_t i = 1; i < un; ++i)
    for (std::size_t j = 0; j < un; ++j) S.push_back(unit_matrix(un, i, j));
  std::vector<QVec> N;
  for (std::size_t i = 0; i < un; ++i) N.push_back(lie_vec(unit_matrix(un, i, 0)));
  return build_local_model(rep, rep.to_vec(nilpotent_matrix(Partition({n}))), ComplementPolicy::Explicit, S, N);
}

namespace {

using SymMatrix = std::vector<std::vector<MPoly>>;

SymMatrix sym_mul(const SymMatrix& a, const SymMatrix& b, int nv) {
  const std::size_t n = a.size();
  SymMatrix c(n, std::vector<MPoly>(n, MPoly(nv)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (!b[k][j].is_zero()) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

QVec companion_column(const QVec& c) {
  // N coordinates (first column) of C_n(c): entry i is -c_{n-1-i}.
  const std::size_t n = c.size();
  QVec v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = -c[n - 1 - i];
  return v;
}

}  // namespace

JnSliceReport jn_slice_report(int n, int samples, std::uint64_t seed) {
  JnSliceReport out;
  out.n = n;
  const auto un = static_cast<std::size_t>(n);
  LocalModel lm = jn_local_model(n);
  QMatrix J = nilpotent_matrix(Partition({n}));
  out.model_ok = lm.N.size() == un && lm.S.size() == un * un - un;
  {
    std::vector<QVec> powers;
    QMatrix p = QMatrix::identity(un);
    for (std::size_t i = 0; i < un; ++i) {
      powers.push_back(lie_vec(p));
      p = p * J;
    }
    std::vector<QVec> hv;
    for (const auto& h : lm.H) hv.push_back(lie_vec(h));
    out.h_is_powers = same_span(hv, powers, un * un);
  }
  {
    // T = J + C_n(c) with c_0..c_{n-1} as variables.
    const int nv = n;
    SymMatrix T(un, std::vector<MPoly>(un, MPoly(nv)));
    for (std::size_t i = 0; i + 1 < un; ++i) T[i][i + 1] = MPoly::constant(nv, 1);
    for (std::size_t i = 0; i < un; ++i) T[i][0] -= MPoly::variable(nv, static_cast<int>(un - 1 - i));
    SymMatrix acc(un, std::vector<MPoly>(un, MPoly(nv))), pw(un, std::vector<MPoly>(un, MPoly(nv)));
    for (std::size_t i = 0; i < un; ++i) pw[i][i] = MPoly::constant(nv, 1);
    bool cyclic = true;
    for (std::size_t k = 0; k <= un; ++k) {
      MPoly coef = k == un ? MPoly::constant(nv, 1) : MPoly::variable(nv, static_cast<int>(k));
      for (std::size_t i = 0; i < un; ++i)
        for (std::size_t j = 0; j < un; ++j)
          if (!pw[i][j].is_zero()) acc[i][j] += coef * pw[i][j];
      if (k < un)
        for (std::size_t i = 0; i < un; ++i)
          cyclic = cyclic && pw[i][un - 1] == MPoly::constant(nv, i == un - 1 - k ? 1 : 0);
      pw = sym_mul(pw, T, nv);
    }
    bool zero = true;
    for (const auto& row : acc)
      for (const auto& e : row) zero = zero && e.is_zero();
    out.minpoly_identity = zero && cyclic;
  }
  {
    bool ok = true;
    std::vector<QMatrix> th;
    for (const auto& nv : lm.N) th.push_back(theta_matrix(lm, nv));
    for (std::size_t i = 0; i < th.size() && ok; ++i)
      for (std::size_t j = i; j < th.size() && ok; ++j) ok = (th[i] * th[j] + th[j] * th[i]).is_zero();
    out.theta_square_zero = ok;
  }
  Rng rng(seed);
  for (int s = 0; s < samples; ++s) {
    QVec c(un);
    for (auto& x : c) x = random_rational(rng, 5, 3);
    QVec nvec = lm.n_vector(companion_column(c));
    out.stabilizerDims.push_back(slice_stabilizer(lm, nvec).elements.size());
  }
  if (n == 4) {
    QVec c4 = lm.n_vector(companion_column(QVec{Rational(-1), 0, 0, 0}));
    LieElement h = unit_matrix(4, 0, 3);
    out.z4_s = s_completion(lm, h, c4);
    out.z4_matches = out.z4_s == unit_matrix(4, 1, 0) + unit_matrix(4, 2, 1) + unit_matrix(4, 3, 2);
  }
  return out;
}

// ---- J_{a,b} slice ----

QMatrix jab_point(int a, int b, const QVec& c, const QVec& d, const QVec& alpha, const QVec& beta) {
  const auto ua = static_cast<std::size_t>(a), ub = static_cast<std::size_t>(b), n = ua + ub;
  if (c.size() != ua || d.size() != ub || alpha.size() != ub || beta.size() != ub)
    throw std::invalid_argument("jab_point: parameter lengths");
  QMatrix t = nilpotent_matrix(Partition({a, b}));
  for (std::size_t i = 0; i < ua; ++i) t(i, 0) -= c[ua - 1 - i];
  for (std::size_t i = 0; i < ub; ++i) t(ua + i, ua) -= d[ub - 1 - i];
  for (std::size_t i = 0; i < ub; ++i) t(ua - 1, ua + i) += alpha[i];
  for (std::size_t i = 0; i < ub; ++i) t(ua + i, 0) += beta[i];
  (void)n;
  return t;
}

namespace {

// Full rank for one draw proves the property; small integer draws can be
// unlucky, so a few are tried.
bool krylov_two_full(const QMatrix& t, Rng& rng) {
  const std::size_t n = t.rows();
  for (int attempt = 0; attempt < 8; ++attempt) {
    std::vector<QVec> span;
    for (int v = 0; v < 2; ++v) {
      QVec x(n);
      for (auto& e : x) e = random_rational(rng, 4, 1);
      for (std::size_t k = 0; k < n; ++k) {
        span.push_back(x);
        x = t.apply(x);
      }
    }
    if (span_rank(span, n) == n) return true;
  }
  return false;
}

UniPoly random_monic(Rng& rng, int deg) {
  std::vector<Rational> co(static_cast<std::size_t>(deg) + 1);
  for (int i = 0; i < deg; ++i) co[static_cast<std::size_t>(i)] = random_rational(rng, 3, 2);
  co[static_cast<std::size_t>(deg)] = 1;
  return UniPoly(co);
}

QVec low_coeffs(const UniPoly& p) {
  QVec c;
  for (int i = 0; i < p.degree(); ++i) c.push_back(p.coeff(i));
  return c;
}

}  // namespace

JabSliceReport jab_slice_report(int a, int b, int samples, std::uint64_t seed) {
  if (b < 1 || a < b) throw std::invalid_argument("jab_slice_report: need a >= b >= 1");
  JabSliceReport out;
  out.a = a;
  out.b = b;
  const auto ua = static_cast<std::size_t>(a), ub = static_cast<std::size_t>(b), n = ua + ub;
  auto rep = Representation::conjugation(static_cast<int>(n));
  QMatrix J = nilpotent_matrix(Partition({a, b}));
  out.dimH = stabilizer_algebra(rep, rep.to_vec(J)).size();

  std::vector<QVec> C;
  for (std::size_t i = 0; i < ua; ++i) C.push_back(lie_vec(unit_matrix(n, i, 0)));
  for (std::size_t i = 0; i < ub; ++i) C.push_back(lie_vec(unit_matrix(n, ua + i, ua)));
  for (std::size_t i = 0; i < ub; ++i) C.push_back(lie_vec(unit_matrix(n, ua - 1, ua + i)));
  for (std::size_t i = 0; i < ub; ++i) C.push_back(lie_vec(unit_matrix(n, ua + i, 0)));
  out.dimC = span_rank(C, n * n);
  auto to = tangent_space(rep, rep.to_vec(J));
  std::vector<QVec> all(to);
  all.insert(all.end(), C.begin(), C.end());
  out.c_transversal = span_rank(all, n * n) == n * n && to.size() + out.dimC == n * n;

  Rng rng(seed);
  const QVec za = zero_vec(ua), zb = zero_vec(ub);
  for (int i = 1; i <= b; ++i) {
    QVec alpha = zb;
    Rational t = random_rational(rng, 5, 3);
    if (sgn(t) == 0) t = 1;
    alpha[static_cast<std::size_t>(i - 1)] = t;
    std::vector<int> ex{a + b - i + 1};
    if (i > 1) ex.push_back(i - 1);
    out.family.emplace_back(Partition(ex), nilpotent_signature(jab_point(a, b, za, zb, alpha, zb)));
  }

  out.samples = static_cast<std::size_t>(samples);
  out.minpoly_degree_ok = out.kernel_ok = out.minpoly_divides_ok = true;
  for (int s = 0; s < samples; ++s) {
    QVec c(ua), d(ub), al(ub), be(ub);
    for (auto* v : {&c, &d, &al, &be})
      for (auto& x : *v) x = random_rational(rng, 3, 2);
    QMatrix T = jab_point(a, b, c, d, al, be);
    UniPoly p = minimal_polynomial(T);
    out.minpoly_degree_ok = out.minpoly_degree_ok && p.degree() >= a;
    out.kernel_ok = out.kernel_ok && krylov_two_full(T, rng);

    // beta = alpha = 0 with p_b | p_a forces deg p = a.
    UniPoly pb = random_monic(rng, b), pa = pb * random_monic(rng, a - b);
    QMatrix T2 = jab_point(a, b, low_coeffs(pa), low_coeffs(pb), zb, zb);
    UniPoly p2 = minimal_polynomial(T2);
    bool ok = p2.degree() == a && p2 == pa && divmod(p2, pb).second.is_zero();
    out.minpoly_divides_ok = out.minpoly_divides_ok && ok;
  }
  out.zero_kernel_two = n - rank(J) == 2;
  return out;
}

}  // namespace ol
