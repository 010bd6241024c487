#include "orbitlimits/matrix.hpp"

#include <omp.h>

#include <algorithm>
#include <sstream>

namespace ol {

namespace {

// Integral-domain hooks for the shared fraction-free elimination.
bool dz(const Integer& x) { return sgn(x) == 0; }
bool dz(const UniPoly& x) { return x.is_zero(); }
Integer ddiv(const Integer& a, const Integer& b) {
  Integer q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}
UniPoly ddiv(const UniPoly& a, const UniPoly& b) {
  if (b.degree() == 0) return a * (1 / b.lead());
  return exact_div(a, b);
}
std::size_t dsize(const Integer& x) { return mpz_sizeinbase(x.get_mpz_t(), 2); }
std::size_t dsize(const UniPoly& x) { return static_cast<std::size_t>(x.degree()) + 1; }

template <class D>
struct Echelon {
  std::vector<std::vector<D>> rows;  // row echelon, fraction-free
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
  int swaps = 0;
};

// Bareiss elimination with column skipping. Entries stay in D because every
// intermediate entry is a minor of the input.
template <class D>
Echelon<D> bareiss(std::vector<std::vector<D>> a, std::size_t ncols, Exec ex) {
  Echelon<D> e;
  std::size_t nrows = a.size();
  D prev(1);
  std::size_t r = 0;
  const int nt = ex == Exec::Parallel ? thread_count() : 1;
  for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
    std::size_t best = nrows;
    for (std::size_t i = r; i < nrows; ++i) {
      if (dz(a[i][c])) continue;
      if (best == nrows || dsize(a[i][c]) < dsize(a[best][c])) best = i;
    }
    if (best == nrows) continue;
    if (best != r) {
      std::swap(a[best], a[r]);
      ++e.swaps;
    }
    const std::vector<D>& piv = a[r];
    const long lo = static_cast<long>(r + 1), hi = static_cast<long>(nrows);
#pragma omp parallel for num_threads(nt) schedule(dynamic, 1) if (nt > 1 && hi - lo > 8)
    for (long ii = lo; ii < hi; ++ii) {
      auto& row = a[static_cast<std::size_t>(ii)];
      const D f = row[c];
      for (std::size_t j = c + 1; j < ncols; ++j) {
        if (dz(f)) {
          if (!dz(row[j])) row[j] = ddiv(piv[c] * row[j], prev);
        } else {
          D v = piv[c] * row[j] - f * piv[j];
          row[j] = dz(v) ? D(0) : ddiv(v, prev);
        }
      }
      row[c] = D(0);
    }
    prev = a[r][c];
    e.pivots.push_back(c);
    ++r;
  }
  a.resize(r);
  e.rows = std::move(a);
  return e;
}

std::vector<std::vector<Integer>> integer_rows(const QMatrix& m) {
  std::vector<std::vector<Integer>> rows(m.rows(), std::vector<Integer>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (sgn(m(i, j)) != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (sgn(m(i, j)) == 0) continue;
      rows[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
    }
  }
  return rows;
}

std::vector<std::vector<UniPoly>> poly_rows(const PMatrix& m) {
  std::vector<std::vector<UniPoly>> rows(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) rows[i] = m.row(i);
  return rows;
}

std::vector<std::size_t> free_columns(const std::vector<std::size_t>& pivots, std::size_t ncols) {
  std::vector<std::size_t> fr;
  std::size_t k = 0;
  for (std::size_t j = 0; j < ncols; ++j) {
    if (k < pivots.size() && pivots[k] == j) {
      ++k;
      continue;
    }
    fr.push_back(j);
  }
  return fr;
}

}  // namespace

// ---------------------------------------------------------------- Rational

std::size_t rank(const QMatrix& m, Exec ex) {
  return bareiss(integer_rows(m), m.cols(), ex).pivots.size();
}

std::vector<QVec> nullspace(const QMatrix& m, Exec ex) {
  auto e = bareiss(integer_rows(m), m.cols(), ex);
  std::vector<QVec> basis;
  for (std::size_t f : free_columns(e.pivots, m.cols())) {
    QVec x = zero_vec(m.cols());
    x[f] = 1;
    for (std::size_t k = e.pivots.size(); k-- > 0;) {
      std::size_t p = e.pivots[k];
      if (p > f) continue;
      Rational s = 0;
      const auto& row = e.rows[k];
      for (std::size_t j = p + 1; j < m.cols(); ++j)
        if (sgn(row[j]) != 0 && sgn(x[j]) != 0) s += Rational(row[j]) * x[j];
      x[p] = -s / Rational(row[p]);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

Rational det(const QMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det: not square");
  if (m.rows() == 0) return 1;
  Integer scale = 1;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (sgn(m(i, j)) != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    scale *= l;
  }
  auto e = bareiss(integer_rows(m), m.cols(), Exec::Serial);
  if (e.pivots.size() < m.rows()) return 0;
  Rational d(e.rows.back().back(), scale);
  d.canonicalize();
  return e.swaps % 2 ? -d : d;
}

QMatrix rref(QMatrix m, std::vector<std::size_t>* pivots) {
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, r);
    Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (sgn(m(r, j)) != 0) m(i, j) -= f * m(r, j);
    }
    piv.push_back(c);
    ++r;
  }
  if (pivots) *pivots = piv;
  return m;
}

QMatrix inverse(const QMatrix& m) {
  std::size_t n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("inverse: not square");
  QMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  std::vector<std::size_t> piv;
  QMatrix r = rref(std::move(aug), &piv);
  if (piv.size() < n || piv[n - 1] != n - 1) throw SingularMatrix("inverse: singular matrix");
  QMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r(i, n + j);
  return inv;
}

std::optional<QVec> solve(const QMatrix& a, const QVec& b) {
  QMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  std::vector<std::size_t> piv;
  QMatrix r = rref(std::move(aug), &piv);
  if (!piv.empty() && piv.back() == a.cols()) return std::nullopt;
  QVec x = zero_vec(a.cols());
  for (std::size_t k = 0; k < piv.size(); ++k) x[piv[k]] = r(k, a.cols());
  return x;
}

// -------------------------------------------------------------- Polynomial

std::size_t rank(const PMatrix& m) {
  return bareiss(poly_rows(m), m.cols(), Exec::Serial).pivots.size();
}

std::vector<PVec> nullspace(const PMatrix& m) {
  auto e = bareiss(poly_rows(m), m.cols(), Exec::Serial);
  std::vector<PVec> basis;
  for (std::size_t f : free_columns(e.pivots, m.cols())) {
    // Fraction-free back substitution: rescale the partial solution by each
    // pivot so every coordinate stays polynomial.
    PVec x(m.cols(), UniPoly());
    x[f] = UniPoly(1);
    for (std::size_t k = e.pivots.size(); k-- > 0;) {
      std::size_t p = e.pivots[k];
      if (p > f) continue;
      const auto& row = e.rows[k];
      UniPoly s;
      for (std::size_t j = p + 1; j < m.cols(); ++j)
        if (!row[j].is_zero() && !x[j].is_zero()) s += row[j] * x[j];
      for (auto& xi : x)
        if (!xi.is_zero()) xi = xi * row[p];
      x[p] = -s;
    }
    UniPoly g;
    for (const auto& xi : x) g = gcd(g, xi);
    for (auto& xi : x)
      if (!xi.is_zero()) xi = exact_div(xi, g);
    // Fix scale: primitive content with positive leading coefficient at f.
    Integer l = 1, h = 0;
    for (const auto& xi : x)
      for (const auto& c : xi.coeffs()) {
        if (sgn(c) == 0) continue;
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
        mpz_gcd(h.get_mpz_t(), h.get_mpz_t(), c.get_num_mpz_t());
      }
    Rational sc(l, h);
    sc.canonicalize();
    if (sgn(x[f].lead()) < 0) sc = -sc;
    for (auto& xi : x) xi *= sc;
    basis.push_back(std::move(x));
  }
  return basis;
}

UniPoly det(const PMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det: not square");
  if (m.rows() == 0) return UniPoly(1);
  auto e = bareiss(poly_rows(m), m.cols(), Exec::Serial);
  if (e.pivots.size() < m.rows()) return UniPoly();
  UniPoly d = e.rows.back().back();
  return e.swaps % 2 ? -d : d;
}

Adjugate invert_via_adjugate(const PMatrix& m) {
  std::size_t n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("invert_via_adjugate: not square");
  if (n == 0) return {UniPoly(1), PMatrix()};
  // Fraction-free Gauss-Jordan on [m | I]: ends at [p I | p m^{-1}] with
  // p = +-det(m).
  std::vector<PVec> a(n, PVec(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
    a[i][n + i] = UniPoly(1);
  }
  UniPoly prev(1);
  int swaps = 0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = n;
    for (std::size_t i = k; i < n; ++i)
      if (!a[i][k].is_zero() && (p == n || a[i][k].degree() < a[p][k].degree())) p = i;
    if (p == n) throw SingularMatrix("invert_via_adjugate: determinant is 0");
    if (p != k) {
      std::swap(a[p], a[k]);
      ++swaps;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      const UniPoly f = a[i][k];
      for (std::size_t j = 0; j < 2 * n; ++j) {
        if (j == k) continue;
        UniPoly v = a[k][k] * a[i][j] - f * a[k][j];
        a[i][j] = v.is_zero() ? UniPoly() : ddiv(v, prev);
      }
      a[i][k] = UniPoly();
    }
    prev = a[k][k];
  }
  UniPoly d = swaps % 2 ? -prev : prev;
  PMatrix adj(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) adj(i, j) = swaps % 2 ? -a[i][n + j] : a[i][n + j];
  return {d, adj};
}

std::optional<PMatrix> neumann_solve(const PMatrix& phi, const PMatrix& y, std::size_t max_terms) {
  PMatrix sum = y, term = y;
  for (std::size_t k = 1; k <= max_terms; ++k) {
    term = -(phi * term);
    if (term.is_zero()) return sum;
    sum = sum + term;
  }
  return std::nullopt;
}

QMatrix eval(const PMatrix& m, const Rational& t) {
  QMatrix q(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) q(i, j) = m(i, j).eval(t);
  return q;
}

PMatrix coefficient_shift(const PMatrix& m, int k) {
  PMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).shift_down(k);
  return r;
}

// -------------------------------------------------------- Rational functions

PMatrix clear_row_denominators(const FMatrix& m) {
  PMatrix p(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    UniPoly l(1);
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const UniPoly& d = m(i, j).den();
      if (d.degree() > 0) l = exact_div(l * d, gcd(l, d));
    }
    for (std::size_t j = 0; j < m.cols(); ++j)
      p(i, j) = exact_div(m(i, j).num() * l, m(i, j).den());
  }
  return p;
}

FMatrix to_fn(const PMatrix& m) {
  FMatrix f(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) f(i, j) = RationalFn(m(i, j));
  return f;
}

std::size_t rank(const FMatrix& m) { return rank(clear_row_denominators(m)); }

std::vector<FVec> nullspace(const FMatrix& m) {
  std::vector<FVec> out;
  for (const auto& v : nullspace(clear_row_denominators(m))) {
    FVec f;
    for (const auto& x : v) f.emplace_back(x);
    out.push_back(std::move(f));
  }
  return out;
}

QMatrix eval(const FMatrix& m, const Rational& t) {
  QMatrix q(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) q(i, j) = m(i, j).eval(t);
  return q;
}

QMatrix limit_at_zero(const FMatrix& m) {
  QMatrix q(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) q(i, j) = limit_at_zero(m(i, j));
  return q;
}

PMatrix column_normalize(const FMatrix& a) {
  PMatrix p = clear_row_denominators(a.transpose()).transpose();
  std::size_t k = p.cols();
  auto strip_t = [&](std::size_t j) {
    int v = -1;
    for (std::size_t i = 0; i < p.rows(); ++i) {
      int vi = p(i, j).valuation();
      if (vi >= 0 && (v < 0 || vi < v)) v = vi;
    }
    if (v < 0) throw std::invalid_argument("column_normalize: zero column");
    for (std::size_t i = 0; i < p.rows(); ++i) p(i, j) = p(i, j).shift_down(v);
  };
  auto col_degree = [&](std::size_t j) {
    int d = -1;
    for (std::size_t i = 0; i < p.rows(); ++i) d = std::max(d, p(i, j).degree());
    return d;
  };
  for (std::size_t j = 0; j < k; ++j) strip_t(j);
  for (;;) {
    QMatrix at0 = eval(p, Rational(0));
    auto rel = nullspace(at0, Exec::Serial);
    if (rel.empty()) return p;
    // Replace the highest-degree column in the relation; the total degree
    // strictly drops, so the loop terminates.
    const QVec& c = rel.front();
    std::size_t jmax = k;
    for (std::size_t j = 0; j < k; ++j)
      if (sgn(c[j]) != 0 && (jmax == k || col_degree(j) > col_degree(jmax))) jmax = j;
    for (std::size_t i = 0; i < p.rows(); ++i) {
      UniPoly s;
      for (std::size_t j = 0; j < k; ++j)
        if (sgn(c[j]) != 0) s += p(i, j) * c[j];
      p(i, jmax) = s;
    }
    strip_t(jmax);
  }
}

// ----------------------------------------------------------------- Spans

std::size_t span_rank(const std::vector<QVec>& vs, std::size_t dim) {
  if (vs.empty()) return 0;
  return rank(QMatrix::from_rows(vs, dim), Exec::Serial);
}

std::vector<QVec> span_basis(const std::vector<QVec>& vs, std::size_t dim) {
  if (vs.empty()) return {};
  std::vector<std::size_t> piv;
  QMatrix r = rref(QMatrix::from_rows(vs, dim), &piv);
  std::vector<QVec> out;
  for (std::size_t i = 0; i < piv.size(); ++i) out.push_back(r.row(i));
  return out;
}

std::optional<QVec> coordinates(const std::vector<QVec>& basis, const QVec& v) {
  if (basis.empty()) {
    if (is_zero(v)) return QVec{};
    return std::nullopt;
  }
  return solve(QMatrix::from_columns(basis, v.size()), v);
}

bool in_span(const std::vector<QVec>& basis, const QVec& v) {
  return coordinates(basis, v).has_value();
}

bool same_span(const std::vector<QVec>& a, const std::vector<QVec>& b, std::size_t dim) {
  std::size_t ra = span_rank(a, dim), rb = span_rank(b, dim);
  if (ra != rb) return false;
  std::vector<QVec> both(a);
  both.insert(both.end(), b.begin(), b.end());
  return span_rank(both, dim) == ra;
}

std::vector<QVec> orthogonal_complement(const std::vector<QVec>& vs, std::size_t dim) {
  if (vs.empty()) {
    std::vector<QVec> id;
    for (std::size_t i = 0; i < dim; ++i) {
      QVec e = zero_vec(dim);
      e[i] = 1;
      id.push_back(e);
    }
    return id;
  }
  return nullspace(QMatrix::from_rows(vs, dim));
}

std::vector<QVec> intersect(const std::vector<QVec>& a, const std::vector<QVec>& b, std::size_t dim) {
  if (a.empty() || b.empty()) return {};
  // x = sum ai A_i = sum bj B_j
  std::vector<QVec> cols(a);
  for (const auto& v : b) cols.push_back(QVec(-1 * v));
  auto ker = nullspace(QMatrix::from_columns(cols, dim));
  std::vector<QVec> out;
  for (const auto& k : ker) {
    QVec x = zero_vec(dim);
    for (std::size_t i = 0; i < a.size(); ++i) axpy(x, k[i], a[i]);
    out.push_back(std::move(x));
  }
  return span_basis(out, dim);
}

std::vector<QVec> complement_within(const std::vector<QVec>& sub, const std::vector<QVec>& whole,
                                    std::size_t dim) {
  std::vector<QVec> acc = span_basis(sub, dim), out;
  std::size_t r = acc.size();
  for (const auto& w : whole) {
    acc.push_back(w);
    std::size_t nr = span_rank(acc, dim);
    if (nr > r) {
      out.push_back(w);
      r = nr;
    } else {
      acc.pop_back();
    }
  }
  return out;
}

std::string to_string(const QMatrix& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << "[";
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j).get_str();
    os << "]\n";
  }
  return os.str();
}

std::string to_string(const PMatrix& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << "[";
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j).str();
    os << "]\n";
  }
  return os.str();
}

UniPoly minimal_polynomial(const QMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<QVec> powers;
  QMatrix cur = QMatrix::identity(n);
  for (std::size_t k = 0; k <= n; ++k) {
    QVec v = cur.entries();
    if (auto c = coordinates(powers, v)) {
      std::vector<Rational> co(k + 1);
      for (std::size_t i = 0; i < k; ++i) co[i] = -(*c)[i];
      co[k] = 1;
      return UniPoly(co);
    }
    powers.push_back(v);
    cur = cur * a;
  }
  throw std::logic_error("minimal_polynomial: no relation found");
}

namespace {

QMatrix poly_at(const UniPoly& p, const QMatrix& a) {
  const std::size_t n = a.rows();
  QMatrix acc(n, n);
  for (int k = p.degree(); k >= 0; --k) {
    acc = acc * a;
    for (std::size_t i = 0; i < n; ++i) acc(i, i) += p.coeff(k);
  }
  return acc;
}

}  // namespace

QMatrix semisimple_part(const QMatrix& a) {
  UniPoly mp = minimal_polynomial(a);
  UniPoly sq = exact_div(mp, gcd(mp, mp.derivative()));
  UniPoly d = sq.derivative();
  QMatrix s = a;
  for (std::size_t it = 0; it < 2 * a.rows() + 2; ++it) {
    QMatrix ps = poly_at(sq, s);
    if (ps.is_zero()) return s;
    s = s - ps * inverse(poly_at(d, s));
  }
  throw std::logic_error("semisimple_part: Newton iteration did not converge");
}

}  // namespace ol
