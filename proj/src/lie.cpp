#include "orbitlimits/lie.hpp"

#include <omp.h>

#include <stdexcept>

namespace ol {

LieElement unit_matrix(std::size_t n, std::size_t i, std::size_t j) {
  LieElement e(n, n);
  e(i, j) = 1;
  return e;
}

LieElement bracket(const LieElement& a, const LieElement& b) {
  if (a.rows() != b.rows() || a.rows() != a.cols() || b.rows() != b.cols())
    throw std::invalid_argument("bracket: dimension mismatch");
  return a * b - b * a;
}

QVec lie_vec(const LieElement& g) { return g.entries(); }

LieElement lie_unvec(const QVec& v, std::size_t n) {
  if (v.size() != n * n) throw std::invalid_argument("lie_unvec: length mismatch");
  return LieElement(n, n, v);
}

Form act_on_form(const LieElement& g, const Form& f) {
  auto n = static_cast<std::size_t>(f.nvars());
  if (g.rows() != n || g.cols() != n) throw std::invalid_argument("act_on_form: dimension mismatch");
  Form out(f.nvars(), f.degree());
  for (const auto& [e, c] : f.terms())
    for (std::size_t i = 0; i < n; ++i) {
      if (e[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (sgn(g(i, j)) == 0) continue;
        Exponent m = e;
        --m[i];
        ++m[j];
        out.add_term(m, g(i, j) * c * e[i]);
      }
    }
  return out;
}

QMatrix act_on_matrix(const LieElement& g, const QMatrix& y) {
  if (g.rows() != y.rows() || g.cols() != y.cols() || y.rows() != y.cols())
    throw std::invalid_argument("act_on_matrix: dimension mismatch");
  return g * y - y * g;
}

Representation Representation::sym(int nvars, int degree) {
  if (nvars < 1 || degree < 0) throw std::invalid_argument("Representation::sym: bad shape");
  Representation r;
  r.kind_ = RepKind::SymD;
  r.n_ = static_cast<std::size_t>(nvars);
  r.degree_ = degree;
  r.mono_ = monomial_basis(nvars, degree);
  r.dim_ = r.mono_.size();
  for (std::size_t k = 0; k < r.mono_.size(); ++k) r.index_[r.mono_[k]] = k;
  r.moves_.assign(r.n_ * r.n_, std::vector<Move>(r.dim_, Move{0, 0}));
  for (std::size_t i = 0; i < r.n_; ++i)
    for (std::size_t j = 0; j < r.n_; ++j)
      for (std::size_t m = 0; m < r.dim_; ++m) {
        const Exponent& e = r.mono_[m];
        if (e[i] == 0) continue;
        Exponent t = e;
        --t[i];
        ++t[j];
        r.moves_[i * r.n_ + j][m] = Move{r.index_.at(t), e[i]};
      }
  return r;
}

Representation Representation::conjugation(int n) {
  if (n < 1) throw std::invalid_argument("Representation::conjugation: bad shape");
  Representation r;
  r.kind_ = RepKind::MatrixConjugation;
  r.n_ = static_cast<std::size_t>(n);
  r.dim_ = r.n_ * r.n_;
  return r;
}

QVec Representation::to_vec(const Form& f) const {
  if (kind_ != RepKind::SymD || static_cast<std::size_t>(f.nvars()) != n_ || f.degree() != degree_)
    throw std::invalid_argument("to_vec: form does not match representation");
  QVec v = zero_vec(dim_);
  for (const auto& [e, c] : f.terms()) v[index_.at(e)] = c;
  return v;
}

Form Representation::to_form(const QVec& v) const {
  if (kind_ != RepKind::SymD || v.size() != dim_) throw std::invalid_argument("to_form: shape mismatch");
  Form f(static_cast<int>(n_), degree_);
  for (std::size_t k = 0; k < dim_; ++k) f.add_term(mono_[k], v[k]);
  return f;
}

QVec Representation::to_vec(const QMatrix& y) const {
  if (kind_ != RepKind::MatrixConjugation || y.rows() != n_ || y.cols() != n_)
    throw std::invalid_argument("to_vec: matrix does not match representation");
  return y.entries();
}

QMatrix Representation::to_matrix(const QVec& v) const {
  if (kind_ != RepKind::MatrixConjugation || v.size() != dim_)
    throw std::invalid_argument("to_matrix: shape mismatch");
  return QMatrix(n_, n_, v);
}

QVec Representation::act(const LieElement& g, const QVec& v) const {
  if (g.rows() != n_ || g.cols() != n_ || v.size() != dim_)
    throw std::invalid_argument("act: dimension mismatch");
  if (kind_ == RepKind::MatrixConjugation) return act_on_matrix(g, to_matrix(v)).entries();
  QVec out = zero_vec(dim_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) {
      if (sgn(g(i, j)) == 0) continue;
      const auto& mv = moves_[i * n_ + j];
      for (std::size_t m = 0; m < dim_; ++m)
        if (mv[m].coeff != 0 && sgn(v[m]) != 0) out[mv[m].target] += g(i, j) * v[m] * mv[m].coeff;
    }
  return out;
}

QMatrix Representation::rho(const LieElement& g) const {
  QMatrix r(dim_, dim_);
  for (std::size_t m = 0; m < dim_; ++m) {
    QVec e = zero_vec(dim_);
    e[m] = 1;
    r.set_col(m, act(g, e));
  }
  return r;
}

QMatrix Representation::orbit_map(const QVec& v, Exec ex) const {
  if (v.size() != dim_) throw std::invalid_argument("orbit_map: dimension mismatch");
  const std::size_t g = n_ * n_;
  QMatrix m(dim_, g);
  const int nt = ex == Exec::Parallel ? thread_count() : 1;
#pragma omp parallel for num_threads(nt) schedule(static) if (nt > 1)
  for (long kk = 0; kk < static_cast<long>(g); ++kk) {
    auto k = static_cast<std::size_t>(kk);
    std::size_t i = k / n_, j = k % n_;
    if (kind_ == RepKind::SymD) {
      const auto& mv = moves_[k];
      for (std::size_t s = 0; s < dim_; ++s)
        if (mv[s].coeff != 0 && sgn(v[s]) != 0) m(mv[s].target, k) += v[s] * mv[s].coeff;
    } else {
      // (E_ij Y - Y E_ij)(p,q) = delta_pi Y(j,q) - Y(p,i) delta_jq
      for (std::size_t q = 0; q < n_; ++q) m(i * n_ + q, k) += v[j * n_ + q];
      for (std::size_t p = 0; p < n_; ++p) m(p * n_ + j, k) -= v[p * n_ + i];
    }
  }
  return m;
}

std::vector<int> Representation::basis_weights(const std::vector<int>& d) const {
  if (d.size() != n_) throw std::invalid_argument("basis_weights: weight vector length");
  std::vector<int> w(dim_, 0);
  if (kind_ == RepKind::SymD) {
    for (std::size_t m = 0; m < dim_; ++m)
      for (std::size_t i = 0; i < n_; ++i) w[m] += d[i] * mono_[m][i];
  } else {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) w[i * n_ + j] = d[i] - d[j];
  }
  return w;
}

int Representation::lie_weight(std::size_t i, std::size_t j, const std::vector<int>& d) const {
  return kind_ == RepKind::SymD ? d[j] - d[i] : d[i] - d[j];
}

std::vector<LieElement> stabilizer_algebra(const Representation& rep, const QVec& v, Exec ex) {
  std::vector<LieElement> out;
  for (const auto& k : nullspace(rep.orbit_map(v, ex), ex)) out.push_back(lie_unvec(k, rep.n()));
  return out;
}

std::vector<QVec> tangent_space(const Representation& rep, const QVec& v, Exec ex) {
  QMatrix m = rep.orbit_map(v, ex);
  std::vector<QVec> cols;
  for (std::size_t k = 0; k < m.cols(); ++k) {
    QVec c = m.col(k);
    if (!is_zero(c)) cols.push_back(std::move(c));
  }
  return span_basis(cols, rep.dim());
}

bool is_subalgebra(const std::vector<LieElement>& basis) {
  std::vector<QVec> span;
  for (const auto& b : basis) span.push_back(lie_vec(b));
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      if (!in_span(span, lie_vec(bracket(basis[i], basis[j])))) return false;
  return true;
}

std::vector<std::size_t> lower_central_series(const std::vector<LieElement>& basis) {
  std::vector<std::size_t> dims;
  if (basis.empty()) return {0};
  std::size_t n2 = basis.front().rows() * basis.front().cols();
  std::size_t n = basis.front().rows();
  std::vector<QVec> cur;
  for (const auto& b : basis) cur.push_back(lie_vec(b));
  cur = span_basis(cur, n2);
  dims.push_back(cur.size());
  while (!cur.empty()) {
    std::vector<QVec> next;
    for (const auto& a : basis)
      for (const auto& c : cur) next.push_back(lie_vec(bracket(a, lie_unvec(c, n))));
    next = span_basis(next, n2);
    // Nonincreasing on a subalgebra; stop once it stalls.
    if (next.size() >= cur.size()) break;
    cur = std::move(next);
    dims.push_back(cur.size());
  }
  return dims;
}

bool is_nilpotent_algebra(const std::vector<LieElement>& basis) {
  return lower_central_series(basis).back() == 0;
}

QMatrix exp_nilpotent(const QMatrix& x) {
  std::size_t n = x.rows();
  QMatrix sum = QMatrix::identity(n), term = QMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    term = Rational(1, static_cast<unsigned long>(k)) * (term * x);
    if (term.is_zero()) return sum;
    sum = sum + term;
  }
  if (!(term * x).is_zero()) throw std::invalid_argument("exp_nilpotent: matrix is not nilpotent");
  return sum;
}

}  // namespace ol
