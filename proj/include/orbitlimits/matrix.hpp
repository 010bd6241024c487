#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "orbitlimits/parallel.hpp"
#include "orbitlimits/poly.hpp"
#include "orbitlimits/rational.hpp"

namespace ol {

inline bool is_zero(const UniPoly& p) { return p.is_zero(); }
inline bool is_zero(const RationalFn& f) { return f.is_zero(); }

// Dense row-major matrix over S in {Rational, UniPoly, RationalFn}.
template <class S>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : r_(r), c_(c), a_(r * c, S(0)) {}
  Matrix(std::size_t r, std::size_t c, std::vector<S> a) : r_(r), c_(c), a_(std::move(a)) {
    if (a_.size() != r * c) throw std::invalid_argument("Matrix: entry count mismatch");
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = S(1);
    return m;
  }
  static Matrix from_columns(const std::vector<std::vector<S>>& cols, std::size_t rows) {
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != rows) throw std::invalid_argument("from_columns: length mismatch");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }
  static Matrix from_rows(const std::vector<std::vector<S>>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw std::invalid_argument("from_rows: length mismatch");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  S& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const S& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }
  const std::vector<S>& entries() const { return a_; }

  std::vector<S> row(std::size_t i) const {
    return std::vector<S>(a_.begin() + static_cast<long>(i * c_),
                          a_.begin() + static_cast<long>((i + 1) * c_));
  }
  std::vector<S> col(std::size_t j) const {
    std::vector<S> v(r_);
    for (std::size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
    return v;
  }
  void set_col(std::size_t j, const std::vector<S>& v) {
    for (std::size_t i = 0; i < r_; ++i) (*this)(i, j) = v[i];
  }
  void swap_rows(std::size_t i, std::size_t k) {
    if (i == k) return;
    for (std::size_t j = 0; j < c_; ++j) std::swap((*this)(i, j), (*this)(k, j));
  }

  Matrix transpose() const {
    Matrix t(c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!ol::is_zero(x)) return false;
    return true;
  }

  std::vector<S> apply(const std::vector<S>& v) const {
    if (v.size() != c_) throw std::invalid_argument("apply: dimension mismatch");
    std::vector<S> out(r_, S(0));
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j) {
        const S& x = (*this)(i, j);
        if (!ol::is_zero(x) && !ol::is_zero(v[j])) out[i] += x * v[j];
      }
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.c_ != b.r_) throw std::invalid_argument("matrix product: shape mismatch");
    Matrix m(a.r_, b.c_);
    for (std::size_t i = 0; i < a.r_; ++i)
      for (std::size_t k = 0; k < a.c_; ++k) {
        const S& x = a(i, k);
        if (ol::is_zero(x)) continue;
        for (std::size_t j = 0; j < b.c_; ++j) {
          const S& y = b(k, j);
          if (!ol::is_zero(y)) m(i, j) += x * y;
        }
      }
    return m;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) {
    check_same(a, b);
    for (std::size_t i = 0; i < a.a_.size(); ++i) a.a_[i] += b.a_[i];
    return a;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) {
    check_same(a, b);
    for (std::size_t i = 0; i < a.a_.size(); ++i) a.a_[i] -= b.a_[i];
    return a;
  }
  friend Matrix operator*(const S& c, Matrix a) {
    for (auto& x : a.a_) x = c * x;
    return a;
  }
  Matrix operator-() const {
    Matrix m(*this);
    for (auto& x : m.a_) x = -x;
    return m;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  static void check_same(const Matrix& a, const Matrix& b) {
    if (a.r_ != b.r_ || a.c_ != b.c_) throw std::invalid_argument("matrix sum: shape mismatch");
  }
  std::size_t r_ = 0, c_ = 0;
  std::vector<S> a_;
};

using QMatrix = Matrix<Rational>;
using PMatrix = Matrix<UniPoly>;
using FMatrix = Matrix<RationalFn>;
using PVec = std::vector<UniPoly>;
using FVec = std::vector<RationalFn>;

class SingularMatrix : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// ---- Rational ----
std::size_t rank(const QMatrix& m, Exec ex = Exec::Parallel);
// Basis of {v : m v = 0}; the vector for free column f has v_f = 1 and
// zeros at the other free columns.
std::vector<QVec> nullspace(const QMatrix& m, Exec ex = Exec::Parallel);
Rational det(const QMatrix& m);
QMatrix inverse(const QMatrix& m);  // throws SingularMatrix
std::optional<QVec> solve(const QMatrix& a, const QVec& b);
// Reduced row echelon form; pivots receives pivot columns.
QMatrix rref(QMatrix m, std::vector<std::size_t>* pivots = nullptr);

UniPoly minimal_polynomial(const QMatrix& a);
// Semisimple part by exact Newton iteration on the squarefree part of the
// minimal polynomial.
QMatrix semisimple_part(const QMatrix& a);

// ---- Polynomial ----
std::size_t rank(const PMatrix& m);
// Polynomial basis of the Q(t)-kernel; each vector has coprime entries.
std::vector<PVec> nullspace(const PMatrix& m);
UniPoly det(const PMatrix& m);

struct Adjugate {
  UniPoly det;
  PMatrix adj;
};
// m * adj = det * I exactly. Throws SingularMatrix when det = 0.
Adjugate invert_via_adjugate(const PMatrix& m);
// X = (I + phi)^{-1} y by the finite series sum (-phi)^k y; nullopt if the
// series has not terminated after max_terms terms.
std::optional<PMatrix> neumann_solve(const PMatrix& phi, const PMatrix& y, std::size_t max_terms);

QMatrix eval(const PMatrix& m, const Rational& t);
PMatrix coefficient_shift(const PMatrix& m, int k);  // divide every entry by t^k

// ---- Rational functions ----
std::size_t rank(const FMatrix& m);
std::vector<FVec> nullspace(const FMatrix& m);
QMatrix eval(const FMatrix& m, const Rational& t);
QMatrix limit_at_zero(const FMatrix& m);  // throws PoleAtZero
PMatrix clear_row_denominators(const FMatrix& m);
FMatrix to_fn(const PMatrix& m);
// Same Q(t)-column span, polynomial entries, full column rank at t = 0.
PMatrix column_normalize(const FMatrix& a);

// ---- Subspaces of Q^n given by spanning vectors ----
std::size_t span_rank(const std::vector<QVec>& vs, std::size_t dim);
std::vector<QVec> span_basis(const std::vector<QVec>& vs, std::size_t dim);
bool in_span(const std::vector<QVec>& basis, const QVec& v);
// Coordinates of v in the given (independent) vectors, nullopt if outside.
std::optional<QVec> coordinates(const std::vector<QVec>& basis, const QVec& v);
bool same_span(const std::vector<QVec>& a, const std::vector<QVec>& b, std::size_t dim);
// Orthogonal complement under the standard inner product.
std::vector<QVec> orthogonal_complement(const std::vector<QVec>& vs, std::size_t dim);
std::vector<QVec> intersect(const std::vector<QVec>& a, const std::vector<QVec>& b, std::size_t dim);
// Complement of span(sub) inside span(whole), chosen among whole's vectors.
std::vector<QVec> complement_within(const std::vector<QVec>& sub, const std::vector<QVec>& whole,
                                    std::size_t dim);

std::string to_string(const QMatrix& m);
std::string to_string(const PMatrix& m);

}  // namespace ol
