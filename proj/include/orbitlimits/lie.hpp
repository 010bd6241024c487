#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "orbitlimits/form.hpp"
#include "orbitlimits/matrix.hpp"

namespace ol {

// Element of gl_n as an n x n rational matrix.
using LieElement = QMatrix;

LieElement unit_matrix(std::size_t n, std::size_t i, std::size_t j);  // E_ij
LieElement bracket(const LieElement& a, const LieElement& b);
// Row-major coordinates in the basis E_00, E_01, ...
QVec lie_vec(const LieElement& g);
LieElement lie_unvec(const QVec& v, std::size_t n);

// Entry g(i,j) acts as x_j d/dx_i.
Form act_on_form(const LieElement& g, const Form& f);
// gy - yg.
QMatrix act_on_matrix(const LieElement& g, const QMatrix& y);

enum class RepKind { SymD, MatrixConjugation };

// Sym^d of Q^n with the graded-lex monomial basis, or gl_n acting on n x n
// matrices by commutator with the row-major entry basis.
class Representation {
 public:
  static Representation sym(int nvars, int degree);
  static Representation conjugation(int n);

  RepKind kind() const { return kind_; }
  std::size_t n() const { return n_; }
  int degree() const { return degree_; }
  std::size_t dim() const { return dim_; }
  std::size_t gl_dim() const { return n_ * n_; }
  const std::vector<Exponent>& monomials() const { return mono_; }

  QVec to_vec(const Form& f) const;
  Form to_form(const QVec& v) const;
  QVec to_vec(const QMatrix& y) const;
  QMatrix to_matrix(const QVec& v) const;

  // rho(g) v.
  QVec act(const LieElement& g, const QVec& v) const;
  // dim V x dim V matrix of rho(g).
  QMatrix rho(const LieElement& g) const;
  // dim V x n^2 matrix whose column i*n+j is rho(E_ij) v.
  QMatrix orbit_map(const QVec& v, Exec ex = Exec::Parallel) const;

  // Torus weights of the V basis for lambda(t) = diag(t^{d_i}).
  std::vector<int> basis_weights(const std::vector<int>& d) const;
  // Weight of E_ij as an operator on V under the same torus.
  int lie_weight(std::size_t i, std::size_t j, const std::vector<int>& d) const;

 private:
  struct Move {
    std::size_t target;
    int coeff;
  };
  RepKind kind_ = RepKind::SymD;
  std::size_t n_ = 0, dim_ = 0;
  int degree_ = 0;
  std::vector<Exponent> mono_;
  std::map<Exponent, std::size_t> index_;
  // moves_[i*n+j][m]: rho(E_ij) applied to basis vector m, for forms.
  std::vector<std::vector<Move>> moves_;
};

// Basis of {g : rho(g) v = 0}, in the nullspace ordering of the orbit map.
std::vector<LieElement> stabilizer_algebra(const Representation& rep, const QVec& v,
                                           Exec ex = Exec::Parallel);
// Basis of {rho(g) v : g in gl_n}.
std::vector<QVec> tangent_space(const Representation& rep, const QVec& v, Exec ex = Exec::Parallel);

bool is_subalgebra(const std::vector<LieElement>& basis);
// Lower central series dims of span(basis) until it stabilizes.
std::vector<std::size_t> lower_central_series(const std::vector<LieElement>& basis);
bool is_nilpotent_algebra(const std::vector<LieElement>& basis);

// Matrix exponential of a nilpotent matrix; throws if not nilpotent.
QMatrix exp_nilpotent(const QMatrix& x);

}  // namespace ol
