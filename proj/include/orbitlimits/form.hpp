#pragma once

#include <map>
#include <string>
#include <vector>

#include "orbitlimits/rational.hpp"

namespace ol {

using Exponent = std::vector<int>;

// Multivariate polynomial over Q; zero coefficients are never stored.
class MPoly {
 public:
  MPoly() = default;
  explicit MPoly(int nvars) : nvars_(nvars) {}
  static MPoly constant(int nvars, const Rational& c);
  static MPoly variable(int nvars, int i);

  int nvars() const { return nvars_; }
  const std::map<Exponent, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(const Exponent& e) const;
  void add_term(const Exponent& e, const Rational& c);
  int total_degree() const;  // -1 for zero
  bool is_homogeneous() const;

  Rational eval(const QVec& x) const;
  MPoly derivative(int i) const;
  // p(q_1, ..., q_nvars); every q shares one variable count.
  MPoly substitute(const std::vector<MPoly>& q) const;

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(const Rational& c, const MPoly& a);
  friend bool operator==(const MPoly& a, const MPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

  // Variables default to x1..xn.
  std::string str(const std::vector<std::string>& names = {}) const;

 protected:
  int nvars_ = 0;
  std::map<Exponent, Rational> terms_;
};

// Homogeneous form of fixed degree: an element of Sym^d.
class Form : public MPoly {
 public:
  Form() = default;
  Form(int nvars, int degree) : MPoly(nvars), degree_(degree) {}
  // Throws std::invalid_argument when p is not homogeneous of the degree.
  Form(const MPoly& p, int degree);

  int degree() const { return degree_; }
  void add_term(const Exponent& e, const Rational& c);

  friend Form operator+(const Form& a, const Form& b);
  friend Form operator-(const Form& a, const Form& b);
  friend Form operator*(const Rational& c, const Form& a);
  friend bool operator==(const Form& a, const Form& b) {
    return a.degree_ == b.degree_ && static_cast<const MPoly&>(a) == static_cast<const MPoly&>(b);
  }
  friend bool operator!=(const Form& a, const Form& b) { return !(a == b); }

 private:
  int degree_ = 0;
};

// Exponents of degree d in n variables, graded-lex: x1^d first.
std::vector<Exponent> monomial_basis(int nvars, int degree);

// f(ux) with (ux)_i = sum_j u(i,j) x_j.
Form linear_substitute(const Form& f, const std::vector<QVec>& rows);

// det of the n x n matrix of variables x1..x_{n^2}, row-major.
Form determinant_form(int n);

}  // namespace ol
