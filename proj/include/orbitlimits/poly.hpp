#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "orbitlimits/rational.hpp"

namespace ol {

// Univariate polynomial in t over Q. Coefficients indexed by degree; the
// highest stored coefficient is nonzero unless the polynomial is zero.
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(const Rational& c);  // NOLINT: constants convert implicitly
  UniPoly(long c) : UniPoly(Rational(c)) {}  // NOLINT
  explicit UniPoly(std::vector<Rational> coeffs);

  static UniPoly monomial(const Rational& c, int deg);
  static UniPoly t() { return monomial(1, 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for 0
  bool is_zero() const { return c_.empty(); }
  // Lowest degree with nonzero coefficient; -1 for the zero polynomial.
  int valuation() const;
  Rational coeff(int i) const;
  const Rational& lead() const { return c_.back(); }
  const std::vector<Rational>& coeffs() const { return c_; }

  Rational eval(const Rational& x) const;
  double eval(double x) const;
  UniPoly derivative() const;
  // Exact division by t^k; requires valuation() >= k.
  UniPoly shift_down(int k) const;
  UniPoly shift_up(int k) const;
  UniPoly monic() const;
  // Multiply by the lcm of denominators over the gcd of numerators.
  UniPoly primitive() const;

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o);
  UniPoly& operator*=(const Rational& c);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }
  friend UniPoly operator*(const Rational& c, UniPoly a) { return a *= c; }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

  std::string str(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

// Euclidean division a = q*b + r with deg r < deg b. Throws on b == 0.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
// Exact quotient; throws std::domain_error when b does not divide a.
UniPoly exact_div(const UniPoly& a, const UniPoly& b);
// Monic gcd; gcd(0,0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);
bool is_squarefree(const UniPoly& p);
// Distinct rational roots (rational root test on the primitive integer form).
std::vector<Rational> rational_roots(const UniPoly& p);

// Element of Q(t): num/den with gcd 1 and den monic.
class RationalFn {
 public:
  RationalFn() : num_(), den_(1) {}
  RationalFn(const UniPoly& p) : num_(p), den_(1) {}  // NOLINT
  RationalFn(const Rational& c) : num_(c), den_(1) {}  // NOLINT
  RationalFn(long c) : num_(c), den_(1) {}              // NOLINT
  RationalFn(UniPoly num, UniPoly den);

  const UniPoly& num() const { return num_; }
  const UniPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  // t-adic order: valuation(num) - valuation(den). Zero maps to a large value.
  int order() const;
  Rational eval(const Rational& x) const;  // throws on a pole

  RationalFn operator-() const { return RationalFn(-num_, den_); }
  friend RationalFn operator+(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator-(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator*(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator/(const RationalFn& a, const RationalFn& b);
  RationalFn& operator+=(const RationalFn& o) { return *this = *this + o; }
  RationalFn& operator-=(const RationalFn& o) { return *this = *this - o; }
  RationalFn& operator*=(const RationalFn& o) { return *this = *this * o; }
  friend bool operator==(const RationalFn& a, const RationalFn& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFn& a, const RationalFn& b) { return !(a == b); }

  std::string str(const std::string& var = "t") const;

 private:
  UniPoly num_, den_;
};

class PoleAtZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// num(0)/den(0) after reduction; throws PoleAtZero when den(0) = 0.
Rational limit_at_zero(const RationalFn& f);

}  // namespace ol
