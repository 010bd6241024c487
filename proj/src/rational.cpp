#include "orbitlimits/rational.hpp"

#include <stdexcept>

#include "orbitlimits/random.hpp"

namespace ol {

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  bool slash = false;
  bool digit_before = false, digit_after = false;
  for (std::size_t i = start; i < s.size(); ++i) {
    char ch = s[i];
    if (ch == '/') {
      if (slash) throw std::invalid_argument("bad rational: " + s);
      slash = true;
    } else if (ch >= '0' && ch <= '9') {
      (slash ? digit_after : digit_before) = true;
    } else {
      throw std::invalid_argument("bad rational: " + s);
    }
  }
  if (!digit_before || (slash && !digit_after)) throw std::invalid_argument("bad rational: " + s);
  std::string body = s[0] == '+' ? s.substr(1) : s;
  Rational q;
  if (q.set_str(body, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  if (slash && sgn(q.get_den()) == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

bool in_lowest_terms(const Rational& q) {
  if (sgn(q.get_den()) <= 0) return false;
  Integer g;
  mpz_gcd(g.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return g == 1;
}

QVec zero_vec(std::size_t n) { return QVec(n, Rational(0)); }

bool is_zero(const QVec& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

Rational dot(const QVec& a, const QVec& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  return s;
}

QVec operator+(const QVec& a, const QVec& b) {
  QVec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

QVec operator-(const QVec& a, const QVec& b) {
  QVec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

QVec operator*(const Rational& c, const QVec& a) {
  QVec r(a);
  for (auto& x : r) x *= c;
  return r;
}

QVec& axpy(QVec& y, const Rational& c, const QVec& x) {
  if (sgn(c) == 0) return y;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (sgn(x[i]) != 0) y[i] += c * x[i];
  return y;
}

Rational random_rational(Rng& rng, long range, long den) {
  long d = rng.uniform(1, den);
  long n = rng.uniform(-range * d, range * d);
  Rational q{Integer(n), Integer(d)};
  q.canonicalize();
  return q;
}

}  // namespace ol
