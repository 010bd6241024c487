#include "orbitlimits/poly.hpp"

#include <algorithm>
#include <climits>
#include <sstream>

namespace ol {

UniPoly::UniPoly(const Rational& c) {
  if (sgn(c) != 0) c_.push_back(c);
}

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::monomial(const Rational& c, int deg) {
  if (sgn(c) == 0) return {};
  std::vector<Rational> v(static_cast<std::size_t>(deg) + 1, Rational(0));
  v.back() = c;
  return UniPoly(std::move(v));
}

void UniPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

int UniPoly::valuation() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0) return static_cast<int>(i);
  return -1;
}

Rational UniPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(i)];
}

Rational UniPoly::eval(const Rational& x) const {
  Rational r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

double UniPoly::eval(double x) const {
  double r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + it->get_d();
  return r;
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> v(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * static_cast<long>(i);
  return UniPoly(std::move(v));
}

UniPoly UniPoly::shift_down(int k) const {
  if (k <= 0 || is_zero()) return shift_up(-k);
  if (valuation() < k) throw std::domain_error("shift_down: not divisible by t^k");
  return UniPoly(std::vector<Rational>(c_.begin() + k, c_.end()));
}

UniPoly UniPoly::shift_up(int k) const {
  if (k <= 0 || is_zero()) return *this;
  std::vector<Rational> v(static_cast<std::size_t>(k), Rational(0));
  v.insert(v.end(), c_.begin(), c_.end());
  return UniPoly(std::move(v));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return {};
  Rational inv = 1 / lead();
  return *this * inv;
}

UniPoly UniPoly::primitive() const {
  if (is_zero()) return {};
  Integer l = 1, g = 0;
  for (const auto& x : c_) {
    if (sgn(x) == 0) continue;
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num_mpz_t());
  }
  Rational s(l, g);
  s.canonicalize();
  if (sgn(lead()) < 0) s = -s;
  return *this * s;
}

UniPoly UniPoly::operator-() const {
  UniPoly r(*this);
  for (auto& x : r.c_) x = -x;
  return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      if (sgn(b.c_[j]) != 0) v[i + j] += a.c_[i] * b.c_[j];
  }
  return UniPoly(std::move(v));
}

UniPoly& UniPoly::operator*=(const UniPoly& o) { return *this = *this * o; }

UniPoly& UniPoly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    c_.clear();
    return *this;
  }
  for (auto& x : c_) x *= c;
  return *this;
}

std::string UniPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = c_[static_cast<std::size_t>(i)];
    if (sgn(c) == 0) continue;
    Rational a = abs(c);
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << "-";
    first = false;
    if (i == 0 || a != 1) os << a.get_str();
    if (i > 0) {
      if (a != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (a.degree() < b.degree()) return {UniPoly(), a};
  std::vector<Rational> r = a.coeffs();
  std::vector<Rational> q(static_cast<std::size_t>(a.degree() - b.degree() + 1), Rational(0));
  const auto& bc = b.coeffs();
  Rational inv = 1 / b.lead();
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    Rational f = r[static_cast<std::size_t>(k + b.degree())] * inv;
    q[static_cast<std::size_t>(k)] = f;
    if (sgn(f) == 0) continue;
    for (int j = 0; j <= b.degree(); ++j)
      r[static_cast<std::size_t>(k + j)] -= f * bc[static_cast<std::size_t>(j)];
  }
  return {UniPoly(std::move(q)), UniPoly(std::move(r))};
}

UniPoly exact_div(const UniPoly& a, const UniPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::domain_error("exact_div: nonzero remainder");
  return q;
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a.primitive(), y = b.primitive();
  while (!y.is_zero()) {
    UniPoly r = divmod(x, y).second.primitive();
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

bool is_squarefree(const UniPoly& p) {
  if (p.degree() <= 0) return true;
  return gcd(p, p.derivative()).degree() == 0;
}

namespace {

std::vector<Integer> divisors(Integer n) {
  n = abs(n);
  std::vector<Integer> out;
  for (Integer d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  }
  return out;
}

}  // namespace

std::vector<Rational> rational_roots(const UniPoly& p) {
  std::vector<Rational> roots;
  if (p.degree() <= 0) return roots;
  UniPoly q = p;
  int v = q.valuation();
  if (v > 0) {
    roots.push_back(0);
    q = q.shift_down(v);
  }
  if (q.degree() == 0) return roots;
  q = q.primitive();
  Integer a0 = q.coeff(0).get_num(), an = q.lead().get_num();
  for (const auto& num : divisors(a0))
    for (const auto& den : divisors(an))
      for (int s : {1, -1}) {
        Rational r(num * s, den);
        r.canonicalize();
        if (sgn(q.eval(r)) == 0 && std::find(roots.begin(), roots.end(), r) == roots.end())
          roots.push_back(r);
      }
  std::sort(roots.begin(), roots.end());
  return roots;
}

RationalFn::RationalFn(UniPoly num, UniPoly den) {
  if (den.is_zero()) throw std::domain_error("RationalFn: zero denominator");
  if (num.is_zero()) {
    num_ = UniPoly();
    den_ = UniPoly(1);
    return;
  }
  if (den.degree() > 0) {
    UniPoly g = gcd(num, den);
    if (g.degree() > 0) {
      num = exact_div(num, g);
      den = exact_div(den, g);
    }
  }
  Rational l = den.lead();
  num_ = num * (1 / l);
  den_ = den * (1 / l);
}

int RationalFn::order() const {
  if (is_zero()) return INT_MAX / 2;
  return num_.valuation() - den_.valuation();
}

Rational RationalFn::eval(const Rational& x) const {
  Rational d = den_.eval(x);
  if (sgn(d) == 0) throw std::domain_error("RationalFn: pole at evaluation point");
  return num_.eval(x) / d;
}

RationalFn operator+(const RationalFn& a, const RationalFn& b) {
  if (a.den_ == b.den_) return RationalFn(a.num_ + b.num_, a.den_);
  return RationalFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFn operator-(const RationalFn& a, const RationalFn& b) { return a + (-b); }

RationalFn operator*(const RationalFn& a, const RationalFn& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_polynomial() && b.is_polynomial())
    return RationalFn(a.num_ * b.num_ * (1 / (a.den_.lead() * b.den_.lead())));
  return RationalFn(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFn operator/(const RationalFn& a, const RationalFn& b) {
  if (b.is_zero()) throw std::domain_error("RationalFn: division by zero");
  return RationalFn(a.num_ * b.den_, a.den_ * b.num_);
}

std::string RationalFn::str(const std::string& var) const {
  if (is_polynomial()) return num_.str(var);
  return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

Rational limit_at_zero(const RationalFn& f) {
  Rational d = f.den().coeff(0);
  if (sgn(d) == 0) throw PoleAtZero("limit_at_zero: pole at t = 0");
  return f.num().coeff(0) / d;
}

}  // namespace ol
