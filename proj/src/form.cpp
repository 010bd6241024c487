#include "orbitlimits/form.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ol {

MPoly MPoly::constant(int nvars, const Rational& c) {
  MPoly p(nvars);
  p.add_term(Exponent(static_cast<std::size_t>(nvars), 0), c);
  return p;
}

MPoly MPoly::variable(int nvars, int i) {
  MPoly p(nvars);
  Exponent e(static_cast<std::size_t>(nvars), 0);
  e[static_cast<std::size_t>(i)] = 1;
  p.add_term(e, 1);
  return p;
}

Rational MPoly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MPoly::add_term(const Exponent& e, const Rational& c) {
  if (static_cast<int>(e.size()) != nvars_) throw std::invalid_argument("add_term: wrong exponent length");
  if (sgn(c) == 0) return;
  auto [it, fresh] = terms_.emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

int MPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

bool MPoly::is_homogeneous() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = std::accumulate(e.begin(), e.end(), 0);
    if (d >= 0 && s != d) return false;
    d = s;
  }
  return true;
}

Rational MPoly::eval(const QVec& x) const {
  if (static_cast<int>(x.size()) != nvars_) throw std::invalid_argument("eval: wrong point length");
  Rational r = 0;
  for (const auto& [e, c] : terms_) {
    Rational m = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) m *= x[i];
    r += m;
  }
  return r;
}

MPoly MPoly::derivative(int i) const {
  MPoly p(nvars_);
  auto ui = static_cast<std::size_t>(i);
  for (const auto& [e, c] : terms_) {
    if (e[ui] == 0) continue;
    Exponent f = e;
    --f[ui];
    p.add_term(f, c * e[ui]);
  }
  return p;
}

MPoly MPoly::substitute(const std::vector<MPoly>& q) const {
  if (static_cast<int>(q.size()) != nvars_) throw std::invalid_argument("substitute: wrong arity");
  int m = q.empty() ? 0 : q.front().nvars();
  // powers[i][k] = q_i^k, built lazily up to the largest exponent used.
  std::vector<std::vector<MPoly>> powers(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) powers[i].push_back(constant(m, 1));
  MPoly out(m);
  for (const auto& [e, c] : terms_) {
    MPoly term = constant(m, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      while (static_cast<int>(powers[i].size()) <= e[i]) powers[i].push_back(powers[i].back() * q[i]);
      if (e[i] > 0) term = term * powers[i][static_cast<std::size_t>(e[i])];
    }
    out += term;
  }
  return out;
}

MPoly MPoly::operator-() const {
  MPoly p(*this);
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  if (o.nvars_ != nvars_) throw std::invalid_argument("MPoly sum: variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  if (o.nvars_ != nvars_) throw std::invalid_argument("MPoly difference: variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("MPoly product: variable count mismatch");
  MPoly p(a.nvars_);
  Exponent s(static_cast<std::size_t>(a.nvars_));
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < s.size(); ++i) s[i] = ea[i] + eb[i];
      p.add_term(s, ca * cb);
    }
  return p;
}

MPoly operator*(const Rational& c, const MPoly& a) {
  if (sgn(c) == 0) return MPoly(a.nvars_);
  MPoly p(a);
  for (auto& [e, x] : p.terms_) x *= c;
  return p;
}

std::string MPoly::str(const std::vector<std::string>& names) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // Print in graded-lex order, highest first.
  std::vector<std::pair<Exponent, Rational>> ts(terms_.begin(), terms_.end());
  std::stable_sort(ts.begin(), ts.end(), [](const auto& x, const auto& y) {
    int dx = std::accumulate(x.first.begin(), x.first.end(), 0);
    int dy = std::accumulate(y.first.begin(), y.first.end(), 0);
    if (dx != dy) return dx > dy;
    return x.first > y.first;
  });
  for (const auto& [e, c] : ts) {
    Rational a = abs(c);
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << "-";
    first = false;
    bool constant_term = std::all_of(e.begin(), e.end(), [](int k) { return k == 0; });
    if (a != 1 || constant_term) os << a.get_str();
    bool need_star = a != 1;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (need_star) os << "*";
      need_star = true;
      os << (i < names.size() ? names[i] : "x" + std::to_string(i + 1));
      if (e[i] > 1) os << "^" << e[i];
    }
  }
  return os.str();
}

Form::Form(const MPoly& p, int degree) : MPoly(p), degree_(degree) {
  for (const auto& [e, c] : terms_)
    if (std::accumulate(e.begin(), e.end(), 0) != degree)
      throw std::invalid_argument("Form: term of the wrong degree");
}

void Form::add_term(const Exponent& e, const Rational& c) {
  if (std::accumulate(e.begin(), e.end(), 0) != degree_)
    throw std::invalid_argument("Form::add_term: wrong degree");
  MPoly::add_term(e, c);
}

Form operator+(const Form& a, const Form& b) {
  if (a.degree_ != b.degree_) throw std::invalid_argument("Form sum: degree mismatch");
  return Form(static_cast<const MPoly&>(a) + b, a.degree_);
}

Form operator-(const Form& a, const Form& b) {
  if (a.degree_ != b.degree_) throw std::invalid_argument("Form difference: degree mismatch");
  return Form(static_cast<const MPoly&>(a) - b, a.degree_);
}

Form operator*(const Rational& c, const Form& a) {
  return Form(c * static_cast<const MPoly&>(a), a.degree_);
}

namespace {

void basis_rec(int nvars, int left, Exponent& cur, std::size_t pos, std::vector<Exponent>& out) {
  if (pos + 1 == static_cast<std::size_t>(nvars)) {
    cur[pos] = left;
    out.push_back(cur);
    return;
  }
  for (int k = left; k >= 0; --k) {
    cur[pos] = k;
    basis_rec(nvars, left - k, cur, pos + 1, out);
  }
}

}  // namespace

std::vector<Exponent> monomial_basis(int nvars, int degree) {
  std::vector<Exponent> out;
  if (nvars <= 0 || degree < 0) return out;
  Exponent cur(static_cast<std::size_t>(nvars), 0);
  basis_rec(nvars, degree, cur, 0, out);
  return out;
}

Form linear_substitute(const Form& f, const std::vector<QVec>& rows) {
  std::vector<MPoly> q;
  for (const auto& r : rows) {
    MPoly l(f.nvars());
    for (std::size_t j = 0; j < r.size(); ++j)
      if (sgn(r[j]) != 0) l += r[j] * MPoly::variable(f.nvars(), static_cast<int>(j));
    q.push_back(std::move(l));
  }
  return Form(f.substitute(q), f.degree());
}

Form determinant_form(int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  Form f(n * n, n);
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)]) ++inversions;
    Exponent e(static_cast<std::size_t>(n * n), 0);
    for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i * n + perm[static_cast<std::size_t>(i)])] = 1;
    f.add_term(e, inversions % 2 ? -1 : 1);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return f;
}

}  // namespace ol
