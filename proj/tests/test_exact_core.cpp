#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "orbitlimits/matrix.hpp"
#include "orbitlimits/random.hpp"

using namespace ol;

namespace {

QMatrix random_q(Rng& rng, std::size_t r, std::size_t c, long range = 3) {
  QMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = random_rational(rng, range, 2);
  return m;
}

// Rank-deficient by construction: product of r x k and k x c.
QMatrix random_rank(Rng& rng, std::size_t r, std::size_t c, std::size_t k) {
  return random_q(rng, r, k) * random_q(rng, k, c);
}

PMatrix random_p(Rng& rng, std::size_t n, int deg) {
  PMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Rational> c;
      for (int d = 0; d <= deg; ++d) c.push_back(Rational(rng.uniform(-3, 3)));
      m(i, j) = UniPoly(c);
    }
  return m;
}

// Leibniz expansion, independent of elimination.
template <class S>
S leibniz(const Matrix<S>& m) {
  std::vector<std::size_t> p(m.rows());
  std::iota(p.begin(), p.end(), 0);
  S total(0);
  do {
    int inv = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = i + 1; j < p.size(); ++j) inv += p[i] > p[j];
    S term(1);
    for (std::size_t i = 0; i < p.size(); ++i) term = term * m(i, p[i]);
    if (inv % 2)
      total -= term;
    else
      total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

UniPoly tpow(int k) { return UniPoly::monomial(1, k); }

}  // namespace

TEST_CASE("rationals are canonical") {
  CHECK(to_string(parse_rational("-6/4")) == "-3/2");
  CHECK(to_string(parse_rational("+6/4")) == "3/2");
  // The sign belongs in front of the numerator.
  CHECK_THROWS_AS(parse_rational("6/-4"), std::invalid_argument);
  CHECK(to_string(parse_rational("0/7")) == "0");
  CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    Rational a = random_rational(rng, 9, 7), b = random_rational(rng, 9, 7);
    CHECK(in_lowest_terms(a * b + a));
    if (sgn(b) != 0) CHECK(in_lowest_terms(a / b));
  }
}

TEST_CASE("nullspace basics") {
  CHECK(nullspace(QMatrix(2, 2)).size() == 2);
  CHECK(nullspace(QMatrix::identity(3)).empty());
}

TEST_CASE("rank plus nullity equals columns; serial and parallel agree") {
  Rng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t r = static_cast<std::size_t>(rng.uniform(1, 7)), c = static_cast<std::size_t>(rng.uniform(1, 7));
    std::size_t k = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(std::min(r, c))));
    QMatrix m = random_rank(rng, r, c, k);
    auto ns = nullspace(m, Exec::Serial);
    CHECK(rank(m) + ns.size() == c);
    CHECK(rank(m, Exec::Serial) == rank(m, Exec::Parallel));
    CHECK(nullspace(m, Exec::Parallel) == ns);
    for (const auto& v : ns) CHECK(is_zero(m.apply(v)));
    CHECK(span_rank(ns, c) == ns.size());
  }
}

TEST_CASE("determinant and inverse match independent routes") {
  Rng rng(3);
  for (std::size_t n = 1; n <= 5; ++n) {
    QMatrix m = random_q(rng, n, n);
    CHECK(det(m) == leibniz(m));
    if (sgn(det(m)) != 0) CHECK(m * inverse(m) == QMatrix::identity(n));
  }
  CHECK_THROWS_AS(inverse(QMatrix(2, 2)), SingularMatrix);
}

TEST_CASE("adjugate inverse over Q[t]") {
  auto id = invert_via_adjugate(PMatrix::identity(3));
  CHECK(id.det == UniPoly(1));
  CHECK(id.adj == PMatrix::identity(3));
  Rng rng(5);
  for (std::size_t n = 1; n <= 6; ++n) {
    PMatrix m = random_p(rng, n, n <= 4 ? 2 : 3);
    auto a = invert_via_adjugate(m);
    PMatrix scaled(n, n);
    for (std::size_t i = 0; i < n; ++i) scaled(i, i) = a.det;
    CHECK(m * a.adj == scaled);
    if (n <= 5) CHECK(a.det == leibniz(m));
  }
  CHECK_THROWS_AS(invert_via_adjugate(PMatrix(2, 2)), SingularMatrix);
}

TEST_CASE("Neumann series agrees with the adjugate when phi is nilpotent") {
  PMatrix phi(3, 3);
  phi(0, 1) = tpow(1);
  phi(1, 2) = UniPoly(2) * tpow(2);
  PMatrix y = PMatrix::identity(3);
  auto x = neumann_solve(phi, y, 5);
  REQUIRE(x.has_value());
  auto a = invert_via_adjugate(PMatrix::identity(3) + phi);
  CHECK(a.det == UniPoly(1));
  CHECK(*x == a.adj);
  PMatrix notNil = PMatrix::identity(2);
  CHECK_FALSE(neumann_solve(notNil, PMatrix::identity(2), 6).has_value());
}

TEST_CASE("polynomial arithmetic") {
  UniPoly p({Rational(-1), Rational(0), Rational(1)});  // t^2 - 1
  UniPoly q({Rational(1), Rational(1)});
  auto [quo, rem] = divmod(p, q);
  CHECK(quo == UniPoly({Rational(-1), Rational(1)}));
  CHECK(rem.is_zero());
  CHECK(gcd(p, q * q) == q);
  auto roots = rational_roots(UniPoly({Rational(-3), Rational(2)}) * p);
  std::sort(roots.begin(), roots.end());
  CHECK(roots == std::vector<Rational>{Rational(-1), Rational(1), Rational(3, 2)});
  CHECK_THROWS_AS(exact_div(p, UniPoly({Rational(2), Rational(1)})), std::domain_error);
}

TEST_CASE("rational functions reduce and evaluate at zero") {
  RationalFn f(UniPoly({Rational(1), Rational(0), Rational(1)}), UniPoly({Rational(2), Rational(1)}));
  CHECK(limit_at_zero(f) == Rational(1, 2));
  CHECK(limit_at_zero(RationalFn(tpow(1), tpow(1))) == 1);
  CHECK_THROWS_AS(limit_at_zero(RationalFn(UniPoly(1), tpow(1))), PoleAtZero);
  RationalFn g(UniPoly(2) * tpow(2), UniPoly(4) * tpow(1));
  CHECK(g.den() == UniPoly(1));
  CHECK(g.num() == UniPoly(Rational(1, 2)) * tpow(1));
}

TEST_CASE("column normalization") {
  FMatrix a(2, 2);
  a(0, 0) = RationalFn(1);
  a(1, 0) = RationalFn(tpow(1));
  a(0, 1) = RationalFn(tpow(1));
  a(1, 1) = RationalFn(tpow(2) + tpow(3));
  PMatrix out = column_normalize(a);
  CHECK(rank(eval(out, Rational(0))) == 2);
  // Same span over Q(t): ranks of the pieces and of the union agree.
  FMatrix both(2, 4);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      both(i, j) = a(i, j);
      both(i, j + 2) = RationalFn(out(i, j));
    }
  CHECK(rank(both) == 2);

  FMatrix single(2, 1);
  single(0, 0) = RationalFn(tpow(3));
  single(1, 0) = RationalFn(tpow(5));
  PMatrix s = column_normalize(single);
  CHECK(s(0, 0) == UniPoly(1));
  CHECK(s(1, 0) == tpow(2));
}

TEST_CASE("column normalization property: span kept and full rank at zero") {
  Rng rng(19);
  for (int trial = 0; trial < 15; ++trial) {
    const std::size_t r = 4, c = 2 + static_cast<std::size_t>(trial % 2);
    PMatrix base = random_p(rng, r, 1);
    FMatrix a(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) a(i, j) = RationalFn(base(i, j) * tpow(static_cast<int>(j) + 1), UniPoly(1) + tpow(1));
    // Force a dependency at t = 0 between the first two columns.
    for (std::size_t i = 0; i < r; ++i) a(i, 1) = a(i, 0) + RationalFn(tpow(2)) * a(i, 1);
    if (rank(a) != c) continue;
    PMatrix out = column_normalize(a);
    CHECK(rank(eval(out, Rational(0))) == c);
    FMatrix both(r, 2 * c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) {
        both(i, j) = a(i, j);
        both(i, j + c) = RationalFn(out(i, j));
      }
    CHECK(rank(both) == c);
  }
}

TEST_CASE("subspace helpers") {
  std::vector<QVec> a{{1, 0, 0}, {0, 1, 0}}, b{{1, 1, 0}, {1, -1, 0}};
  CHECK(same_span(a, b, 3));
  CHECK(intersect(a, {{0, 1, 1}, {0, 0, 1}}, 3).size() == 1);
  auto perp = orthogonal_complement(a, 3);
  REQUIRE(perp.size() == 1);
  CHECK(dot(perp[0], a[0]) == 0);
  CHECK(coordinates(b, QVec{2, 0, 0}) == QVec{1, 1});
}
