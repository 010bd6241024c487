#include <doctest.h>

#include <algorithm>

#include "orbitlimits/diffgeo.hpp"
#include "orbitlimits/random.hpp"

using namespace ol;

namespace {

double fdot(const QVec& a, const QVec& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i].get_d() * b[i].get_d();
  return s;
}

}  // namespace

TEST_CASE("round spheres have Ricci (n-1)/r^2") {
  for (int n : {2, 3, 4})
    for (Rational r : {Rational(1), Rational(3, 2), Rational(2)}) {
      auto curv = second_fundamental_form(sphere_model(n, r));
      CHECK(curv.K == static_cast<std::size_t>(n));
      CHECK(curv.skew);
      CHECK(curv.beta_is_minus_alpha);
      CHECK(curv.symmetric);
      riemann_and_ricci(curv);
      CHECK(gauss_antisymmetric(curv));
      Rational want = Rational(n - 1) / (r * r);
      CHECK(curv.ricci == want * QMatrix::identity(static_cast<std::size_t>(n)));
    }
}

TEST_CASE("Pi agrees with a floating-point projection") {
  auto model = sphere_model(3, Rational(5, 2));
  auto curv = second_fundamental_form(model);
  for (std::size_t i = 0; i < curv.K; ++i)
    for (std::size_t j = 0; j < curv.K; ++j) {
      QVec v = model.S[j].apply(model.S[i].apply(model.x));
      for (std::size_t r = 0; r < model.normal.size(); ++r) {
        double want = fdot(model.normal[r], v) / fdot(model.normal[r], model.normal[r]);
        CHECK(curv.pi[i][j][r].get_d() == doctest::Approx(want).epsilon(1e-12));
      }
    }
}

TEST_CASE("a non-orthogonal normal basis is rejected") {
  auto model = sphere_model(2, Rational(1));
  REQUIRE_FALSE(model.normal.empty());
  QVec tangent = model.S[0].apply(model.x);
  for (std::size_t k = 0; k < tangent.size(); ++k) model.normal[0][k] += tangent[k];
  CHECK_THROWS_AS(second_fundamental_form(model), NotOrthonormal);
}

TEST_CASE("adjoint orbit table") {
  for (auto lambda : {std::vector<Rational>{1, 2, 4}, std::vector<Rational>{0, 1, 3, -2}}) {
    auto t = adjoint_table(lambda);
    CHECK(t.only_qp_nonzero);
    CHECK(t.osculates);
    CHECK(t.generic_agrees);
    for (const auto& [pq, d] : t.d) {
      auto [p, q] = pq;
      Rational gap = lambda[q] - lambda[p];
      Rational inv = 1 / (gap * gap);
      for (std::size_t k = 0; k < lambda.size(); ++k) {
        Rational want = k == p ? Rational(-inv) : k == q ? inv : Rational(0);
        CHECK(d(k, k) == want);
      }
    }
  }
  CHECK_THROWS(adjoint_table({1, 1, 2}));
}

TEST_CASE("block Pi is the block-diagonal part of the commutator") {
  Rng rng(21);
  for (std::size_t m : {1u, 2u, 3u}) {
    QMatrix X(2 * m, 2 * m), Y(2 * m, 2 * m);
    for (std::size_t i = 0; i < 2 * m; ++i)
      for (std::size_t j = 0; j < 2 * m; ++j) {
        X(i, j) = random_rational(rng, 3, 2);
        Y(i, j) = random_rational(rng, 3, 2);
      }
    QMatrix c = X * Y - Y * X;
    for (std::size_t i = 0; i < 2 * m; ++i)
      for (std::size_t j = 0; j < 2 * m; ++j)
        if ((i < m) != (j < m)) c(i, j) = 0;
    CHECK(block_pi(X, Y) == c);
  }
}

TEST_CASE("cyclic shift tables") {
  for (int n = 3; n <= 7; ++n) {
    auto rep = cyclic_shift_suite(n);
    CHECK(rep.closed_form_matches);
    CHECK(rep.no_identity_component);
    CHECK(rep.tangent_perpendicular);
    CHECK(rep.lbasis_ok);
    CHECK(rep.chart_matches);
    CHECK(rep.riemann_antisymmetric);
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          Rational want = 0;
          if (k != 0 && (i + j + 1) % n == k) want = Rational(n - 1 - i - j);
          CHECK(cyclic_closed_form(n, i, j, k) == want);
          CHECK(rep.P[static_cast<std::size_t>(k)](static_cast<std::size_t>(i), static_cast<std::size_t>(j)) == want);
        }
    std::vector<int> zeros = rep.zero_self_pi;
    std::sort(zeros.begin(), zeros.end());
    CHECK(zeros == std::vector<int>{0, n / 2});
    CHECK(rep.gamma_sq_min_diagonal <= rep.gamma_sq_ell_bar.get_d() + 1e-9);
  }
}

TEST_CASE("simple points") {
  auto conj = Representation::conjugation(2);
  QMatrix d(2, 2);
  d(0, 0) = 1;
  d(1, 1) = 2;
  CHECK(is_simple_point(conj, conj.to_vec(d)));
  QMatrix j(2, 2);
  j(0, 1) = 1;
  CHECK_FALSE(is_simple_point(conj, conj.to_vec(j)));
  CHECK_THROWS_AS(chart_second_fundamental_form(conj, conj.to_vec(j), {unit_matrix(2, 0, 1)}), NotSimplePoint);
  auto sym = Representation::sym(2, 2);
  Form f(2, 2);
  f.add_term({1, 1}, Rational(1));
  CHECK(is_simple_point(sym, sym.to_vec(f)));
}
