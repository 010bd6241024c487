#include <doctest.h>

#include "fixtures.hpp"
#include "orbitlimits/local_model.hpp"
#include "orbitlimits/random.hpp"

using namespace ol;
using namespace ol::fixtures;

namespace {

QVec random_vec(Rng& rng, std::size_t n, long range = 4) {
  QVec v(n);
  for (auto& x : v) x = random_rational(rng, range, 3);
  return v;
}

QVec small_normal(Rng& rng, const LocalModel& lm) {
  QVec c(lm.m());
  for (auto& x : c) x = Rational(Rational(rng.uniform(-3, 3)) / 7);
  return lm.n_vector(c);
}

}  // namespace

TEST_CASE("sl2 on Sym^2 at x^2") {
  auto rep = Representation::sym(2, 2);
  QVec x{1, 0, 0}, n{0, 0, 1};
  LieElement h0 = QMatrix::identity(2);
  h0(1, 1) = -1;
  auto lm = build_local_model(rep, x, ComplementPolicy::Explicit, {h0, unit_matrix(2, 0, 1)}, {n});
  QMatrix th = theta_matrix(lm, n);
  QMatrix want(3, 3);
  want(2, 0) = -1;  // image of x^2 is -y^2
  CHECK(th == want);
  CHECK(theta_matrix(lm, n) * theta_matrix(lm, n) == QMatrix(3, 3));
  QMatrix inv = inverse(QMatrix::identity(3) + th);
  CHECK(inv(2, 0) == 1);
  LieElement s = s_completion(lm, unit_matrix(2, 1, 0), n);
  CHECK(s == -unit_matrix(2, 0, 1));
  CHECK(is_zero(rep.act(unit_matrix(2, 1, 0) + s, x + n)));
}

TEST_CASE("orthogonal policy produces orthogonal complements") {
  for (const auto& c : base_points()) {
    auto lm = build_local_model(c.rep, c.x);
    for (const auto& s : lm.S)
      for (const auto& h : lm.H) CHECK(dot(lie_vec(s), lie_vec(h)) == 0);
    for (const auto& nv : lm.N)
      for (const auto& t : lm.TO) CHECK(dot(nv, t) == 0);
    CHECK(lm.p() + lm.H.size() == c.rep.gl_dim());
    CHECK(lm.p() + lm.m() == c.rep.dim());
  }
}

TEST_CASE("explicit policy validates its input") {
  auto rep = Representation::sym(2, 2);
  QVec x{1, 0, 0};
  CHECK_THROWS_AS(build_local_model(rep, zero_vec(3)), std::invalid_argument);
  // E21 lies in H, so S is not transverse.
  CHECK_THROWS_AS(build_local_model(rep, x, ComplementPolicy::Explicit, {unit_matrix(2, 1, 0), unit_matrix(2, 0, 1)},
                                    {QVec{0, 0, 1}}),
                  std::invalid_argument);
  LieElement h0 = QMatrix::identity(2);
  h0(1, 1) = -1;
  // xy lies in the tangent space.
  CHECK_THROWS_AS(build_local_model(rep, x, ComplementPolicy::Explicit, {h0, unit_matrix(2, 0, 1)}, {QVec{0, 1, 0}}),
                  std::invalid_argument);
}

TEST_CASE("reconstruction: dv = lambda_S(dv).x + lambda_N(dv)") {
  Rng rng(13);
  auto cases = base_points();
  int checked = 0;
  for (int t = 0; t < 100; ++t) {
    const auto& c = cases[static_cast<std::size_t>(t) % cases.size()];
    auto lm = build_local_model(c.rep, c.x);
    QVec dv = random_vec(rng, c.rep.dim());
    QVec rebuilt = c.rep.act(lm.s_element(lm.lambda_S(dv)), c.x) + lm.n_vector(lm.lambda_N(dv));
    CHECK(rebuilt == dv);
    ++checked;
  }
  CHECK(checked == 100);
}

TEST_CASE("theta, Phi and the decomposition agree") {
  Rng rng(17);
  for (const auto& c : base_points()) {
    auto lm = build_local_model(c.rep, c.x);
    for (int t = 0; t < 4; ++t) {
      QVec n = small_normal(rng, lm);
      QMatrix one = QMatrix::identity(c.rep.dim()) + theta_matrix(lm, n);
      CHECK(det(one) == det(QMatrix::identity(lm.p()) + phi_matrix(lm, n)));
      QVec dv = random_vec(rng, c.rep.dim());
      QVec w = inverse_one_plus_theta(lm, n, dv);
      CHECK(one.apply(w) == dv);
      auto dec = solve_decomposition(lm, n, dv);
      CHECK(c.rep.act(lm.s_element(dec.s), c.x + n) + lm.n_vector(dec.nprime) == dv);
      for (std::size_t i = 0; i < c.rep.dim(); ++i) {
        QVec e = zero_vec(c.rep.dim());
        e[i] = 1;
        CHECK(theta(lm, n, e) == theta_matrix(lm, n).col(i));
      }
    }
  }
}

TEST_CASE("slice stabilizer is the stabilizer of x + n") {
  Rng rng(23);
  for (const auto& c : base_points()) {
    auto lm = build_local_model(c.rep, c.x);
    for (int t = 0; t < 3; ++t) {
      QVec n = small_normal(rng, lm);
      auto st = slice_stabilizer(lm, n);
      for (const auto& k : st.elements) CHECK(is_zero(c.rep.act(k, c.x + n)));
      CHECK(st.elements.size() == stabilizer_algebra(c.rep, c.x + n).size());
      for (const auto& h : st.Hn) {
        LieElement s = s_completion(lm, h, n);
        CHECK(is_zero(c.rep.act(h + s, c.x + n)));
        auto [sc, hc] = lm.split(s);
        CHECK(is_zero(hc));
      }
    }
  }
}
