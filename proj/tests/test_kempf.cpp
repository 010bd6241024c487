#include <doctest.h>

#include <cmath>

#include "orbitlimits/kempf.hpp"
#include "orbitlimits/random.hpp"
#include "orbitlimits/reproduce.hpp"

using namespace ol;

namespace {

double log_objective_oracle(const WeightSupport& s, const FloatVector& ell, double log_t) {
  double sum = 0;
  for (const auto& e : s) {
    double p = 0;
    for (std::size_t i = 0; i < ell.size(); ++i) p += ell[i] * e.chi[i];
    sum += e.normSq.get_d() * std::exp(-log_t * p);
  }
  return std::log(sum);
}

FloatVector random_unit_traceless(Rng& rng, std::size_t n) {
  FloatVector p(n);
  double mean = 0;
  for (auto& x : p) {
    x = rng.uniform(-100, 100) / 100.0;
    mean += x;
  }
  mean /= static_cast<double>(n);
  double nrm = 0;
  for (auto& x : p) {
    x -= mean;
    nrm += x * x;
  }
  nrm = std::sqrt(nrm);
  for (auto& x : p) x = nrm > 0 ? x / nrm : 0;
  return p;
}

QMatrix cyclic_shift(std::size_t n) {
  QMatrix c(n, n);
  for (std::size_t i = 0; i < n; ++i) c(i, (i + 1) % n) = 1;
  return c;
}

}  // namespace

TEST_CASE("weight supports") {
  for (std::size_t n = 2; n <= 5; ++n) {
    auto rep = Representation::conjugation(n);
    CHECK(kempf_support(rep, rep.to_vec(cyclic_shift(n))).size() == n);
  }
  auto sym = Representation::sym(9, 3);
  auto sup = kempf_support(sym, sym.to_vec(determinant_form(3)));
  CHECK(sup.size() == 6);
  for (const auto& e : sup) CHECK(e.normSq == 1);
  CHECK_THROWS(kempf_support(sym, zero_vec(sym.dim())));
}

TEST_CASE("log objective matches a direct evaluation") {
  Rng rng(31);
  for (const auto& c : kempf_test_vectors()) {
    auto sup = kempf_support(c.rep, c.v);
    for (int k = 0; k < 5; ++k) {
      FloatVector ell = random_unit_traceless(rng, c.rep.n());
      for (double lt : {0.5, 3.0, 10.0}) {
        double want = log_objective_oracle(sup, ell, lt);
        CHECK(kempf_log_objective(sup, ell, lt) == doctest::Approx(want).epsilon(1e-10));
      }
    }
  }
}

TEST_CASE("mu in floats and rationals") {
  Rng rng(32);
  for (const auto& c : kempf_test_vectors()) {
    auto sup = kempf_support(c.rep, c.v);
    for (int k = 0; k < 5; ++k) {
      QVec ell(c.rep.n());
      FloatVector fl(c.rep.n());
      for (std::size_t i = 0; i < ell.size(); ++i) {
        ell[i] = random_rational(rng, 5, 3);
        fl[i] = ell[i].get_d();
      }
      CHECK(mu(fl, sup) == doctest::Approx(mu(ell, sup).get_d()).epsilon(1e-12));
    }
  }
}

TEST_CASE("descent is monotone, feasible, and agrees with the grid") {
  const double lt = kempf_reference_log_t();
  for (const auto& c : kempf_test_vectors()) {
    auto sup = kempf_support(c.rep, c.v);
    const std::size_t n = c.rep.n();
    auto d = kempf_descent(sup, n, lt);
    CHECK(d.monotone);
    CHECK(d.maxResidual <= 1e-12);
    double s = 0, nrm = 0;
    for (double x : d.ell) {
      s += x;
      nrm += x * x;
    }
    CHECK(std::abs(s) <= 1e-12);
    CHECK(std::abs(std::sqrt(nrm) - 1) <= 1e-12);
    auto g = kempf_grid(sup, n, lt, 20);
    CHECK(g.points > 0);
    CHECK(std::abs(d.mu - g.bestMu) <= 1e-3);
    CHECK(d.logValue <= g.bestLogF + 1e-9);
  }
}

TEST_CASE("serial and parallel descents agree") {
  for (const auto& c : kempf_test_vectors()) {
    auto sup = kempf_support(c.rep, c.v);
    auto a = kempf_descent(sup, c.rep.n(), 64.0, {}, Exec::Serial);
    auto b = kempf_descent(sup, c.rep.n(), 64.0, {}, Exec::Parallel);
    CHECK(a.ell == b.ell);
    CHECK(a.bestStart == b.bestStart);
  }
}

TEST_CASE("random sampling never beats the descent") {
  Rng rng(33);
  for (const auto& c : kempf_test_vectors()) {
    auto sup = kempf_support(c.rep, c.v);
    auto d = kempf_descent(sup, c.rep.n(), 16.0);
    for (int k = 0; k < 200; ++k) {
      FloatVector ell = random_unit_traceless(rng, c.rep.n());
      CHECK(kempf_log_objective(sup, ell, 16.0) >= d.logValue - 1e-9);
    }
  }
}

TEST_CASE("minimizers eventually destabilize") {
  for (const auto& c : kempf_test_vectors()) {
    auto sup = kempf_support(c.rep, c.v);
    auto g = kempf_grid(sup, c.rep.n(), kempf_reference_log_t(), 20);
    REQUIRE(g.bestMu > 0);
    auto pc = kempf_property(sup, c.rep.n(), g.bestMu / 2, {1, 8, 64, 512, 4096, kempf_reference_log_t()});
    CHECK(pc.holds);
    CHECK(pc.mus.size() == pc.logTs.size());
  }
}

TEST_CASE("leading term along a 1-PS") {
  for (std::size_t n = 2; n <= 5; ++n) {
    auto rep = Representation::conjugation(n);
    QMatrix ones(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) ones(i, j) = 1;
    QVec ell(n);
    for (std::size_t i = 0; i < n; ++i) ell[i] = Rational(static_cast<long>(i));
    auto lt = leading_term_along(rep, ell, rep.to_vec(ones));
    CHECK(lt.degree == -Rational(static_cast<long>(n) - 1));
    QMatrix want(n, n);
    want(0, n - 1) = 1;
    CHECK(rep.to_matrix(lt.component) == want);
  }
}
