#include <doctest.h>

#include "fixtures.hpp"
#include "orbitlimits/conj.hpp"

using namespace ol;
using namespace ol::fixtures;

TEST_CASE("two routes to the limit algebra agree on random inputs") {
  Rng rng(41);
  int checked = 0, nontrivial = 0;
  for (int trial = 0; trial < 400 && checked < 25; ++trial) {
    auto [f, lam] = random_limit_instance(rng, trial);
    LimitAlgebraData d;
    LimitSetup setup;
    try {
      setup = prepare_limit(f, lam);
      if (!setup.ex.has_fb) continue;
      d = limit_algebra(setup);
    } catch (const TransversalityError&) {
      continue;
    }
    ++checked;
    if (d.dimK > 0) ++nontrivial;
    CAPTURE(trial);
    CHECK(d.verified);
    CHECK(d.K0.size() == d.dimK);
    CHECK(same_span(vecs(d.K0), vecs(limit_algebra_by_conjugation(f, lam)), 9));
    CHECK(is_subalgebra(d.K0));
    auto H = vecs(d.H);
    for (const auto& k : d.K0) CHECK(in_span(H, lie_vec(k)));
    QVec fbar = setup.lm.lambda_N(setup.rep.to_vec(setup.ex.fb));
    for (const auto& k : d.K0) CHECK(is_zero(star_action(setup.lm, k, fbar)));
  }
  CHECK(checked >= 25);
  CHECK(nontrivial >= 10);
}

TEST_CASE("stabilizer plus tangent dimensions fill gl_n under conjugation") {
  Rng rng(42);
  for (int t = 0; t < 30; ++t) {
    std::size_t n = static_cast<std::size_t>(rng.uniform(2, 4));
    auto rep = Representation::conjugation(n);
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = rng.uniform(0, 2) == 0 ? Rational(rng.uniform(-2, 2)) : Rational(0);
    QVec v = rep.to_vec(m);
    CHECK(stabilizer_algebra(rep, v).size() + tangent_space(rep, v).size() == n * n);
    CHECK(stabilizer_algebra(rep, v).size() >= n);
  }
}

TEST_CASE("dominance is a partial order up to n = 8") {
  for (int n = 1; n <= 8; ++n) {
    auto ps = partitions_of(n);
    for (const auto& a : ps) {
      CHECK(dominates(a, a));
      for (const auto& b : ps) {
        if (a != b && dominates(a, b)) CHECK_FALSE(dominates(b, a));
        if (!dominates(a, b)) continue;
        for (const auto& c : ps)
          if (dominates(b, c)) CHECK(dominates(a, c));
      }
    }
    // (n) dominates everything, 1^n is dominated by everything.
    for (const auto& a : ps) {
      CHECK(dominates(Partition({n}), a));
      CHECK(dominates(a, Partition(std::vector<int>(static_cast<std::size_t>(n), 1))));
    }
  }
}
