#include <doctest.h>

#include <cmath>
#include <map>

#include "orbitlimits/conj.hpp"
#include "orbitlimits/random.hpp"

using namespace ol;

namespace {

// p(n, k): partitions of n with parts at most k.
long partition_count(int n, int k) {
  if (n == 0) return 1;
  if (n < 0 || k == 0) return 0;
  return partition_count(n - k, k) + partition_count(n, k - 1);
}

// Multisets of nonempty partitions with total size n: Euler transform of p.
std::vector<long> multiset_counts(int nmax) {
  std::vector<long> a(static_cast<std::size_t>(nmax) + 1), b(static_cast<std::size_t>(nmax) + 1, 0);
  for (int k = 1; k <= nmax; ++k) a[static_cast<std::size_t>(k)] = partition_count(k, k);
  b[0] = 1;
  for (int n = 1; n <= nmax; ++n) {
    long s = 0;
    for (int k = 1; k <= n; ++k) {
      long c = 0;
      for (int d = 1; d <= k; ++d)
        if (k % d == 0) c += d * a[static_cast<std::size_t>(d)];
      s += c * b[static_cast<std::size_t>(n - k)];
    }
    b[static_cast<std::size_t>(n)] = s / n;
  }
  return b;
}

QMatrix power(const QMatrix& m, int k) {
  QMatrix p = QMatrix::identity(m.rows());
  for (int i = 0; i < k; ++i) p = p * m;
  return p;
}

// Nilpotent orbit order through ranks of powers.
bool rank_dominates(const Partition& a, const Partition& b) {
  QMatrix ja = nilpotent_matrix(a), jb = nilpotent_matrix(b);
  for (int k = 1; k <= a.n(); ++k)
    if (rank(power(ja, k)) < rank(power(jb, k))) return false;
  return true;
}

QMatrix random_unimodular(Rng& rng, std::size_t n) {
  QMatrix l = QMatrix::identity(n), u = QMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      l(i, j) = Rational(rng.uniform(-2, 2));
      u(j, i) = Rational(rng.uniform(-2, 2));
    }
  return l * u;
}

std::map<Rational, std::vector<int>> canonical(const JordanSpec& s) {
  std::map<Rational, std::vector<int>> m;
  for (const auto& b : s.blocks) m[*b.eig] = b.sizes.parts();
  return m;
}

}  // namespace

TEST_CASE("partition enumeration and dominance") {
  for (int n = 1; n <= 10; ++n) CHECK(static_cast<long>(partitions_of(n).size()) == partition_count(n, n));
  for (int n = 1; n <= 7; ++n) {
    auto ps = partitions_of(n);
    for (const auto& p : ps) {
      CHECK(transpose(transpose(p)) == p);
      for (const auto& q : ps) {
        CHECK(dominates(p, q) == rank_dominates(p, q));
        // Dominance reverses under transpose.
        CHECK(dominates(p, q) == dominates(transpose(q), transpose(p)));
      }
    }
  }
  CHECK_THROWS_AS(dominates(Partition({2}), Partition({1, 1, 1})), std::invalid_argument);
  CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
}

TEST_CASE("Jordan structure counts") {
  auto want = multiset_counts(8);
  CHECK(want[1] == 1);
  CHECK(want[6] == 58);
  for (int n = 1; n <= 8; ++n) CHECK(static_cast<long>(jordan_structures(n).size()) == want[static_cast<std::size_t>(n)]);
}

TEST_CASE("nilpotent signature is a conjugation invariant") {
  Rng rng(11);
  for (int n = 1; n <= 6; ++n)
    for (const auto& theta : partitions_of(n)) {
      QMatrix p = random_unimodular(rng, static_cast<std::size_t>(n));
      QMatrix m = p * nilpotent_matrix(theta) * inverse(p);
      CHECK(nilpotent_signature(m) == theta);
    }
  CHECK_THROWS_AS(nilpotent_signature(QMatrix::identity(2)), NotNilpotent);
}

TEST_CASE("Jordan spec round trip") {
  Rng rng(12);
  for (int n = 1; n <= 5; ++n)
    for (const auto& spec : jordan_structures(n)) {
      QMatrix p = random_unimodular(rng, static_cast<std::size_t>(n));
      QMatrix m = p * jordan_matrix(spec) * inverse(p);
      CHECK(canonical(jordan_spec_of(m)) == canonical(spec));
    }
}

TEST_CASE("companion matrix has the given characteristic polynomial") {
  Rng rng(13);
  for (int t = 0; t < 10; ++t) {
    int n = static_cast<int>(rng.uniform(1, 6));
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i < n; ++i) c[static_cast<std::size_t>(i)] = Rational(rng.uniform(-5, 5));
    c[static_cast<std::size_t>(n)] = 1;
    UniPoly p(c);
    QMatrix C = companion(p);
    PMatrix tIC(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < C.rows(); ++i)
      for (std::size_t j = 0; j < C.cols(); ++j) tIC(i, j) = UniPoly(-C(i, j)) + (i == j ? UniPoly::t() : UniPoly());
    CHECK(det(tIC) == p);
  }
}

TEST_CASE("closure verdicts are sound for n <= 6") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& spec : jordan_structures(n)) {
      QMatrix x = jordan_matrix(spec);
      for (const auto& theta : partitions_of(n)) {
        auto res = closure_contains_nilpotent(spec, theta);
        CHECK(res.chi == transpose_block_spectrum(spec));
        if (res.contains) {
          CHECK(rank_dominates(res.chi, theta));
          continue;
        }
        // The separating pair: some product of (x - mu_i)^{m_i} with sum k
        // has rank <= r while J_theta^k has rank > r.
        CHECK(res.x_in);
        CHECK_FALSE(res.y_in);
        REQUIRE(res.multiplicities.size() == spec.blocks.size());
        QMatrix prod = QMatrix::identity(static_cast<std::size_t>(n));
        int total = 0;
        for (std::size_t i = 0; i < spec.blocks.size(); ++i) {
          QMatrix shift = x - (*spec.blocks[i].eig) * QMatrix::identity(static_cast<std::size_t>(n));
          prod = prod * power(shift, res.multiplicities[i]);
          total += res.multiplicities[i];
        }
        CHECK(total == res.k);
        CHECK(static_cast<int>(rank(prod)) <= res.r);
        CHECK(static_cast<int>(rank(power(nilpotent_matrix(theta), res.k))) > res.r);
      }
    }
}

TEST_CASE("witness families degenerate to J_chi") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& spec : jordan_structures(n)) {
      auto w = witness_family(spec);
      CHECK(w.similar);
      CHECK(w.leading_is_Jchi);
      if (w.chi.length() < static_cast<std::size_t>(n)) {
        CHECK(w.leadingPower == -1);
        CHECK(nilpotent_signature(w.leadingTerm) == w.chi);
      }
      for (double t : {0.5, 0.1}) {
        auto m = evaluate_family(w, t);
        for (std::size_t i = 0; i < m.size(); ++i)
          for (std::size_t j = 0; j < m.size(); ++j) {
            double direct = t * std::pow(t, w.aOfT[i] - w.aOfT[j]) * w.xPrime(i, j).get_d();
            CHECK(m[i][j] == doctest::Approx(direct).epsilon(1e-12));
          }
      }
    }
}

TEST_CASE("numeric helpers") {
  std::vector<std::vector<double>> a{{1, 2}, {2, 4}};
  CHECK(numeric_rank(a, 1e-9) == 1);
  auto c = char_coefficients({{2, 0}, {0, 3}});
  REQUIRE(c.size() == 2);
  CHECK(std::abs(c[0]) == doctest::Approx(5.0));
  CHECK(std::abs(c[1]) == doctest::Approx(6.0));
}

TEST_CASE("Xkr membership") {
  Partition theta({3, 1});
  CHECK(in_Xkr(theta, 1, 2));
  CHECK_FALSE(in_Xkr(theta, 1, 1));
  CHECK(in_Xkr(theta, 3, 0));
  CHECK_THROWS_AS(in_Xkr(theta, 0, 1), std::invalid_argument);
}

TEST_CASE("J_n slice") {
  for (int n = 2; n <= 5; ++n) {
    auto r = jn_slice_report(n, 5);
    CHECK(r.model_ok);
    CHECK(r.h_is_powers);
    CHECK(r.minpoly_identity);
    CHECK(r.theta_square_zero);
    for (auto d : r.stabilizerDims) CHECK(d == static_cast<std::size_t>(n));
    if (n == 4) CHECK(r.z4_matches);
  }
}

TEST_CASE("J_{a,b} slice") {
  for (auto [a, b] : {std::pair{2, 1}, std::pair{3, 1}, std::pair{3, 2}, std::pair{4, 2}}) {
    auto r = jab_slice_report(a, b, 8);
    CHECK(r.c_transversal);
    CHECK(r.minpoly_degree_ok);
    CHECK(r.kernel_ok);
    CHECK(r.minpoly_divides_ok);
    CHECK(r.zero_kernel_two);
    for (const auto& [want, got] : r.family) CHECK(want == got);
  }
}
