#include <doctest.h>

#include "orbitlimits/lie.hpp"
#include "orbitlimits/random.hpp"

using namespace ol;

namespace {

LieElement random_lie(Rng& rng, std::size_t n) {
  LieElement g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = random_rational(rng, 3, 2);
  return g;
}

Form random_form(Rng& rng, int n, int d) {
  Form f(n, d);
  for (const auto& e : monomial_basis(n, d))
    if (rng.uniform(0, 2) != 0) f.add_term(e, Rational(rng.uniform(-4, 4)));
  return f;
}

// sum g(i,j) x_j d/dx_i f through MPoly derivatives.
Form derivation_oracle(const LieElement& g, const Form& f) {
  const int n = f.nvars();
  MPoly out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (sgn(g(static_cast<std::size_t>(i), static_cast<std::size_t>(j))) != 0)
        out += g(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) * (MPoly::variable(n, j) * f.derivative(i));
  return Form(out, f.degree());
}

// Coefficient of eps in f((I + eps g) x), by interpolation at eps = 0..d.
QVec group_derivative(const Representation& rep, const LieElement& g, const Form& f) {
  const int d = f.degree();
  const std::size_t n = g.rows();
  std::vector<QVec> values;
  for (int k = 0; k <= d; ++k) {
    std::vector<QVec> rows;
    for (std::size_t i = 0; i < n; ++i) {
      QVec r = zero_vec(n);
      r[i] = 1;
      for (std::size_t j = 0; j < n; ++j) r[j] += Rational(k) * g(i, j);
      rows.push_back(r);
    }
    values.push_back(rep.to_vec(linear_substitute(f, rows)));
  }
  QMatrix vand(static_cast<std::size_t>(d + 1), static_cast<std::size_t>(d + 1));
  for (int k = 0; k <= d; ++k) {
    Rational p = 1;
    for (int e = 0; e <= d; ++e) {
      vand(static_cast<std::size_t>(k), static_cast<std::size_t>(e)) = p;
      p *= k;
    }
  }
  QMatrix vinv = inverse(vand);
  QVec out = zero_vec(rep.dim());
  for (int k = 0; k <= d; ++k) axpy(out, vinv(1, static_cast<std::size_t>(k)), values[static_cast<std::size_t>(k)]);
  return out;
}

}  // namespace

TEST_CASE("bracket is antisymmetric and satisfies Jacobi") {
  Rng rng(2);
  for (int t = 0; t < 20; ++t) {
    auto a = random_lie(rng, 3), b = random_lie(rng, 3), c = random_lie(rng, 3);
    CHECK(bracket(a, b) == -bracket(b, a));
    CHECK((bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) + bracket(c, bracket(a, b))).is_zero());
  }
}

TEST_CASE("form action matches derivatives and the group action") {
  Rng rng(4);
  for (int t = 0; t < 15; ++t) {
    int n = static_cast<int>(rng.uniform(2, 4)), d = static_cast<int>(rng.uniform(1, 4));
    auto rep = Representation::sym(n, d);
    Form f = random_form(rng, n, d);
    auto g = random_lie(rng, static_cast<std::size_t>(n));
    QVec v = rep.act(g, rep.to_vec(f));
    CHECK(v == rep.to_vec(derivation_oracle(g, f)));
    CHECK(v == rep.to_vec(act_on_form(g, f)));
    CHECK(v == group_derivative(rep, g, f));
  }
}

TEST_CASE("rho on forms is an anti-homomorphism, on matrices a homomorphism") {
  Rng rng(6);
  auto sym = Representation::sym(3, 3);
  auto conj = Representation::conjugation(3);
  for (int t = 0; t < 5; ++t) {
    auto a = random_lie(rng, 3), b = random_lie(rng, 3);
    CHECK(sym.rho(bracket(a, b)) == sym.rho(b) * sym.rho(a) - sym.rho(a) * sym.rho(b));
    CHECK(conj.rho(bracket(a, b)) == conj.rho(a) * conj.rho(b) - conj.rho(b) * conj.rho(a));
  }
}

TEST_CASE("monomial basis is graded-lex") {
  auto b = monomial_basis(2, 2);
  REQUIRE(b.size() == 3);
  CHECK(b[0] == Exponent{2, 0});
  CHECK(b[1] == Exponent{1, 1});
  CHECK(b[2] == Exponent{0, 2});
  CHECK(Representation::sym(9, 3).dim() == 165);
}

TEST_CASE("stabilizers") {
  auto rep = Representation::sym(9, 3);
  QVec det3 = rep.to_vec(determinant_form(3));
  auto K = stabilizer_algebra(rep, det3);
  CHECK(K.size() == 16);
  for (const auto& k : K) CHECK(is_zero(rep.act(k, det3)));
  CHECK(is_subalgebra(K));
  CHECK(rep.orbit_map(det3, Exec::Serial) == rep.orbit_map(det3, Exec::Parallel));
  CHECK(tangent_space(rep, det3).size() == 65);

  auto r2 = Representation::sym(2, 2);
  CHECK(stabilizer_algebra(r2, zero_vec(3)).size() == 4);
  QVec circle{Rational(1), Rational(0), Rational(1)};
  auto so2 = stabilizer_algebra(r2, circle);
  REQUIRE(so2.size() == 1);
  CHECK(same_span({lie_vec(so2[0])}, {QVec{0, 1, -1, 0}}, 4));
}

TEST_CASE("stabilizer dimension and tangent dimension add up") {
  Rng rng(8);
  for (int t = 0; t < 10; ++t) {
    int n = static_cast<int>(rng.uniform(2, 3)), d = static_cast<int>(rng.uniform(2, 3));
    auto rep = Representation::sym(n, d);
    QVec v = rep.to_vec(random_form(rng, n, d));
    auto H = stabilizer_algebra(rep, v);
    CHECK(H.size() + tangent_space(rep, v).size() == rep.gl_dim());
    CHECK(is_subalgebra(H));
  }
}

TEST_CASE("conjugation stabilizer of J_n is spanned by its powers") {
  for (std::size_t n = 2; n <= 5; ++n) {
    auto rep = Representation::conjugation(n);
    QMatrix J(n, n);
    for (std::size_t i = 0; i + 1 < n; ++i) J(i, i + 1) = 1;
    auto H = stabilizer_algebra(rep, rep.to_vec(J));
    CHECK(H.size() == n);
    std::vector<QVec> powers;
    QMatrix p = QMatrix::identity(n);
    for (std::size_t k = 0; k < n; ++k) {
      powers.push_back(lie_vec(p));
      p = p * J;
    }
    std::vector<QVec> hv;
    for (const auto& h : H) hv.push_back(lie_vec(h));
    CHECK(same_span(hv, powers, n * n));
  }
}

TEST_CASE("torus weights are additive") {
  auto rep = Representation::sym(3, 3);
  std::vector<int> d{2, -1, 0};
  auto w = rep.basis_weights(d);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      auto E = unit_matrix(3, i, j);
      for (std::size_t m = 0; m < rep.dim(); ++m) {
        QVec e = zero_vec(rep.dim());
        e[m] = 1;
        QVec out = rep.act(E, e);
        for (std::size_t k = 0; k < rep.dim(); ++k)
          if (sgn(out[k]) != 0) CHECK(w[k] == w[m] + rep.lie_weight(i, j, d));
      }
    }
}

TEST_CASE("nilpotent algebras and exponentials") {
  std::vector<LieElement> upper{unit_matrix(3, 0, 1), unit_matrix(3, 1, 2), unit_matrix(3, 0, 2)};
  CHECK(lower_central_series(upper) == std::vector<std::size_t>{3, 1, 0});
  CHECK(is_nilpotent_algebra(upper));
  CHECK_FALSE(is_nilpotent_algebra({unit_matrix(2, 0, 1), unit_matrix(2, 1, 0), unit_matrix(2, 0, 0) - unit_matrix(2, 1, 1)}));
  CHECK(lower_central_series({unit_matrix(2, 0, 0), unit_matrix(2, 0, 1)}) == std::vector<std::size_t>{2, 1});
  QMatrix J = unit_matrix(3, 0, 1) + unit_matrix(3, 1, 2);
  QMatrix e = exp_nilpotent(J);
  CHECK(e == QMatrix::identity(3) + J + Rational(1, 2) * (J * J));
  CHECK_THROWS(exp_nilpotent(QMatrix::identity(2)));
}
