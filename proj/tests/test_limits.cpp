#include <doctest.h>

#include "orbitlimits/limits.hpp"
#include "orbitlimits/reproduce.hpp"

using namespace ol;

namespace {

std::vector<QVec> vecs(const std::vector<LieElement>& gs) {
  std::vector<QVec> out;
  for (const auto& g : gs) out.push_back(lie_vec(g));
  return out;
}

Form mono(int n, int d, std::vector<std::pair<Exponent, long>> terms) {
  Form f(n, d);
  for (auto& [e, c] : terms) f.add_term(e, Rational(c));
  return f;
}

// f(lambda(t) x) at a rational t, by substitution.
Form at_t(const Form& f, const OnePS& lam, const Rational& t) {
  std::vector<QVec> rows;
  const std::size_t n = lam.weights.size();
  for (std::size_t i = 0; i < n; ++i) {
    QVec r = zero_vec(n);
    Rational p = 1;
    int w = lam.weights[i];
    for (int k = 0; k < std::abs(w); ++k) p *= t;
    r[i] = w >= 0 ? p : Rational(1 / p);
    rows.push_back(r);
  }
  return linear_substitute(f, rows);
}

}  // namespace

TEST_CASE("weight decomposition and orbit-curve expansion") {
  Form f = o2_form();
  OnePS lam{{1, 0}};
  auto ex = expand_orbit_curve(f, lam);
  CHECK(ex.a == 0);
  CHECK(ex.b == 2);
  CHECK(ex.g == mono(2, 4, {{{0, 4}, 1}}));
  CHECK(ex.fb == mono(2, 4, {{{2, 2}, 2}}));
  CHECK(ex.transversal);
  for (Rational t : {Rational(2), Rational(-1, 3)}) {
    Form sum(2, 4);
    for (const auto& [c, fc] : ex.components) {
      Rational p = 1;
      for (int k = 0; k < c; ++k) p *= t;
      sum = sum + p * fc;
    }
    CHECK(sum == at_t(f, lam, t));
  }
  auto rep = Representation::sym(2, 4);
  auto parts = weight_decompose(rep, rep.to_vec(f), lam);
  QVec total = zero_vec(rep.dim());
  for (const auto& [w, v] : parts) total = total + v;
  CHECK(total == rep.to_vec(f));
}

TEST_CASE("a trivial 1-PS leaves f alone") {
  Form f = o2_form();
  auto ex = expand_orbit_curve(f, OnePS{{2, 2}});
  CHECK(ex.g == f);
  CHECK_FALSE(ex.has_fb);
  CHECK(ex.a == 8);
}

TEST_CASE("polynomial family expansion") {
  Form f = mono(2, 2, {{{1, 1}, 1}});  // xy
  PMatrix A = PMatrix::identity(2);
  A(0, 1) = UniPoly::monomial(1, 1);  // x -> x + t y
  auto parts = expand_family(f, A);
  CHECK(parts.at(0) == f);
  CHECK(parts.at(1) == mono(2, 2, {{{0, 2}, 1}}));
  CHECK(parts.size() == 2);
}

TEST_CASE("det_3 expansions") {
  auto e1 = expand_orbit_curve(det3_lambda1_form(), det3_lambda1());
  CHECK(e1.a == 0);
  CHECK(e1.b == 1);
  auto e2 = expand_orbit_curve(det3_lambda2_form(), det3_lambda2());
  CHECK(e2.a == 1);
  CHECK(e2.b == 3);
  CHECK(e2.components.size() == 2);
}

TEST_CASE("Example O2 limit algebra") {
  auto setup = prepare_limit(o2_form(), OnePS{{1, 0}});
  auto mn = build_MN_MS(setup);
  CHECK(mn.Delta == UniPoly(1));
  auto d = limit_algebra(setup);
  CHECK(d.verified);
  REQUIRE(d.Kt.size() == 1);
  CHECK(same_span(vecs(d.K0), {lie_vec(unit_matrix(2, 0, 1))}, 4));
  auto conj = limit_algebra_by_conjugation(o2_form(), OnePS{{1, 0}});
  CHECK(same_span(vecs(d.K0), vecs(conj), 4));
  auto ext = extension_feasible(setup, d.K0);
  CHECK(ext.feasible);
  auto db = derivation_db(setup, d.K0);
  REQUIRE(db.values.size() == 1);
  // s.g = h.f_b exactly for the returned representative.
  const auto& rep = setup.rep;
  CHECK(rep.act(db.values[0], rep.to_vec(setup.ex.g)) == rep.act(d.K0[0], rep.to_vec(setup.ex.fb)));
}

TEST_CASE("Example O3 structure constants close over Q(t)") {
  auto d = limit_algebra(o3_form(), OnePS{{1, 0, 0}});
  REQUIRE(d.Kt.size() == 3);
  auto c = structure_constants(d.Kt);
  CHECK(c.size() == 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t k = 0; k < 3; ++k) CHECK(c[i][i][k].is_zero());
  CHECK(is_subalgebra(d.K0));
  CHECK(d.K0.size() == 3);
}

TEST_CASE("limit algebra invariants on det_3") {
  for (auto [f, lam] : {std::pair{det3_lambda1_form(), det3_lambda1()}, std::pair{determinant_form(3), det3_lambda4()}}) {
    auto setup = prepare_limit(f, lam);
    auto d = limit_algebra(setup);
    CHECK(d.dimK == 16);
    CHECK(d.K0.size() == 16);
    CHECK(is_subalgebra(d.K0));
    auto H = vecs(d.H);
    for (const auto& k : d.K0) CHECK(in_span(H, lie_vec(k)));
    QVec fbar = setup.lm.lambda_N(setup.rep.to_vec(setup.ex.fb));
    for (const auto& k : d.K0) CHECK(is_zero(star_action(setup.lm, k, fbar)));
    std::size_t total = 0;
    for (auto [w, dim] : d.gradedDims) total += dim;
    CHECK(total == d.K0.size());
    CHECK(graded_dims(d.K0, lam) == d.gradedDims);
    CHECK(same_span(vecs(d.K0), vecs(limit_algebra_by_conjugation(f, lam)), 81));
  }
}

TEST_CASE("operator weights") {
  OnePS lam{{3, 1, 0}};
  CHECK(lie_weight(lam, 0, 1) == -2);
  CHECK(lie_weight(lam, 2, 0) == 3);
  LieElement g = unit_matrix(3, 0, 1) + unit_matrix(3, 2, 0) + unit_matrix(3, 1, 1);
  auto parts = lie_weight_decompose(g, lam);
  CHECK(parts.size() == 3);
  LieElement sum(3, 3);
  for (const auto& [w, p] : parts) sum = sum + p;
  CHECK(sum == g);
}

TEST_CASE("tangent of exit and l'") {
  Form f = det3_lambda1_form();
  OnePS lam = det3_lambda1();
  auto t = tangent_of_exit(f, lam);
  auto ex = expand_orbit_curve(f, lam);
  CHECK(t.ell_f == ex.fb);
  LieElement lp = ell_prime(lam, ex.a, 3);
  auto rep = Representation::sym(9, 3);
  CHECK(is_zero(rep.act(lp, rep.to_vec(ex.g))));
}

TEST_CASE("triple stabilizers and graded conditions") {
  Form f = det3_lambda1_form();
  OnePS lam = det3_lambda1();
  auto ts = triple_stabilizers(f, lam);
  CHECK(ts.summary() == "0+4+0");
  CHECK(ts.pure_kill_components);
  CHECK(ts.Klf.size() == 4);
  auto setup = prepare_limit(f, lam);
  auto d = limit_algebra(setup);
  auto gc = check_graded_conditions(setup, d.K0);
  CHECK(gc.b_minus_a == 1);
  CHECK(gc.all_ok());
  CHECK(gc.entries.size() == d.K0.size());
  auto hb = star_stabilizer(setup);
  CHECK(same_span(vecs(hb), vecs(d.K0), 81));
}

TEST_CASE("filtered dimensions from low weights") {
  Form f = determinant_form(3);
  OnePS lam = det3_lambda4();
  auto fd = filtered_dims(f, lam);
  auto d = limit_algebra(f, lam);
  // dim K^{>=i} equals the dimension of K0 in weights >= i.
  for (const auto& [i, dim] : fd) {
    std::size_t want = 0;
    for (auto [w, k] : d.gradedDims)
      if (w >= i) want += k;
    CHECK(dim == want);
  }
}

TEST_CASE("Hoffman classification of codimension-one subalgebras") {
  auto E = [](std::size_t i, std::size_t j) { return unit_matrix(2, i, j); };
  LieElement h = E(0, 0) - E(1, 1);
  CHECK(hoffman_case({h, E(0, 1)}, {h, E(0, 1), E(1, 0)}) == HoffmanCase::SlTwo);
  CHECK(hoffman_case({E(0, 0)}, {E(0, 0), E(0, 1)}) == HoffmanCase::Parabolic);
  CHECK(hoffman_case({E(0, 1), E(0, 0) + E(1, 1)}, {E(0, 0), E(0, 1), E(1, 1)}) == HoffmanCase::Ideal);
  CHECK(hoffman_case({E(0, 1)}, {E(0, 0), E(0, 1), E(1, 1)}) == HoffmanCase::NotCodimOne);
}

TEST_CASE("case split") {
  auto c = classify_case(det3_lambda1_form(), det3_lambda1());
  CHECK(c.tag != CaseTag::SearchExhausted);
  if (c.tag == CaseTag::B) {
    auto rep = Representation::sym(9, 3);
    QVec f = rep.to_vec(det3_lambda1_form());
    CHECK(is_zero(rep.act(c.k, f)));
  }
}
