#pragma once

#include <map>
#include <utility>
#include <vector>

#include "orbitlimits/limits.hpp"
#include "orbitlimits/random.hpp"

// Random generators shared by the property tests and the acceptance binary.
namespace ol::fixtures {

inline std::vector<QVec> vecs(const std::vector<LieElement>& gs) {
  std::vector<QVec> out;
  for (const auto& g : gs) out.push_back(lie_vec(g));
  return out;
}

// A form with a positive-dimensional stabilizer in randomly chosen coordinates.
inline Form random_symmetric_form(Rng& rng, int n) {
  Form base(n, 0);
  switch (rng.uniform(0, 3)) {
    case 0: {  // quadric of random rank
      base = Form(n, 2);
      int r = static_cast<int>(rng.uniform(1, n));
      for (int i = 0; i < r; ++i) {
        Exponent e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(i)] = 2;
        base.add_term(e, Rational(rng.uniform(1, 3)));
      }
      break;
    }
    case 1: {  // monomial
      base = Form(n, 3);
      Exponent e(static_cast<std::size_t>(n), 0);
      for (int k = 0; k < 3; ++k) e[static_cast<std::size_t>(rng.uniform(0, n - 1))] += 1;
      base.add_term(e, Rational(1));
      break;
    }
    case 2: {  // cubic in fewer variables
      base = Form(n, 3);
      for (const auto& e : monomial_basis(n, 3))
        if (e[static_cast<std::size_t>(n - 1)] == 0 && rng.uniform(0, 1) == 1) base.add_term(e, Rational(rng.uniform(-2, 2)));
      if (base.is_zero()) base.add_term(Exponent{3, 0, 0}, Rational(1));
      break;
    }
    default: {  // x0 * quadric
      base = Form(n, 3);
      Exponent a(static_cast<std::size_t>(n), 0), b(static_cast<std::size_t>(n), 0);
      a[0] = 1;
      a[1] = 2;
      b[0] = 1;
      b[2] = 2;
      base.add_term(a, Rational(1));
      base.add_term(b, Rational(rng.uniform(1, 2)));
      break;
    }
  }
  std::vector<QVec> rows;
  for (int i = 0; i < n; ++i) {
    QVec r(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) r[static_cast<std::size_t>(j)] = i == j ? Rational(1) : j < i ? Rational(rng.uniform(-1, 1)) : Rational(0);
    rows.push_back(r);
  }
  return linear_substitute(base, rows);
}

// g from one weight space plus a few higher-weight monomials, so the
// transversality hypothesis holds often.
inline Form random_limit_input(Rng& rng, const OnePS& lam, int n, int d) {
  std::map<int, std::vector<Exponent>> byWeight;
  for (const auto& e : monomial_basis(n, d)) {
    int w = 0;
    for (int i = 0; i < n; ++i) w += lam.weights[static_cast<std::size_t>(i)] * e[static_cast<std::size_t>(i)];
    byWeight[w].push_back(e);
  }
  Form f(n, d);
  auto it = byWeight.begin();
  for (const auto& e : it->second)
    if (rng.uniform(0, 1) == 1) f.add_term(e, Rational(rng.uniform(1, 3)));
  if (f.is_zero()) f.add_term(it->second.front(), Rational(1));
  for (++it; it != byWeight.end(); ++it)
    if (rng.uniform(0, 2) == 0) {
      const auto& es = it->second;
      f.add_term(es[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(es.size()) - 1))], Rational(rng.uniform(1, 2)));
    }
  return f;
}

// Alternates the two generators; the 1-PS has weights in {0, 1, 2}.
inline std::pair<Form, OnePS> random_limit_instance(Rng& rng, int trial) {
  OnePS lam{{static_cast<int>(rng.uniform(0, 2)), static_cast<int>(rng.uniform(0, 2)), static_cast<int>(rng.uniform(0, 2))}};
  Form f = trial % 2 == 0 ? random_symmetric_form(rng, 3) : random_limit_input(rng, lam, 3, static_cast<int>(rng.uniform(2, 3)));
  return {f, lam};
}

struct BasePoint {
  Representation rep;
  QVec x;
};

// Points with a non-trivial stabilizer, so H and S are both proper.
inline std::vector<BasePoint> base_points() {
  std::vector<BasePoint> out;
  auto add = [&](int n, int d, std::vector<std::pair<Exponent, long>> terms) {
    auto rep = Representation::sym(n, d);
    Form f(n, d);
    for (auto& [e, c] : terms) f.add_term(e, Rational(c));
    out.push_back({rep, rep.to_vec(f)});
  };
  add(2, 2, {{{2, 0}, 1}});
  add(2, 3, {{{2, 1}, 1}});
  add(3, 2, {{{2, 0, 0}, 1}, {{0, 1, 1}, 1}});
  add(3, 3, {{{1, 1, 1}, 1}});
  add(3, 3, {{{3, 0, 0}, 1}, {{0, 3, 0}, 1}});
  auto conj = Representation::conjugation(3);
  QMatrix J(3, 3);
  J(0, 1) = 1;
  J(1, 2) = 1;
  out.push_back({conj, conj.to_vec(J)});
  return out;
}

}  // namespace ol::fixtures
