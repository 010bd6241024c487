#include "orbitlimits/commands.hpp"

#include <cmath>
#include <sstream>

#include "orbitlimits/conj.hpp"
#include "orbitlimits/diffgeo.hpp"
#include "orbitlimits/kempf.hpp"
#include "orbitlimits/limits.hpp"
#include "orbitlimits/reproduce.hpp"

namespace ol {

namespace {

const Json& need(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw SchemaError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int need_int(const Json& j, const char* key, int lo, int hi) {
  const Json& v = need(j, key);
  if (!v.is_number_integer()) throw SchemaError(std::string(key) + " must be an integer");
  long x = v.get<long>();
  if (x < lo || x > hi)
    throw SchemaError(std::string(key) + " must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return static_cast<int>(x);
}

int opt_int(const Json& j, const char* key, int def, int lo, int hi) {
  return j.contains(key) ? need_int(j, key, lo, hi) : def;
}

double need_double(const Json& j, const char* key) {
  const Json& v = need(j, key);
  if (!v.is_number()) throw SchemaError(std::string(key) + " must be a number");
  return v.get<double>();
}

Json header(const char* command) { return Json{{"schema", kSchemaVersion}, {"command", command}}; }

// A form under Sym^d or a square matrix under conjugation.
struct Subject {
  Representation rep;
  QVec v;
  bool form = true;
};

Subject subject_of(const Json& in) {
  if (in.contains("form")) {
    Form f = form_from_json(in.at("form"));
    auto rep = Representation::sym(f.nvars(), f.degree());
    return {rep, rep.to_vec(f), true};
  }
  if (in.contains("matrix")) {
    QMatrix m = matrix_from_json(in.at("matrix"));
    if (m.rows() != m.cols()) throw SchemaError("matrix must be square");
    auto rep = Representation::conjugation(m.rows());
    return {rep, rep.to_vec(m), false};
  }
  throw SchemaError("input needs a \"form\" or a \"matrix\"");
}

QVec element_of(const Subject& s, const Json& j) {
  if (s.form) {
    Form f = form_from_json(j);
    if (f.nvars() != static_cast<int>(s.rep.n()) || f.degree() != s.rep.degree())
      throw SchemaError("form does not live in the representation of the input");
    return s.rep.to_vec(f);
  }
  QMatrix m = matrix_from_json(j);
  if (m.rows() != s.rep.n() || m.cols() != s.rep.n()) throw SchemaError("matrix size differs from the input");
  return s.rep.to_vec(m);
}

Json element_json(const Subject& s, const QVec& v) {
  return s.form ? form_to_json(s.rep.to_form(v)) : matrix_to_json(s.rep.to_matrix(v));
}

std::string element_str(const Subject& s, const QVec& v) {
  return s.form ? s.rep.to_form(v).str() : "\n" + matrix_table(s.rep.to_matrix(v));
}

LieElement lie_of(const Json& j, std::size_t n) {
  QMatrix m = matrix_from_json(j);
  if (m.rows() != n || m.cols() != n) throw SchemaError("Lie element must be " + std::to_string(n) + " x " + std::to_string(n));
  return m;
}

std::vector<LieElement> lie_list_of(const Json& j, std::size_t n) {
  if (!j.is_array()) throw SchemaError("expected an array of matrices");
  std::vector<LieElement> out;
  for (const auto& e : j) out.push_back(lie_of(e, n));
  return out;
}

Json lie_json(const std::vector<LieElement>& gs) {
  Json a = Json::array();
  for (const auto& g : gs) a.push_back(matrix_to_json(g));
  return a;
}

std::string lie_table(const std::vector<LieElement>& gs) {
  std::string out;
  for (const auto& g : gs) out += matrix_table(g) + "\n";
  return out;
}

Json dims_json(const std::map<int, std::size_t>& m) {
  Json a = Json::array();
  for (auto it = m.rbegin(); it != m.rend(); ++it) a.push_back(Json{{"weight", it->first}, {"dim", it->second}});
  return a;
}

std::string dims_str(const std::map<int, std::size_t>& m) {
  std::ostringstream os;
  for (auto it = m.rbegin(); it != m.rend(); ++it) os << " w" << it->first << ":" << it->second;
  return os.str();
}

const char* case_name(CaseTag t) {
  switch (t) {
    case CaseTag::A: return "A";
    case CaseTag::B: return "B";
    case CaseTag::SearchExhausted: return "search-exhausted";
  }
  return "?";
}

const char* hoffman_name(HoffmanCase c) {
  switch (c) {
    case HoffmanCase::SlTwo: return "sl2-quotient";
    case HoffmanCase::Parabolic: return "parabolic";
    case HoffmanCase::Ideal: return "ideal";
    case HoffmanCase::NotCodimOne: return "not-codim-one";
  }
  return "?";
}

std::string yes(bool b) { return b ? "true" : "false"; }

}  // namespace

CommandOutput cmd_stabilizer(const Json& in, const CommandOptions&) {
  Subject s = subject_of(in);
  auto basis = stabilizer_algebra(s.rep, s.v);
  bool verified = rank(s.rep.orbit_map(s.v)) + basis.size() == s.rep.gl_dim();
  for (const auto& g : basis) verified = verified && is_zero(s.rep.act(g, s.v));
  CommandOutput out;
  out.doc = header("stabilizer");
  out.doc["dimension"] = basis.size();
  out.doc["verified"] = verified;
  out.doc["basis"] = lie_json(basis);
  out.table = "dimension: " + std::to_string(basis.size()) + "\nverified: " + yes(verified) + "\n" + lie_table(basis);
  return out;
}

CommandOutput cmd_local_model(const Json& in, const CommandOptions& opt) {
  Subject s = subject_of(in);
  const std::size_t n = s.rep.n();
  std::vector<LieElement> S;
  std::vector<QVec> N;
  if (opt.policy == ComplementPolicy::Explicit) {
    S = lie_list_of(need(in, "S"), n);
    const Json& nj = need(in, "N");
    if (!nj.is_array()) throw SchemaError("N must be an array");
    for (const auto& e : nj) N.push_back(element_of(s, e));
  }
  auto lm = build_local_model(s.rep, s.v, opt.policy, S, N);
  CommandOutput out;
  out.doc = header("local-model");
  out.doc["policy"] = opt.policy == ComplementPolicy::Explicit ? "explicit" : "orthogonal";
  out.doc["H"] = lie_json(lm.H);
  out.doc["S"] = lie_json(lm.S);
  Json nb = Json::array();
  for (const auto& v : lm.N) nb.push_back(element_json(s, v));
  out.doc["N"] = nb;
  std::ostringstream os;
  os << "dim H = " << lm.H.size() << ", dim S = " << lm.p() << ", dim N = " << lm.m() << "\n";
  os << "N basis:\n";
  for (const auto& v : lm.N) os << "  " << element_str(s, v) << "\n";
  if (in.contains("n")) {
    QVec nv = element_of(s, in.at("n"));
    QMatrix th = theta_matrix(lm, nv);
    QMatrix one = QMatrix::identity(th.rows()) + th;
    Rational d = det(one);
    out.doc["theta"] = matrix_to_json(th);
    out.doc["det_one_plus_theta"] = rational_to_json(d);
    out.doc["inverse_one_plus_theta"] = sgn(d) != 0 ? matrix_to_json(inverse(one)) : Json(nullptr);
    auto st = slice_stabilizer(lm, nv);
    out.doc["slice_stabilizer"] = lie_json(st.elements);
    out.doc["Hn"] = lie_json(st.Hn);
    os << "theta(n) (columns are images of basis vectors):\n" << matrix_table(th);
    os << "det(1+theta(n)) = " << to_string(d) << "\n";
    if (sgn(d) != 0) os << "(1+theta(n))^-1:\n" << matrix_table(inverse(one));
    os << "dim H_n = " << st.Hn.size() << "\n";
    if (in.contains("h")) {
      Json comp = Json::array();
      for (const auto& h : lie_list_of(in.at("h"), n)) {
        LieElement c = s_completion(lm, h, nv);
        comp.push_back(matrix_to_json(c));
        os << "S-completion:\n" << matrix_table(c);
      }
      out.doc["s_completion"] = comp;
    }
  }
  out.table = os.str();
  return out;
}

CommandOutput cmd_limit(const Json& in, const CommandOptions& opt) {
  Form f = form_from_json(need(in, "form"));
  OnePS lam{int_vector_from_json(need(in, "weights"))};
  if (static_cast<int>(lam.weights.size()) != f.nvars()) throw SchemaError("weights length differs from nvars");
  CommandOutput out;
  out.doc = header("limit");
  auto ex = expand_orbit_curve(f, lam);
  out.doc["a"] = ex.a;
  out.doc["g"] = form_to_json(ex.g);
  std::ostringstream os;
  os << "a = " << ex.a << "\ng = " << ex.g.str() << "\n";
  if (!ex.has_fb) {
    out.doc["b"] = nullptr;
    out.doc["analysis"] = nullptr;
    os << "lambda fixes f: no limit analysis\n";
    out.table = os.str();
    return out;
  }
  out.doc["b"] = ex.b;
  out.doc["f_b"] = form_to_json(ex.fb);
  os << "b = " << ex.b << "\nf_b = " << ex.fb.str() << "\n";
  auto setup = prepare_limit(f, lam);
  auto d = limit_algebra(setup, opt.seed);
  auto ts = triple_stabilizers(f, lam);
  auto cc = classify_case(f, lam, opt.seed);
  auto ext = extension_feasible(setup, d.K0);
  Json kt = Json::array();
  for (const auto& k : d.Kt) kt.push_back(pmatrix_to_json(k));
  out.doc["analysis"] = Json{{"dimK", d.dimK},
                             {"dimH", d.H.size()},
                             {"Delta", d.Delta.str()},
                             {"verified", d.verified},
                             {"Kt", kt},
                             {"K0", lie_json(d.K0)},
                             {"graded_K0", dims_json(d.gradedDims)},
                             {"graded_H", dims_json(d.gradedDimsH)},
                             {"triple", ts.summary()},
                             {"Klf_dim", ts.Klf.size()},
                             {"case", case_name(cc.tag)},
                             {"case_note", cc.note},
                             {"extension_feasible", ext.feasible},
                             {"hoffman", hoffman_name(ext.hoffman)}};
  os << "dim K = " << d.dimK << ", dim H = " << d.H.size() << ", Delta = " << d.Delta.str() << "\n"
     << "graded K0:" << dims_str(d.gradedDims) << "\ngraded H:" << dims_str(d.gradedDimsH) << "\n"
     << "triple stabilizer: " << ts.summary() << " (Klf dim " << ts.Klf.size() << ")\n"
     << "case: " << case_name(cc.tag) << "\nextension feasible: " << yes(ext.feasible)
     << "\nK0 in H: " << hoffman_name(ext.hoffman) << "\nK0 basis:\n"
     << lie_table(d.K0);
  out.table = os.str();
  return out;
}

CommandOutput cmd_closure(const Json& in, const CommandOptions&) {
  JordanSpec spec = jordan_spec_from_json(need(in, "spec"));
  Partition theta = partition_from_json(need(in, "partition"));
  if (theta.n() != spec.n()) throw SchemaError("partition size differs from the matrix size");
  auto r = closure_contains_nilpotent(spec, theta);
  CommandOutput out;
  out.doc = header("closure");
  out.doc["contains"] = r.contains;
  out.doc["chi"] = partition_to_json(r.chi);
  out.doc["theta"] = partition_to_json(r.theta);
  std::ostringstream os;
  os << "chi = " << r.chi.str() << ", theta = " << r.theta.str() << "\ncontains: " << yes(r.contains) << "\n";
  if (r.contains) {
    out.doc["family"] = r.family;
    os << "witness: " << r.family << "\n";
  } else {
    out.doc["separating"] = Json{{"ell", r.ell}, {"k", r.k}, {"r", r.r}, {"multiplicities", r.multiplicities},
                                 {"x_in", r.x_in}, {"y_in", r.y_in}};
    os << "separated by X_" << r.k << "^" << r.r << " (ell = " << r.ell << ")\n";
  }
  out.table = os.str();
  return out;
}

CommandOutput cmd_slice(const Json& in, const CommandOptions& opt) {
  const Json& kind = need(in, "kind");
  if (!kind.is_string()) throw SchemaError("kind must be a string");
  CommandOutput out;
  out.doc = header("slice");
  std::ostringstream os;
  if (kind == "jn") {
    int n = need_int(in, "n", 2, 12);
    int samples = opt_int(in, "samples", 10, 1, 1000);
    auto r = jn_slice_report(n, samples, opt.seed);
    out.doc["kind"] = "jn";
    out.doc["n"] = n;
    out.doc["model_ok"] = r.model_ok;
    out.doc["h_is_powers"] = r.h_is_powers;
    out.doc["minpoly_identity"] = r.minpoly_identity;
    out.doc["theta_square_zero"] = r.theta_square_zero;
    out.doc["stabilizer_dims"] = r.stabilizerDims;
    os << "J_" << n << ": model " << yes(r.model_ok) << ", H = powers " << yes(r.h_is_powers) << ", minpoly "
       << yes(r.minpoly_identity) << ", theta^2 = 0 " << yes(r.theta_square_zero) << "\nstabilizer dims:";
    for (auto d : r.stabilizerDims) os << " " << d;
    os << "\n";
    if (n == 4) {
      out.doc["z4_s"] = matrix_to_json(r.z4_s);
      os << "completion s:\n" << matrix_table(r.z4_s);
    }
  } else if (kind == "jab") {
    int a = need_int(in, "a", 1, 12), b = need_int(in, "b", 1, 12);
    if (b >= a) throw SchemaError("jab needs a > b");
    int samples = opt_int(in, "samples", 20, 1, 1000);
    auto r = jab_slice_report(a, b, samples, opt.seed);
    Json fam = Json::array();
    for (const auto& [e, o] : r.family)
      fam.push_back(Json{{"expected", partition_to_json(e)}, {"observed", partition_to_json(o)}});
    out.doc["kind"] = "jab";
    out.doc["a"] = a;
    out.doc["b"] = b;
    out.doc["dimH"] = r.dimH;
    out.doc["dimC"] = r.dimC;
    out.doc["c_transversal"] = r.c_transversal;
    out.doc["family"] = fam;
    out.doc["samples"] = r.samples;
    out.doc["minpoly_degree_ok"] = r.minpoly_degree_ok;
    out.doc["kernel_ok"] = r.kernel_ok;
    out.doc["zero_kernel_two"] = r.zero_kernel_two;
    os << "J_{" << a << "," << b << "}: dim H = " << r.dimH << ", dim C = " << r.dimC << ", transversal "
       << yes(r.c_transversal) << "\nmin-poly degree >= a: " << yes(r.minpoly_degree_ok)
       << "\nkernel <= 2: " << yes(r.kernel_ok) << "\n";
  } else {
    throw SchemaError("slice kind must be \"jn\" or \"jab\"");
  }
  out.table = os.str();
  return out;
}

CommandOutput cmd_curvature(const Json& in, const CommandOptions&) {
  const Json& kind = need(in, "kind");
  if (!kind.is_string()) throw SchemaError("kind must be a string");
  CommandOutput out;
  out.doc = header("curvature");
  out.doc["kind"] = kind;
  std::ostringstream os;
  auto emit_curv = [&](CurvatureData cd) {
    riemann_and_ricci(cd);
    out.doc["tangent_count"] = cd.K;
    out.doc["beta_is_minus_alpha"] = cd.beta_is_minus_alpha;
    out.doc["symmetric"] = cd.symmetric;
    out.doc["ricci"] = matrix_to_json(cd.ricci);
    os << "beta = -alpha: " << yes(cd.beta_is_minus_alpha) << "\nRicci:\n" << matrix_table(cd.ricci);
  };
  if (kind == "sphere") {
    int n = need_int(in, "n", 1, 12);
    Rational r = rational_from_json(need(in, "r"));
    if (sgn(r) <= 0) throw SchemaError("r must be positive");
    emit_curv(second_fundamental_form(sphere_model(n, r)));
  } else if (kind == "orbit") {
    Subject s = subject_of(in);
    emit_curv(second_fundamental_form(orbit_model(s.rep, s.v, lie_list_of(need(in, "S"), s.rep.n()))));
  } else if (kind == "adjoint") {
    QVec lambda = qvec_from_json(need(in, "lambda"));
    if (lambda.size() < 2) throw SchemaError("lambda needs at least two entries");
    auto at = adjoint_table(lambda);
    Json d = Json::array();
    for (const auto& [pq, m] : at.d) {
      d.push_back(Json{{"p", pq.first + 1}, {"q", pq.second + 1}, {"d", matrix_to_json(m)}});
      os << "d_" << pq.first + 1 << "," << pq.second + 1 << ":\n" << matrix_table(m);
    }
    out.doc["d"] = d;
    out.doc["only_qp_nonzero"] = at.only_qp_nonzero;
    out.doc["osculates"] = at.osculates;
    out.doc["generic_agrees"] = at.generic_agrees;
  } else if (kind == "cyclic") {
    int n = need_int(in, "n", 3, 12);
    auto r = cyclic_shift_suite(n);
    Json ps = Json::array();
    for (std::size_t k = 0; k < r.P.size(); ++k) {
      ps.push_back(matrix_to_json(r.P[k]));
      if (k > 0) os << "P^" << k << ":\n" << matrix_table(r.P[k]);
    }
    out.doc["P"] = ps;
    out.doc["closed_form_matches"] = r.closed_form_matches;
    out.doc["zero_self_pi"] = r.zero_self_pi;
    out.doc["gamma_sq_ell_bar"] = rational_to_json(r.gamma_sq_ell_bar);
    out.doc["gamma_sq_min_diagonal"] = r.gamma_sq_min_diagonal;
    os << "closed form matches: " << yes(r.closed_form_matches) << "\n";
  } else {
    throw SchemaError("curvature kind must be sphere, orbit, adjoint or cyclic");
  }
  out.table = os.str();
  return out;
}

CommandOutput cmd_kempf(const Json& in, const CommandOptions& opt) {
  Subject s = subject_of(in);
  double logT = in.contains("log_t") ? need_double(in, "log_t") : kempf_reference_log_t();
  if (!(logT > 0) || !std::isfinite(logT)) throw SchemaError("log_t must be positive and finite");
  int res = opt_int(in, "grid_resolution", 20, 1, 200);
  KempfOptions ko;
  ko.seed = opt.seed;
  if (opt.tol) ko.gradTol = *opt.tol;
  auto sup = kempf_support(s.rep, s.v);
  const std::size_t n = s.rep.n();
  auto d = kempf_descent(sup, n, logT, ko);
  auto g = kempf_grid(sup, n, logT, res);
  CommandOutput out;
  out.doc = header("kempf");
  out.doc["log_t"] = logT;
  out.doc["ell"] = d.ell;
  out.doc["mu"] = d.mu;
  out.doc["log_f"] = d.logValue;
  out.doc["iterations"] = d.iterations;
  out.doc["converged"] = d.converged;
  out.doc["monotone"] = d.monotone;
  out.doc["grid"] = Json{{"resolution", res}, {"points", g.points}, {"best_mu", g.bestMu}, {"best_mu_point", g.bestMuPoint}};
  out.doc["unstable"] = d.mu > 0;
  std::ostringstream os;
  os.precision(9);
  os << "ell =";
  for (double x : d.ell) os << " " << x;
  os << "\nmu = " << d.mu << " (grid " << g.bestMu << ")\nlog f = " << d.logValue << "\nunstable: " << yes(d.mu > 0)
     << "\n";
  if (in.contains("alpha")) {
    double alpha = need_double(in, "alpha");
    std::vector<double> ts;
    for (double t = 1; t < logT; t *= 8) ts.push_back(t);
    ts.push_back(logT);
    auto pc = kempf_property(sup, n, alpha, ts, ko);
    out.doc["property"] = Json{{"alpha", alpha}, {"log_ts", pc.logTs}, {"mus", pc.mus}, {"holds", pc.holds},
                               {"t0_log", pc.holds ? Json(pc.t0_log) : Json(nullptr)}};
    os << "enters L_alpha: " << yes(pc.holds) << "\n";
  }
  out.table = os.str();
  return out;
}

CommandOutput cmd_reproduce(const std::string& id, const CommandOptions& opt) {
  auto r = reproduce(id, opt.seed);
  CommandOutput out;
  out.doc = header("reproduce");
  out.doc["id"] = r.id;
  out.doc["pass"] = r.all_pass();
  Json as = Json::array();
  std::ostringstream os;
  os << r.table;
  for (const auto& a : r.assertions) {
    as.push_back(Json{{"label", a.label}, {"expected", a.expected}, {"actual", a.actual}, {"pass", a.pass}});
    os << (a.pass ? "PASS " : "FAIL ") << a.label;
    if (!a.pass) os << ": expected " << a.expected << ", got " << a.actual;
    os << "\n";
  }
  out.doc["assertions"] = as;
  out.doc["data"] = r.data;
  out.table = os.str();
  out.exit = r.all_pass() ? kExitOk : kExitMismatch;
  return out;
}

}  // namespace ol
