#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "orbitlimits/local_model.hpp"

namespace ol {

// lambda(t) x_i = t^{d_i} x_i.
struct OnePS {
  std::vector<int> weights;
  LieElement ell() const;  // diag(d)
};

using PolyLie = PMatrix;  // n x n over Q[t]

struct LimitExpansion {
  int a = 0;
  Form g;
  bool has_fb = false;
  int b = 0;
  Form fb;
  std::map<int, Form> components;  // every nonzero weight component
  bool transversal = true;         // span{f_c : c > a} meets T_g O(g) trivially
};

// Components of v by torus weight; they sum to v.
std::map<int, QVec> weight_decompose(const Representation& rep, const QVec& v, const OnePS& lam);
LimitExpansion expand_orbit_curve(const Form& f, const OnePS& lam);
// f(A(t) x) collected by powers of t, for an arbitrary polynomial family.
std::map<int, Form> expand_family(const Form& f, const PMatrix& A);

class TransversalityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Everything the M_N pipeline needs: the expansion, the local model at g
// with N containing every f_c, and the normalized shifts c - a.
struct LimitSetup {
  Representation rep;
  Form f;
  OnePS lam;
  LimitExpansion ex;
  LocalModel lm;
  std::map<int, QVec> fplus;  // shift c - a -> f_c as a vector
};
// Throws TransversalityError when f_b, ..., f_D meet the tangent space.
LimitSetup prepare_limit(const Form& f, const OnePS& lam);

struct MNMS {
  FMatrix MN;  // m x r
  FMatrix MS;  // p x r
  PMatrix Phi;  // p x p, column i = lambda_S(S_i . f+(t))
  UniPoly Delta;  // det(I + Phi) = det(1 + theta(f+(t)))
  bool neumann = false;  // (I+Phi)^{-1} came from the terminating series
};
MNMS build_MN_MS(const LimitSetup& setup);

struct LimitAlgebraData {
  std::vector<PolyLie> Kt;  // k_i(t) = h_i(t) + s_i(t)
  std::vector<PolyLie> Ht;
  std::vector<PolyLie> St;
  std::vector<LieElement> K0;
  std::vector<LieElement> H;  // stabilizer of g
  std::map<int, std::size_t> gradedDims;   // weight -> dim (K0)_w
  std::map<int, std::size_t> gradedDimsH;  // weight -> dim H_w
  // structureConstants[i][j][k]: [k_i, k_j] = sum_k c k_k over Q(t).
  std::vector<std::vector<std::vector<RationalFn>>> structureConstants;
  UniPoly Delta;
  Rational t0;          // generic point used for the stabilizer recheck
  bool verified = false;
  std::size_t dimK = 0;
};

// Weight of E_ij as an operator on forms, d_j - d_i.
int lie_weight(const OnePS& lam, std::size_t i, std::size_t j);
// Components of g by operator weight.
std::map<int, LieElement> lie_weight_decompose(const LieElement& g, const OnePS& lam);
std::map<int, std::size_t> graded_dims(const std::vector<LieElement>& basis, const OnePS& lam);

LimitAlgebraData limit_algebra(const Form& f, const OnePS& lam, std::uint64_t seed = 20240601);
LimitAlgebraData limit_algebra(const LimitSetup& setup, std::uint64_t seed = 20240601);
// K0 from the leading terms of the conjugated stabilizer of f.
std::vector<LieElement> limit_algebra_by_conjugation(const Form& f, const OnePS& lam);


// [k_i, k_j] = sum c_ij^k k_k over Q(t); throws if the span is not closed.
std::vector<std::vector<std::vector<RationalFn>>> structure_constants(const std::vector<PolyLie>& basis);

// h * n = lambda_N(h.n) in N coordinates; throws if h is not in span(H).
QVec star_action(const LocalModel& lm, const LieElement& h, const QVec& n);

struct ExitTangent {
  Form ell_f;        // l.f
  Form ell_prime_f;  // (l - (a/d) I).f
};
ExitTangent tangent_of_exit(const Form& f, const OnePS& lam);
// l - (a/d) I; lies in the stabilizer of g.
LieElement ell_prime(const OnePS& lam, int a, int degree);

struct TripleStabilizers {
  std::map<int, std::vector<LieElement>> pure;  // weight -> basis of K cap G_w
  std::vector<LieElement> Klf;                  // {k in K : [k, l] in K}
  bool pure_kill_components = true;
  std::string summary() const;  // "x+y+z" over descending weights
};
TripleStabilizers triple_stabilizers(const Form& f, const OnePS& lam);

// dim K^{>=i} for each weight i present, ascending; computed from the
// projections of K onto low weights only.
std::map<int, std::size_t> filtered_dims(const Form& f, const OnePS& lam);

enum class CaseTag { A, B, SearchExhausted };
struct CaseResult {
  CaseTag tag = CaseTag::SearchExhausted;
  // Case A: lower central series dims of K0 ending at 0.
  std::vector<std::size_t> lcs;
  std::vector<bool> components_nilpotent;
  // Case B: witness k (in K), u, and k^u = u^{-1} k u.
  LieElement k, u, ku;
  bool pure_witness = false;
  std::string note;
};
CaseResult classify_case(const Form& f, const OnePS& lam, std::uint64_t seed = 20240601);

// s with s.g = h.f_b, as a coset representative in span(S).
struct DerivationData {
  std::vector<LieElement> domain;
  std::vector<LieElement> values;
  bool identity_holds = false;  // derivation identity modulo H on all pairs
};
class NotInHb : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};
DerivationData derivation_db(const LimitSetup& setup, const std::vector<LieElement>& domain);
// Stabilizer of f_b-bar under the star action.
std::vector<LieElement> star_stabilizer(const LimitSetup& setup);

enum class HoffmanCase { SlTwo = 1, Parabolic = 2, Ideal = 3, NotCodimOne = 0 };
struct ExtensionResult {
  bool feasible = false;
  std::vector<LieElement> dbar;  // dbar(k_i) representatives
  // epsilon extension generators k_i + eps * s_i with s_i = -dbar(k_i)
  std::vector<std::pair<LieElement, LieElement>> epsilon_generators;
  HoffmanCase hoffman = HoffmanCase::NotCodimOne;
  bool regular_i = false;   // f_c != 0 only when (b-a) | (c-a)
  bool regular_ii = false;  // K not inside H
};
ExtensionResult extension_feasible(const LimitSetup& setup, const std::vector<LieElement>& K0);
HoffmanCase hoffman_case(const std::vector<LieElement>& K, const std::vector<LieElement>& H);

struct GradedConditionReport {
  int b_minus_a = 0;
  struct Entry {
    int weight;       // weight of the K0 element
    int s_weight;     // weight the completing s must carry
    bool ok;          // s in G_{s_weight} with s.g = h.f_b exists
    LieElement h, s;
  };
  std::vector<Entry> entries;
  bool all_ok() const;
};
GradedConditionReport check_graded_conditions(const LimitSetup& setup, const std::vector<LieElement>& K0);

}  // namespace ol
