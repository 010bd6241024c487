#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "orbitlimits/local_model.hpp"

namespace ol {

// Weakly decreasing positive parts.
class Partition {
 public:
  Partition() = default;
  // Sorts; throws std::invalid_argument on a non-positive part.
  explicit Partition(std::vector<int> parts);
  const std::vector<int>& parts() const { return parts_; }
  int n() const;
  std::size_t length() const { return parts_.size(); }
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }  // 0 past the end
  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
  std::string str() const;

 private:
  std::vector<int> parts_;
};

Partition transpose(const Partition& p);
// a dominates b; throws std::invalid_argument when the sizes differ.
bool dominates(const Partition& a, const Partition& b);
std::vector<Partition> partitions_of(int n);

struct EigenBlocks {
  std::optional<Rational> eig;  // empty for a symbolic label
  std::string label;
  Partition sizes;
};

struct JordanSpec {
  std::vector<EigenBlocks> blocks;
  int n() const;
  bool rational() const;
  // Throws std::invalid_argument on repeated eigenvalues or labels.
  void validate() const;
};

// Multiplicity structures of size n: one partition per distinct eigenvalue,
// up to reordering. Eigenvalues are labelled 1, 2, ...
std::vector<JordanSpec> jordan_structures(int n);

// chi_j = sum_i lambda_ij.
Partition transpose_block_spectrum(const JordanSpec& spec);
// Sorted algebraic multiplicities.
Partition spectrum_partition(const JordanSpec& spec);

class NotNilpotent : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};
// From the ranks of powers; throws NotNilpotent unless m^n = 0.
Partition nilpotent_signature(const QMatrix& m);
std::vector<std::size_t> rank_sequence(const QMatrix& m);  // rank(m^k), k = 0..n

// Requires a characteristic polynomial splitting over Q.
JordanSpec jordan_spec_of(const QMatrix& m);
QMatrix jordan_matrix(const JordanSpec& spec);  // requires rational eigenvalues
QMatrix nilpotent_matrix(const Partition& theta);  // J_theta
// Monic p of degree n: C(i,i+1) = 1, C(i,0) = -c_{n-1-i}.
QMatrix companion(const UniPoly& p);

// min over eigenvalue multiplicities m_i with sum k of
// rank prod (x - mu_i)^{m_i}; mult receives an optimal choice.
long min_rank_Xk(const JordanSpec& spec, int k, std::vector<int>* mult = nullptr);
bool in_Xkr(const JordanSpec& spec, int k, int r);
bool in_Xkr(const Partition& theta, int k, int r);  // nilpotent J_theta

struct ClosureResult {
  bool contains = false;
  Partition chi, theta;
  // Separating pair when contains is false.
  int ell = 0, k = 0, r = 0;
  std::vector<int> multiplicities;  // exponents realizing rank r on x
  bool x_in = false, y_in = false;
  std::string family;  // description of the witness family when contains
};
ClosureResult closure_contains_nilpotent(const JordanSpec& spec, const Partition& theta);

struct WitnessFamily {
  Partition chi;
  QMatrix xPrime;           // block companion matrix similar to the JordanSpec
  std::vector<int> aOfT;    // A(t) = diag(t^{aOfT_i})
  std::map<int, QMatrix> terms;  // A(t) x' A(t)^{-1} by power of t
  int leadingPower = 0;
  QMatrix leadingTerm;
  bool similar = false;     // x' has the Jordan structure of the JordanSpec
  bool leading_is_Jchi = false;
};
WitnessFamily witness_family(const JordanSpec& spec);
// t A(t) x' A(t)^{-1} at a float t.
std::vector<std::vector<double>> evaluate_family(const WitnessFamily& w, double t);

struct ProbeResult {
  std::vector<double> ts;
  std::vector<std::vector<std::size_t>> rankSeqs;  // numeric rank of powers at each t
  std::vector<double> invariantDistance;           // max |char coefficient| of the normalized point
  std::vector<std::size_t> target;                 // rank sequence of J_chi
  bool stabilized = false;  // the last two t values reproduce the target
};
ProbeResult numeric_probe(const JordanSpec& spec, const std::vector<double>& ts, double rank_tol = 1e-3);
std::size_t numeric_rank(std::vector<std::vector<double>> a, double tol);
std::vector<double> char_coefficients(const std::vector<std::vector<double>>& a);  // c_1..c_n

// ---- J_n slice ----
struct JnSliceReport {
  int n = 0;
  bool model_ok = false;          // S = zero first row, N = first column, transversal
  bool h_is_powers = false;       // H = span{J^i}
  bool minpoly_identity = false;  // p(T) = 0 symbolically, T^i e_n = e_{n-i}
  bool theta_square_zero = false;
  std::vector<std::size_t> stabilizerDims;  // per random c
  bool z4_matches = false;                   // only for n = 4
  LieElement z4_s;
};
JnSliceReport jn_slice_report(int n, int samples = 10, std::uint64_t seed = 20240601);
LocalModel jn_local_model(int n);

// ---- J_{a,b} slice ----
struct JabSliceReport {
  int a = 0, b = 0;
  std::size_t dimH = 0, dimC = 0;
  bool c_transversal = false;
  std::vector<std::pair<Partition, Partition>> family;  // (expected, observed) for J_i(t)
  std::size_t samples = 0;
  bool minpoly_degree_ok = false;  // deg p_C >= a on every sample
  bool kernel_ok = false;          // Krylov span of two vectors is everything
  bool minpoly_divides_ok = false; // structured samples with deg p = a
  bool zero_kernel_two = false;    // dim ker J_{a,b} = 2
};
JabSliceReport jab_slice_report(int a, int b, int samples = 20, std::uint64_t seed = 20240601);
// J_{a,b} + C for the parameters c (a), d (b), alpha (b), beta (b).
QMatrix jab_point(int a, int b, const QVec& c, const QVec& d, const QVec& alpha, const QVec& beta);

}  // namespace ol
