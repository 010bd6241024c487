#pragma once

#include <optional>
#include <vector>

#include "orbitlimits/lie.hpp"

namespace ol {

enum class ComplementPolicy { Orthogonal, Explicit };

struct LeviData {
  std::vector<LieElement> R;  // reductive part; must satisfy R.N in N
  std::vector<LieElement> Q;  // nilradical
};

// Local model at x: gl = H + S, V = S.x + N.
struct LocalModel {
  Representation rep;
  QVec x;
  std::vector<LieElement> H, S;
  std::vector<QVec> TO;  // S_i . x, in S order
  std::vector<QVec> N;
  // Inverse of the square matrix [S_1.x ... S_p.x | N_1 ... N_m]; its first
  // p rows give lambda_S, the rest lambda_N in N coordinates.
  QMatrix coord;
  std::optional<LeviData> levi;

  std::size_t p() const { return S.size(); }
  std::size_t m() const { return N.size(); }
  QVec lambda_S(const QVec& dv) const;
  QVec lambda_N(const QVec& dv) const;  // N coordinates
  QVec n_vector(const QVec& ncoords) const;
  LieElement s_element(const QVec& scoords) const;
  // Coordinates (s, h) of g in the basis S followed by H.
  std::pair<QVec, QVec> split(const LieElement& g) const;
};

// x = 0 is rejected. Orthogonal uses the Frobenius form on gl and the
// coefficientwise form on V; Explicit validates the supplied S and N.
LocalModel build_local_model(const Representation& rep, const QVec& x,
                             ComplementPolicy policy = ComplementPolicy::Orthogonal,
                             const std::vector<LieElement>& explicit_S = {},
                             const std::vector<QVec>& explicit_N = {},
                             std::optional<LeviData> levi = std::nullopt);

// Matrix of theta(n) on V: dv -> lambda_S(dv).n.
QMatrix theta_matrix(const LocalModel& lm, const QVec& n);
QVec theta(const LocalModel& lm, const QVec& n, const QVec& dv);
// Phi(s (x) n) = lambda_S(s.n), returned as S coordinates.
QVec phi(const LocalModel& lm, const QVec& s, const QVec& n);
// p x p matrix with column i = lambda_S(S_i . n); det(1+theta(n)) = det(I+Phi).
QMatrix phi_matrix(const LocalModel& lm, const QVec& n);

class SingularTheta : public std::domain_error {
 public:
  SingularTheta(const std::string& what, Rational det) : std::domain_error(what), det_(std::move(det)) {}
  const Rational& det() const { return det_; }

 private:
  Rational det_;
};

// (1+theta(n))^{-1} dv, through the p x p system. Throws SingularTheta.
QVec inverse_one_plus_theta(const LocalModel& lm, const QVec& n, const QVec& dv);

struct Decomposition {
  QVec s;       // S coordinates
  QVec nprime;  // N coordinates
};
// s.(x+n) + n' = dv.
Decomposition solve_decomposition(const LocalModel& lm, const QVec& n, const QVec& dv);

struct SliceTangent {
  QVec sPart;  // S coordinates
  QVec nPart;  // N coordinates
};
SliceTangent local_action(const LocalModel& lm, const LieElement& g, const QVec& n);

struct SliceStabilizer {
  std::vector<LieElement> elements;  // h + s, each kills x+n
  std::vector<LieElement> Hn;        // the h parts
};
SliceStabilizer slice_stabilizer(const LocalModel& lm, const QVec& n);
// s with (h+s).(x+n) = 0 when h lies in H_n.
LieElement s_completion(const LocalModel& lm, const LieElement& h, const QVec& n);

}  // namespace ol
