#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "orbitlimits/io.hpp"
#include "orbitlimits/kempf.hpp"
#include "orbitlimits/limits.hpp"

namespace ol {

struct Assertion {
  std::string label;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct ReproduceReport {
  std::string id;
  std::vector<Assertion> assertions;
  Json data;          // computed values
  std::string table;  // aligned text for the worked example
  bool all_pass() const;
};

class UnknownExample : public SchemaError {
 public:
  using SchemaError::SchemaError;
};

std::vector<std::string> reproduce_ids();
// Throws UnknownExample for an id outside reproduce_ids().
ReproduceReport reproduce(const std::string& id, std::uint64_t seed = 20240601);

// ---- pinned inputs shared by the harness, the tests and the benchmarks ----

// det_3 with x9 replaced by x9 - x1 - x5; the 1-PS scales x9.
Form det3_lambda1_form();
OnePS det3_lambda1();
// det(Y + Z) in the skew/symmetric parametrization; the 1-PS scales x4..x9.
Form det3_lambda2_form();
OnePS det3_lambda2();
// Plain det_3 with the first four variables scaled.
OnePS det3_lambda4();

// (y^2 + z^2)^2 in (z, y) and (y1^2 + y2^2 + z^2)^2 in (z, y1, y2).
Form o2_form();
Form o3_form();

struct KempfCase {
  std::string name;
  Representation rep;
  QVec v;
};
// Unstable vectors with n <= 4 used for the optimizer checks.
std::vector<KempfCase> kempf_test_vectors();
// ln t at which the optimizer is compared with the grid.
double kempf_reference_log_t();

}  // namespace ol
