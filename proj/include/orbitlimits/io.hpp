#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "orbitlimits/conj.hpp"
#include "orbitlimits/form.hpp"
#include "orbitlimits/matrix.hpp"

namespace ol {

using Json = nlohmann::ordered_json;

// Malformed input document; maps to exit code 2.
class SchemaError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr int kSchemaVersion = 1;

Json rational_to_json(const Rational& q);  // "p/q" string
Rational rational_from_json(const Json& j);
Json qvec_to_json(const QVec& v);
QVec qvec_from_json(const Json& j);
Json matrix_to_json(const QMatrix& m);  // row-major array of rows
QMatrix matrix_from_json(const Json& j);
// Entries as polynomial strings in t.
Json pmatrix_to_json(const PMatrix& m);

// {"nvars", "degree", "terms": [{"exp", "coef"}]}; terms sorted by exponent.
Json form_to_json(const Form& f);
Form form_from_json(const Json& j);

Json partition_to_json(const Partition& p);
Partition partition_from_json(const Json& j);
// [{"eig": "p/q" | {"label": ...}, "sizes": [...]}]
Json jordan_spec_to_json(const JordanSpec& s);
JordanSpec jordan_spec_from_json(const Json& j);

std::vector<int> int_vector_from_json(const Json& j);

// Aligned text rendering of a rational matrix.
std::string matrix_table(const QMatrix& m);

}  // namespace ol
