#include "orbitlimits/io.hpp"

#include <algorithm>
#include <sstream>

namespace ol {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw SchemaError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw SchemaError(std::string(what) + " must be an integer");
  return j.get<int>();
}

}  // namespace

Json rational_to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw SchemaError("rational must be a \"p/q\" string or an integer");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw SchemaError(e.what());
  }
}

Json qvec_to_json(const QVec& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(rational_to_json(x));
  return a;
}

QVec qvec_from_json(const Json& j) {
  if (!j.is_array()) throw SchemaError("vector must be an array");
  QVec v;
  for (const auto& e : j) v.push_back(rational_from_json(e));
  return v;
}

Json matrix_to_json(const QMatrix& m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(qvec_to_json(m.row(i)));
  return a;
}

QMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw SchemaError("matrix must be a non-empty array of rows");
  std::vector<QVec> rows;
  for (const auto& r : j) rows.push_back(qvec_from_json(r));
  const std::size_t c = rows[0].size();
  for (const auto& r : rows)
    if (r.size() != c || c == 0) throw SchemaError("matrix rows must have equal positive length");
  return QMatrix::from_rows(rows, c);
}

Json pmatrix_to_json(const PMatrix& m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json r = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(m(i, j).str());
    a.push_back(r);
  }
  return a;
}

Json form_to_json(const Form& f) {
  Json terms = Json::array();
  for (const auto& [e, c] : f.terms()) terms.push_back(Json{{"exp", e}, {"coef", rational_to_json(c)}});
  return Json{{"nvars", f.nvars()}, {"degree", f.degree()}, {"terms", terms}};
}

Form form_from_json(const Json& j) {
  int n = as_int(field(j, "nvars"), "nvars");
  int d = as_int(field(j, "degree"), "degree");
  if (n < 1 || d < 0) throw SchemaError("form needs nvars >= 1 and degree >= 0");
  Form f(n, d);
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) throw SchemaError("terms must be an array");
  for (const auto& t : terms) {
    auto e = int_vector_from_json(field(t, "exp"));
    if (static_cast<int>(e.size()) != n) throw SchemaError("exponent length differs from nvars");
    int deg = 0;
    for (int x : e) {
      if (x < 0) throw SchemaError("negative exponent");
      deg += x;
    }
    if (deg != d) throw SchemaError("term degree differs from the form degree");
    f.add_term(e, rational_from_json(field(t, "coef")));
  }
  return f;
}

Json partition_to_json(const Partition& p) { return Json(p.parts()); }

Partition partition_from_json(const Json& j) {
  try {
    return Partition(int_vector_from_json(j));
  } catch (const SchemaError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw SchemaError(e.what());
  }
}

Json jordan_spec_to_json(const JordanSpec& s) {
  Json a = Json::array();
  for (const auto& b : s.blocks) {
    Json eig = b.eig ? rational_to_json(*b.eig) : Json{{"label", b.label}};
    a.push_back(Json{{"eig", eig}, {"sizes", partition_to_json(b.sizes)}});
  }
  return a;
}

JordanSpec jordan_spec_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw SchemaError("Jordan spec must be a non-empty array");
  JordanSpec s;
  for (const auto& b : j) {
    EigenBlocks eb;
    const Json& eig = field(b, "eig");
    if (eig.is_object()) {
      const Json& lab = field(eig, "label");
      if (!lab.is_string()) throw SchemaError("label must be a string");
      eb.label = lab.get<std::string>();
    } else {
      eb.eig = rational_from_json(eig);
      eb.label = to_string(*eb.eig);
    }
    eb.sizes = partition_from_json(field(b, "sizes"));
    if (eb.sizes.length() == 0) throw SchemaError("sizes must be non-empty");
    s.blocks.push_back(std::move(eb));
  }
  try {
    s.validate();
  } catch (const std::invalid_argument& e) {
    throw SchemaError(e.what());
  }
  return s;
}

std::vector<int> int_vector_from_json(const Json& j) {
  if (!j.is_array()) throw SchemaError("expected an integer array");
  std::vector<int> v;
  for (const auto& e : j) v.push_back(as_int(e, "array entry"));
  return v;
}

std::string matrix_table(const QMatrix& m) {
  std::vector<std::vector<std::string>> cells(m.rows(), std::vector<std::string>(m.cols()));
  std::size_t w = 1;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      cells[i][j] = to_string(m(i, j));
      w = std::max(w, cells[i][j].size());
    }
  std::ostringstream os;
  for (const auto& row : cells) {
    os << "[";
    for (std::size_t j = 0; j < row.size(); ++j)
      os << (j ? " " : "") << std::string(w - row[j].size(), ' ') << row[j];
    os << "]\n";
  }
  return os.str();
}

}  // namespace ol
