#include "biortho/io.hpp"

#include <fstream>

#include "biortho/errors.hpp"

namespace biortho::io {

using nlohmann::json;

namespace {

[[noreturn]] void format_error(const std::string& what) {
  throw ValidationError("format", what);
}

double number(const json& j, const std::string& where) {
  if (!j.is_number()) format_error(where + ": expected a number");
  return j.get<double>();
}

int integer(const json& doc, const char* key) {
  if (!doc.contains(key)) format_error(std::string("missing key '") + key + "'");
  const json& j = doc.at(key);
  if (!j.is_number_integer() && !j.is_number_unsigned()) {
    format_error(std::string("'") + key + "' must be an integer");
  }
  return j.get<int>();
}

}  // namespace

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Index k = 0; k < m.cols(); ++k) row.push_back({m(i, k).real(), m(i, k).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const json& j, Index p, const std::string& key) {
  if (!j.is_array() || static_cast<Index>(j.size()) != p) {
    throw ValidationError("dimension", "'" + key + "' must have p rows");
  }
  Matrix m(p, p);
  for (Index i = 0; i < p; ++i) {
    const json& row = j[i];
    if (!row.is_array() || static_cast<Index>(row.size()) != p) {
      throw ValidationError("dimension", "'" + key + "' must have p columns");
    }
    for (Index k = 0; k < p; ++k) {
      const json& cell = row[k];
      const std::string where = key + "[" + std::to_string(i) + "][" + std::to_string(k) + "]";
      if (!cell.is_array() || cell.size() != 2) format_error(where + ": expected [re, im]");
      m(i, k) = Complex(number(cell[0], where), number(cell[1], where));
    }
  }
  return m;
}

ParamSet params_from_json(const json& doc) {
  if (!doc.is_object()) format_error("parameter document must be a JSON object");
  const int p = integer(doc, "p");
  if (p < 1) throw ValidationError("dimension", "p must be positive");
  for (const char* key : {"H", "C"}) {
    if (!doc.contains(key)) format_error(std::string("missing key '") + key + "'");
  }
  Matrix h = matrix_from_json(doc.at("H"), p, "H");
  Matrix c = matrix_from_json(doc.at("C"), p, "C");
  const int upsilon = integer(doc, "upsilon");
  const int max_degree = integer(doc, "max_degree");
  return ParamSet::make(std::move(h), std::move(c), upsilon, max_degree);
}

ParamSet load_params(const std::string& path) {
  std::ifstream in(path);
  if (!in) format_error("cannot open parameter file '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    format_error("'" + path + "': " + e.what());
  }
  return params_from_json(doc);
}

json params_to_json(const ParamSet& params) {
  json doc;
  doc["p"] = params.dim();
  doc["H"] = matrix_to_json(params.h());
  doc["C"] = matrix_to_json(params.c());
  doc["upsilon"] = params.upsilon();
  doc["max_degree"] = params.max_degree();
  return doc;
}

json poly_to_json(const MatrixPoly& poly) {
  json coeffs = json::array();
  for (const Matrix& a : poly.coeffs()) coeffs.push_back(matrix_to_json(a));
  return {{"p", poly.dim()}, {"degree", poly.degree()}, {"coefficients", std::move(coeffs)}};
}

MatrixPoly poly_from_json(const json& j) {
  if (!j.is_object() || !j.contains("coefficients")) format_error("polynomial needs 'coefficients'");
  const int p = integer(j, "p");
  const json& list = j.at("coefficients");
  if (!list.is_array() || list.empty()) format_error("'coefficients' must be a nonempty array");
  std::vector<Matrix> coeffs;
  for (const json& a : list) coeffs.push_back(matrix_from_json(a, p, "coefficients"));
  return MatrixPoly(std::move(coeffs));
}

}  // namespace biortho::io
