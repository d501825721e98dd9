#pragma once

#include <string>

#include "json.hpp"

#include "biortho/matrix_poly.hpp"
#include "biortho/params.hpp"

namespace biortho::io {

/// [[[re, im], ...], ...] row-major.
nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j, Index p,
                        const std::string& key);

/// Parses a parameter document {p, H, C, upsilon, max_degree} into a
/// validated ParamSet. Structural problems throw ValidationError with
/// condition "format"; spectral problems carry the violated condition.
ParamSet params_from_json(const nlohmann::json& doc);
ParamSet load_params(const std::string& path);
nlohmann::json params_to_json(const ParamSet& params);

nlohmann::json poly_to_json(const MatrixPoly& poly);
MatrixPoly poly_from_json(const nlohmann::json& j);

}  // namespace biortho::io
