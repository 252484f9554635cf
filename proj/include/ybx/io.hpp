#pragma once

#include "ybx/fp.hpp"
#include "ybx/matrix.hpp"
#include "ybx/multipoly.hpp"
#include "ybx/oracle.hpp"
#include "ybx/rational.hpp"
#include "ybx/report.hpp"

#include <json.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace ybx::io {

using json = nlohmann::json;

// Shared matrix text encoding: a rational matrix is a JSON array of rows with
// "p/q" (or "p") string entries; plain JSON integers are accepted on input.
// A prime-field matrix is an object {"modulus": p, "rows": [...]}. Floating
// point is rejected everywhere.
json matrix_to_json(const Matrix<Rational>& m);
json matrix_to_json(const Matrix<Fp>& m);
Matrix<Rational> rational_matrix_from_json(const json& j);
Matrix<Fp> fp_matrix_from_json(const json& j);
bool looks_like_fp_matrix(const json& j);

// Matrix of polynomial entries (coefficient parameters), for symbolic runs.
Matrix<MultiPoly> symbolic_matrix_from_json(const json& j, const VarTable& vt);

json polys_to_json(const std::vector<MultiPoly>& ps, const VarTable& vt);
std::vector<MultiPoly> polys_from_json(const json& j, const VarTable& vt);

json report_to_json(const ConditionReport& r);
json enumeration_to_json(const EnumerationReport& rep, std::size_t max_solutions);

// Parses a file with a position-bearing diagnostic on malformed content.
json load_json_file(const std::string& path);

}  // namespace ybx::io
