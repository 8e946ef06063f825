#pragma once

#include <string>

#include "json.hpp"
#include "liecap/lie_algebra.hpp"

namespace liecap {

using ordered_json = nlohmann::ordered_json;

/// {"dim": n, "labels": [...], "field": "Q" | {"p": 5},
///  "brackets": [{"i": 1, "j": 2, "out": [{"k": 3, "c": "1"}]}]}
/// Indices are 1-based; only i < j is emitted, entries in table order.
ordered_json algebra_to_json(const LieAlgebra& algebra);

/// Inverse of algebra_to_json. Accepts either bracket order, rejects
/// inconsistent duplicates and nonzero [e_i, e_i]. Throws ParseError. Does
/// not check the Jacobi identity (see validate).
LieAlgebra algebra_from_json(const nlohmann::json& doc);
LieAlgebra algebra_from_json_text(const std::string& text);

}  // namespace liecap
