#pragma once

#include "neargroup/cyclotomic.hpp"
#include "neargroup/matrix.hpp"

#include <nlohmann/json.hpp>

namespace neargroup {

using json = nlohmann::json;

// {"order": N, "coeffs": [["num", "den"], ...]}
json to_json(const Cyclotomic& x);
Cyclotomic cyclotomic_from_json(const json& j);

// Row-major nested arrays of scalars.
json to_json(const Matrix& m);
Matrix matrix_from_json(const json& j);

}  // namespace neargroup
