#pragma once

#include "numrad/constructions.hpp"

#include <nlohmann/json.hpp>

namespace numrad {

using json = nlohmann::ordered_json;

/// Scalars serialize as numbers on real spaces and [re, im] pairs on complex
/// ones. Parsing accepts both forms.
json vec_to_json(const Vec& v, Field f);
Vec vec_from_json(const json& j, Field f);

/// {"rows": n, "cols": n, "data": [row-major], "field": "real"|"complex"}
json matrix_to_json(const Mat& m, Field f);
std::pair<Mat, Field> matrix_from_json(const json& j);

/// {"space": "<spec>", "cells": [{"C", "d", "A", "b"}], "box_radius": R}
/// Round-trips bit-exactly.
json pwl_to_json(const PwlOperator& T, const std::string& space_spec);
PwlOperator pwl_from_json(const json& j);

json bracket_to_json(const RadiusBracket& br, Field f);

json real_matrix_to_json(const RMat& m);
RMat real_matrix_from_json(const json& j);

}  // namespace numrad
