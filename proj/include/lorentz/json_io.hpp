#pragma once

#include <vector>

#include <json.hpp>

#include "lorentz/algebra.hpp"

namespace lorentz {

using Json = nlohmann::ordered_json;

/// {"re": x, "im": y}
Json complex_to_json(Complex z);
/// [[a, b], [c, d]] with complex entries.
Json matrix_to_json(const Mat2& m);
/// {"alpha": [...], "beta": [...]}
Json algebra_to_json(const AlgebraElement& x);

// Readers throw Error(ErrorCode::Parse) on malformed input.
Complex complex_from_json(const Json& j);
Mat2 matrix_from_json(const Json& j);
AlgebraElement algebra_from_json(const Json& j);
/// A bare array of elements or {"generators": [...]}.
std::vector<AlgebraElement> generators_from_json(const Json& j);

}  // namespace lorentz
