#include "lorentz/json_io.hpp"

#include <cmath>
#include <string>

#include "lorentz/error.hpp"

namespace lorentz {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorCode::Parse, what); }

double number(const Json& j, const char* what) {
    if (!j.is_number()) fail(std::string(what) + ": expected a number");
    const double x = j.get<double>();
    if (!std::isfinite(x)) fail(std::string(what) + ": not finite");
    return x;
}

Vec3 vec3(const Json& j, const char* what) {
    if (!j.is_array() || j.size() != 3) fail(std::string(what) + ": expected an array of 3 numbers");
    return {number(j[0], what), number(j[1], what), number(j[2], what)};
}

}  // namespace

Json complex_to_json(Complex z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

Json matrix_to_json(const Mat2& m) {
    return Json::array({Json::array({complex_to_json(m.a), complex_to_json(m.b)}),
                        Json::array({complex_to_json(m.c), complex_to_json(m.d)})});
}

Json algebra_to_json(const AlgebraElement& x) {
    return Json{{"alpha", Json::array({x.alpha[0], x.alpha[1], x.alpha[2]})},
                {"beta", Json::array({x.beta[0], x.beta[1], x.beta[2]})}};
}

Complex complex_from_json(const Json& j) {
    if (j.is_number()) return {number(j, "complex"), 0.0};
    if (j.is_object() && j.contains("re") && j.contains("im")) return {number(j["re"], "re"), number(j["im"], "im")};
    if (j.is_array() && j.size() == 2) return {number(j[0], "re"), number(j[1], "im")};
    fail("complex: expected {\"re\", \"im\"}, [re, im] or a number");
}

Mat2 matrix_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_array() || j[0].size() != 2 || !j[1].is_array() ||
        j[1].size() != 2) {
        fail("matrix: expected [[a, b], [c, d]]");
    }
    return {complex_from_json(j[0][0]), complex_from_json(j[0][1]), complex_from_json(j[1][0]),
            complex_from_json(j[1][1])};
}

AlgebraElement algebra_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("alpha") || !j.contains("beta")) {
        fail("algebra element: expected {\"alpha\": [..], \"beta\": [..]}");
    }
    AlgebraElement x;
    x.alpha = vec3(j["alpha"], "alpha");
    x.beta = vec3(j["beta"], "beta");
    return x;
}

std::vector<AlgebraElement> generators_from_json(const Json& j) {
    const Json* list = &j;
    if (j.is_object()) {
        if (!j.contains("generators")) fail("expected {\"generators\": [...]}");
        list = &j["generators"];
    }
    if (!list->is_array()) fail("generators: expected an array");
    std::vector<AlgebraElement> out;
    for (const Json& e : *list) out.push_back(algebra_from_json(e));
    return out;
}

}  // namespace lorentz
