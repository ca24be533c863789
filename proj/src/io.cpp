#include "slicekit/io.hpp"

#include <json.hpp>

namespace slicekit {

namespace {

using nlohmann::json;

json rat_to_json(const Rat& v) {
    if (v == 0) return json(0);
    if (v == 1) return json(1);
    return json(rat_to_string(v));
}

Rat rat_from_json(const json& j, const std::string& where) {
    if (j.is_number_integer())
        return Rat(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string()) return rat_from_string(j.get<std::string>());
    if (j.is_number_float())
        throw UsageError(where + ": floats are not allowed; use \"p/q\" strings");
    throw UsageError(where + ": expected an integer or a \"p/q\" string");
}

json parse(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw UsageError("malformed JSON");
    return j;
}

int require_int(const json& j, const std::string& field) {
    if (!j.contains(field) || !j[field].is_number_integer())
        throw UsageError("missing or non-integer field \"" + field + "\"");
    return j[field].get<int>();
}

const json& require_array(const json& j, const std::string& field) {
    if (!j.contains(field) || !j[field].is_array())
        throw UsageError("missing or non-array field \"" + field + "\"");
    return j[field];
}

void require_order(const json& j, const std::string& expected) {
    if (!j.contains("order") || !j["order"].is_string() ||
        j["order"].get<std::string>() != expected)
        throw UsageError("field \"order\" must be \"" + expected + "\"");
}

}  // namespace

std::string slice_function_to_json(const SliceFunction& f) {
    json j;
    j["n"] = f.domain().n();
    j["k"] = f.domain().k();
    j["order"] = "colex";
    json vals = json::array();
    for (const Rat& v : f.values()) vals.push_back(rat_to_json(v));
    j["values"] = std::move(vals);
    return j.dump();
}

SliceFunction slice_function_from_json(const std::string& text) {
    json j = parse(text);
    SliceDomain dom(require_int(j, "n"), require_int(j, "k"));
    require_order(j, "colex");
    const json& vals = require_array(j, "values");
    if (vals.size() != dom.size())
        throw UsageError("\"values\" must hold " + std::to_string(dom.size()) +
                         " entries (colex rank order), got " +
                         std::to_string(vals.size()));
    std::vector<Rat> out;
    out.reserve(vals.size());
    for (std::size_t r = 0; r < vals.size(); ++r)
        out.push_back(rat_from_json(vals[r], "values[" + std::to_string(r) + "]"));
    return SliceFunction(dom, std::move(out));
}

std::string real_slice_function_to_json(const RealSliceFunction& f) {
    json j;
    j["n"] = f.domain.n();
    j["k"] = f.domain.k();
    j["order"] = "colex";
    j["real_values"] = f.values;
    return j.dump();
}

std::string cube_function_to_json(const CubeFunction& g) {
    json j;
    j["m"] = g.m();
    j["order"] = "binary-lsb";
    json vals = json::array();
    for (const Rat& v : g.values()) vals.push_back(rat_to_json(v));
    j["values"] = std::move(vals);
    return j.dump();
}

CubeFunction cube_function_from_json(const std::string& text) {
    json j = parse(text);
    int m = require_int(j, "m");
    require_order(j, "binary-lsb");
    const json& vals = require_array(j, "values");
    std::vector<Rat> out;
    out.reserve(vals.size());
    for (std::size_t i = 0; i < vals.size(); ++i)
        out.push_back(rat_from_json(vals[i], "values[" + std::to_string(i) + "]"));
    return CubeFunction(m, std::move(out));
}

std::string polynomial_to_json(const MultilinearPolynomial& p) {
    json j;
    j["n"] = p.n();
    json terms = json::array();
    for (const auto& [mono, c] : p.terms()) {
        json t;
        t["vars"] = SliceDomain::support(mono);
        t["coeff"] = rat_to_string(c);
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j.dump();
}

MultilinearPolynomial polynomial_from_json(const std::string& text) {
    json j = parse(text);
    int n = require_int(j, "n");
    MultilinearPolynomial p(n);
    const json& terms = require_array(j, "terms");
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const json& t = terms[i];
        const std::string where = "terms[" + std::to_string(i) + "]";
        if (!t.is_object()) throw UsageError(where + ": expected an object");
        if (!t.contains("vars") || !t["vars"].is_array())
            throw UsageError(where + ".vars: expected an array");
        std::vector<int> vars;
        for (const json& v : t["vars"]) {
            if (!v.is_number_integer())
                throw UsageError(where + ".vars: expected integers");
            vars.push_back(v.get<int>());
        }
        if (!t.contains("coeff"))
            throw UsageError(where + ".coeff: missing");
        p.add_term(SliceDomain::mask_from_support(vars, n),
                   rat_from_json(t["coeff"], where + ".coeff"));
    }
    return p;
}

std::string univariate_to_json(const UnivariatePolynomial& p) {
    json j;
    j["degree"] = p.degree();
    json coeffs = json::array();
    for (const Rat& c : p.coeffs()) coeffs.push_back(rat_to_string(c));
    j["coeffs"] = std::move(coeffs);
    return j.dump();
}

}  // namespace slicekit
