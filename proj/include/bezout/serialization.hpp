#pragma once

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "bezout/bezout_matrix.hpp"
#include "bezout/gcd.hpp"
#include "bezout/kernel.hpp"
#include "bezout/poly.hpp"

namespace bezout {

// All emitted documents use insertion-ordered keys so identical inputs
// produce byte-identical output.
using Json = nlohmann::ordered_json;

template <class K>
std::string scalar_to_string(const K& x);

template <>
inline std::string scalar_to_string<Rational>(const Rational& x) {
    return x.str();
}

// Shortest decimal string that round-trips through double.
template <>
inline std::string scalar_to_string<double>(const double& x) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, ptr);
}

template <class K>
K scalar_from_string(const std::string& s);

template <>
inline Rational scalar_from_string<Rational>(const std::string& s) {
    return Rational::parse(s);
}

template <>
inline double scalar_from_string<double>(const std::string& s) {
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec == std::errc() && ptr == s.data() + s.size()) return value;
    return Rational::parse(s).to_double(); // "p/q" form
}

namespace detail {

[[noreturn]] inline void schema_error(const std::string& path, const std::string& what) {
    fail("SchemaViolation", path + ": " + what);
}

inline void require_object_keys(const Json& j, const std::string& path,
                                const std::vector<std::string>& required,
                                const std::vector<std::string>& optional = {}) {
    if (!j.is_object()) schema_error(path, "expected an object");
    for (const auto& key : required)
        if (!j.contains(key)) schema_error(path, "missing key \"" + key + "\"");
    for (const auto& item : j.items()) {
        bool known = false;
        for (const auto& key : required) known = known || key == item.key();
        for (const auto& key : optional) known = known || key == item.key();
        if (!known) schema_error(path, "unexpected key \"" + item.key() + "\"");
    }
}

template <class K>
std::vector<K> scalar_array(const Json& j, const std::string& path) {
    if (!j.is_array() || j.empty()) schema_error(path, "expected a non-empty array of strings");
    std::vector<K> values;
    values.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_string())
            schema_error(path + "/" + std::to_string(i), "expected a rational string");
        values.push_back(scalar_from_string<K>(j[i].get<std::string>()));
    }
    return values;
}

} // namespace detail

template <class K>
Json basis_to_json(const Basis<K>& b) {
    Json j;
    j["kind"] = kind_name(b.kind());
    switch (b.kind()) {
        case BasisKind::Monomial:
        case BasisKind::Bernstein:
            j["degree"] = b.degree();
            break;
        case BasisKind::Lagrange:
        case BasisKind::Hermite: {
            Json nodes = Json::array();
            for (const K& x : b.nodes()) nodes.push_back(scalar_to_string(x));
            j["nodes"] = std::move(nodes);
            if (b.kind() == BasisKind::Hermite) j["confluencies"] = b.confluencies();
            break;
        }
    }
    return j;
}

// Basis object schema: {"kind":"monomial"|"bernstein","degree":d} or
// {"kind":"lagrange","nodes":[...]} or
// {"kind":"hermite","nodes":[...],"confluencies":[...]}. Degree is implied
// by the node/confluency counts and must not be stated for the latter two.
template <class K>
Basis<K> basis_from_json(const Json& j, const std::string& path = "/basis") {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        detail::schema_error(path, "expected an object with a \"kind\" string");
    const std::string kind = j["kind"].get<std::string>();
    try {
        if (kind == "monomial" || kind == "bernstein") {
            detail::require_object_keys(j, path, {"kind", "degree"});
            if (!j["degree"].is_number_unsigned())
                detail::schema_error(path + "/degree", "expected a non-negative integer");
            const auto degree = j["degree"].get<std::size_t>();
            return kind == "monomial" ? Basis<K>::monomial(degree) : Basis<K>::bernstein(degree);
        }
        if (kind == "lagrange") {
            detail::require_object_keys(j, path, {"kind", "nodes"});
            return Basis<K>::lagrange(detail::scalar_array<K>(j["nodes"], path + "/nodes"));
        }
        if (kind == "hermite") {
            detail::require_object_keys(j, path, {"kind", "nodes", "confluencies"});
            if (!j["confluencies"].is_array())
                detail::schema_error(path + "/confluencies", "expected an array of integers");
            std::vector<int> confluencies;
            for (std::size_t i = 0; i < j["confluencies"].size(); ++i) {
                if (!j["confluencies"][i].is_number_integer())
                    detail::schema_error(path + "/confluencies/" + std::to_string(i),
                                         "expected an integer");
                confluencies.push_back(j["confluencies"][i].get<int>());
            }
            return Basis<K>::hermite(detail::scalar_array<K>(j["nodes"], path + "/nodes"),
                                     std::move(confluencies));
        }
    } catch (const Error& e) {
        if (e.code() == "RepeatedNodes" || e.code() == "BadBasis")
            detail::schema_error(path, e.what());
        throw;
    }
    detail::schema_error(path + "/kind", "unknown basis kind \"" + kind + "\"");
}

template <class K>
Json poly_to_json(const Poly<K>& p) {
    Json j;
    j["basis"] = basis_to_json(p.basis);
    Json coeffs = Json::array();
    for (const K& c : p.coeffs) coeffs.push_back(scalar_to_string(c));
    j["coeffs"] = std::move(coeffs);
    return j;
}

template <class K>
Poly<K> poly_from_json(const Json& j, const std::string& path = "") {
    detail::require_object_keys(j, path.empty() ? "/" : path, {"basis", "coeffs"});
    Basis<K> basis = basis_from_json<K>(j["basis"], path + "/basis");
    std::vector<K> coeffs = detail::scalar_array<K>(j["coeffs"], path + "/coeffs");
    if (coeffs.size() != basis.dimension())
        detail::schema_error(path + "/coeffs",
                             "expected " + std::to_string(basis.dimension()) +
                                 " coefficients, got " + std::to_string(coeffs.size()));
    return {std::move(basis), std::move(coeffs)};
}

template <class K>
Poly<K> parse_poly_file(const std::string& file_path) {
    std::ifstream in(file_path);
    if (!in) fail("MalformedJson", "cannot open \"" + file_path + "\"");
    Json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        fail("MalformedJson", file_path + ": " + e.what());
    }
    return poly_from_json<K>(j);
}

template <class K>
Json matrix_to_json(const Matrix<K>& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(scalar_to_string(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

template <class K>
Json bezout_to_json(const BezoutMatrix<K>& b) {
    Json j;
    j["basis"] = basis_to_json(b.basis);
    j["n"] = b.n;
    j["matrix"] = matrix_to_json(b.matrix);
    return j;
}

template <class K>
Json gcd_result_to_json(const GcdResult<K>& r) {
    Json j;
    j["degree"] = r.degree;
    Json coeffs = Json::array();
    for (const K& c : r.monic_coeffs) coeffs.push_back(scalar_to_string(c));
    j["monic_coeffs_high_to_low"] = std::move(coeffs);
    j["method"] = method_name(r.method);
    j["rank"] = r.rank;
    return j;
}

inline Json verdict_to_json(const KernelVerdict& v) {
    Json j;
    j["pass"] = v.pass;
    j["failed_condition"] = v.failed_condition ? Json(*v.failed_condition) : Json(nullptr);
    j["nullity"] = v.nullity;
    return j;
}

} // namespace bezout
