#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "frobsesh/errors.hpp"
#include "frobsesh/numeric.hpp"
#include "frobsesh/toric.hpp"

namespace frobsesh {

/// Parsed input file: fan + divisor + prime, with optional knobs.
/// Schema: {"dim": n, "rays": [[..]], "max_cones": [[..]], "divisor": [..],
///          "p": prime, "cone": idx?, "m_max": N?, "e_cap": N?, "seed": S?}
struct InputSpec {
    int dim = 0;
    std::vector<LatticeVector> rays;
    std::vector<std::vector<int>> max_cones;
    std::vector<Int> divisor;
    std::uint64_t p = 2;
    std::optional<Int> m_max;
    std::optional<int> e_cap;
    std::optional<int> cone;
    std::optional<std::uint64_t> seed;

    friend bool operator==(const InputSpec&, const InputSpec&) = default;
};

namespace detail {

inline const nlohmann::json& require_field(const nlohmann::json& j, const char* name) {
    const auto it = j.find(name);
    if (it == j.end()) throw SchemaError(std::string("missing field '") + name + "'");
    return *it;
}

inline long long require_int(const nlohmann::json& j, const std::string& where) {
    if (!j.is_number_integer())
        throw SchemaError("field '" + where + "': expected an integer, got " + j.dump());
    return j.get<long long>();
}

inline std::vector<long long> require_int_array(const nlohmann::json& j,
                                                const std::string& where) {
    if (!j.is_array()) throw SchemaError("field '" + where + "': expected an array");
    std::vector<long long> out;
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(require_int(j[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

} // namespace detail

inline InputSpec parse_input(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& ex) {
        throw ParseError(ex.what());
    }
    if (!j.is_object()) throw SchemaError("input must be a JSON object");

    InputSpec spec;
    const long long dim = detail::require_int(detail::require_field(j, "dim"), "dim");
    if (dim < 1 || dim > 16) throw SchemaError("field 'dim': must be in 1..16");
    spec.dim = static_cast<int>(dim);

    const auto& rays = detail::require_field(j, "rays");
    if (!rays.is_array() || rays.empty()) throw SchemaError("field 'rays': expected a nonempty array");
    for (std::size_t i = 0; i < rays.size(); ++i) {
        const auto coords = detail::require_int_array(rays[i], "rays[" + std::to_string(i) + "]");
        if (static_cast<long long>(coords.size()) != dim)
            throw SchemaError("rays[" + std::to_string(i) + "]: expected " + std::to_string(dim) +
                              " coordinates");
        LatticeVector v;
        for (long long c : coords) v.push_back(Int(c));
        spec.rays.push_back(std::move(v));
    }

    const auto& cones = detail::require_field(j, "max_cones");
    if (!cones.is_array() || cones.empty())
        throw SchemaError("field 'max_cones': expected a nonempty array");
    for (std::size_t i = 0; i < cones.size(); ++i) {
        const auto idx = detail::require_int_array(cones[i], "max_cones[" + std::to_string(i) + "]");
        std::vector<int> cone;
        for (long long c : idx) {
            if (c < 0 || c >= static_cast<long long>(spec.rays.size()))
                throw SchemaError("max_cones[" + std::to_string(i) + "]: ray index out of range");
            cone.push_back(static_cast<int>(c));
        }
        spec.max_cones.push_back(std::move(cone));
    }

    const auto coeffs = detail::require_int_array(detail::require_field(j, "divisor"), "divisor");
    if (coeffs.size() != spec.rays.size())
        throw SchemaError("field 'divisor': expected one coefficient per ray (" +
                          std::to_string(spec.rays.size()) + ")");
    for (long long c : coeffs) spec.divisor.push_back(Int(c));

    const long long p = detail::require_int(detail::require_field(j, "p"), "p");
    if (p < 2 || !is_prime(static_cast<std::uint64_t>(p)))
        throw SchemaError("p must be prime, got " + std::to_string(p));
    spec.p = static_cast<std::uint64_t>(p);

    if (j.count("m_max")) {
        const long long m = detail::require_int(j["m_max"], "m_max");
        if (m < 1) throw SchemaError("field 'm_max': must be >= 1");
        spec.m_max = Int(m);
    }
    if (j.count("e_cap")) {
        const long long e = detail::require_int(j["e_cap"], "e_cap");
        if (e < 0 || e > 30) throw SchemaError("field 'e_cap': must be in 0..30");
        spec.e_cap = static_cast<int>(e);
    }
    if (j.count("cone")) {
        const long long c = detail::require_int(j["cone"], "cone");
        if (c < 0 || c >= static_cast<long long>(spec.max_cones.size()))
            throw SchemaError("field 'cone': maximal cone index out of range");
        spec.cone = static_cast<int>(c);
    }
    if (j.count("seed")) {
        const long long s = detail::require_int(j["seed"], "seed");
        if (s < 0) throw SchemaError("field 'seed': must be >= 0");
        spec.seed = static_cast<std::uint64_t>(s);
    }

    // Structural fan validation happens before any computation.
    Fan fan;
    fan.dim = spec.dim;
    fan.rays = spec.rays;
    fan.max_cones = spec.max_cones;
    try {
        const FanDiagnostics diag = validate_fan(fan);
        if (!diag.ok()) {
            std::string msg = "fan is not smooth+complete:";
            for (const auto& item : diag.offending) msg += " " + item + ";";
            throw FanInvalid(msg);
        }
    } catch (const MalformedFan& ex) {
        throw FanInvalid(ex.what());
    }
    return spec;
}

inline Fan fan_of(const InputSpec& spec) {
    Fan fan;
    fan.dim = spec.dim;
    fan.rays = spec.rays;
    fan.max_cones = spec.max_cones;
    return fan;
}

inline ToricDivisor divisor_of(const InputSpec& spec, const Fan& fan) {
    return make_divisor(fan, spec.divisor);
}

inline std::string emit_input(const InputSpec& spec) {
    nlohmann::json j;
    j["dim"] = spec.dim;
    nlohmann::json rays = nlohmann::json::array();
    for (const auto& ray : spec.rays) {
        nlohmann::json r = nlohmann::json::array();
        for (const Int& c : ray) r.push_back(c.convert_to<long long>());
        rays.push_back(std::move(r));
    }
    j["rays"] = std::move(rays);
    j["max_cones"] = spec.max_cones;
    nlohmann::json coeffs = nlohmann::json::array();
    for (const Int& c : spec.divisor) coeffs.push_back(c.convert_to<long long>());
    j["divisor"] = std::move(coeffs);
    j["p"] = spec.p;
    if (spec.m_max) j["m_max"] = spec.m_max->convert_to<long long>();
    if (spec.e_cap) j["e_cap"] = *spec.e_cap;
    if (spec.cone) j["cone"] = *spec.cone;
    if (spec.seed) j["seed"] = *spec.seed;
    return j.dump(2);
}

} // namespace frobsesh
