#pragma once

// Canonical JSON for fans, building sets, weight vectors and reports.

#include "verify.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace nestofan {

using nlohmann::json;

namespace detail {

inline json integer_json(const Integer& x) {
    if (auto small = to_int64(x)) return *small;
    return x.str();
}

inline Integer integer_from_json(const json& j) {
    if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (s.empty() || s.find_first_not_of("-0123456789") != std::string::npos)
            throw InputError("malformed integer '" + s + "'");
        return Integer(s);
    }
    throw InputError("expected an integer, got " + j.dump());
}

inline const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
    return j.at(key);
}

inline const json& array_field(const json& j, const char* key) {
    const json& a = field(j, key);
    if (!a.is_array()) throw InputError(std::string("field '") + key + "' must be an array");
    return a;
}

inline Label label_from_json(const json& j) {
    if (j.is_number_integer()) return Label::simple(j.get<long>());
    if (j.is_string()) return Label::parse(j.get<std::string>());
    throw InputError("malformed label " + j.dump());
}

inline std::size_t index_from_json(const json& j) {
    if (!j.is_number_unsigned()) throw InputError("expected a ray index, got " + j.dump());
    return j.get<std::size_t>();
}

}  // namespace detail

// ---------------------------------------------------------------------- fans

/// Canonical form: rays sorted, cones remapped and sorted; "" marks an
/// unlabeled ray.
inline json fan_to_json(const Fan& f) {
    const Fan c = canonical(f);
    json rays = json::array(), cones = json::array(), labels = json::array();
    for (const auto& r : c.rays()) {
        json v = json::array();
        for (const auto& x : r.coords) v.push_back(detail::integer_json(x));
        rays.push_back(std::move(v));
    }
    for (const auto& cone : c.max_cones()) cones.push_back(cone.rays);
    for (const auto& l : c.labels()) labels.push_back(l ? l->str() : "");
    return {{"rank", c.rank()}, {"rays", rays}, {"max_cones", cones}, {"labels", labels}};
}

inline Fan fan_from_json(const json& j) {
    const json& rank_json = detail::field(j, "rank");
    if (!rank_json.is_number_unsigned()) throw InputError("fan rank must be a nonnegative integer");
    const auto rank = rank_json.get<std::size_t>();
    std::vector<LatticeVector> rays;
    for (const auto& r : detail::array_field(j, "rays")) {
        if (!r.is_array()) throw InputError("ray must be an array");
        std::vector<Integer> coords;
        for (const auto& x : r) coords.push_back(detail::integer_from_json(x));
        rays.emplace_back(std::move(coords));
    }
    std::vector<Cone> cones;
    for (const auto& c : detail::array_field(j, "max_cones")) {
        if (!c.is_array()) throw InputError("cone must be an array of ray indices");
        std::vector<std::size_t> idx;
        for (const auto& x : c) idx.push_back(detail::index_from_json(x));
        cones.emplace_back(std::move(idx));
    }
    std::vector<std::optional<Label>> labels;
    if (j.contains("labels")) {
        for (const auto& l : detail::array_field(j, "labels")) {
            if (l.is_string() && l.get<std::string>().empty())
                labels.emplace_back();
            else
                labels.emplace_back(detail::label_from_json(l));
        }
    }
    return Fan(rank, std::move(rays), std::move(cones), std::move(labels));
}

// ------------------------------------------------------------- building sets

/// Reference fan for an over_polytope ground set: the simplex fan of simple
/// labels, or the d-fold power of the simplex fan for labels (i, j) listed
/// copy by copy.
inline Fan inferred_reference(const std::vector<Label>& ground) {
    if (ground.empty()) throw InputError("over_polytope building set needs a ground set");
    if (std::none_of(ground.begin(), ground.end(), [](const Label& l) { return l.is_pair(); }))
        return simplex_fan(ground);
    std::vector<Label> items;
    for (const auto& l : ground) {
        if (!l.is_pair()) throw InputError("ground set mixes simple and pair labels");
        if (*l.copy == 1) items.push_back(Label::simple(l.item));
    }
    if (items.empty() || ground.size() % items.size() != 0)
        throw InputError("pair labels do not form a product of simplices");
    const long d = static_cast<long>(ground.size() / items.size());
    Fan reference = power(simplex_fan(items), d);
    for (std::size_t k = 0; k < ground.size(); ++k)
        if (reference.labels()[k] != ground[k])
            throw InputError("pair labels must be listed copy by copy: expected " + reference.labels()[k]->str() +
                             " at position " + std::to_string(k));
    return reference;
}

inline json building_set_to_json(const BuildingSet& b) {
    json ground = json::array(), members = json::array();
    for (const auto& l : b.ground()) ground.push_back(l.str());
    for (const auto& m : b.members()) {
        json labels = json::array();
        for (auto k : m) labels.push_back(b.ground()[k].str());
        members.push_back(std::move(labels));
    }
    return {{"ground", ground},
            {"members", members},
            {"mode", b.mode() == BuildingMode::plain ? "plain" : "over_polytope"}};
}

inline BuildingSet building_set_from_json(const json& j) {
    std::vector<Label> ground;
    for (const auto& l : detail::array_field(j, "ground")) ground.push_back(detail::label_from_json(l));
    const json& mode_json = detail::field(j, "mode");
    const std::string mode = mode_json.is_string() ? mode_json.get<std::string>() : "";
    if (mode != "plain" && mode != "over_polytope")
        throw InputError("mode must be \"plain\" or \"over_polytope\"");
    auto position = [&](const Label& l) {
        auto it = std::find(ground.begin(), ground.end(), l);
        if (it == ground.end()) throw InputError("member label " + l.str() + " is not in the ground set");
        return static_cast<std::size_t>(it - ground.begin());
    };
    std::set<Subset> members;
    for (const auto& m : detail::array_field(j, "members")) {
        if (!m.is_array()) throw InputError("member must be an array of labels");
        Subset s;
        for (const auto& l : m) s.push_back(position(detail::label_from_json(l)));
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw InputError("member repeats a label");
        members.insert(std::move(s));
    }
    if (mode == "plain") return BuildingSet(std::move(ground), std::move(members), BuildingMode::plain);
    Fan reference = inferred_reference(ground);
    return BuildingSet(std::move(ground), std::move(members), BuildingMode::over_polytope, std::move(reference));
}

// ------------------------------------------------------------ weight vectors

inline json weight_vector_to_json(const WeightVector& A) {
    json a = json::array();
    for (const auto& x : A.a) a.push_back(format_rational(x));
    return {{"d", A.d}, {"n", A.n}, {"a", a}};
}

inline WeightVector weight_vector_from_json(const json& j) {
    const json& d = detail::field(j, "d");
    const json& n = detail::field(j, "n");
    if (!d.is_number_integer() || !n.is_number_integer()) throw InputError("d and n must be integers");
    std::vector<Rational> a;
    for (const auto& x : detail::array_field(j, "a")) {
        if (x.is_string())
            a.push_back(parse_rational(x.get<std::string>()));
        else if (x.is_number_integer())
            a.push_back(Rational(x.get<long>()));
        else
            throw InputError("weights must be \"p/q\" strings");
    }
    WeightVector A(d.get<long>(), n.get<long>(), std::move(a));
    if (!validate_weight(A)) throw InputError("weights must satisfy w_i <= a_i <= 1");
    return A;
}

// ------------------------------------------------------------------ reports

inline json report_to_json(const Report& r) {
    json checks = json::array();
    for (const auto& c : r.checks)
        checks.push_back(
            {{"name", c.name}, {"pass", c.pass}, {"detail", c.gating ? c.detail : "reported: " + c.detail}});
    return {{"instance", r.instance}, {"checks", checks}};
}

/// Two-space indentation and a trailing newline: the byte form of every
/// file the tools write.
inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace nestofan
