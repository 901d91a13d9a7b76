#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "chainlevel/canonical.hpp"
#include "chainlevel/level.hpp"
#include "chainlevel/poset.hpp"
#include "chainlevel/sequences.hpp"
#include "chainlevel/weights.hpp"

namespace chainlevel {

using json = nlohmann::json;

/// Poset schema: {"elements": ["a", ...], "covers": [["a","b"], ...]}.
/// Redundant cover pairs are accepted and reduced (recorded on the poset).
inline Poset poset_from_json(const json& j, int max_elements = 16) {
    if (!j.is_object() || !j.contains("elements") || !j.contains("covers"))
        throw error("poset json needs \"elements\" and \"covers\"");
    std::vector<std::string> elems = j.at("elements").get<std::vector<std::string>>();
    std::vector<std::pair<std::string, std::string>> covers;
    for (const auto& pair : j.at("covers")) {
        if (!pair.is_array() || pair.size() != 2)
            throw error("cover entries must be [a, b] pairs");
        covers.emplace_back(pair[0].get<std::string>(), pair[1].get<std::string>());
    }
    return Poset::build(elems, covers, max_elements);
}

inline json poset_to_json(const Poset& p) {
    json j;
    j["elements"] = json::array();
    for (int i = 0; i < p.size(); ++i) j["elements"].push_back(p.name(i));
    j["covers"] = json::array();
    for (int a = 0; a < p.size(); ++a)
        for (int b : p.up_covers(a)) j["covers"].push_back({p.name(a), p.name(b)});
    return j;
}

/// Weight map schema: {"deg": 8, "values": {"x": 3, "y": 3}}; every element
/// of the poset must be present.
inline WeightMap weightmap_from_json(const Poset& p, const json& j) {
    if (!j.is_object() || !j.contains("deg") || !j.contains("values"))
        throw error("weight map json needs \"deg\" and \"values\"");
    WeightMap w;
    w.deg = j.at("deg").get<long long>();
    w.values.assign(p.size(), 0);
    std::vector<bool> seen(p.size(), false);
    for (const auto& [key, val] : j.at("values").items()) {
        int idx = p.index(key);
        w.values[idx] = val.get<int>();
        seen[idx] = true;
    }
    for (int i = 0; i < p.size(); ++i)
        if (!seen[i]) throw error("weight map misses element " + p.name(i));
    return w;
}

inline json weightmap_to_json(const Poset& p, const WeightMap& w) {
    json values = json::object();
    for (int i = 0; i < p.size(); ++i) values[p.name(i)] = w.values[i];
    return json{{"deg", w.deg}, {"values", values}};
}

/// Sequence schema: {"ys": ["d"], "xs": ["a1"]}, paired lists.
inline ZigzagSequence sequence_from_json(const Poset& p, const json& j) {
    if (!j.is_object() || !j.contains("ys") || !j.contains("xs"))
        throw error("sequence json needs \"ys\" and \"xs\"");
    ZigzagSequence s;
    for (const auto& v : j.at("ys")) s.ys.push_back(p.index(v.get<std::string>()));
    for (const auto& v : j.at("xs")) s.xs.push_back(p.index(v.get<std::string>()));
    if (s.ys.size() != s.xs.size()) throw error("sequence ys and xs must pair up");
    return s;
}

inline json sequence_to_json(const Poset& p, const ZigzagSequence& s) {
    json ys = json::array(), xs = json::array();
    for (int y : s.ys) ys.push_back(p.name(y));
    for (int x : s.xs) xs.push_back(p.name(x));
    return json{{"ys", ys}, {"xs", xs}};
}

inline json spectrum_to_json(const Poset& p, const DegreeSpectrum& sp) {
    json j;
    j["eps"] = sp.eps;
    j["d0"] = sp.d0;
    j["dmax"] = sp.dmax;
    j["degrees"] = sp.degrees;
    json w = json::object();
    for (const auto& [d, xi] : sp.witnesses) w[std::to_string(d)] = weightmap_to_json(p, xi);
    j["witnesses"] = w;
    j["sentinel_below"] =
        sp.below == SentinelStatus::verified_empty ? "verified-empty" : "skipped-budget";
    j["sentinel_above"] =
        sp.above == SentinelStatus::verified_empty ? "verified-empty" : "skipped-budget";
    return j;
}

inline json level_report_to_json(const Poset& p, const LevelReport& r) {
    json j;
    j["polytope"] = r.polytope == PolytopeKind::chain ? "chain" : "order";
    j["variant"] = r.variant == IdealVariant::canonical ? "canonical" : "anticanonical";
    j["level"] = r.verdict;
    j["d0"] = r.d0;
    j["dmax"] = r.dmax;
    if (r.witness) j["witness"] = sequence_to_json(p, *r.witness);
    return j;
}

} // namespace chainlevel
