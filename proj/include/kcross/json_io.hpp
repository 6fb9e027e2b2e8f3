#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "kcross/bijections.hpp"
#include "kcross/chains.hpp"
#include "kcross/enumerate.hpp"
#include "kcross/filling.hpp"
#include "kcross/partition.hpp"

// Wire formats. Objects serialize with alphabetically ordered keys (the
// default nlohmann map), so every dump is byte-reproducible.

namespace kcross {

using json = nlohmann::json;

// ---- partitions -----------------------------------------------------------

inline json to_json(const SetPartition& p) {
    return json{{"convention", to_string(p.convention)},
                {"n", p.n},
                {"blocks", p.blocks}};
}

inline SetPartition partition_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("blocks"))
        throw validation_error("partition json: expected {\"convention\",\"n\",\"blocks\"}");
    std::string conv = j.value("convention", "one");
    if (conv != "zero" && conv != "one")
        throw validation_error("partition json: convention must be \"zero\" or \"one\"");
    if (!j["n"].is_number_integer() || !j["blocks"].is_array())
        throw validation_error("partition json: malformed fields");
    std::vector<std::vector<int>> blocks;
    for (const auto& b : j["blocks"]) {
        if (!b.is_array()) throw validation_error("partition json: block is not an array");
        blocks.push_back(b.get<std::vector<int>>());
    }
    return make_partition(j["n"].get<int>(), std::move(blocks),
                          conv == "zero" ? Indexing::zero_based : Indexing::one_based);
}

// ---- arc sets and witnesses -----------------------------------------------

inline json to_json(const ArcSet& a) {
    json arcs = json::array();
    for (const Arc& arc : a.arcs) arcs.push_back(json::array({arc.left, arc.right}));
    return json{{"n", a.n}, {"arcs", arcs}};
}

inline json to_json(const CrossingWitness& w) {
    json arcs = json::array();
    for (const Arc& arc : w.arcs) arcs.push_back(json::array({arc.left, arc.right}));
    return json{{"mode", w.mode == ChainMode::crossing ? "crossing" : "nesting"},
                {"kind", w.weak ? "weak" : "strict"},
                {"arcs", arcs}};
}

// ---- fillings and compositions --------------------------------------------

inline json to_json(const TriangularFilling& f) {
    json ones = json::array();
    for (const Cell& c : f.ones) ones.push_back(json::array({c.row, c.col}));
    return json{{"order", f.order}, {"ones", ones}};
}

inline TriangularFilling filling_from_json(const json& j) {
    if (!j.is_object() || !j.contains("order") || !j.contains("ones"))
        throw validation_error("filling json: expected {\"order\",\"ones\"}");
    if (!j["order"].is_number_integer() || !j["ones"].is_array())
        throw validation_error("filling json: malformed fields");
    std::vector<Cell> ones;
    for (const auto& c : j["ones"]) {
        if (!c.is_array() || c.size() != 2)
            throw validation_error("filling json: a one must be a [row,col] pair");
        ones.push_back(Cell{c[0].get<int>(), c[1].get<int>()});
    }
    return make_filling(j["order"].get<int>(), std::move(ones));
}

inline json to_json(const Composition& c) { return json(c.parts); }

inline Composition composition_from_json(const json& j) {
    if (!j.is_array()) throw validation_error("composition json: expected an integer array");
    std::vector<int> parts = j.get<std::vector<int>>();
    int sum = 0;
    for (int p : parts) sum += p;
    return make_composition(std::move(parts), sum);
}

// ---- matching pairs ---------------------------------------------------------

inline json to_json(const MatchingPair& p) {
    return json{{"n", p.n}, {"A", p.A}, {"mu", p.mu}};
}

inline MatchingPair matching_pair_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("mu"))
        throw validation_error("matching pair json: expected {\"n\",\"A\",\"mu\"}");
    std::vector<std::vector<int>> mu;
    for (const auto& b : j["mu"]) mu.push_back(b.get<std::vector<int>>());
    return make_matching_pair(j["n"].get<int>(), std::move(mu));
}

// ---- polynomials and reports ------------------------------------------------

inline json to_json(const Polynomial& p) {
    json coeffs = json::array();
    for (const BigNat& c : p.coeffs()) coeffs.push_back(c.to_decimal());
    return json{{"coeffs", coeffs}};
}

inline Polynomial polynomial_from_json(const json& j) {
    if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array())
        throw validation_error("polynomial json: expected {\"coeffs\":[...strings]}");
    std::vector<BigNat> coeffs;
    for (const auto& c : j["coeffs"]) {
        if (c.is_string())
            coeffs.push_back(BigNat::from_decimal(c.get<std::string>()));
        else if (c.is_number_unsigned() || c.is_number_integer())
            coeffs.push_back(BigNat(c.get<std::uint64_t>()));
        else
            throw validation_error("polynomial json: coefficient must be a string");
    }
    return Polynomial(std::move(coeffs));
}

// Timing is deliberately left out: command output must be reproducible.
inline json to_json(const IdentityReport& r) {
    json j{{"identity", r.identity},
           {"n", r.n},
           {"lhs", to_json(r.lhs)},
           {"rhs", to_json(r.rhs)},
           {"equal", r.equal}};
    j["k"] = r.k >= 0 ? json(r.k) : json(nullptr);
    j["mismatch"] = r.first_mismatch ? json(*r.first_mismatch) : json(nullptr);
    if (!r.notes.empty()) j["notes"] = r.notes;
    return j;
}

// ---- step traces -------------------------------------------------------------

inline json to_json(const Step& s) {
    json selected = json::array();
    for (const Arc& arc : s.selected) selected.push_back(json::array({arc.left, arc.right}));
    json j{{"step", to_string(s.kind)},
           {"selected", selected},
           {"before", to_json(s.before)},
           {"after", to_json(s.after)}};
    j["node"] = s.node >= 0 ? json(s.node) : json(nullptr);
    return j;
}

inline json parse_json(const std::string& text) {
    json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded()) throw validation_error("input is not valid JSON");
    return j;
}

}  // namespace kcross
