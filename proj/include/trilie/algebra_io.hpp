#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "trilie/algebra.hpp"

namespace trilie {

using json = nlohmann::json;

// Parsed algebra document before validation of the fundamental identity.
struct AlgebraDocument {
    std::string name;
    StructureConstants constants;
    std::optional<std::vector<Vector>> torus;
    std::optional<std::vector<std::vector<std::size_t>>> blocks;  // 0-based basis indices
};

// Coordinate blocks as subspaces of F^n.
inline std::vector<Subspace> block_subspaces(std::size_t n, const std::vector<std::vector<std::size_t>>& blocks) {
    std::vector<Subspace> out;
    for (const auto& b : blocks) {
        std::vector<Vector> vs;
        for (auto i : b) {
            vs.push_back(unit_vector(n, i));
        }
        out.push_back(Subspace::span(n, vs));
    }
    return out;
}

inline Scalar parse_scalar_json(const json& v) {
    if (v.is_string()) {
        return parse_rational(v.get<std::string>());
    }
    if (v.is_number_integer()) {
        return Scalar(v.get<long>());
    }
    throw ParseError("rational entries must be strings like \"-3/2\" or integers");
}

inline Vector parse_vector_json(const json& v, std::size_t n, const std::string& what) {
    if (!v.is_array() || v.size() != n) {
        throw ParseError(what + " must be an array of " + std::to_string(n) + " rationals");
    }
    Vector out(n);
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = parse_scalar_json(v[i]);
    }
    return out;
}

inline json vector_json(const Vector& v) {
    json arr = json::array();
    for (const auto& x : v) {
        arr.push_back(format_rational(x));
    }
    return arr;
}

inline json matrix_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        rows.push_back(vector_json(m.row_vector(r)));
    }
    return rows;
}

// Torus as a JSON array of coordinate arrays.
inline std::vector<Vector> parse_torus_json(const json& t, std::size_t n) {
    if (!t.is_array()) {
        throw ParseError("torus must be an array of vectors");
    }
    std::vector<Vector> gens;
    for (std::size_t g = 0; g < t.size(); ++g) {
        gens.push_back(parse_vector_json(t[g], n, "torus generator " + std::to_string(g + 1)));
    }
    return gens;
}

// Blocks: arrays of 1-based basis indices that partition 1..n.
inline std::vector<std::vector<std::size_t>> parse_blocks_json(const json& b, std::size_t n) {
    if (!b.is_array()) {
        throw ParseError("blocks must be an array of index arrays");
    }
    std::vector<std::vector<std::size_t>> out;
    std::vector<bool> used(n, false);
    for (const auto& blk : b) {
        if (!blk.is_array() || blk.empty()) {
            throw ParseError("each block must be a non-empty array of indices");
        }
        std::vector<std::size_t> idx;
        for (const auto& i : blk) {
            if (!i.is_number_integer() || i.get<long>() < 1 || i.get<long>() > static_cast<long>(n)) {
                throw ParseError("block indices must be integers in 1..dim");
            }
            auto k = static_cast<std::size_t>(i.get<long>() - 1);
            if (used[k]) {
                throw ParseError("basis index " + std::to_string(k + 1) + " appears in two blocks");
            }
            used[k] = true;
            idx.push_back(k);
        }
        out.push_back(std::move(idx));
    }
    if (std::find(used.begin(), used.end(), false) != used.end()) {
        throw ParseError("blocks must cover every basis index");
    }
    return out;
}

// Reads {dim, labels?, brackets: [{i, j, k, value}], torus?, blocks?} with 1-based i<j<k.
inline AlgebraDocument parse_algebra_document(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed document: ") + e.what());
    }
    if (!doc.is_object()) {
        throw ParseError("document must be an object");
    }
    if (!doc.contains("dim") || !doc["dim"].is_number_integer() || doc["dim"].get<long>() < 0) {
        throw ParseError("field 'dim' must be a non-negative integer");
    }
    const auto n = static_cast<std::size_t>(doc["dim"].get<long>());
    std::vector<std::string> labels;
    if (doc.contains("labels")) {
        const auto& l = doc["labels"];
        if (!l.is_array() || l.size() != n) {
            throw ParseError("field 'labels' must be an array of " + std::to_string(n) + " strings");
        }
        for (const auto& s : l) {
            if (!s.is_string()) {
                throw ParseError("labels must be strings");
            }
            labels.push_back(s.get<std::string>());
        }
    }
    AlgebraDocument out;
    out.name = doc.contains("name") && doc["name"].is_string() ? doc["name"].get<std::string>() : "";
    out.constants = StructureConstants(n, labels);
    const json brackets = doc.contains("brackets") ? doc["brackets"] : json::array();
    if (!brackets.is_array()) {
        throw ParseError("field 'brackets' must be an array");
    }
    std::set<Triple> seen;
    for (const auto& e : brackets) {
        if (!e.is_object()) {
            throw ParseError("bracket entries must be objects");
        }
        std::array<long, 3> idx{};
        const char* keys[3] = {"i", "j", "k"};
        for (int t = 0; t < 3; ++t) {
            if (!e.contains(keys[t]) || !e[keys[t]].is_number_integer()) {
                throw ParseError(std::string("bracket entry needs integer field '") + keys[t] + "'");
            }
            idx[t] = e[keys[t]].get<long>();
        }
        if (idx[0] < 1 || idx[2] > static_cast<long>(n) || !(idx[0] < idx[1] && idx[1] < idx[2])) {
            throw ParseError("bracket indices must satisfy 1 <= i < j < k <= dim");
        }
        Triple t{static_cast<std::size_t>(idx[0] - 1), static_cast<std::size_t>(idx[1] - 1),
                 static_cast<std::size_t>(idx[2] - 1)};
        if (!seen.insert(t).second) {
            throw ParseError("duplicate bracket entry (" + std::to_string(idx[0]) + "," +
                             std::to_string(idx[1]) + "," + std::to_string(idx[2]) + ")");
        }
        if (!e.contains("value")) {
            throw ParseError("bracket entry needs field 'value'");
        }
        out.constants.set(t[0], t[1], t[2], parse_vector_json(e["value"], n, "bracket value"));
    }
    if (doc.contains("torus")) {
        out.torus = parse_torus_json(doc["torus"], n);
    }
    if (doc.contains("blocks")) {
        out.blocks = parse_blocks_json(doc["blocks"], n);
    }
    return out;
}

inline json algebra_json(const Algebra& a, const std::string& name = {},
                         const std::optional<std::vector<Vector>>& torus = std::nullopt,
                         const std::optional<std::vector<std::vector<std::size_t>>>& blocks = std::nullopt) {
    json doc;
    if (!name.empty()) {
        doc["name"] = name;
    }
    doc["dim"] = a.dim();
    if (!a.labels().empty()) {
        doc["labels"] = a.labels();
    }
    json br = json::array();
    for (const auto& [t, c] : a.constants().entries()) {
        br.push_back({{"i", t[0] + 1}, {"j", t[1] + 1}, {"k", t[2] + 1}, {"value", vector_json(c)}});
    }
    doc["brackets"] = br;
    if (torus) {
        json tj = json::array();
        for (const auto& g : *torus) {
            tj.push_back(vector_json(g));
        }
        doc["torus"] = tj;
    }
    if (blocks) {
        json bj = json::array();
        for (const auto& b : *blocks) {
            json one = json::array();
            for (auto i : b) {
                one.push_back(i + 1);
            }
            bj.push_back(one);
        }
        doc["blocks"] = bj;
    }
    return doc;
}

} // namespace trilie
