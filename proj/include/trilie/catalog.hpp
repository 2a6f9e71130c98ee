#pragma once

#include <optional>
#include <regex>
#include <string>
#include <string_view>
#include <vector>

#include "trilie/algebra_io.hpp"

namespace trilie::catalog {

// Built-in algebras as reviewable document text. abelian(n) is the only
// parameterized entry; its document is the empty-bracket template below.

// 3-dimensional, [x1, x2, x3] = x1, with T = span{x2, x3}.
inline constexpr std::string_view kA3 = R"doc({
  "name": "A3",
  "dim": 3,
  "labels": ["x1", "x2", "x3"],
  "brackets": [
    {"i": 1, "j": 2, "k": 3, "value": ["1", "0", "0"]}
  ],
  "torus": [["0", "1", "0"], ["0", "0", "1"]]
})doc";

// A3 plus a central x4.
inline constexpr std::string_view kB4 = R"doc({
  "name": "B4",
  "dim": 4,
  "labels": ["x1", "x2", "x3", "x4"],
  "brackets": [
    {"i": 1, "j": 2, "k": 3, "value": ["1", "0", "0", "0"]}
  ]
})doc";

inline constexpr std::string_view kA3PlusA3 = R"doc({
  "name": "A3+A3",
  "dim": 6,
  "labels": ["x1", "x2", "x3", "y1", "y2", "y3"],
  "brackets": [
    {"i": 1, "j": 2, "k": 3, "value": ["1", "0", "0", "0", "0", "0"]},
    {"i": 4, "j": 5, "k": 6, "value": ["0", "0", "0", "1", "0", "0"]}
  ],
  "torus": [["0", "1", "0", "0", "0", "0"], ["0", "0", "1", "0", "0", "0"],
            ["0", "0", "0", "0", "1", "0"], ["0", "0", "0", "0", "0", "1"]],
  "blocks": [[1, 2, 3], [4, 5, 6]]
})doc";

inline constexpr std::string_view kA3PlusAbelian1 = R"doc({
  "name": "A3+abelian(1)",
  "dim": 4,
  "labels": ["x1", "x2", "x3", "z"],
  "brackets": [
    {"i": 1, "j": 2, "k": 3, "value": ["1", "0", "0", "0"]}
  ],
  "torus": [["0", "1", "0", "0"], ["0", "0", "1", "0"], ["0", "0", "0", "1"]],
  "blocks": [[1, 2, 3], [4]]
})doc";

inline constexpr std::string_view kAbelianTemplate = R"doc({"name": "abelian(@N@)", "dim": @N@, "brackets": []})doc";

inline std::vector<std::string> names() {
    return {"abelian(1)", "abelian(2)", "abelian(3)", "abelian(4)", "A3", "B4", "A3+A3", "A3+abelian(1)"};
}

// Document text for a catalog name, or nullopt when unknown.
inline std::optional<std::string> document(const std::string& name) {
    if (name == "A3") {
        return std::string(kA3);
    }
    if (name == "B4") {
        return std::string(kB4);
    }
    if (name == "A3+A3") {
        return std::string(kA3PlusA3);
    }
    if (name == "A3+abelian(1)") {
        return std::string(kA3PlusAbelian1);
    }
    static const std::regex abelian_re(R"(abelian\((\d{1,2})\))");
    std::smatch m;
    if (std::regex_match(name, m, abelian_re)) {
        std::string text(kAbelianTemplate);
        for (auto pos = text.find("@N@"); pos != std::string::npos; pos = text.find("@N@")) {
            text.replace(pos, 3, m[1].str());
        }
        return text;
    }
    return std::nullopt;
}

struct Entry {
    std::string name;
    Algebra algebra;
    std::optional<std::vector<Vector>> torus;
    std::optional<std::vector<std::vector<std::size_t>>> blocks;
};

inline Entry load(const std::string& name) {
    auto text = document(name);
    if (!text) {
        throw ParseError("unknown catalog algebra '" + name + "'");
    }
    AlgebraDocument doc = parse_algebra_document(*text);
    std::optional<std::vector<Vector>> torus = doc.torus;
    // abelian(n): the whole space is a torus.
    if (!torus && name.rfind("abelian(", 0) == 0) {
        std::vector<Vector> gens;
        for (std::size_t i = 0; i < doc.constants.dim(); ++i) {
            gens.push_back(unit_vector(doc.constants.dim(), i));
        }
        torus = gens;
    }
    return {name, Algebra::validated(std::move(doc.constants)), torus, doc.blocks};
}

inline Algebra A3() { return load("A3").algebra; }
inline Algebra B4() { return load("B4").algebra; }
inline Algebra A3_plus_A3() { return load("A3+A3").algebra; }
inline Algebra A3_plus_abelian1() { return load("A3+abelian(1)").algebra; }

} // namespace trilie::catalog
