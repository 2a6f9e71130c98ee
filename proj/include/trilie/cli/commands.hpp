#pragma once

#include <chrono>
#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "trilie/algebra_io.hpp"
#include "trilie/catalog.hpp"
#include "trilie/kernel_cohomology.hpp"
#include "trilie/map_theorems.hpp"
#include "trilie/tensor_extension.hpp"
#include "trilie/torus_weights.hpp"

namespace trilie::cli {

enum ExitCode : int { kOk = 0, kFailed = 1, kParse = 2, kInvalidAlgebra = 3, kInvalidTorus = 4 };

struct Options {
    bool structured = false;
    std::size_t max_exhaustive = 32768;
    std::uint64_t seed = 0;
    std::size_t random_maps = 100;
    std::optional<std::string> torus;  // JSON array of vectors
    std::vector<std::string> which;    // spaces to emit; empty means all
    std::optional<std::string> map;    // JSON array of rows
};

struct Report {
    std::string algebra;
    std::string operation;
    json result = json::object();
    CheckReport checks;
    double elapsed_ms = 0;
    int exit_code = kOk;
};

inline json checks_json(const CheckReport& r) {
    json out = json::array();
    for (const auto& c : r.checks()) {
        out.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}, {"sampled", c.sampled}});
    }
    return out;
}

// Keys come out sorted (json objects are ordered maps).
inline json report_json(const Report& r, bool with_timing = true) {
    json out = {{"algebra", r.algebra},
                {"operation", r.operation},
                {"result", r.result},
                {"checks", checks_json(r.checks)},
                {"passed", r.checks.all_passed()},
                {"exit_code", r.exit_code}};
    if (with_timing) {
        out["elapsed_ms"] = r.elapsed_ms;
    }
    return out;
}

namespace detail {

inline void render_value(std::ostream& os, const json& v, const std::string& indent) {
    if (v.is_object()) {
        for (const auto& [k, x] : v.items()) {
            if (x.is_primitive() || (x.is_array() && (x.empty() || x.front().is_primitive()))) {
                os << indent << k << ": " << (x.is_string() ? x.get<std::string>() : x.dump()) << "\n";
            } else {
                os << indent << k << ":\n";
                render_value(os, x, indent + "  ");
            }
        }
    } else if (v.is_array()) {
        for (std::size_t i = 0; i < v.size(); ++i) {
            const auto& x = v[i];
            if (x.is_primitive() || (x.is_array() && (x.empty() || x.front().is_primitive()))) {
                os << indent << "- " << x.dump() << "\n";
            } else {
                os << indent << "- [" << i << "]\n";
                render_value(os, x, indent + "    ");
            }
        }
    } else {
        os << indent << v.dump() << "\n";
    }
}

} // namespace detail

inline std::string render_text(const Report& r) {
    std::ostringstream os;
    os << r.operation << " " << r.algebra << "\n";
    detail::render_value(os, r.result, "  ");
    for (const auto& c : r.checks.checks()) {
        os << (c.passed ? "  [pass] " : "  [FAIL] ") << c.name;
        if (!c.detail.empty()) {
            os << " (" << c.detail << ")";
        }
        if (c.sampled) {
            os << " [sampled]";
        }
        os << "\n";
    }
    os << (r.checks.all_passed() ? "all checks passed" : std::to_string(r.checks.failures()) + " check(s) failed")
       << "\n";
    return os.str();
}

struct Input {
    std::string id;
    AlgebraDocument document;
};

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot read '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// "catalog:NAME" or a path to an algebra document. Not yet validated.
inline Input read_input(const std::string& source) {
    const std::string prefix = "catalog:";
    if (source.rfind(prefix, 0) == 0) {
        const std::string name = source.substr(prefix.size());
        auto text = catalog::document(name);
        if (!text) {
            throw ParseError("unknown catalog algebra '" + name + "'");
        }
        auto doc = parse_algebra_document(*text);
        if (!doc.torus && name.rfind("abelian(", 0) == 0) {
            doc.torus = catalog::load(name).torus;
        }
        return {source, std::move(doc)};
    }
    auto doc = parse_algebra_document(read_file(source));
    return {doc.name.empty() ? source : doc.name, std::move(doc)};
}

struct Loaded {
    std::string id;
    Algebra algebra;
    std::optional<std::vector<Vector>> torus;
    std::optional<std::vector<std::vector<std::size_t>>> blocks;
};

inline Loaded load_input(const std::string& source) {
    Input in = read_input(source);
    return {in.id, Algebra::validated(std::move(in.document.constants)), in.document.torus, in.document.blocks};
}

inline Matrix parse_matrix_text(const std::string& text, std::size_t n) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed map: ") + e.what());
    }
    if (!j.is_array() || j.size() != n) {
        throw ParseError("map must be an array of " + std::to_string(n) + " rows");
    }
    Matrix m(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        Vector row = parse_vector_json(j[r], n, "map row " + std::to_string(r + 1));
        for (std::size_t c = 0; c < n; ++c) {
            m(r, c) = row[c];
        }
    }
    return m;
}

inline Torus resolve_torus(const Loaded& in, const Options& opt) {
    if (opt.torus) {
        json j;
        try {
            j = json::parse(*opt.torus);
        } catch (const json::parse_error& e) {
            throw ParseError(std::string("malformed torus: ") + e.what());
        }
        return {parse_torus_json(j, in.algebra.dim())};
    }
    if (in.torus) {
        return {*in.torus};
    }
    throw InvalidTorus("no torus given (use --torus or a 'torus' field)");
}

inline json map_space_json(const MapSpace& s) {
    json basis = json::array();
    for (const auto& f : s.maps()) {
        basis.push_back(matrix_json(f));
    }
    return {{"dim", s.dim()}, {"basis", basis}};
}

inline json weights_json(const WeightDecomposition& d, bool maps, std::size_t n) {
    json out = json::array();
    for (const auto& e : d.entries) {
        json basis = json::array();
        for (std::size_t r = 0; r < e.space.dim(); ++r) {
            if (maps) {
                basis.push_back(matrix_json(map_from_coords(n, e.space.basis().row(r))));
            } else {
                basis.push_back(vector_json(e.space.basis_vector(r)));
            }
        }
        out.push_back({{"weight", vector_json(e.weight.values)}, {"dim", e.space.dim()}, {"basis", basis}});
    }
    return out;
}

inline TupleScan scan_of(const Options& opt) { return {opt.max_exhaustive, opt.seed}; }

inline void finish(Report& r) {
    if (r.exit_code == kOk && !r.checks.all_passed()) {
        r.exit_code = kFailed;
    }
}

// ---- commands ----

inline Report cmd_check(const std::string& input, const Options&) {
    Input in = read_input(input);
    Report r{in.id, "check", {}, {}, 0, kOk};
    const auto& sc = in.document.constants;
    auto violations = fundamental_identity_violations(sc, 20);
    json vs = json::array();
    for (const auto& v : violations) {
        json idx = json::array();
        for (auto i : v.indices) {
            idx.push_back(i + 1);
        }
        vs.push_back({{"indices", idx}, {"residual", vector_json(v.residual)}});
    }
    r.result = {{"dim", sc.dim()}, {"stored_brackets", sc.entries().size()}, {"violations", vs}};
    r.checks.add("fundamental identity", violations.empty(),
                 violations.empty() ? "" : std::to_string(violations.size()) + " violating tuple(s) listed");
    if (!violations.empty()) {
        r.exit_code = kInvalidAlgebra;
    }
    return r;
}

inline const std::vector<std::pair<std::string, MapKind>>& space_names() {
    static const std::vector<std::pair<std::string, MapKind>> names{
        {"der", MapKind::Der},           {"ad", MapKind::Inner},  {"zder", MapKind::ZDer},
        {"centroid", MapKind::Centroid}, {"qcentroid", MapKind::QCentroid},
        {"qder", MapKind::QDer},         {"gder", MapKind::GDer}};
    return names;
}

inline Report cmd_spaces(const std::string& input, const Options& opt) {
    Loaded in = load_input(input);
    Report r{in.id, "spaces", {}, {}, 0, kOk};
    std::vector<std::string> which = opt.which;
    if (which.empty()) {
        for (const auto& [name, kind] : space_names()) {
            which.push_back(name);
        }
    }
    for (const auto& w : which) {
        bool known = false;
        for (const auto& [name, kind] : space_names()) {
            known = known || name == w;
        }
        if (!known) {
            throw ParseError("unknown space '" + w + "'");
        }
    }
    SpaceBundle s = compute_spaces(in.algebra);
    json spaces = json::object();
    for (const auto& [name, kind] : space_names()) {
        if (std::find(which.begin(), which.end(), name) != which.end()) {
            spaces[name] = map_space_json(s.get(kind));
        }
    }
    r.result = {{"dim", in.algebra.dim()},
                {"convention", "column j of a map matrix holds the image of basis vector j"},
                {"spaces", spaces}};
    return r;
}

inline void run_extension(const Algebra& a, const MapSpace& pairs, json& result, CheckReport& checks) {
    ExtendedAlgebra e = extend(a);
    ExtensionAnalysis an = analyze_embedding(e, pairs);
    json ext = {{"extension_dim", e.algebra.dim()},
                {"der_extension_dim", an.der_ext.dim()},
                {"embedded_qder_dim", an.image.dim()},
                {"qder_dim", an.qder_dim}};
    checks.merge("extension: ", an.report);
    if (center(a).is_zero()) {
        SemidirectSplit sd = semidirect_check(e, an);
        ext["zder_extension_dim"] = sd.central_dim;
        ext["lie_center_dim"] = sd.lie_center_dim;
        checks.merge("extension: ", sd.report);
    } else {
        ext["semidirect"] = "skipped: nonzero center";
    }
    result["extension"] = ext;
}

inline Report cmd_extend(const std::string& input, const Options&) {
    Loaded in = load_input(input);
    Report r{in.id, "extend", json::object(), {}, 0, kOk};
    run_extension(in.algebra, qder_pairs(in.algebra), r.result, r.checks);
    finish(r);
    return r;
}

inline void run_kernel(const Algebra& a, const SpaceBundle& s, const Options& opt, json& result, CheckReport& checks) {
    auto probes = probe_maps(a.dim(), s.qder.maps(), opt.random_maps, opt.seed);
    KernelAudit audit = kernel_criterion_audit(a, s.qder, probes);
    result["kernel"] = {{"mu_kernel_dim", mu_kernel(a).dim()},
                        {"probes", audit.probes},
                        {"agreements", audit.agreements},
                        {"qder_members", audit.qder_members}};
    checks.add("kernel: kernel criterion agrees with QDer membership", audit.all_agree(),
               audit.all_agree() ? std::to_string(audit.probes) + " maps" : audit.first_disagreement);
    checks.merge("kernel: ", coboundary_checks(a, s.pairs, s.qder, probes, scan_of(opt)));
    checks.merge("kernel: ", complex_checks(a, s.qder.maps(), scan_of(opt)));
}

inline Report cmd_kernel(const std::string& input, const Options& opt) {
    Loaded in = load_input(input);
    Report r{in.id, "kernel", json::object(), {}, 0, kOk};
    SpaceBundle s = compute_spaces(in.algebra);
    if (opt.map) {
        Matrix f = parse_matrix_text(*opt.map, in.algebra.dim());
        bool via = is_qder_via_kernel(in.algebra, f);
        bool member = s.qder.contains(f);
        auto g = trivial_preimage(in.algebra, f);
        r.result["map"] = {{"kernel_criterion", via}, {"in_qder", member}, {"trivial_coboundary", g.has_value()}};
        if (g) {
            r.result["map"]["companion"] = matrix_json(f - *g);
        }
        r.checks.add("kernel: given map, criterion agrees with membership", via == member);
    }
    run_kernel(in.algebra, s, opt, r.result, r.checks);
    finish(r);
    return r;
}

inline void run_weights(const Algebra& a, const Torus& t, const SpaceBundle& s, json& result, CheckReport& checks) {
    WeightAnalysis w = structure_checks(a, t, s);
    json out = {{"roots", weights_json(w.roots, false, a.dim())},
                {"centralizer_dim", w.centralizer.dim()},
                {"fitting_one_dim", fitting_one_part(w.roots).dim()}};
    if (w.qder) {
        out["qder"] = weights_json(*w.qder, true, a.dim());
    }
    if (w.quasicentroid) {
        out["qcentroid"] = weights_json(*w.quasicentroid, true, a.dim());
    }
    result["weights"] = out;
    checks.merge("weights: ", w.report);
}

inline Report cmd_weights(const std::string& input, const Options& opt) {
    Loaded in = load_input(input);
    Torus t = resolve_torus(in, opt);
    TorusValidation v = validate_torus(in.algebra, t);
    Report r{in.id, "weights", json::object(), {}, 0, kOk};
    r.checks.merge("torus: ", v.report);
    if (!v.valid()) {
        r.result["torus_error"] = v.error;
        r.exit_code = kInvalidTorus;
        return r;
    }
    run_weights(in.algebra, t, compute_spaces(in.algebra), r.result, r.checks);
    finish(r);
    return r;
}

inline Report cmd_verify(const std::string& input, const Options& opt) {
    Loaded in = load_input(input);
    const Algebra& a = in.algebra;
    Report r{in.id, "verify", json::object(), {}, 0, kOk};
    SpaceBundle s = compute_spaces(a);
    json dims = json::object();
    for (const auto& [name, kind] : space_names()) {
        dims[name] = s.get(kind).dim();
    }
    dims["qder_pairs"] = s.pairs.dim();
    dims["delta"] = s.delta.dim();
    dims["center"] = center(a).dim();
    dims["derived"] = derived_algebra(a).dim();
    r.result["dims"] = dims;

    r.checks.merge("maps: ", map_space_theorems(a, s));
    r.checks.merge("qc identities: ", quasicentroid_identities(a, s.quasicentroid, 3, 2, opt.seed));
    run_kernel(a, s, opt, r.result, r.checks);
    run_extension(a, s.pairs, r.result, r.checks);

    if (in.blocks) {
        auto blocks = block_subspaces(a.dim(), *in.blocks);
        SumDecomposition sum = check_sum_decomposable(a, blocks);
        r.result["blocks"] = {{"count", blocks.size()},
                              {"qcentroid_dim", sum.quasicentroid.dim()},
                              {"block_sum_dim", sum.block_sum.dim()}};
        r.checks.merge("blocks: ", sum.report);
        if (center(a).is_zero()) {
            r.checks.merge("blocks: ", direct_sum_theorems(a, blocks, s));
        }
    }

    if (opt.torus || in.torus) {
        Torus t = resolve_torus(in, opt);
        TorusValidation v = validate_torus(a, t);
        r.checks.merge("torus: ", v.report);
        if (!v.valid()) {
            r.result["torus_error"] = v.error;
            r.exit_code = kInvalidTorus;
            return r;
        }
        run_weights(a, t, s, r.result, r.checks);
    }
    finish(r);
    return r;
}

inline Report cmd_catalog(const std::optional<std::string>& name, const Options&) {
    Report r{name ? *name : "catalog", "catalog", json::object(), {}, 0, kOk};
    if (!name) {
        r.result["algebras"] = catalog::names();
        return r;
    }
    auto e = catalog::load(*name);
    r.result["document"] = algebra_json(e.algebra, e.name, e.torus, e.blocks);
    return r;
}

// Runs one subcommand, writing the report to out and diagnostics to err.
// Returns the process exit code.
inline int dispatch(const std::string& command, const std::optional<std::string>& input, const Options& opt,
                    std::ostream& out, std::ostream& err) {
    const auto start = std::chrono::steady_clock::now();
    Report r;
    try {
        if (command == "catalog") {
            r = cmd_catalog(input, opt);
        } else {
            if (!input) {
                err << "error: " << command << " needs an input (file or catalog:NAME)\n";
                return kParse;
            }
            if (command == "check") {
                r = cmd_check(*input, opt);
            } else if (command == "spaces") {
                r = cmd_spaces(*input, opt);
            } else if (command == "extend") {
                r = cmd_extend(*input, opt);
            } else if (command == "kernel") {
                r = cmd_kernel(*input, opt);
            } else if (command == "weights") {
                r = cmd_weights(*input, opt);
            } else if (command == "verify") {
                r = cmd_verify(*input, opt);
            } else {
                err << "error: unknown command '" << command << "'\n";
                return kParse;
            }
        }
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kParse;
    } catch (const InvalidAlgebra& e) {
        err << "invalid algebra: " << e.what() << "\n";
        return kInvalidAlgebra;
    } catch (const InvalidTorus& e) {
        err << "invalid torus: " << e.what() << "\n";
        return kInvalidTorus;
    } catch (const DimensionMismatch& e) {
        err << "parse error: " << e.what() << "\n";
        return kParse;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kFailed;
    }
    r.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (opt.structured) {
        out << report_json(r).dump(2) << "\n";
    } else {
        out << render_text(r);
    }
    return r.exit_code;
}

} // namespace trilie::cli
