#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "trilie/eigen.hpp"
#include "trilie/map_spaces.hpp"
#include "trilie/report.hpp"

namespace trilie {

struct Torus {
    std::vector<Vector> generators;

    std::size_t size() const { return generators.size(); }

    Subspace span(std::size_t n) const { return Subspace::span(n, generators); }
};

// Ordered generator pairs (i, j), i < j, lexicographic.
inline std::vector<std::pair<std::size_t, std::size_t>> generator_pairs(std::size_t m) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            out.emplace_back(i, j);
        }
    }
    return out;
}

// An alternating bilinear form on T, stored by its values on generator pairs.
struct WeightFunctional {
    std::vector<Scalar> values;

    bool is_zero() const {
        for (const auto& v : values) {
            if (sgn(v) != 0) {
                return false;
            }
        }
        return true;
    }

    // u, v are coordinates with respect to the generators.
    Scalar eval(const Vector& u, const Vector& v) const {
        const std::size_t m = u.size();
        Scalar s = 0;
        std::size_t idx = 0;
        for (const auto& [i, j] : generator_pairs(m)) {
            s += (u[i] * v[j] - u[j] * v[i]) * values[idx++];
        }
        return s;
    }

    friend WeightFunctional operator+(const WeightFunctional& a, const WeightFunctional& b) {
        return {add(a.values, b.values)};
    }
    friend WeightFunctional operator-(const WeightFunctional& a) { return {scale(Scalar(-1), a.values)}; }
    friend bool operator==(const WeightFunctional& a, const WeightFunctional& b) { return a.values == b.values; }
    friend bool operator<(const WeightFunctional& a, const WeightFunctional& b) { return a.values < b.values; }
};

inline WeightFunctional zero_weight(std::size_t generators) {
    return {Vector(generators * (generators == 0 ? 0 : generators - 1) / 2)};
}

inline std::string to_string(const WeightFunctional& w) {
    std::string s = "(";
    for (std::size_t i = 0; i < w.values.size(); ++i) {
        s += (i ? "," : "") + format_rational(w.values[i]);
    }
    return s + ")";
}

struct WeightSpace {
    WeightFunctional weight;
    Subspace space;
};

enum class WeightAmbient { Algebra, Maps };

// Entries sorted by weight; the zero weight is always present.
struct WeightDecomposition {
    WeightAmbient ambient = WeightAmbient::Algebra;
    std::size_t generators = 0;
    std::size_t ambient_dim = 0;
    std::vector<WeightSpace> entries;

    const WeightSpace* find(const WeightFunctional& w) const {
        for (const auto& e : entries) {
            if (e.weight == w) {
                return &e;
            }
        }
        return nullptr;
    }

    Subspace of(const WeightFunctional& w) const {
        const auto* e = find(w);
        return e ? e->space : Subspace(ambient_dim);
    }

    Subspace zero_part() const { return of(zero_weight(generators)); }

    // Sum of all nonzero-weight spaces.
    Subspace nonzero_part() const {
        std::vector<Subspace> parts;
        for (const auto& e : entries) {
            if (!e.weight.is_zero()) {
                parts.push_back(e.space);
            }
        }
        return subspace_sum(parts, ambient_dim);
    }

    std::vector<WeightFunctional> nonzero_weights() const {
        std::vector<WeightFunctional> out;
        for (const auto& e : entries) {
            if (!e.weight.is_zero()) {
                out.push_back(e.weight);
            }
        }
        return out;
    }
};

// ad(t_i, t_j) for every generator pair.
inline std::vector<LinearMap> torus_operators(const Algebra& a, const Torus& t) {
    std::vector<LinearMap> ops;
    for (const auto& [i, j] : generator_pairs(t.size())) {
        ops.push_back(ad_map(a, t.generators[i], t.generators[j]));
    }
    return ops;
}

namespace detail {

inline WeightDecomposition to_decomposition(std::vector<JointEigenspace> parts, WeightAmbient ambient,
                                            std::size_t generators, std::size_t ambient_dim) {
    WeightDecomposition d{ambient, generators, ambient_dim, {}};
    for (auto& p : parts) {
        d.entries.push_back({{std::move(p.eigenvalues)}, std::move(p.space)});
    }
    if (!d.find(zero_weight(generators))) {
        d.entries.push_back({zero_weight(generators), Subspace(ambient_dim)});
    }
    std::sort(d.entries.begin(), d.entries.end(),
              [](const WeightSpace& x, const WeightSpace& y) { return x.weight < y.weight; });
    return d;
}

} // namespace detail

struct TorusValidation {
    CheckReport report;
    std::string error;  // first failed invariant, empty when valid

    bool valid() const { return error.empty(); }
};

inline TorusValidation validate_torus(const Algebra& a, const Torus& t) {
    const std::size_t n = a.dim();
    TorusValidation v;
    auto fail = [&](const std::string& tag) {
        if (v.error.empty()) {
            v.error = tag;
        }
    };
    for (const auto& g : t.generators) {
        if (g.size() != n) {
            v.report.add("generators have the algebra dimension", false, "generator of length " + std::to_string(g.size()));
            fail("DimensionMismatch");
            return v;
        }
    }
    Subspace span = t.span(n);
    bool indep = span.dim() == t.size();
    v.report.add("generators linearly independent", indep,
                 std::to_string(t.size()) + " generators span dimension " + std::to_string(span.dim()));
    if (!indep) {
        fail("NotIndependent");
        return v;
    }
    bool abelian = is_abelian_subspace(a, span);
    v.report.add("abelian subalgebra", abelian);
    if (!abelian) {
        fail("NotAbelian");
    }
    auto ops = torus_operators(a, t);
    bool commute = true;
    std::string witness;
    for (std::size_t i = 0; i < ops.size() && commute; ++i) {
        for (std::size_t j = i + 1; j < ops.size() && commute; ++j) {
            if (!(ops[i] * ops[j] == ops[j] * ops[i])) {
                commute = false;
                witness = "operators " + std::to_string(i + 1) + " and " + std::to_string(j + 1);
            }
        }
    }
    v.report.add("operators commute", commute, witness);
    if (!commute) {
        fail("NotCommuting");
        return v;
    }
    std::vector<JointEigenspace> parts;
    try {
        parts = simultaneous_eigenspaces(ops, n);
        v.report.add("operators diagonalizable with rational spectra", true);
    } catch (const Error& e) {
        v.report.add("operators diagonalizable with rational spectra", false, e.what());
        fail("NonDiagonalizable");
        return v;
    }
    auto d = detail::to_decomposition(std::move(parts), WeightAmbient::Algebra, t.size(), n);
    Subspace zero = d.zero_part();
    bool equal = zero == span;
    v.report.add("zero weight space equals the torus", equal,
                 "zero weight space has dimension " + std::to_string(zero.dim()) + ", torus " +
                     std::to_string(span.dim()));
    if (!equal) {
        fail("ZeroWeightSpaceExceedsTorus");
    }
    return v;
}

inline void require_valid_torus(const Algebra& a, const Torus& t) {
    auto v = validate_torus(a, t);
    if (!v.valid()) {
        std::string detail;
        for (const auto& c : v.report.checks()) {
            if (!c.passed) {
                detail = c.name + (c.detail.empty() ? "" : ": " + c.detail);
                break;
            }
        }
        throw InvalidTorus(v.error + " (" + detail + ")");
    }
}

inline WeightDecomposition root_decomposition(const Algebra& a, const Torus& t) {
    require_valid_torus(a, t);
    return detail::to_decomposition(simultaneous_eigenspaces(torus_operators(a, t), a.dim()),
                                    WeightAmbient::Algebra, t.size(), a.dim());
}

// (x, y)f = ad(x, y) f - f ad(x, y)
inline LinearMap hom_action(const Algebra& a, const Vector& x, const Vector& y, const LinearMap& f) {
    LinearMap ad = ad_map(a, x, y);
    return ad * f - f * ad;
}

// f -> ad f - f ad as an operator on map coordinates (row-major).
inline Matrix hom_action_operator(const LinearMap& ad) {
    const std::size_t n = ad.rows();
    Matrix op(n * n, n * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            for (std::size_t k = 0; k < n; ++k) {
                op(r * n + c, k * n + c) += ad(r, k);
                op(r * n + c, r * n + k) -= ad(k, c);
            }
        }
    }
    return op;
}

// Restrictions of every d(t_i, t_j) to a map space, in its stored basis.
inline std::vector<Matrix> restricted_actions(const Algebra& a, const Torus& t, const MapSpace& space) {
    if (space.ambient() != MapAmbient::Hom) {
        throw AmbientMismatch("weight decomposition needs a space of single maps");
    }
    std::vector<Matrix> out;
    for (const auto& ad : torus_operators(a, t)) {
        out.push_back(restrict_to(hom_action_operator(ad), space.space));
    }
    return out;
}

inline WeightDecomposition weight_decomposition_of(const MapSpace& space, const Algebra& a, const Torus& t) {
    require_valid_torus(a, t);
    auto ops = restricted_actions(a, t, space);
    auto parts = simultaneous_eigenspaces(ops, space.dim());
    for (auto& p : parts) {
        p.space = lift(p.space, space.space);
    }
    return detail::to_decomposition(std::move(parts), WeightAmbient::Maps, t.size(), space.space.ambient_dim());
}

// For each operator: rational spectrum, and generalized eigenspaces equal to
// eigenspaces. A failure names the operator and eigenvalue.
inline Check diagonal_action_check(const std::string& name, const std::vector<Matrix>& ops) {
    Tally tally;
    for (std::size_t i = 0; i < ops.size(); ++i) {
        auto roots = rational_roots(characteristic_polynomial(ops[i]));
        std::size_t found = 0;
        for (const auto& [lambda, mult] : roots) {
            found += mult;
            std::size_t plain = nullspace(shifted(ops[i], lambda)).dim();
            std::size_t general = generalized_eigenspace(ops[i], lambda).dim();
            tally.record(plain == general, "operator " + std::to_string(i + 1) + ", eigenvalue " +
                                               format_rational(lambda) + ": eigenspace " + std::to_string(plain) +
                                               " vs generalized " + std::to_string(general));
        }
        tally.record(found == ops[i].rows(), "operator " + std::to_string(i + 1) + " has irrational eigenvalues");
    }
    return tally.to_check(name);
}

// Sum of the nonzero root spaces.
inline Subspace fitting_one_part(const WeightDecomposition& roots) { return roots.nonzero_part(); }

// Z_A(T) = {x : [x, T, A] = 0}
inline Subspace torus_centralizer(const Algebra& a, const Torus& t) {
    const std::size_t n = a.dim();
    RowReducer red(n);
    for (const auto& g : t.generators) {
        for (std::size_t k = 0; k < n && !red.full(); ++k) {
            LinearMap m = ad_map(a, g, a.basis(k));
            for (std::size_t r = 0; r < n; ++r) {
                red.add(m.row_vector(r));
            }
        }
    }
    return nullspace(red);
}

// Coordinates of a vector of T with respect to the generators.
inline std::optional<Vector> torus_coordinates(const Torus& t, const Vector& v) {
    if (t.size() == 0) {
        return is_zero(v) ? std::optional<Vector>(Vector{}) : std::nullopt;
    }
    const std::size_t n = v.size();
    std::vector<Vector> rows;
    for (std::size_t r = 0; r < n; ++r) {
        Vector row(t.size());
        for (std::size_t g = 0; g < t.size(); ++g) {
            row[g] = t.generators[g][r];
        }
        rows.push_back(std::move(row));
    }
    return solve_affine(t.size(), rows, v);
}

namespace detail {

inline std::vector<LinearMap> maps_of(const Subspace& s, std::size_t n) {
    std::vector<LinearMap> out;
    for (std::size_t r = 0; r < s.dim(); ++r) {
        out.push_back(map_from_coords(n, s.basis().row(r)));
    }
    return out;
}

// Every basis map of weight alpha sends A_gamma into A_{alpha+gamma}.
inline Check weight_shift_check(const std::string& name, const WeightDecomposition& maps,
                                const WeightDecomposition& roots, std::size_t n) {
    Tally tally;
    for (const auto& m : maps.entries) {
        auto fs = maps_of(m.space, n);
        for (const auto& r : roots.entries) {
            Subspace target = roots.of(m.weight + r.weight);
            for (std::size_t fi = 0; fi < fs.size(); ++fi) {
                for (const auto& x : r.space.basis_vectors()) {
                    tally.record_lazy(target.contains(fs[fi] * x), [&] {
                        return "weight " + to_string(m.weight) + " map " + std::to_string(fi) + " on root " +
                               to_string(r.weight);
                    });
                }
            }
        }
    }
    return tally.to_check(name);
}

inline std::uint64_t binomial(unsigned n, unsigned k) {
    std::uint64_t c = 1;
    for (unsigned i = 1; i <= k; ++i) {
        c = c * (n - k + i) / i;
    }
    return c;
}

} // namespace detail

// ((t1,t2)^m f) = sum_k (-1)^k C(m,k) ad^(m-k) f ad^k
inline LinearMap binomial_expansion(const LinearMap& ad, const LinearMap& f, unsigned m) {
    LinearMap out(f.rows(), f.cols());
    for (unsigned k = 0; k <= m; ++k) {
        Scalar c = static_cast<unsigned long>(detail::binomial(m, k));
        if (k % 2 == 1) {
            c = -c;
        }
        out = out + c * (power(ad, m - k) * f * power(ad, k));
    }
    return out;
}

// The same sum with the sign (-1)^(k+1).
inline LinearMap binomial_expansion_shifted_sign(const LinearMap& ad, const LinearMap& f, unsigned m) {
    return -binomial_expansion(ad, f, m);
}

struct WeightAnalysis {
    WeightDecomposition roots;
    std::optional<WeightDecomposition> qder;
    std::optional<WeightDecomposition> quasicentroid;
    Subspace centralizer;
    CheckReport report;
};

// Structure theorems for a valid torus, checked by exact subspace arithmetic.
// Spectral trouble on a map space becomes a failed check, not an exception.
inline WeightAnalysis structure_checks(const Algebra& a, const Torus& t, const SpaceBundle& spaces) {
    const std::size_t n = a.dim();
    WeightAnalysis out{root_decomposition(a, t), std::nullopt, std::nullopt, torus_centralizer(a, t), {}};
    CheckReport& rep = out.report;
    const auto& roots = out.roots;
    const Subspace torus_space = t.span(n);
    const Subspace a1 = fitting_one_part(roots);
    const auto pairs = generator_pairs(t.size());
    const auto ads = torus_operators(a, t);

    auto decompose = [&](const MapSpace& space, const std::string& label) -> std::optional<WeightDecomposition> {
        std::vector<Matrix> ops;
        try {
            ops = restricted_actions(a, t, space);
            rep.add(label + " invariant under d(T,T)", true);
        } catch (const SpaceNotInvariant& e) {
            rep.add(label + " invariant under d(T,T)", false, e.what());
            return std::nullopt;
        }
        Check diag = diagonal_action_check(label + " action is diagonal", ops);
        rep.add(diag);
        if (!diag.passed) {
            return std::nullopt;
        }
        return weight_decomposition_of(space, a, t);
    };

    out.qder = decompose(spaces.qder, "QDer");
    out.quasicentroid = decompose(spaces.quasicentroid, "QC");

    // Identities of d(T,T) on the QDer basis.
    {
        Tally commute;
        Tally expansion;
        auto fs = spaces.qder.maps();
        auto act = [](const LinearMap& ad, const LinearMap& f) { return ad * f - f * ad; };
        for (std::size_t fi = 0; fi < fs.size(); ++fi) {
            for (std::size_t p = 0; p < ads.size(); ++p) {
                for (std::size_t q = p + 1; q < ads.size(); ++q) {
                    LinearMap u = act(ads[p], act(ads[q], fs[fi]));
                    LinearMap v = act(ads[q], act(ads[p], fs[fi]));
                    commute.record_lazy(u == v, [&] {
                        return "map " + std::to_string(fi) + ", pairs " + std::to_string(p) + "," + std::to_string(q);
                    });
                }
                LinearMap iterated = fs[fi];
                for (unsigned m = 1; m <= 3; ++m) {
                    iterated = act(ads[p], iterated);
                    expansion.record_lazy(iterated == binomial_expansion(ads[p], fs[fi], m), [&] {
                        return "map " + std::to_string(fi) + ", pair " + std::to_string(p) + ", power " +
                               std::to_string(m);
                    });
                }
            }
        }
        rep.add(commute.to_check("d(T,T) operators commute on QDer"));
        rep.add(expansion.to_check("binomial expansion of d(t1,t2)^m, m<=3"));
    }

    if (out.qder) {
        rep.add(detail::weight_shift_check("QDer weight shift", *out.qder, roots, n));

        // f in QDer_0 and Der: gamma(f t1, t2) + gamma(t1, f t2) = 0.
        Subspace target = subspace_intersect(out.qder->zero_part(), spaces.der.space);
        Tally tally;
        for (const auto& f : detail::maps_of(target, n)) {
            for (const auto& [i, j] : pairs) {
                auto u = torus_coordinates(t, f * t.generators[i]);
                auto v = torus_coordinates(t, f * t.generators[j]);
                auto ei = torus_coordinates(t, t.generators[i]);
                auto ej = torus_coordinates(t, t.generators[j]);
                if (!u || !v) {
                    tally.record(false, "map does not preserve the torus");
                    continue;
                }
                for (const auto& g : roots.nonzero_weights()) {
                    tally.record_lazy(sgn(g.eval(*u, *ej) + g.eval(*ei, *v)) == 0, [&] {
                        return "root " + to_string(g) + ", generators " + std::to_string(i + 1) + "," +
                               std::to_string(j + 1);
                    });
                }
            }
        }
        rep.add(tally.to_check("root(f t1, t2) + root(t1, f t2) = 0 on QDer_0 and Der"));
    }

    if (out.quasicentroid) {
        const auto& qc = *out.quasicentroid;
        rep.add(detail::weight_shift_check("QC weight shift", qc, roots, n));
        Subspace qc0 = qc.zero_part();
        Subspace qc1 = qc.nonzero_part();
        auto all = spaces.quasicentroid.maps();
        auto zero_maps = detail::maps_of(qc0, n);
        auto one_maps = detail::maps_of(qc1, n);

        Tally torus_inv;
        Tally one_kills_torus;
        Tally zero_keeps_a1;
        Tally one_into_centralizer;
        for (const auto& f : all) {
            for (const auto& g : t.generators) {
                torus_inv.record(torus_space.contains(f * g), "QC basis map leaves T");
            }
        }
        for (const auto& f : one_maps) {
            for (const auto& g : t.generators) {
                one_kills_torus.record(is_zero(f * g), "QC_1 map nonzero on T");
            }
            for (std::size_t k = 0; k < n; ++k) {
                one_into_centralizer.record(out.centralizer.contains(f * a.basis(k)), "QC_1 image outside Z_A(T)");
            }
        }
        for (const auto& f : zero_maps) {
            for (const auto& x : a1.basis_vectors()) {
                zero_keeps_a1.record(a1.contains(f * x), "QC_0 moves A_1 out of itself");
            }
        }
        rep.add(torus_inv.to_check("QC(T) inside T"));
        rep.add(zero_keeps_a1.to_check("QC_0(A_1) inside A_1"));
        rep.add(one_kills_torus.to_check("QC_1(T) = 0"));
        rep.add(one_into_centralizer.to_check("QC_1(A) inside Z_A(T)"));

        // Annihilation statements for QC_0 against nonzero root vectors.
        Tally mixed;
        Tally opposite_stays;
        Tally opposite_kills_a1;
        Tally torus_a1;
        auto nonzero = roots.nonzero_weights();
        for (const auto& alpha : nonzero) {
            for (const auto& beta : nonzero) {
                bool opposite = (alpha + beta).is_zero();
                for (const auto& xa : roots.of(alpha).basis_vectors()) {
                    for (const auto& xb : roots.of(beta).basis_vectors()) {
                        for (std::size_t fi = 0; fi < zero_maps.size(); ++fi) {
                            LinearMap h = hom_action(a, xa, xb, zero_maps[fi]);
                            auto where = [&] {
                                return "roots " + to_string(alpha) + "," + to_string(beta) + ", QC_0 map " +
                                       std::to_string(fi);
                            };
                            if (!opposite) {
                                mixed.record_lazy(h.is_zero(), where);
                                continue;
                            }
                            opposite_stays.record_lazy(qc0.contains(map_coords(h)), where);
                            for (const auto& x : a1.basis_vectors()) {
                                opposite_kills_a1.record_lazy(is_zero(h * x), where);
                            }
                        }
                    }
                }
            }
        }
        for (const auto& g : t.generators) {
            for (const auto& x : a1.basis_vectors()) {
                for (const auto& f : zero_maps) {
                    LinearMap h = hom_action(a, g, x, f);
                    for (const auto& s : t.generators) {
                        torus_a1.record(is_zero(h * s), "((t, x)f)(s) nonzero");
                    }
                }
            }
        }
        rep.add(mixed.to_check("(A_a, A_b)QC_0 = 0 when a+b != 0"));
        rep.add(opposite_stays.to_check("(A_a, A_-a)QC_0 inside QC_0"));
        rep.add(opposite_kills_a1.to_check("(A_a, A_-a)QC_0 vanishes on A_1"));
        rep.add(torus_a1.to_check("((T, A_1)QC_0)(T) = 0"));

        // sigma(f (x) z) = f(z) intertwines the actions.
        Tally sigma;
        for (std::size_t fi = 0; fi < all.size(); ++fi) {
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                    LinearMap h = hom_action(a, a.basis(i), a.basis(j), all[fi]);
                    for (std::size_t k = 0; k < n; ++k) {
                        Vector lhs = add(h * a.basis(k), all[fi] * a.basis_bracket(i, j, k));
                        Vector rhs = a.bracket(a.basis(i), a.basis(j), all[fi] * a.basis(k));
                        sigma.record_lazy(lhs == rhs, [&] { return "QC basis map " + std::to_string(fi); });
                    }
                }
            }
        }
        rep.add(sigma.to_check("evaluation intertwines the action on QC"));

        if (center(a).is_zero()) {
            rep.add("QC_0 = centroid", qc0 == spaces.centroid.space,
                    "dim QC_0 " + std::to_string(qc0.dim()) + ", dim centroid " +
                        std::to_string(spaces.centroid.dim()));
            Tally products;
            for (const auto& f : one_maps) {
                for (const auto& g : one_maps) {
                    products.record((f * g).is_zero(), "product of QC_1 basis maps nonzero");
                }
            }
            rep.add(products.to_check("QC_1 QC_1 = 0"));
        }
    }
    return out;
}

inline WeightAnalysis structure_checks(const Algebra& a, const Torus& t) {
    return structure_checks(a, t, compute_spaces(a));
}

namespace detail {

// Maps A_i -> A_j given in block coordinates, as maps on A.
struct BlockFrame {
    std::vector<Matrix> embed;    // n x d_i, block basis as columns
    std::vector<Matrix> project;  // d_i x n, coordinates along the other blocks
};

inline BlockFrame block_frame(const std::vector<Subspace>& blocks, std::size_t n) {
    Matrix b(n, n);
    BlockFrame fr;
    std::size_t col = 0;
    for (const auto& s : blocks) {
        Matrix e(n, s.dim());
        for (std::size_t r = 0; r < s.dim(); ++r) {
            e.set_column(r, s.basis_vector(r));
            b.set_column(col++, s.basis_vector(r));
        }
        fr.embed.push_back(std::move(e));
    }
    Matrix inv = *inverse(b);
    std::size_t row = 0;
    for (const auto& s : blocks) {
        Matrix p(s.dim(), n);
        for (std::size_t r = 0; r < s.dim(); ++r, ++row) {
            for (std::size_t c = 0; c < n; ++c) {
                p(r, c) = inv(row, c);
            }
        }
        fr.project.push_back(std::move(p));
    }
    return fr;
}

} // namespace detail

struct SumDecomposition {
    Subspace quasicentroid;
    Subspace block_sum;
    std::vector<std::size_t> block_dims;                         // dim QC(A_i)
    std::vector<std::pair<std::pair<std::size_t, std::size_t>, std::size_t>> cross_dims;  // dim Gamma_ij
    CheckReport report;
};

// QC(A) = sum QC(A_i) + sum_{i != j} Gamma_ij for an ideal decomposition with
// vanishing mixed brackets.
inline SumDecomposition check_sum_decomposable(const Algebra& a, const std::vector<Subspace>& blocks) {
    const std::size_t n = a.dim();
    std::size_t total = 0;
    for (const auto& s : blocks) {
        if (s.ambient_dim() != n) {
            throw BlocksNotValid("block ambient differs from algebra dimension");
        }
        total += s.dim();
    }
    if (total != n || !independent(blocks, n)) {
        throw BlocksNotValid("blocks do not form a direct sum decomposition of the algebra");
    }
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (!is_ideal(a, blocks[i])) {
            throw BlocksNotValid("block " + std::to_string(i + 1) + " is not an ideal");
        }
        for (std::size_t j = 0; j < blocks.size(); ++j) {
            if (i == j) {
                continue;
            }
            for (const auto& u : blocks[i].basis_vectors()) {
                for (const auto& v : blocks[j].basis_vectors()) {
                    for (std::size_t k = 0; k < n; ++k) {
                        if (!is_zero(a.bracket(u, v, a.basis(k)))) {
                            throw BlocksNotValid("mixed bracket of blocks " + std::to_string(i + 1) + " and " +
                                                 std::to_string(j + 1) + " is nonzero");
                        }
                    }
                }
            }
        }
    }

    auto frame = detail::block_frame(blocks, n);
    std::vector<Algebra> parts;
    std::vector<Subspace> centers;
    for (const auto& s : blocks) {
        parts.push_back(induced_algebra(a, s));
        centers.push_back(center(parts.back()));
    }
    SumDecomposition out{quasicentroid(a).space, Subspace(n * n), {}, {}, {}};
    std::vector<Vector> gens;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        MapSpace local = quasicentroid(parts[i]);
        out.block_dims.push_back(local.dim());
        for (const auto& g : local.maps()) {
            gens.push_back(map_coords(frame.embed[i] * g * frame.project[i]));
        }
    }
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        for (std::size_t j = 0; j < blocks.size(); ++j) {
            if (i == j) {
                continue;
            }
            std::size_t count = 0;
            for (const auto& z : centers[j].basis_vectors()) {
                for (std::size_t c = 0; c < blocks[i].dim(); ++c) {
                    Matrix h(blocks[j].dim(), blocks[i].dim());
                    h.set_column(c, z);
                    gens.push_back(map_coords(frame.embed[j] * h * frame.project[i]));
                    ++count;
                }
            }
            out.cross_dims.push_back({{i, j}, count});
        }
    }
    out.block_sum = Subspace::span(n * n, gens);
    out.report.add("QC equals the block sum", out.block_sum == out.quasicentroid,
                   "dim QC " + std::to_string(out.quasicentroid.dim()) + ", dim block sum " +
                       std::to_string(out.block_sum.dim()));
    return out;
}

} // namespace trilie
