#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "trilie/algebra.hpp"

namespace trilie {

// Coordinates of maps: a map f on F^n is the vector of its n*n matrix entries
// in row-major order (entry (r, c) = coefficient of e_r in f(e_c)). Pairs and
// quadruples concatenate blocks of n*n.
inline Vector map_coords(const LinearMap& f) { return f.data(); }

inline LinearMap map_from_coords(std::size_t n, std::span<const Scalar> coords, std::size_t block = 0) {
    return Matrix::from_data(n, n, coords.subspan(block * n * n, n * n));
}

inline LinearMap elementary_map(std::size_t n, std::size_t row, std::size_t col) {
    LinearMap e(n, n);
    e(row, col) = 1;
    return e;
}

// [f, g] = g f - f g
inline LinearMap map_bracket(const LinearMap& f, const LinearMap& g) {
    if (f.rows() != g.rows() || !f.square() || !g.square()) {
        throw DimensionMismatch("map_bracket needs square maps of equal size");
    }
    return g * f - f * g;
}

struct QDerPair {
    LinearMap f;
    LinearMap fprime;
};

struct GenDerQuadruple {
    LinearMap f1;
    LinearMap f2;
    LinearMap f3;
    LinearMap fprime;
};

enum class MapKind { Der, Inner, ZDer, Centroid, QCentroid, QDer, GDer, QDerPairs, DeltaQuadruples };

enum class MapAmbient { Hom, Pairs, Quadruples };

inline std::string to_string(MapKind k) {
    switch (k) {
    case MapKind::Der: return "der";
    case MapKind::Inner: return "ad";
    case MapKind::ZDer: return "zder";
    case MapKind::Centroid: return "centroid";
    case MapKind::QCentroid: return "qcentroid";
    case MapKind::QDer: return "qder";
    case MapKind::GDer: return "gder";
    case MapKind::QDerPairs: return "qder_pairs";
    case MapKind::DeltaQuadruples: return "delta";
    }
    return "?";
}

inline MapAmbient ambient_of(MapKind k) {
    if (k == MapKind::QDerPairs) {
        return MapAmbient::Pairs;
    }
    if (k == MapKind::DeltaQuadruples) {
        return MapAmbient::Quadruples;
    }
    return MapAmbient::Hom;
}

inline std::size_t blocks_of(MapAmbient a) {
    switch (a) {
    case MapAmbient::Hom: return 1;
    case MapAmbient::Pairs: return 2;
    case MapAmbient::Quadruples: return 4;
    }
    return 1;
}

// A subspace of Hom(A,A), of pairs, or of quadruples, tagged with its meaning.
struct MapSpace {
    MapKind kind;
    std::size_t n;
    Subspace space;

    MapAmbient ambient() const { return ambient_of(kind); }
    std::size_t dim() const { return space.dim(); }

    std::vector<LinearMap> maps() const {
        require(MapAmbient::Hom);
        std::vector<LinearMap> out;
        for (std::size_t r = 0; r < dim(); ++r) {
            out.push_back(map_from_coords(n, space.basis().row(r)));
        }
        return out;
    }

    std::vector<QDerPair> pairs() const {
        require(MapAmbient::Pairs);
        std::vector<QDerPair> out;
        for (std::size_t r = 0; r < dim(); ++r) {
            auto row = space.basis().row(r);
            out.push_back({map_from_coords(n, row, 0), map_from_coords(n, row, 1)});
        }
        return out;
    }

    std::vector<GenDerQuadruple> quadruples() const {
        require(MapAmbient::Quadruples);
        std::vector<GenDerQuadruple> out;
        for (std::size_t r = 0; r < dim(); ++r) {
            auto row = space.basis().row(r);
            out.push_back({map_from_coords(n, row, 0), map_from_coords(n, row, 1),
                           map_from_coords(n, row, 2), map_from_coords(n, row, 3)});
        }
        return out;
    }

    bool contains(const LinearMap& f) const {
        require(MapAmbient::Hom);
        return space.contains(map_coords(f));
    }

private:
    void require(MapAmbient a) const {
        if (ambient() != a) {
            throw AmbientMismatch("map space '" + to_string(kind) + "' has a different ambient");
        }
    }
};

namespace detail {

// Variable offsets of the four slots of [f1 x, y, z] + [x, f2 y, z] + [x, y, f3 z] - f'[x,y,z].
struct SlotLayout {
    std::size_t width;
    std::array<std::size_t, 4> offset;  // slot 1, slot 2, slot 3, right-hand map
};

// Adds the coefficients of component l of `coeff * [.. f(e_slot) ..]` to row,
// where `slot` in {0,1,2} picks the argument the unknown map acts on.
inline void add_slot_term(const Algebra& a, Vector& row, std::size_t offset, int slot, std::size_t i,
                          std::size_t j, std::size_t k, std::size_t l, const Scalar& coeff) {
    const std::size_t n = a.dim();
    const std::size_t arg = slot == 0 ? i : (slot == 1 ? j : k);
    for (std::size_t r = 0; r < n; ++r) {
        const Vector& b = slot == 0 ? a.basis_bracket(r, j, k)
                                    : (slot == 1 ? a.basis_bracket(i, r, k) : a.basis_bracket(i, j, r));
        if (sgn(b[l]) != 0) {
            row[offset + r * n + arg] += coeff * b[l];
        }
    }
}

// Adds component l of `coeff * f([e_i, e_j, e_k])`.
inline void add_image_term(const Algebra& a, Vector& row, std::size_t offset, std::size_t i, std::size_t j,
                           std::size_t k, std::size_t l, const Scalar& coeff) {
    const std::size_t n = a.dim();
    const Vector& b = a.basis_bracket(i, j, k);
    for (std::size_t m = 0; m < n; ++m) {
        if (sgn(b[m]) != 0) {
            row[offset + l * n + m] += coeff * b[m];
        }
    }
}

// Rows of the generalized Leibniz rule. With one map in all three slots the
// rule alternates, so triples i<j<k suffice; otherwise every ordered triple
// (repeated indices included) contributes.
inline RowReducer leibniz_system(const Algebra& a, const SlotLayout& layout, bool ordered_triples) {
    const std::size_t n = a.dim();
    RowReducer red(layout.width);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = ordered_triples ? 0 : i + 1; j < n; ++j) {
            for (std::size_t k = ordered_triples ? 0 : j + 1; k < n; ++k) {
                for (std::size_t l = 0; l < n; ++l) {
                    Vector row(layout.width);
                    for (int s = 0; s < 3; ++s) {
                        add_slot_term(a, row, layout.offset[static_cast<std::size_t>(s)], s, i, j, k, l, 1);
                    }
                    add_image_term(a, row, layout.offset[3], i, j, k, l, -1);
                    red.add(std::move(row));
                }
            }
        }
    }
    return red;
}

// Equalities between slot insertions over all ordered triples; with
// `with_image` the image term f([x,y,z]) joins the chain.
inline RowReducer slot_equality_system(const Algebra& a, bool with_image) {
    const std::size_t n = a.dim();
    const std::size_t w = n * n;
    RowReducer red(w);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                for (std::size_t l = 0; l < n; ++l) {
                    Vector r12(w);
                    add_slot_term(a, r12, 0, 0, i, j, k, l, 1);
                    add_slot_term(a, r12, 0, 1, i, j, k, l, -1);
                    red.add(std::move(r12));
                    Vector r23(w);
                    add_slot_term(a, r23, 0, 1, i, j, k, l, 1);
                    add_slot_term(a, r23, 0, 2, i, j, k, l, -1);
                    red.add(std::move(r23));
                    if (with_image) {
                        Vector r3f(w);
                        add_slot_term(a, r3f, 0, 2, i, j, k, l, 1);
                        add_image_term(a, r3f, 0, i, j, k, l, -1);
                        red.add(std::move(r3f));
                    }
                }
            }
        }
    }
    return red;
}

// Image of a subspace under the projection onto block `block` of size n*n.
inline Subspace project_block(const Subspace& s, std::size_t n, std::size_t block) {
    std::vector<Vector> vs;
    for (std::size_t r = 0; r < s.dim(); ++r) {
        auto row = s.basis().row(r);
        vs.emplace_back(row.begin() + static_cast<std::ptrdiff_t>(block * n * n),
                        row.begin() + static_cast<std::ptrdiff_t>((block + 1) * n * n));
    }
    return Subspace::span(n * n, vs);
}

} // namespace detail

inline MapSpace der(const Algebra& a) {
    const std::size_t w = a.dim() * a.dim();
    auto red = detail::leibniz_system(a, {w, {0, 0, 0, 0}}, false);
    return {MapKind::Der, a.dim(), nullspace(red)};
}

inline MapSpace inner_der(const Algebra& a) {
    const std::size_t n = a.dim();
    std::vector<Vector> vs;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            vs.push_back(map_coords(ad_basis(a, i, j)));
        }
    }
    return {MapKind::Inner, n, Subspace::span(n * n, vs)};
}

// {f : f(A) in Z(A), f(A^1) = 0}
inline MapSpace zder(const Algebra& a) {
    const std::size_t n = a.dim();
    const std::size_t w = n * n;
    RowReducer red(w);
    Subspace ann = annihilator(center(a));
    for (std::size_t r = 0; r < ann.dim(); ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            Vector row(w);
            for (std::size_t m = 0; m < n; ++m) {
                row[m * n + c] = ann.basis()(r, m);
            }
            red.add(std::move(row));
        }
    }
    Subspace derived = derived_algebra(a);
    for (std::size_t d = 0; d < derived.dim(); ++d) {
        for (std::size_t r = 0; r < n; ++r) {
            Vector row(w);
            for (std::size_t c = 0; c < n; ++c) {
                row[r * n + c] = derived.basis()(d, c);
            }
            red.add(std::move(row));
        }
    }
    return {MapKind::ZDer, n, nullspace(red)};
}

inline MapSpace centroid(const Algebra& a) {
    return {MapKind::Centroid, a.dim(), nullspace(detail::slot_equality_system(a, true))};
}

inline MapSpace quasicentroid(const Algebra& a) {
    return {MapKind::QCentroid, a.dim(), nullspace(detail::slot_equality_system(a, false))};
}

// Quadruples (f1, f2, f3, f') in F^(4n^2).
inline MapSpace delta_space(const Algebra& a) {
    const std::size_t w = a.dim() * a.dim();
    auto red = detail::leibniz_system(a, {4 * w, {0, w, 2 * w, 3 * w}}, true);
    return {MapKind::DeltaQuadruples, a.dim(), nullspace(red)};
}

// Pairs (f, f') in F^(2n^2) with (f, f, f, f') in Delta(A).
inline MapSpace qder_pairs(const Algebra& a) {
    const std::size_t w = a.dim() * a.dim();
    auto red = detail::leibniz_system(a, {2 * w, {0, 0, 0, w}}, false);
    return {MapKind::QDerPairs, a.dim(), nullspace(red)};
}

inline MapSpace qder_from_pairs(const MapSpace& pairs) {
    return {MapKind::QDer, pairs.n, detail::project_block(pairs.space, pairs.n, 0)};
}

inline MapSpace gder_from_delta(const MapSpace& delta) {
    return {MapKind::GDer, delta.n, detail::project_block(delta.space, delta.n, 0)};
}

inline MapSpace qder(const Algebra& a) { return qder_from_pairs(qder_pairs(a)); }

inline MapSpace gder(const Algebra& a) { return gder_from_delta(delta_space(a)); }

// Substitution oracles: evaluate the defining identities with bracket() on
// all basis triples, independent of the constraint matrices above.

inline bool satisfies_generalized_leibniz(const Algebra& a, const LinearMap& f1, const LinearMap& f2,
                                          const LinearMap& f3, const LinearMap& fp) {
    const std::size_t n = a.dim();
    // Equal slot maps make both sides alternating.
    const bool ordered = !(f1 == f2 && f2 == f3);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = ordered ? 0 : i + 1; j < n; ++j) {
            for (std::size_t k = ordered ? 0 : j + 1; k < n; ++k) {
                Vector x = a.basis(i), y = a.basis(j), z = a.basis(k);
                Vector lhs = add(add(a.bracket(f1 * x, y, z), a.bracket(x, f2 * y, z)), a.bracket(x, y, f3 * z));
                if (lhs != fp * a.bracket(x, y, z)) {
                    return false;
                }
            }
        }
    }
    return true;
}

inline bool satisfies_generalized_leibniz(const Algebra& a, const GenDerQuadruple& q) {
    return satisfies_generalized_leibniz(a, q.f1, q.f2, q.f3, q.fprime);
}

inline bool is_derivation(const Algebra& a, const LinearMap& f) {
    return satisfies_generalized_leibniz(a, f, f, f, f);
}

inline bool is_quasiderivation_pair(const Algebra& a, const QDerPair& p) {
    return satisfies_generalized_leibniz(a, p.f, p.f, p.f, p.fprime);
}

namespace detail {

inline bool slot_equalities_hold(const Algebra& a, const LinearMap& f, bool with_image) {
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                Vector x = a.basis(i), y = a.basis(j), z = a.basis(k);
                Vector s1 = a.bracket(f * x, y, z);
                Vector s2 = a.bracket(x, f * y, z);
                Vector s3 = a.bracket(x, y, f * z);
                if (s1 != s2 || s2 != s3) {
                    return false;
                }
                if (with_image && s3 != f * a.bracket(x, y, z)) {
                    return false;
                }
            }
        }
    }
    return true;
}

} // namespace detail

inline bool is_centroid_map(const Algebra& a, const LinearMap& f) {
    return detail::slot_equalities_hold(a, f, true);
}

inline bool is_quasicentroid_map(const Algebra& a, const LinearMap& f) {
    return detail::slot_equalities_hold(a, f, false);
}

// Some f' with (g, g, g, f') in Delta(A), or nullopt; free entries are zero.
inline std::optional<LinearMap> quasiderivation_companion(const Algebra& a, const LinearMap& g) {
    const std::size_t n = a.dim();
    std::vector<Vector> rows;
    Vector rhs;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t k = j + 1; k < n; ++k) {
                Vector x = a.basis(i), y = a.basis(j), z = a.basis(k);
                Vector target = add(add(a.bracket(g * x, y, z), a.bracket(x, g * y, z)), a.bracket(x, y, g * z));
                const Vector& b = a.basis_bracket(i, j, k);
                for (std::size_t l = 0; l < n; ++l) {
                    Vector row(n * n);
                    for (std::size_t m = 0; m < n; ++m) {
                        row[l * n + m] = b[m];
                    }
                    rows.push_back(std::move(row));
                    rhs.push_back(target[l]);
                }
            }
        }
    }
    auto sol = solve_affine(n * n, rows, rhs);
    if (!sol) {
        return std::nullopt;
    }
    return map_from_coords(n, *sol);
}

// Some (g, g', g'', g''') in Delta(A) with first component g. A quasiderivation
// g comes back as (g, g, g, f'). Otherwise unknowns are ordered f'
// (row-major), then f2, then f3, and free unknowns are set to zero.
inline GenDerQuadruple complete_to_quadruple(const Algebra& a, const LinearMap& g) {
    const std::size_t n = a.dim();
    if (g.rows() != n || g.cols() != n) {
        throw DimensionMismatch("map size differs from algebra dimension");
    }
    if (auto fp = quasiderivation_companion(a, g)) {
        return {g, g, g, *fp};
    }
    const std::size_t w = n * n;
    std::vector<Vector> rows;
    Vector rhs;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                Vector known = a.bracket(g * a.basis(i), a.basis(j), a.basis(k));
                for (std::size_t l = 0; l < n; ++l) {
                    Vector row(3 * w);
                    detail::add_slot_term(a, row, w, 1, i, j, k, l, 1);
                    detail::add_slot_term(a, row, 2 * w, 2, i, j, k, l, 1);
                    detail::add_image_term(a, row, 0, i, j, k, l, -1);
                    rows.push_back(std::move(row));
                    rhs.push_back(-known[l]);
                }
            }
        }
    }
    auto sol = solve_affine(3 * w, rows, rhs);
    if (!sol) {
        throw NotAGeneralizedDerivation("no (f2, f3, f') completes the given map");
    }
    return {g, map_from_coords(n, *sol, 1), map_from_coords(n, *sol, 2), map_from_coords(n, *sol, 0)};
}

struct GDerSplit {
    QDerPair qder_part;                  // ((g + g' + g'')/3, g''')
    std::array<LinearMap, 3> qc_parts;   // (2g - g' - g'')/3 and its two rotations
};

inline GDerSplit split_gder(const Algebra& a, const GenDerQuadruple& q) {
    if (!satisfies_generalized_leibniz(a, q)) {
        throw NotInDelta("quadruple does not satisfy the generalized Leibniz rule");
    }
    const Scalar third(1, 3);
    LinearMap mean = third * (q.f1 + q.f2 + q.f3);
    return {{mean, q.fprime},
            {third * (2 * q.f1 - q.f2 - q.f3), third * (2 * q.f2 - q.f1 - q.f3),
             third * (2 * q.f3 - q.f1 - q.f2)}};
}

// All spaces of one algebra, computed once.
struct SpaceBundle {
    MapSpace der;
    MapSpace inner;
    MapSpace zder;
    MapSpace centroid;
    MapSpace quasicentroid;
    MapSpace pairs;
    MapSpace delta;
    MapSpace qder;
    MapSpace gder;

    const MapSpace& get(MapKind k) const {
        switch (k) {
        case MapKind::Der: return der;
        case MapKind::Inner: return inner;
        case MapKind::ZDer: return zder;
        case MapKind::Centroid: return centroid;
        case MapKind::QCentroid: return quasicentroid;
        case MapKind::QDer: return qder;
        case MapKind::GDer: return gder;
        case MapKind::QDerPairs: return pairs;
        case MapKind::DeltaQuadruples: return delta;
        }
        return der;
    }
};

inline SpaceBundle compute_spaces(const Algebra& a) {
    MapSpace pairs = qder_pairs(a);
    MapSpace delta = delta_space(a);
    MapSpace q = qder_from_pairs(pairs);
    MapSpace g = gder_from_delta(delta);
    return {der(a), inner_der(a), zder(a), centroid(a), quasicentroid(a), std::move(pairs), std::move(delta),
            std::move(q), std::move(g)};
}

} // namespace trilie
