#pragma once

#include <array>
#include <string>
#include <vector>

#include "trilie/map_spaces.hpp"
#include "trilie/report.hpp"
#include "trilie/sampling.hpp"

namespace trilie {

namespace detail {

inline bool bracket_lands_in(const LinearMap& f, const LinearMap& g, const MapSpace& target) {
    return target.space.contains(map_coords(map_bracket(f, g)));
}

inline Check bracket_check(const std::string& name, const MapSpace& left, const MapSpace& right,
                           const MapSpace& target) {
    Tally tally;
    auto ls = left.maps();
    auto rs = right.maps();
    for (std::size_t i = 0; i < ls.size(); ++i) {
        for (std::size_t j = 0; j < rs.size(); ++j) {
            tally.record_lazy(bracket_lands_in(ls[i], rs[j], target),
                              [&] { return "basis maps " + std::to_string(i) + ", " + std::to_string(j); });
        }
    }
    return tally.to_check(name);
}

inline Check inclusion_check(const std::string& name, const Subspace& inner, const Subspace& outer) {
    return {name, outer.contains(inner),
            "dim " + std::to_string(inner.dim()) + " in dim " + std::to_string(outer.dim()), false};
}

} // namespace detail

// Closure, inclusion and decomposition statements about the map spaces of one algebra.
inline CheckReport map_space_theorems(const Algebra& a, const SpaceBundle& s) {
    CheckReport rep;
    const std::size_t n = a.dim();

    rep.add(detail::bracket_check("Der closed under bracket", s.der, s.der, s.der));
    rep.add(detail::bracket_check("QDer closed under bracket", s.qder, s.qder, s.qder));
    rep.add(detail::bracket_check("GDer closed under bracket", s.gder, s.gder, s.gder));
    rep.add(detail::bracket_check("centroid closed under bracket", s.centroid, s.centroid, s.centroid));
    rep.add(detail::bracket_check("QC closed under bracket", s.quasicentroid, s.quasicentroid, s.quasicentroid));

    rep.add(detail::inclusion_check("ad inside Der", s.inner.space, s.der.space));
    rep.add(detail::inclusion_check("ZDer inside Der", s.zder.space, s.der.space));
    rep.add(detail::inclusion_check("Der inside QDer", s.der.space, s.qder.space));
    rep.add(detail::inclusion_check("QDer inside GDer", s.qder.space, s.gder.space));
    rep.add(detail::bracket_check("ad is an ideal of Der", s.der, s.inner, s.inner));
    rep.add(detail::bracket_check("ZDer is an ideal of Der", s.der, s.zder, s.zder));

    rep.add(detail::inclusion_check("QC inside GDer", s.quasicentroid.space, s.gder.space));
    rep.add(detail::inclusion_check("centroid inside QDer and QC", s.centroid.space,
                                    subspace_intersect(s.qder.space, s.quasicentroid.space)));
    rep.add(detail::bracket_check("[Der, centroid] inside centroid", s.der, s.centroid, s.centroid));
    rep.add(detail::bracket_check("[QDer, QC] inside QC", s.qder, s.quasicentroid, s.quasicentroid));

    Subspace sum = subspace_sum(s.qder.space, s.quasicentroid.space);
    rep.add("GDer = QDer + QC", sum == s.gder.space,
            "dim QDer + QC " + std::to_string(sum.dim()) + ", dim GDer " + std::to_string(s.gder.dim()));
    rep.add(detail::bracket_check("[GDer, QC] inside QC", s.gder, s.quasicentroid, s.quasicentroid));
    if (center(a).is_zero()) {
        MapSpace zero{MapKind::QCentroid, n, Subspace(n * n)};
        rep.add(detail::bracket_check("[QC, QC] = 0", s.quasicentroid, s.quasicentroid, zero));
    }

    // Centroid is closed under composition.
    {
        Tally tally;
        auto cs = s.centroid.maps();
        for (std::size_t i = 0; i < cs.size(); ++i) {
            for (std::size_t j = 0; j < cs.size(); ++j) {
                tally.record_lazy(s.centroid.contains(cs[i] * cs[j]),
                                  [&] { return "basis maps " + std::to_string(i) + ", " + std::to_string(j); });
            }
        }
        rep.add(tally.to_check("centroid closed under composition"));
    }

    // Permuting the first three entries of a quadruple keeps it in Delta.
    {
        Tally perm;
        Tally split;
        static constexpr std::array<std::array<int, 3>, 6> orders{
            {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
        auto qs = s.delta.quadruples();
        for (std::size_t idx = 0; idx < qs.size(); ++idx) {
            const auto& q = qs[idx];
            const std::array<const LinearMap*, 3> fs{&q.f1, &q.f2, &q.f3};
            for (const auto& o : orders) {
                perm.record_lazy(satisfies_generalized_leibniz(a, *fs[o[0]], *fs[o[1]], *fs[o[2]], q.fprime), [&] {
                    return "quadruple " + std::to_string(idx) + " order " + std::to_string(o[0] + 1) +
                           std::to_string(o[1] + 1) + std::to_string(o[2] + 1);
                });
            }
            GDerSplit parts = split_gder(a, q);
            bool ok = is_quasiderivation_pair(a, parts.qder_part);
            for (const auto& c : parts.qc_parts) {
                ok = ok && s.quasicentroid.contains(c);
            }
            split.record(ok, "quadruple " + std::to_string(idx));
        }
        rep.add(perm.to_check("Delta closed under permuting the first three maps"));
        rep.add(split.to_check("every quadruple splits into a QDer pair and QC maps"));
    }

    // (x, y)f = ad(x, y) f - f ad(x, y) keeps QC.
    {
        Tally tally;
        auto fs = s.quasicentroid.maps();
        for (std::size_t fi = 0; fi < fs.size(); ++fi) {
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = i + 1; j < n; ++j) {
                    LinearMap ad = ad_basis(a, i, j);
                    tally.record_lazy(s.quasicentroid.contains(ad * fs[fi] - fs[fi] * ad), [&] {
                        return "QC basis map " + std::to_string(fi) + ", pair " + std::to_string(i + 1) + "," +
                               std::to_string(j + 1);
                    });
                }
            }
        }
        rep.add(tally.to_check("QC is a module under (x, y)f"));
    }

    // [centroid, QC] maps into Z(A); kernels and images of centroid maps are ideals.
    {
        Subspace z = center(a);
        Tally into_center;
        auto cs = s.centroid.maps();
        auto qs = s.quasicentroid.maps();
        for (std::size_t i = 0; i < cs.size(); ++i) {
            for (std::size_t j = 0; j < qs.size(); ++j) {
                LinearMap b = map_bracket(cs[i], qs[j]);
                for (std::size_t k = 0; k < n; ++k) {
                    into_center.record_lazy(z.contains(b * a.basis(k)), [&] {
                        return "centroid map " + std::to_string(i) + ", QC map " + std::to_string(j);
                    });
                }
            }
        }
        rep.add(into_center.to_check("[centroid, QC] maps into the center"));

        Tally ideals;
        for (std::size_t i = 0; i < cs.size(); ++i) {
            ideals.record(is_ideal(a, nullspace(cs[i])), "kernel of centroid map " + std::to_string(i));
            ideals.record(is_ideal(a, image(cs[i], Subspace::full(n))), "image of centroid map " + std::to_string(i));
        }
        rep.add(ideals.to_check("kernel and image of centroid maps are ideals"));
    }
    return rep;
}

// Identities for f in QC at x, y (and z), with powers up to max_power.
inline CheckReport quasicentroid_identities(const Algebra& a, const MapSpace& qc, unsigned max_power,
                                            std::size_t random_vectors, std::uint64_t seed) {
    const std::size_t n = a.dim();
    std::vector<Vector> points;
    for (std::size_t i = 0; i < n; ++i) {
        points.push_back(a.basis(i));
    }
    Sampler sampler(seed);
    for (std::size_t r = 0; r < random_vectors && n > 0; ++r) {
        points.push_back(sampler.vector(n));
    }

    Tally vanishing;
    Tally commuting;
    Tally cyclic;
    Tally powers;
    Tally shifted_powers;
    auto fs = qc.maps();
    for (std::size_t fi = 0; fi < fs.size(); ++fi) {
        const auto& f = fs[fi];
        std::vector<LinearMap> f_pow{LinearMap::identity(n)};
        for (unsigned m = 1; m <= max_power; ++m) {
            f_pow.push_back(f_pow.back() * f);
        }
        for (std::size_t xi = 0; xi < points.size(); ++xi) {
            const Vector& x = points[xi];
            Vector fx = f * x;
            for (std::size_t yi = 0; yi < points.size(); ++yi) {
                const Vector& y = points[yi];
                auto where = [&] {
                    return "QC map " + std::to_string(fi) + ", points " + std::to_string(xi) + "," + std::to_string(yi);
                };
                vanishing.record_lazy(is_zero(a.bracket(x, fx, y)), where);
                LinearMap adxy = ad_map(a, x, y);
                LinearMap adfy = ad_map(a, fx, y);
                commuting.record_lazy(adxy * adfy == adfy * adxy, where);
                for (unsigned m = 1; m <= max_power; ++m) {
                    powers.record_lazy(power(adfy, m) == power(adxy, m) * f_pow[m], where);
                    shifted_powers.record_lazy(power(adxy, m + 1) * f == adfy * power(adxy, m), where);
                }
                for (std::size_t zi = 0; zi < points.size(); ++zi) {
                    const Vector& z = points[zi];
                    Vector first = (adxy * f - f * adxy) * z;
                    LinearMap adyz = ad_map(a, y, z);
                    LinearMap adzx = ad_map(a, z, x);
                    Vector second = (adyz * f - f * adyz) * x;
                    Vector third = (adzx * f - f * adzx) * y;
                    cyclic.record_lazy(first == second && second == third, where);
                }
            }
        }
    }
    CheckReport rep;
    rep.add(vanishing.to_check("[x, f(x), y] = 0"));
    rep.add(commuting.to_check("ad(x,y) commutes with ad(f(x),y)"));
    rep.add(cyclic.to_check("((x,y)f)(z) is cyclic in x, y, z"));
    rep.add(powers.to_check("ad(f(x),y)^m = ad(x,y)^m f^m"));
    rep.add(shifted_powers.to_check("ad(x,y)^(m+1) f = ad(f(x),y) ad(x,y)^m"));
    return rep;
}

// For A = H (+) K (+) ... with Z(A) = 0: every generalized derivation keeps
// each block, and GDer, QDer split blockwise.
inline CheckReport direct_sum_theorems(const Algebra& a, const std::vector<Subspace>& blocks, const SpaceBundle& s) {
    CheckReport rep;
    const std::size_t n = a.dim();
    Tally keeps;
    auto gs = s.gder.maps();
    for (std::size_t gi = 0; gi < gs.size(); ++gi) {
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            for (const auto& v : blocks[b].basis_vectors()) {
                keeps.record_lazy(blocks[b].contains(gs[gi] * v), [&] {
                    return "GDer basis map " + std::to_string(gi) + " leaves block " + std::to_string(b + 1);
                });
            }
        }
    }
    rep.add(keeps.to_check("GDer keeps every block"));

    Matrix basis(n, n);
    std::size_t col = 0;
    for (const auto& blk : blocks) {
        for (const auto& v : blk.basis_vectors()) {
            basis.set_column(col++, v);
        }
    }
    auto inv = inverse(basis);
    if (col != n || !inv) {
        rep.add("blocks span the algebra", false);
        return rep;
    }
    std::vector<Vector> gder_parts;
    std::vector<Vector> qder_parts;
    std::size_t offset = 0;
    for (const auto& blk : blocks) {
        Algebra part = induced_algebra(a, blk);
        const std::size_t d = blk.dim();
        Matrix embed(n, d);
        Matrix project(d, n);
        for (std::size_t r = 0; r < d; ++r) {
            embed.set_column(r, blk.basis_vector(r));
            for (std::size_t c = 0; c < n; ++c) {
                project(r, c) = (*inv)(offset + r, c);
            }
        }
        offset += d;
        for (const auto& g : gder(part).maps()) {
            gder_parts.push_back(map_coords(embed * g * project));
        }
        for (const auto& g : qder(part).maps()) {
            qder_parts.push_back(map_coords(embed * g * project));
        }
    }
    Subspace gsum = Subspace::span(n * n, gder_parts);
    Subspace qsum = Subspace::span(n * n, qder_parts);
    rep.add("GDer is the sum of block GDer", gsum == s.gder.space,
            "dim block sum " + std::to_string(gsum.dim()) + ", dim GDer " + std::to_string(s.gder.dim()));
    rep.add("QDer is the sum of block QDer", qsum == s.qder.space,
            "dim block sum " + std::to_string(qsum.dim()) + ", dim QDer " + std::to_string(s.qder.dim()));
    return rep;
}

} // namespace trilie
