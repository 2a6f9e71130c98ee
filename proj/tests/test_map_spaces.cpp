#include <gtest/gtest.h>

#include <functional>

#include "trilie/catalog.hpp"
#include "trilie/map_spaces.hpp"
#include "trilie/map_theorems.hpp"
#include "trilie/sampling.hpp"

using namespace trilie;

namespace {

using Defect = std::function<Vector(const std::vector<LinearMap>&)>;

// Kernel of a linear defect, found by feeding it every elementary tuple of
// maps. The defect is built only from bracket() calls, so this is a second
// implementation of each constraint system.
Subspace kernel_of_defect(std::size_t n, std::size_t slots, const Defect& defect) {
    const std::size_t w = n * n;
    std::vector<Vector> columns;
    for (std::size_t s = 0; s < slots; ++s) {
        for (std::size_t idx = 0; idx < w; ++idx) {
            std::vector<LinearMap> maps(slots, LinearMap(n, n));
            maps[s](idx / n, idx % n) = 1;
            columns.push_back(defect(maps));
        }
    }
    Matrix m(columns.front().size(), columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        m.set_column(c, columns[c]);
    }
    return nullspace(m);
}

Vector leibniz_defect(const Algebra& a, const LinearMap& f1, const LinearMap& f2, const LinearMap& f3,
                      const LinearMap& fp) {
    const std::size_t n = a.dim();
    Vector out;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vector x = a.basis(i), y = a.basis(j), z = a.basis(k);
                Vector d = sub(add(add(a.bracket(f1 * x, y, z), a.bracket(x, f2 * y, z)), a.bracket(x, y, f3 * z)),
                               fp * a.bracket(x, y, z));
                out.insert(out.end(), d.begin(), d.end());
            }
    return out;
}

Subspace oracle_der(const Algebra& a) {
    return kernel_of_defect(a.dim(), 1, [&](const std::vector<LinearMap>& f) {
        return leibniz_defect(a, f[0], f[0], f[0], f[0]);
    });
}

Subspace oracle_pairs(const Algebra& a) {
    return kernel_of_defect(a.dim(), 2, [&](const std::vector<LinearMap>& f) {
        return leibniz_defect(a, f[0], f[0], f[0], f[1]);
    });
}

Subspace oracle_delta(const Algebra& a) {
    // slot order matches the stored quadruple coordinates
    return kernel_of_defect(a.dim(), 4, [&](const std::vector<LinearMap>& f) {
        return leibniz_defect(a, f[0], f[1], f[2], f[3]);
    });
}

Subspace oracle_slots(const Algebra& a, bool with_image) {
    const std::size_t n = a.dim();
    return kernel_of_defect(n, 1, [&](const std::vector<LinearMap>& fs) {
        const LinearMap& f = fs[0];
        Vector out;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) {
                    Vector x = a.basis(i), y = a.basis(j), z = a.basis(k);
                    Vector s1 = a.bracket(f * x, y, z), s2 = a.bracket(x, f * y, z), s3 = a.bracket(x, y, f * z);
                    Vector d1 = sub(s1, s2), d2 = sub(s2, s3);
                    out.insert(out.end(), d1.begin(), d1.end());
                    out.insert(out.end(), d2.begin(), d2.end());
                    if (with_image) {
                        Vector d3 = sub(s3, f * a.bracket(x, y, z));
                        out.insert(out.end(), d3.begin(), d3.end());
                    }
                }
        return out;
    });
}

std::vector<std::string> all_names() { return catalog::names(); }

} // namespace

TEST(MapSpaces, A3DerivationsHaveTheExpectedShape) {
    Algebra a = catalog::A3();
    MapSpace d = der(a);
    EXPECT_EQ(d.dim(), 6u);
    for (const auto& f : d.maps()) {
        Matrix m = row_image_form(f);
        EXPECT_EQ(m(0, 1), 0);
        EXPECT_EQ(m(0, 2), 0);
        EXPECT_EQ(m(2, 2), -m(1, 1));
        EXPECT_TRUE(is_derivation(a, f));
    }
    // the family a12 = a13 = 0, a33 = -a22 is exactly 6-dimensional, so it is Der
    std::vector<Vector> family;
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c) {
            if ((r == 0 && c > 0) || (r == 2 && c == 2)) {
                continue;
            }
            Matrix m(3, 3);
            m(r, c) = 1;
            if (r == 1 && c == 1) {
                m(2, 2) = -1;
            }
            family.push_back(map_coords(from_row_image_form(m)));
        }
    EXPECT_EQ(Subspace::span(9, family), d.space);
}

TEST(MapSpaces, AgreeWithBruteForceOracles) {
    for (const auto& name : all_names()) {
        Algebra a = catalog::load(name).algebra;
        EXPECT_EQ(der(a).space, oracle_der(a)) << name;
        EXPECT_EQ(qder_pairs(a).space, oracle_pairs(a)) << name;
        EXPECT_EQ(centroid(a).space, oracle_slots(a, true)) << name;
        EXPECT_EQ(quasicentroid(a).space, oracle_slots(a, false)) << name;
        if (a.dim() <= 4) {
            EXPECT_EQ(delta_space(a).space, oracle_delta(a)) << name;
        }
    }
}

TEST(MapSpaces, AbelianAlgebras) {
    for (std::size_t n = 1; n <= 3; ++n) {
        Algebra a = abelian(n);
        EXPECT_EQ(der(a).dim(), n * n);
        EXPECT_EQ(inner_der(a).dim(), 0u);
        EXPECT_EQ(zder(a).dim(), n * n);
        EXPECT_EQ(centroid(a).dim(), n * n);
        EXPECT_EQ(quasicentroid(a).dim(), n * n);
        EXPECT_EQ(delta_space(a).dim(), 4 * n * n);
    }
}

TEST(MapSpaces, InnerDerivations) {
    Algebra a = catalog::A3();
    MapSpace inner = inner_der(a);
    EXPECT_EQ(inner.dim(), 3u);
    for (const auto& f : inner.maps()) {
        Matrix m = row_image_form(f);
        // only the first column of the row-image form is nonzero
        for (std::size_t r = 0; r < 3; ++r) {
            EXPECT_EQ(m(r, 1), 0);
            EXPECT_EQ(m(r, 2), 0);
        }
    }
    for (const auto& name : all_names()) {
        Algebra b = catalog::load(name).algebra;
        EXPECT_TRUE(der(b).space.contains(inner_der(b).space)) << name;
    }
}

TEST(MapSpaces, CentralDerivations) {
    EXPECT_EQ(zder(catalog::A3()).dim(), 0u);
    MapSpace z = zder(catalog::B4());
    EXPECT_EQ(z.dim(), 3u);
    for (const auto& f : z.maps()) {
        Matrix m = row_image_form(f);
        EXPECT_EQ(m(0, 3), 0);
        for (std::size_t r = 0; r < 4; ++r)
            for (std::size_t c = 0; c < 3; ++c) EXPECT_EQ(m(r, c), 0);
    }
}

TEST(MapSpaces, CentroidAndQuasicentroid) {
    for (const auto& name : all_names()) {
        Algebra a = catalog::load(name).algebra;
        MapSpace g = centroid(a);
        EXPECT_TRUE(g.contains(LinearMap::identity(a.dim()))) << name;
        EXPECT_TRUE(quasicentroid(a).space.contains(g.space)) << name;
        EXPECT_TRUE(qder(a).space.contains(g.space)) << name;
        for (const auto& f : quasicentroid(a).maps()) {
            EXPECT_TRUE(is_quasicentroid_map(a, f)) << name;
        }
    }
}

TEST(MapSpaces, A3PairCompanion) {
    Algebra a = catalog::A3();
    MapSpace pairs = qder_pairs(a);
    EXPECT_EQ(pairs.dim(), 15u);
    for (const auto& p : pairs.pairs()) {
        Matrix f = row_image_form(p.f);
        Matrix fp = row_image_form(p.fprime);
        EXPECT_EQ(fp(0, 0), f(0, 0) + f(1, 1) + f(2, 2));
        EXPECT_EQ(fp(0, 1), 0);
        EXPECT_EQ(fp(0, 2), 0);
        EXPECT_TRUE(is_quasiderivation_pair(a, p));
    }
    EXPECT_EQ(qder(a).dim(), 9u);
    EXPECT_EQ(gder(a).dim(), 9u);
}

TEST(MapSpaces, B4QuasiderivationsKillTheLastRow) {
    Algebra a = catalog::B4();
    MapSpace q = qder(a);
    EXPECT_LT(q.dim(), 16u);
    for (const auto& f : q.maps()) {
        Matrix m = row_image_form(f);
        EXPECT_EQ(m(3, 0), 0);
        EXPECT_EQ(m(3, 1), 0);
        EXPECT_EQ(m(3, 2), 0);
    }
    EXPECT_FALSE(q.contains(elementary_map(4, 0, 3)));
}

TEST(MapSpaces, InclusionChain) {
    for (const auto& name : all_names()) {
        Algebra a = catalog::load(name).algebra;
        SpaceBundle s = compute_spaces(a);
        EXPECT_TRUE(s.der.space.contains(s.inner.space)) << name;
        EXPECT_TRUE(s.qder.space.contains(s.der.space)) << name;
        EXPECT_TRUE(s.gder.space.contains(s.qder.space)) << name;
        EXPECT_TRUE(s.der.space.contains(s.zder.space)) << name;
    }
}

TEST(MapSpaces, CompleteToQuadruple) {
    Algebra a = catalog::A3();
    auto zero = complete_to_quadruple(a, LinearMap(3, 3));
    EXPECT_TRUE(satisfies_generalized_leibniz(a, zero));
    EXPECT_TRUE(is_zero(zero.fprime * (Vector{1, 0, 0})));

    auto id = complete_to_quadruple(a, LinearMap::identity(3));
    EXPECT_TRUE(satisfies_generalized_leibniz(a, id));
    EXPECT_EQ(id.fprime * (Vector{1, 0, 0}), (Vector{3, 0, 0}));

    LinearMap e11 = elementary_map(3, 0, 0);
    auto q = complete_to_quadruple(a, e11);
    EXPECT_EQ(q.f1, e11);
    Vector lhs = add(add(a.bracket(q.f1 * a.basis(0), a.basis(1), a.basis(2)),
                         a.bracket(a.basis(0), q.f2 * a.basis(1), a.basis(2))),
                     a.bracket(a.basis(0), a.basis(1), q.f3 * a.basis(2)));
    EXPECT_EQ(lhs, q.fprime * a.basis_bracket(0, 1, 2));
    EXPECT_TRUE(satisfies_generalized_leibniz(a, q));

    EXPECT_THROW(complete_to_quadruple(catalog::B4(), elementary_map(4, 0, 3)), NotAGeneralizedDerivation);
}

TEST(MapSpaces, SplitGeneralizedDerivations) {
    Algebra a = catalog::A3();
    MapSpace p = qder_pairs(a);
    for (const auto& pair : p.pairs()) {
        auto s = split_gder(a, {pair.f, pair.f, pair.f, pair.fprime});
        for (const auto& c : s.qc_parts) EXPECT_EQ(c, LinearMap(3, 3));
        EXPECT_EQ(s.qder_part.f, pair.f);
    }
    Algebra ab = abelian(2);
    GenDerQuadruple any{LinearMap::identity(2), -1 * LinearMap::identity(2), LinearMap(2, 2),
                        elementary_map(2, 0, 1)};
    auto s = split_gder(ab, any);
    EXPECT_EQ(s.qder_part.f + s.qc_parts[0], any.f1);
    EXPECT_EQ(s.qder_part.f + s.qc_parts[1], any.f2);
    EXPECT_EQ(s.qder_part.f + s.qc_parts[2], any.f3);

    MapSpace qc = quasicentroid(a);
    for (const auto& q : delta_space(a).quadruples()) {
        auto sp = split_gder(a, q);
        Vector coords = map_coords(sp.qder_part.f);
        Vector companion = map_coords(sp.qder_part.fprime);
        coords.insert(coords.end(), companion.begin(), companion.end());
        EXPECT_TRUE(p.space.contains(coords));
        for (const auto& c : sp.qc_parts) EXPECT_TRUE(qc.contains(c));
    }
    EXPECT_THROW(split_gder(a, {LinearMap(3, 3), LinearMap(3, 3), LinearMap(3, 3), LinearMap::identity(3)}),
                 NotInDelta);
}

TEST(MapSpaces, BracketOfMaps) {
    Sampler s(4);
    LinearMap f = s.map(3);
    LinearMap g = s.map(3);
    EXPECT_EQ(map_bracket(f, f), LinearMap(3, 3));
    EXPECT_EQ(map_bracket(LinearMap::identity(3), g), LinearMap(3, 3));
    EXPECT_EQ(map_bracket(f, g), -1 * map_bracket(g, f));
    MapSpace q = qder(catalog::B4());
    for (const auto& x : q.maps())
        for (const auto& y : q.maps()) EXPECT_TRUE(q.contains(map_bracket(x, y)));
}

TEST(MapSpaces, TheoremSuitePasses) {
    for (const auto& name : all_names()) {
        Algebra a = catalog::load(name).algebra;
        SpaceBundle s = compute_spaces(a);
        CheckReport rep = map_space_theorems(a, s);
        for (const auto& c : rep.checks()) EXPECT_TRUE(c.passed) << name << ": " << c.name << " " << c.detail;
        CheckReport ids = quasicentroid_identities(a, s.quasicentroid, 3, 5, 1);
        for (const auto& c : ids.checks()) EXPECT_TRUE(c.passed) << name << ": " << c.name << " " << c.detail;
    }
}
