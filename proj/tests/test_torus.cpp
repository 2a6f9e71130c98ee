#include <gtest/gtest.h>

#include "trilie/catalog.hpp"
#include "trilie/sampling.hpp"
#include "trilie/torus_weights.hpp"

using namespace trilie;

namespace {

Torus unit_torus(std::size_t n, std::initializer_list<std::size_t> idx) {
    Torus t;
    for (auto i : idx) t.generators.push_back(unit_vector(n, i));
    return t;
}

WeightFunctional w(std::initializer_list<long> v) {
    WeightFunctional out;
    for (long x : v) out.values.push_back(x);
    return out;
}

std::string validation_error(const Algebra& a, const Torus& t) { return validate_torus(a, t).error; }

} // namespace

TEST(Torus, Validation) {
    Algebra a3 = catalog::A3();
    EXPECT_TRUE(validate_torus(a3, unit_torus(3, {1, 2})).valid());
    EXPECT_TRUE(validate_torus(abelian(3), unit_torus(3, {0, 1, 2})).valid());
    EXPECT_EQ(validation_error(catalog::B4(), unit_torus(4, {1, 2})), "ZeroWeightSpaceExceedsTorus");
    EXPECT_EQ(validation_error(a3, Torus{{Vector{0, 1, 0}, Vector{0, 2, 0}}}), "NotIndependent");
    EXPECT_EQ(validation_error(a3, unit_torus(3, {0, 1, 2})), "NotAbelian");
    EXPECT_EQ(validation_error(a3, unit_torus(3, {0, 1})), "NonDiagonalizable");
    EXPECT_EQ(validation_error(a3, Torus{{Vector{0, 1}}}), "DimensionMismatch");
    EXPECT_THROW(require_valid_torus(catalog::B4(), unit_torus(4, {1, 2})), InvalidTorus);
}

TEST(Torus, RootDecompositions) {
    Algebra a3 = catalog::A3();
    auto roots = root_decomposition(a3, unit_torus(3, {1, 2}));
    ASSERT_EQ(roots.entries.size(), 2u);
    EXPECT_EQ(roots.zero_part(), Subspace::span(3, {Vector{0, 1, 0}, Vector{0, 0, 1}}));
    EXPECT_EQ(roots.of(w({1})), Subspace::span(3, {Vector{1, 0, 0}}));
    EXPECT_EQ(fitting_one_part(roots), Subspace::span(3, {Vector{1, 0, 0}}));

    auto ab = root_decomposition(abelian(2), unit_torus(2, {0, 1}));
    ASSERT_EQ(ab.entries.size(), 1u);
    EXPECT_TRUE(ab.entries[0].weight.is_zero());

    Algebra aa = catalog::A3_plus_A3();
    auto product = root_decomposition(aa, unit_torus(6, {1, 2, 4, 5}));
    auto nonzero = product.nonzero_weights();
    ASSERT_EQ(nonzero.size(), 2u);
    for (const auto& weight : nonzero) EXPECT_EQ(product.of(weight).dim(), 1u);
}

TEST(Torus, ActionOnMaps) {
    Algebra a3 = catalog::A3();
    Vector t1 = a3.basis(1), t2 = a3.basis(2);
    EXPECT_EQ(hom_action(a3, t1, t2, LinearMap::identity(3)), LinearMap(3, 3));
    LinearMap ad = ad_map(a3, t1, t2);
    EXPECT_EQ(hom_action(a3, t1, t2, ad), LinearMap(3, 3));
    LinearMap e = elementary_map(3, 0, 1);  // e2 -> e1
    EXPECT_EQ(hom_action(a3, t1, t2, e), e);
    Sampler s(6);
    for (int trial = 0; trial < 5; ++trial) {
        LinearMap f = s.map(3);
        EXPECT_EQ(hom_action_operator(ad) * map_coords(f), map_coords(hom_action(a3, t1, t2, f)));
    }
}

TEST(Torus, BinomialExpansion) {
    Algebra a = catalog::B4();
    Sampler s(12);
    LinearMap ad = ad_map(a, s.vector(4), s.vector(4));
    LinearMap f = s.map(4);
    LinearMap iterated = f;
    for (unsigned m = 1; m <= 4; ++m) {
        iterated = ad * iterated - iterated * ad;
        EXPECT_EQ(binomial_expansion(ad, f, m), iterated) << m;
        if (iterated != LinearMap(4, 4)) {
            EXPECT_NE(binomial_expansion_shifted_sign(ad, f, m), iterated) << m;
        }
    }
    EXPECT_EQ(binomial_expansion(ad, f, 0), f);
}

TEST(Torus, A3Weights) {
    Algebra a3 = catalog::A3();
    Torus t = unit_torus(3, {1, 2});
    SpaceBundle s = compute_spaces(a3);
    auto q = weight_decomposition_of(s.qder, a3, t);
    ASSERT_EQ(q.entries.size(), 3u);
    EXPECT_EQ(q.of(w({-1})).dim(), 2u);
    EXPECT_EQ(q.of(w({0})).dim(), 5u);
    EXPECT_EQ(q.of(w({1})).dim(), 2u);
    // e2 -> e1 and e3 -> e1 carry weight 1 under this orientation
    EXPECT_EQ(q.of(w({1})), Subspace::span(9, {map_coords(elementary_map(3, 0, 1)),
                                               map_coords(elementary_map(3, 0, 2))}));
    EXPECT_TRUE(s.der.space.contains(q.of(w({1}))));
    EXPECT_FALSE(s.der.space.contains(q.of(w({-1}))));

    auto qc = weight_decomposition_of(s.quasicentroid, a3, t);
    EXPECT_EQ(qc.zero_part(), s.centroid.space);

    // reversing the generators negates every weight
    auto flipped = weight_decomposition_of(s.qder, a3, unit_torus(3, {2, 1}));
    EXPECT_EQ(flipped.of(w({-1})), q.of(w({1})));
    EXPECT_TRUE(s.der.space.contains(flipped.of(w({-1}))));
    EXPECT_FALSE(s.der.space.contains(flipped.of(w({1}))));
}

TEST(Torus, AbelianEverythingWeightZero) {
    Algebra ab = abelian(2);
    auto q = weight_decomposition_of(qder(ab), ab, unit_torus(2, {0, 1}));
    ASSERT_EQ(q.entries.size(), 1u);
    EXPECT_TRUE(q.zero_part().is_full());
}

TEST(Torus, StructureChecksPass) {
    struct Case {
        std::string name;
        Torus torus;
    };
    std::vector<Case> cases = {{"A3", unit_torus(3, {1, 2})},
                               {"A3+A3", unit_torus(6, {1, 2, 4, 5})},
                               {"abelian(2)", unit_torus(2, {0, 1})}};
    for (const auto& c : cases) {
        Algebra a = catalog::load(c.name).algebra;
        WeightAnalysis wa = structure_checks(a, c.torus);
        EXPECT_GT(wa.report.checks().size(), 5u);
        for (const auto& ch : wa.report.checks()) EXPECT_TRUE(ch.passed) << c.name << ": " << ch.name << " " << ch.detail;
    }
}

TEST(Torus, CentralizerAndCoordinates) {
    Algebra a3 = catalog::A3();
    Torus t = unit_torus(3, {1, 2});
    EXPECT_TRUE(torus_centralizer(a3, t).is_zero());
    Algebra b = catalog::A3_plus_abelian1();
    EXPECT_EQ(torus_centralizer(b, unit_torus(4, {1, 2, 3})), Subspace::span(4, {Vector{0, 0, 0, 1}}));
    auto c = torus_coordinates(t, Vector{0, 2, -1});
    ASSERT_TRUE(c.has_value());
    EXPECT_EQ(*c, (Vector{2, -1}));
    EXPECT_FALSE(torus_coordinates(t, Vector{1, 0, 0}).has_value());
    EXPECT_EQ(w({3}).eval(Vector{1, 0}, Vector{0, 1}), Scalar(3));
    EXPECT_EQ(w({3}).eval(Vector{0, 1}, Vector{1, 0}), Scalar(-3));
}

TEST(SumDecomposition, QuasicentroidSplitsOverBlocks) {
    Algebra b = catalog::A3_plus_abelian1();
    auto one = check_sum_decomposable(b, {Subspace::full(4)});
    EXPECT_TRUE(one.report.all_passed());

    auto d = check_sum_decomposable(b, block_subspaces(4, {{0, 1, 2}, {3}}));
    EXPECT_TRUE(d.report.all_passed());
    EXPECT_EQ(d.quasicentroid, d.block_sum);
    // Hom(A3 block, e4 line) lies in Gamma_12 since the abelian block is central
    std::size_t into_abelian = 0;
    for (const auto& [ij, dim] : d.cross_dims) {
        if (ij.first == 0 && ij.second == 1) into_abelian = dim;
    }
    EXPECT_EQ(into_abelian, 3u);

    Algebra aa = catalog::A3_plus_A3();
    auto e = check_sum_decomposable(aa, block_subspaces(6, {{0, 1, 2}, {3, 4, 5}}));
    EXPECT_TRUE(e.report.all_passed());
    for (const auto& [ij, dim] : e.cross_dims) EXPECT_EQ(dim, 0u);
    EXPECT_EQ(e.quasicentroid.dim(), 2u);

    EXPECT_THROW(check_sum_decomposable(aa, block_subspaces(6, {{0, 1, 3}, {2, 4, 5}})), BlocksNotValid);
}
