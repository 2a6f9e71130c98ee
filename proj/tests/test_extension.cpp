#include <gtest/gtest.h>

#include "trilie/catalog.hpp"
#include "trilie/tensor_extension.hpp"

using namespace trilie;

TEST(Extension, AbelianStaysAbelian) {
    ExtendedAlgebra e = extend(abelian(2));
    EXPECT_EQ(e.algebra.dim(), 6u);
    EXPECT_TRUE(e.algebra.constants().entries().empty());
    EXPECT_TRUE(e.u_complement.is_full());
    EXPECT_TRUE(der(e.algebra).space.is_full());
}

TEST(Extension, A3Brackets) {
    ExtendedAlgebra e = extend(catalog::A3());
    ASSERT_EQ(e.algebra.dim(), 9u);
    const auto& entries = e.algebra.constants().entries();
    ASSERT_EQ(entries.size(), 1u);
    EXPECT_EQ(entries.begin()->first, (std::array<std::size_t, 3>{0, 1, 2}));
    EXPECT_EQ(entries.begin()->second, unit_vector(9, e.index(0, 3)));
    EXPECT_EQ(center(e.algebra), upper_blocks(e));
}

TEST(Extension, EmbeddingOfIdentityPair) {
    Algebra a = catalog::A3();
    ExtendedAlgebra e = extend(a);
    LinearMap fp = Scalar(3) * LinearMap::identity(3);
    LinearMap l = embed_qder(e, {LinearMap::identity(3), fp});
    for (std::size_t i = 0; i < 3; ++i) {
        EXPECT_EQ(l * unit_vector(9, e.index(i, 1)), unit_vector(9, e.index(i, 1)));
        EXPECT_TRUE(is_zero(l * unit_vector(9, e.index(i, 2))));
    }
    EXPECT_EQ(l * unit_vector(9, e.index(0, 3)), scale(Scalar(3), unit_vector(9, e.index(0, 3))));
    EXPECT_TRUE(is_zero(l * unit_vector(9, e.index(1, 3))));
    EXPECT_TRUE(is_zero(l * unit_vector(9, e.index(2, 3))));
    EXPECT_TRUE(is_derivation(e.algebra, l));

    // only f' on A^1 matters
    LinearMap other = fp;
    other(1, 1) = 7;
    other(2, 1) = -2;
    EXPECT_EQ(embed_qder(e, {LinearMap::identity(3), other}), l);

    EXPECT_THROW(embed_qder(e, {LinearMap::identity(3), LinearMap::identity(3)}), InvalidPair);
}

TEST(Extension, ZeroPairEmbedsToZero) {
    ExtendedAlgebra e = extend(catalog::B4());
    EXPECT_EQ(embed_qder(e, {LinearMap(4, 4), LinearMap(4, 4)}), LinearMap(12, 12));
}

TEST(Extension, ImageInsideDerivations) {
    ExtendedAlgebra one = extend(abelian(1));
    auto ab = analyze_embedding(one, qder_pairs(abelian(1)));
    EXPECT_TRUE(ab.report.all_passed());

    for (const auto& name : {"A3", "B4", "A3+abelian(1)"}) {
        Algebra a = catalog::load(name).algebra;
        ExtendedAlgebra e = extend(a);
        auto an = analyze_embedding(e, qder_pairs(a));
        for (const auto& c : an.report.checks()) EXPECT_TRUE(c.passed) << name << ": " << c.name << " " << c.detail;
        EXPECT_EQ(an.image.dim(), an.qder_dim) << name;
    }
}

TEST(Extension, SemidirectSplitForA3) {
    Algebra a = catalog::A3();
    ExtendedAlgebra e = extend(a);
    auto an = analyze_embedding(e, qder_pairs(a));
    SemidirectSplit s = semidirect_check(e, an);
    for (const auto& c : s.report.checks()) EXPECT_TRUE(c.passed) << c.name << " " << c.detail;
    EXPECT_EQ(s.image_dim, 9u);
    EXPECT_EQ(s.der_dim, s.image_dim + s.central_dim);
    EXPECT_EQ(s.der_dim, 57u);
    EXPECT_EQ(subspace_intersect(an.image.space, zder(e.algebra).space).dim(), 0u);

    ExtendedAlgebra eb = extend(catalog::B4());
    auto bn = analyze_embedding(eb, qder_pairs(catalog::B4()));
    EXPECT_THROW(semidirect_check(eb, bn), CenterNotZero);
}

TEST(Extension, LieCenter) {
    // gl(1) is abelian, so its centre is everything
    MapSpace one = der(abelian(1));
    EXPECT_EQ(lie_center(one).dim(), 1u);
    // Der of A3 has trivial centre
    EXPECT_TRUE(lie_center(der(catalog::A3())).is_zero());
}
