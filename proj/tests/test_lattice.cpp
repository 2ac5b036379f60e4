#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pixoct/lattice.hpp"
#include "pixoct/rasterizer.hpp"

using namespace pixoct;

namespace {

PixelShape block(int half_side_doubled, LatticeParity p = LatticeParity::odd_centered) {
    std::vector<DoubledCoord> cells;
    const int off = lattice_offset(p);
    for (int v = -half_side_doubled + off; v <= half_side_doubled; v += 2)
        for (int u = -half_side_doubled + off; u <= half_side_doubled; u += 2)
            cells.push_back({u, v});
    return PixelShape(p, cells);
}

PixelShape random_shape(std::mt19937& rng, LatticeParity p, int radius, double density) {
    std::bernoulli_distribution keep(density);
    std::vector<DoubledCoord> cells;
    const int off = lattice_offset(p);
    const int start = -radius - ((radius & 1) != off ? 1 : 0);
    for (int v = start; v <= radius; v += 2)
        for (int u = start; u <= radius; u += 2)
            if (keep(rng))
                cells.push_back({u, v});
    return PixelShape(p, cells);
}

} // namespace

TEST(Neighbors, OriginOnOddLattice) {
    const auto n = neighbors4({0, 0});
    const std::vector<DoubledCoord> got(n.begin(), n.end());
    const std::vector<DoubledCoord> want{{2, 0}, {-2, 0}, {0, 2}, {0, -2}};
    EXPECT_EQ(got, want);
}

TEST(Neighbors, HalfIntegerCenter) {
    const auto n = neighbors4({1, 1});
    const std::vector<DoubledCoord> got(n.begin(), n.end());
    const std::vector<DoubledCoord> want{{3, 1}, {-1, 1}, {1, 3}, {1, -1}};
    EXPECT_EQ(got, want);
}

TEST(Neighbors, SymmetricAndParityPreserving) {
    for (int u = -5; u <= 5; ++u) {
        for (int v = -5; v <= 5; ++v) {
            if ((u - v) % 2 != 0)
                continue;
            const DoubledCoord c{u, v};
            const auto ns = neighbors4(c);
            EXPECT_EQ(std::count(ns.begin(), ns.end(), c), 0);
            for (const auto& n : ns) {
                EXPECT_EQ((n.u - c.u) % 2, 0);
                const auto back = neighbors4(n);
                EXPECT_EQ(std::count(back.begin(), back.end(), c), 1);
                // |Δx| + |Δy| = 1 in pixel units.
                EXPECT_EQ(std::abs(n.u - c.u) + std::abs(n.v - c.v), 2);
            }
        }
    }
}

TEST(PixelShape, RejectsOffLatticeCells) {
    EXPECT_THROW(PixelShape(LatticeParity::odd_centered, {{1, 1}}), std::invalid_argument);
    EXPECT_THROW(PixelShape(LatticeParity::even_centered, {{0, 0}}), std::invalid_argument);
    EXPECT_THROW(PixelShape(LatticeParity::odd_centered, {{0, 1}}), std::invalid_argument);
}

TEST(PixelShape, DeduplicatesAndSortsRowMajor) {
    const PixelShape s(LatticeParity::odd_centered, {{2, 2}, {0, 0}, {-2, 2}, {0, 0}, {4, -2}});
    ASSERT_EQ(s.size(), 4u);
    const std::vector<DoubledCoord> want{{4, -2}, {0, 0}, {-2, 2}, {2, 2}};
    EXPECT_TRUE(std::equal(s.begin(), s.end(), want.begin(), want.end()));
    EXPECT_TRUE(s.contains({-2, 2}));
    EXPECT_FALSE(s.contains({0, 2}));
    EXPECT_FALSE(s.contains({1, 1}));
    EXPECT_FALSE(s.contains({100, 100}));
}

TEST(PixelShape, EmptyShapeIsAlgebraicOnly) {
    const PixelShape empty(LatticeParity::even_centered);
    EXPECT_TRUE(empty.empty());
    EXPECT_FALSE(empty.bounds().has_value());
    EXPECT_FALSE(empty.contains({1, 1}));
    EXPECT_THROW(measure(empty), EmptyShapeError);
    EXPECT_TRUE(bounding_line(empty).empty());
}

TEST(BoundingLine, SinglePixelIsItsOwnBoundary) {
    const PixelShape one(LatticeParity::odd_centered, {{0, 0}});
    EXPECT_EQ(bounding_line(one), one);
    EXPECT_EQ(measure(one), (ShapeMetrics{1, 1, 1}));
}

TEST(BoundingLine, ThreeByThreeBlockDropsCenter) {
    const auto b = block(2);
    ASSERT_EQ(b.size(), 9u);
    const auto rim = bounding_line(b);
    EXPECT_EQ(rim.size(), 8u);
    EXPECT_FALSE(rim.contains({0, 0}));
    EXPECT_EQ(measure(b), (ShapeMetrics{9, 8, 3}));
}

TEST(BoundingLine, OctagonFourteenHas36Cells) {
    const auto oct = make_octagon(OctagonSpec(14));
    EXPECT_EQ(bounding_line(oct).size(), 36u);
    EXPECT_EQ(measure(oct), (ShapeMetrics{132, 36, 14}));
}

TEST(Measure, OctagonFiftyTwo) {
    EXPECT_EQ(measure(make_octagon(OctagonSpec(52))), (ShapeMetrics{1804, 136, 52}));
}

TEST(Measure, DiameterUsesLongerAxis) {
    const PixelShape bar(LatticeParity::odd_centered, {{0, 0}, {2, 0}, {4, 0}, {6, 0}});
    EXPECT_EQ(measure(bar).diameter, 4);
    EXPECT_EQ(measure(bar).perimeter, 4);
}

TEST(SetAlgebra, IdenticalAndDisjoint) {
    const auto b = block(2);
    EXPECT_EQ(intersection_count(b, b), 9);
    EXPECT_EQ(union_count(b, b), 9);
    EXPECT_TRUE(equals(b, b));

    const PixelShape p(LatticeParity::odd_centered, {{0, 0}});
    const PixelShape q(LatticeParity::odd_centered, {{4, 4}});
    EXPECT_EQ(intersection_count(p, q), 0);
    EXPECT_EQ(union_count(p, q), 2);
    EXPECT_FALSE(equals(p, q));
}

TEST(SetAlgebra, OctagonThreeAgainstDiscThree) {
    const auto oct = make_octagon(OctagonSpec(3));
    const auto disc = make_disc(DiscSpec(3));
    EXPECT_EQ(intersection_count(oct, disc), 5);
    EXPECT_EQ(union_count(oct, disc), 9);
}

TEST(SetAlgebra, ParityMismatchIsRejected) {
    const auto odd = make_disc(DiscSpec(3));
    const auto even = make_disc(DiscSpec(4));
    EXPECT_THROW(intersection_count(odd, even), ParityMismatch);
    EXPECT_THROW(union_count(odd, even), ParityMismatch);
    EXPECT_THROW(equals(odd, even), ParityMismatch);
    try {
        intersection_count(odd, even);
    } catch (const ParityMismatch& e) {
        EXPECT_STREQ(e.what(), "shapes on incompatible lattices");
    }
}

TEST(SetAlgebraProperty, InclusionExclusionOnRandomShapes) {
    std::mt19937 rng(20221102);
    for (int trial = 0; trial < 200; ++trial) {
        const auto p = trial % 2 ? LatticeParity::odd_centered : LatticeParity::even_centered;
        const auto a = random_shape(rng, p, 12, 0.4);
        const auto b = random_shape(rng, p, 12, 0.6);
        std::int64_t brute = 0;
        for (const auto& c : a)
            brute += std::count(b.begin(), b.end(), c);
        EXPECT_EQ(intersection_count(a, b), brute);
        EXPECT_EQ(union_count(a, b), static_cast<std::int64_t>(a.size() + b.size()) - brute);
        EXPECT_EQ(intersection_count(a, b), intersection_count(b, a));
    }
}

TEST(BoundingLineProperty, MatchesDefinitionAndPeelsOneLayer) {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        const auto p = trial % 2 ? LatticeParity::odd_centered : LatticeParity::even_centered;
        const auto s = random_shape(rng, p, 10, 0.7);
        if (s.empty())
            continue;
        const auto rim = bounding_line(s);
        std::set<std::pair<int, int>> got;
        for (const auto& c : rim)
            got.insert({c.u, c.v});
        EXPECT_EQ(got, oracle::bounding_line(s));
        EXPECT_TRUE(is_subset(rim, s));
        const auto inner = difference(s, rim);
        EXPECT_EQ(static_cast<std::int64_t>(inner.size()), measure(s).area - measure(s).perimeter);
        EXPECT_LE(measure(s).perimeter, measure(s).area);
        EXPECT_GE(measure(s).perimeter, 1);
    }
}

TEST(MeasureProperty, InvariantUnderSymmetryAndTranslation) {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> shift(-20, 20);
    for (int trial = 0; trial < 60; ++trial) {
        const auto p = trial % 2 ? LatticeParity::odd_centered : LatticeParity::even_centered;
        const auto s = random_shape(rng, p, 9, 0.5);
        if (s.empty())
            continue;
        const auto m = measure(s);
        for (auto sym : all_symmetries)
            EXPECT_EQ(measure(transformed(s, sym)), m);
        EXPECT_EQ(measure(translated(s, 2 * shift(rng), 2 * shift(rng))), m);
    }
    EXPECT_THROW(translated(block(2), 1, 0), std::invalid_argument);
}
