#include <gtest/gtest.h>

#include <map>

#include "oracles.hpp"
#include "pixoct/rasterizer.hpp"
#include "pixoct/verify.hpp"

using namespace pixoct;

namespace {

/// Row widths for v >= 0, center row outward.
std::vector<int> upper_row_widths(const PixelShape& s) {
    std::map<int, int> rows;
    for (const auto& c : s)
        if (c.v >= 0)
            ++rows[c.v];
    std::vector<int> out;
    for (const auto& [v, n] : rows)
        out.push_back(n);
    return out;
}

} // namespace

TEST(Specs, RejectNonPositiveDiameters) {
    EXPECT_THROW(DiscSpec(0), DomainError);
    EXPECT_THROW(OctagonSpec(-3), DomainError);
}

TEST(Specs, OctagonParameters) {
    const OctagonSpec s(13);
    EXPECT_EQ(s.vertex_distance(), Rational(25, 4)); // (13 - 0.5) / 2
    EXPECT_EQ(s.block_count(), 2);
    EXPECT_EQ(s.type_class(), 1);
    EXPECT_EQ(s.parity(), LatticeParity::odd_centered);
    EXPECT_EQ(OctagonSpec(12).parity(), LatticeParity::even_centered);
}

TEST(Disc, SmallDiameters) {
    EXPECT_EQ(make_disc(DiscSpec(1)).size(), 1u);
    const auto d2 = make_disc(DiscSpec(2));
    const PixelShape four(LatticeParity::even_centered, {{1, 1}, {-1, 1}, {1, -1}, {-1, -1}});
    EXPECT_EQ(d2, four);
    EXPECT_EQ(d2, make_octagon(OctagonSpec(2)));
    EXPECT_EQ(make_disc(DiscSpec(3)).size(), 9u);
}

TEST(Disc, NineHasRowWidths) {
    const auto d = make_disc(DiscSpec(9));
    EXPECT_EQ(d.size(), 69u);
    EXPECT_EQ(upper_row_widths(d), (std::vector<int>{9, 9, 9, 7, 5}));
}

TEST(HalfPlanes, ReducedPredicateExamples) {
    auto inside = [](int d, DoubledCoord c) {
        const auto planes = octagon_halfplanes(OctagonSpec(d));
        return std::all_of(planes.begin(), planes.end(), [&](const HalfPlane& h) { return h.admits(c); });
    };
    EXPECT_TRUE(inside(7, {4, 4}));  // 2·4 + 4 = 12 <= 13
    EXPECT_FALSE(inside(7, {2, 6})); // 2 + 2·6 = 14 > 13
    EXPECT_TRUE(inside(8, {7, 1}));  // 2·7 + 1 = 15 <= 15, closed boundary
    EXPECT_FALSE(inside(8, {9, 1}));
}

TEST(HalfPlanes, EightIntegerConstraints) {
    const auto planes = octagon_halfplanes(OctagonSpec(10));
    EXPECT_EQ(planes.size(), 8u);
    for (const auto& h : planes) {
        EXPECT_TRUE(h.p != 0 || h.q != 0);
        EXPECT_EQ(h.r, 19);
    }
}

TEST(ConvexPolygon, AxisBox) {
    const std::vector<HalfPlane> box{{1, 0, 2}, {-1, 0, 2}, {0, 1, 2}, {0, -1, 2}};
    const auto s = make_convex_polygon(box, LatticeParity::odd_centered, LatticeBox::centered(7));
    EXPECT_EQ(s.size(), 9u);
    EXPECT_EQ(measure(s), (ShapeMetrics{9, 8, 3}));
}

TEST(ConvexPolygon, OctagonThirteenFromPlanes) {
    const auto planes = octagon_halfplanes(OctagonSpec(13));
    const auto s = make_convex_polygon(planes, LatticeParity::odd_centered, LatticeBox::centered(20));
    EXPECT_EQ(s.size(), 105u);
    EXPECT_EQ(measure(s).perimeter, 32);
}

TEST(ConvexPolygon, EmptyIntersectionIsEmptyShape) {
    const std::vector<HalfPlane> none{{1, 0, -4}, {-1, 0, -4}, {0, 1, 4}, {0, -1, 4}};
    const auto s = make_convex_polygon(none, LatticeParity::odd_centered, LatticeBox::centered(9));
    EXPECT_TRUE(s.empty());
}

TEST(ConvexPolygon, UnboundedRegionIsReported) {
    const std::vector<HalfPlane> half{{1, 0, 2}};
    EXPECT_THROW(make_convex_polygon(half, LatticeParity::odd_centered, LatticeBox::centered(9)), UnboundedRegion);
    const std::vector<HalfPlane> strip{{1, 0, 2}, {-1, 0, 2}};
    EXPECT_THROW(make_convex_polygon(strip, LatticeParity::odd_centered, LatticeBox::centered(9)), UnboundedRegion);
    const std::vector<HalfPlane> degenerate{{0, 0, 1}};
    EXPECT_THROW(make_convex_polygon(degenerate, LatticeParity::odd_centered, LatticeBox::centered(3)),
                 std::invalid_argument);
}

TEST(Octagon, TableEndpoints) {
    EXPECT_EQ(measure(make_octagon(OctagonSpec(1))), (ShapeMetrics{1, 1, 1}));
    EXPECT_EQ(measure(make_octagon(OctagonSpec(24))), (ShapeMetrics{384, 60, 24}));
    EXPECT_EQ(measure(make_octagon(OctagonSpec(52))), (ShapeMetrics{1804, 136, 52}));
}

TEST(Octagon, TenHasRowWidths) {
    const auto s = make_octagon(OctagonSpec(10));
    EXPECT_EQ(s.size(), 68u);
    EXPECT_EQ(upper_row_widths(s), (std::vector<int>{10, 8, 8, 6, 2}));
}

TEST(Octagon, PublishedTableRows) {
    for (const auto& ref : published_octagons) {
        const auto m = measure(make_octagon(OctagonSpec(ref.d)));
        EXPECT_EQ(m.perimeter, ref.perimeter) << "d=" << ref.d;
        EXPECT_EQ(m.area, ref.area) << "d=" << ref.d;
        EXPECT_EQ(m.diameter, ref.d);
    }
}

// Euclidean vertex model, enumerated with rationals.
TEST(OracleEquivalence, OctagonMatchesEuclideanModel) {
    for (int d = 1; d <= 80; ++d)
        EXPECT_EQ(make_octagon(OctagonSpec(d)), oracle::octagon(d)) << "d=" << d;
}

TEST(OracleEquivalence, DiscMatchesEuclideanDistance) {
    for (int d = 1; d <= 80; ++d)
        EXPECT_EQ(make_disc(DiscSpec(d)), oracle::disc(d)) << "d=" << d;
}

TEST(OracleEquivalence, ScanlineMatchesBruteForcePredicate) {
    for (int d = 1; d <= 250; ++d)
        ASSERT_EQ(make_octagon(OctagonSpec(d)), brute_force_octagon(d)) << "d=" << d;
}

TEST(GeneratorProperties, SymmetryContainmentDiameter) {
    for (int d = 1; d <= 250; ++d) {
        const auto oct = make_octagon(OctagonSpec(d));
        const auto disc = make_disc(DiscSpec(d));
        for (auto sym : {Symmetry::flip_u, Symmetry::flip_v, Symmetry::transpose}) {
            ASSERT_EQ(transformed(oct, sym), oct) << "d=" << d;
            ASSERT_EQ(transformed(disc, sym), disc) << "d=" << d;
        }
        ASSERT_TRUE(is_subset(oct, disc)) << "d=" << d;
        ASSERT_EQ(diameter(oct), d);
        ASSERT_EQ(diameter(disc), d);
        const bool same = oct == disc;
        ASSERT_EQ(same, d == 1 || d == 2 || d == 4) << "d=" << d;
    }
}

TEST(GeneratorProperties, Monotonicity) {
    for (int d = 1; d + 2 <= 250; ++d) {
        ASSERT_TRUE(is_subset(make_disc(DiscSpec(d)), make_disc(DiscSpec(d + 2)))) << d;
        ASSERT_TRUE(is_subset(make_octagon(OctagonSpec(d)), make_octagon(OctagonSpec(d + 2)))) << d;
    }
}

TEST(PixelatedLine, HorizontalThroughCenters) {
    const LineSpec y0{0, 1, 0};
    const auto s = make_pixelated_line(y0, LatticeParity::odd_centered, LatticeBox::centered(5));
    const PixelShape row(LatticeParity::odd_centered, {{-4, 0}, {-2, 0}, {0, 0}, {2, 0}, {4, 0}});
    EXPECT_EQ(s, row);
}

TEST(PixelatedLine, DiagonalSkipsCornerTouches) {
    const LineSpec diag{1, -1, 0};
    const auto s = make_pixelated_line(diag, LatticeParity::odd_centered, LatticeBox::centered(7));
    ASSERT_EQ(s.size(), 7u);
    for (const auto& c : s)
        EXPECT_EQ(c.u, c.v);
}

TEST(PixelatedLine, OffsetDiagonalIsTwoPixelStaircase) {
    // y = x + 1/2, i.e. -x + y = 1/2.
    const LineSpec line{-1, 1, Rational(1, 2)};
    const auto s = make_pixelated_line(line, LatticeParity::odd_centered, LatticeBox::centered(4));
    // Window holds x, y in {-1, 0, 1}: each column x has the blocks {x, x+1}
    // clipped to the window.
    const PixelShape want(LatticeParity::odd_centered, {{-2, -2}, {-2, 0}, {0, 0}, {0, 2}, {2, 2}});
    EXPECT_EQ(s, want);
}

TEST(PixelatedLine, EdgeAlignedLineTakesBothRows) {
    const LineSpec y_half{0, 1, Rational(1, 2)};
    const auto s = make_pixelated_line(y_half, LatticeParity::odd_centered, LatticeBox::centered(3));
    // Window is x, y in {-1, 0, 1}; the line runs along the edge shared by
    // rows y = 0 and y = 1.
    EXPECT_EQ(s.size(), 6u);
    for (const auto& c : s)
        EXPECT_TRUE(c.v == 0 || c.v == 2);
}

TEST(PixelatedLine, MatchesParametricClipping) {
    const std::vector<LineSpec> lines{
        {1, 2, Rational(3, 4)}, {Rational(2, 3), -1, 0}, {5, 3, Rational(-7, 2)}, {0, 1, Rational(1, 2)},
        {1, 0, Rational(3, 2)}, {1, -1, 0},           {3, 7, 1},                {-1, 1, Rational(1, 2)},
    };
    for (const auto parity : {LatticeParity::odd_centered, LatticeParity::even_centered}) {
        const int side = parity == LatticeParity::odd_centered ? 11 : 10;
        const auto box = LatticeBox::centered(side);
        for (const auto& l : lines) {
            const auto got = make_pixelated_line(l, parity, box);
            std::vector<DoubledCoord> want;
            const int off = lattice_offset(parity);
            for (int v = box.min_v + ((box.min_v & 1) != off); v <= box.max_v; v += 2) {
                for (int u = box.min_u + ((box.min_u & 1) != off); u <= box.max_u; u += 2) {
                    if (oracle::line_crosses_pixel(l.a, l.b, l.c, {Rational(u, 2), Rational(v, 2)}))
                        want.push_back({u, v});
                }
            }
            EXPECT_EQ(got, PixelShape(parity, want));
        }
    }
    EXPECT_THROW(make_pixelated_line({0, 0, 1}, LatticeParity::odd_centered, LatticeBox::centered(3)), DomainError);
}
