#pragma once

// Cross-validation of the closed forms against measured octagons, plus the
// published (d, P, A) reference values.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "pixoct/closed_forms.hpp"
#include "pixoct/lattice.hpp"
#include "pixoct/rasterizer.hpp"

namespace pixoct {

struct OctagonReference {
    int d;
    std::int64_t perimeter;
    std::int64_t area;
};

/// Published perimeter and area of the octagons d = 1..24 and d = 52.
inline constexpr std::array<OctagonReference, 25> published_octagons{{
    {1, 1, 1},     {2, 4, 4},     {3, 4, 5},     {4, 8, 12},    {5, 8, 13},    {6, 12, 24},   {7, 16, 29},
    {8, 20, 44},   {9, 20, 49},   {10, 24, 68},  {11, 24, 73},  {12, 28, 96},  {13, 32, 105}, {14, 36, 132},
    {15, 36, 141}, {16, 40, 172}, {17, 40, 181}, {18, 44, 216}, {19, 48, 229}, {20, 52, 268}, {21, 52, 281},
    {22, 56, 324}, {23, 56, 337}, {24, 60, 384}, {52, 136, 1804},
}};

/// Octagon through a plain double loop over the bounding box, testing all
/// eight constraints per cell. Independent of the row-interval scan.
inline PixelShape brute_force_octagon(int d) {
    const OctagonSpec spec(d);
    const auto planes = octagon_halfplanes(spec);
    const int off = lattice_offset(spec.parity());
    std::vector<DoubledCoord> cells;
    for (int v = -d - 1 + ((d + 1 + off) & 1); v <= d + 1; v += 2) {
        for (int u = -d - 1 + ((d + 1 + off) & 1); u <= d + 1; u += 2) {
            bool inside = true;
            for (const auto& h : planes)
                inside = inside && h.admits({u, v});
            if (inside)
                cells.push_back({u, v});
        }
    }
    return PixelShape(spec.parity(), std::move(cells));
}

struct VerificationReport {
    int checked_up_to = 0;
    std::size_t checks = 0;
    std::vector<std::string> failures;

    bool ok() const noexcept { return failures.empty(); }
};

/// Runs every closed form and both octagon generators for 1 <= d <= max_d,
/// and checks the published table values that fall in range plus d = 52.
inline VerificationReport verify_range(int max_d) {
    if (max_d < 2)
        throw DomainError("verification range must reach at least d = 2");
    VerificationReport rep;
    rep.checked_up_to = max_d;
    auto check = [&](bool ok, int d, const std::string& what) {
        ++rep.checks;
        if (!ok)
            rep.failures.push_back("d=" + std::to_string(d) + ": " + what);
    };
    auto expect_eq = [&](std::int64_t got, std::int64_t want, int d, const std::string& what) {
        check(got == want, d, what + " = " + std::to_string(got) + ", expected " + std::to_string(want));
    };

    namespace cf = closed_forms;
    for (int d = 1; d <= max_d; ++d) {
        const auto oct = make_octagon(OctagonSpec(d));
        const auto m = measure(oct);
        check(oct == brute_force_octagon(d), d, "scanline octagon differs from brute-force predicate");
        expect_eq(m.diameter, d, d, "measured diameter");
        expect_eq(cf::area_formula(d), m.area, d, "area formula");
        expect_eq(cf::area_formula_simplified(d), m.area, d, "simplified area formula");
        const Rational by_residue = cf::area_by_residue(d);
        check(by_residue == Rational(m.area), d, "area by residue = " + format_fraction(by_residue));
        if (d % 6 == 0)
            expect_eq(cf::area_formula_even_rewrite(d), m.area, d, "even area rewrite");
        if (d >= 2) {
            expect_eq(cf::perimeter_formula(d), m.perimeter, d, "perimeter formula");
            const Rational p = cf::perimeter_by_residue(d);
            check(p == Rational(m.perimeter), d, "perimeter by residue = " + format_fraction(p));
            if (d % 2 == 0)
                expect_eq(cf::perimeter_formula_compact_even(d), m.perimeter, d, "compact even perimeter");
            const auto gap = cf::asymptotic_gap(d);
            check(gap.area_gap <= Rational(1, d), d, "area gap exceeds 1/d");
            check(gap.perimeter_gap <= Rational(2, d), d, "perimeter gap exceeds 2/d");
        }
    }
    for (const auto& ref : published_octagons) {
        if (ref.d > max_d && ref.d != 52)
            continue;
        const auto m = measure(make_octagon(OctagonSpec(ref.d)));
        expect_eq(m.perimeter, ref.perimeter, ref.d, "published perimeter");
        expect_eq(m.area, ref.area, ref.d, "published area");
    }
    return rep;
}

} // namespace pixoct
