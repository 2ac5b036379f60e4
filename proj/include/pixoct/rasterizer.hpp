#pragma once

// Construction of pixelated discs, disc-like octagons, convex polygons and
// lines. A pixel belongs to a rasterized region when its center does; all
// predicates are evaluated in doubled integer coordinates.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pixoct/errors.hpp"
#include "pixoct/lattice.hpp"
#include "pixoct/rational.hpp"

namespace pixoct {

namespace detail {

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
    return -floor_div(-a, b);
}

/// Smallest value >= x congruent to r modulo 2.
inline std::int64_t snap_up(std::int64_t x, int r) {
    return ((x & 1) == r) ? x : x + 1;
}

inline std::int64_t snap_down(std::int64_t x, int r) {
    return ((x & 1) == r) ? x : x - 1;
}

inline std::int64_t isqrt(std::int64_t n) {
    if (n < 0)
        return -1;
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
    while (r * r > n)
        --r;
    while ((r + 1) * (r + 1) <= n)
        ++r;
    return r;
}

inline void require_positive_diameter(int d) {
    if (d < 1)
        throw DomainError("diameter must be >= 1, got " + std::to_string(d));
}

} // namespace detail

struct DiscSpec {
    int d;

    explicit DiscSpec(int diameter) : d(diameter) { detail::require_positive_diameter(d); }

    LatticeParity parity() const noexcept { return parity_for_diameter(d); }
};

/// Disc-like octagon of diameter d. Its Euclidean model has axis vertices at
/// distance a = (2d - 1) / 4 from the center and diagonal vertices at
/// (±2a/3, ±2a/3).
struct OctagonSpec {
    int d;

    explicit OctagonSpec(int diameter) : d(diameter) { detail::require_positive_diameter(d); }

    LatticeParity parity() const noexcept { return parity_for_diameter(d); }
    Rational vertex_distance() const { return Rational(2 * d - 1, 4); }
    /// Two-pixel blocks per side.
    int block_count() const noexcept { return d / 6; }
    int type_class() const noexcept { return d % 6; }
};

/// p·u + q·v <= r over doubled coordinates.
struct HalfPlane {
    std::int64_t p = 0;
    std::int64_t q = 0;
    std::int64_t r = 0;

    constexpr bool admits(DoubledCoord c) const noexcept { return p * c.u + q * c.v <= r; }

    friend constexpr bool operator==(const HalfPlane&, const HalfPlane&) = default;
};

/// The eight closed constraints ±2u ± v <= 2d - 1 and ±u ± 2v <= 2d - 1.
inline std::array<HalfPlane, 8> octagon_halfplanes(const OctagonSpec& spec) {
    const std::int64_t r = 2 * static_cast<std::int64_t>(spec.d) - 1;
    return {{
        {2, 1, r},
        {-2, -1, r},
        {2, -1, r},
        {-2, 1, r},
        {1, 2, r},
        {-1, -2, r},
        {1, -2, r},
        {-1, 2, r},
    }};
}

/// Lattice cells of the given parity inside every half-plane (closed).
/// Rasterizes row by row from exact integer bounds. Returns an empty shape
/// when no cell qualifies inside `bound`; throws UnboundedRegion when the
/// region would be clipped by `bound`.
inline PixelShape make_convex_polygon(std::span<const HalfPlane> planes, LatticeParity parity,
                                      const LatticeBox& bound) {
    for (const auto& h : planes) {
        if (h.p == 0 && h.q == 0)
            throw std::invalid_argument("half-plane with zero normal");
    }
    const int off = lattice_offset(parity);
    constexpr auto unbounded_lo = std::numeric_limits<std::int64_t>::min();
    constexpr auto unbounded_hi = std::numeric_limits<std::int64_t>::max();

    // Interval of u admitted by the planes alone on row v (may be empty).
    auto row_interval = [&](std::int64_t v) -> std::optional<std::pair<std::int64_t, std::int64_t>> {
        std::int64_t lo = unbounded_lo;
        std::int64_t hi = unbounded_hi;
        for (const auto& h : planes) {
            const std::int64_t rhs = h.r - h.q * v;
            if (h.p > 0)
                hi = std::min(hi, detail::floor_div(rhs, h.p));
            else if (h.p < 0)
                lo = std::max(lo, detail::ceil_div(rhs, h.p));
            else if (rhs < 0)
                return std::nullopt;
        }
        if (lo != unbounded_lo)
            lo = detail::snap_up(lo, off);
        if (hi != unbounded_hi)
            hi = detail::snap_down(hi, off);
        if (lo > hi)
            return std::nullopt;
        return std::make_pair(lo, hi);
    };

    const std::int64_t v_first = detail::snap_up(bound.min_v, off);
    const std::int64_t v_last = detail::snap_down(bound.max_v, off);
    const std::int64_t u_first = detail::snap_up(bound.min_u, off);
    const std::int64_t u_last = detail::snap_down(bound.max_u, off);

    std::vector<DoubledCoord> cells;
    for (std::int64_t v = v_first; v <= v_last; v += 2) {
        const auto iv = row_interval(v);
        if (!iv)
            continue;
        if (iv->first < u_first || iv->second > u_last) {
            // Entirely outside the box is fine; clipped is not.
            if (iv->second < u_first || iv->first > u_last)
                continue;
            throw UnboundedRegion("half-plane region is clipped by the search box");
        }
        for (std::int64_t u = iv->first; u <= iv->second; u += 2)
            cells.push_back({static_cast<int>(u), static_cast<int>(v)});
    }
    if (!cells.empty()) {
        for (const std::int64_t v : {v_first - 2, v_last + 2}) {
            const auto iv = row_interval(v);
            if (iv && iv->second >= u_first && iv->first <= u_last)
                throw UnboundedRegion("half-plane region extends past the search box");
        }
    }
    return PixelShape(parity, std::move(cells));
}

/// Cells whose centers lie within distance d/2 of the lattice origin:
/// u² + v² <= d².
inline PixelShape make_disc(const DiscSpec& spec) {
    const int off = lattice_offset(spec.parity());
    const std::int64_t d2 = static_cast<std::int64_t>(spec.d) * spec.d;
    std::vector<DoubledCoord> cells;
    const std::int64_t v_max = detail::snap_down(spec.d, off);
    for (std::int64_t v = -v_max; v <= v_max; v += 2) {
        const std::int64_t hi = detail::snap_down(detail::isqrt(d2 - v * v), off);
        for (std::int64_t u = -hi; u <= hi; u += 2)
            cells.push_back({static_cast<int>(u), static_cast<int>(v)});
    }
    return PixelShape(spec.parity(), std::move(cells));
}

inline PixelShape make_octagon(const OctagonSpec& spec) {
    const auto planes = octagon_halfplanes(spec);
    return make_convex_polygon(planes, spec.parity(), LatticeBox::centered(spec.d + 2));
}

/// Euclidean line a·x + b·y = c in pixel units, origin at the lattice origin.
struct LineSpec {
    Rational a;
    Rational b;
    Rational c;
};

/// Pixels whose closed square meets the line in a segment of positive
/// length. A line that only grazes a corner does not count; a line running
/// along a pixel edge counts for both pixels sharing that edge.
inline PixelShape make_pixelated_line(const LineSpec& line, LatticeParity parity, const LatticeBox& extent) {
    if (line.a == Rational(0) && line.b == Rational(0))
        throw DomainError("line needs a nonzero normal");
    // In doubled units the line is a·u + b·v = 2c; clear denominators.
    const std::int64_t lcm = std::lcm(std::lcm(line.a.denominator(), line.b.denominator()), line.c.denominator());
    const std::int64_t A = line.a.numerator() * (lcm / line.a.denominator());
    const std::int64_t B = line.b.numerator() * (lcm / line.b.denominator());
    const std::int64_t C = 2 * line.c.numerator() * (lcm / line.c.denominator());

    const int off = lattice_offset(parity);
    std::vector<DoubledCoord> cells;
    for (std::int64_t v = detail::snap_up(extent.min_v, off); v <= extent.max_v; v += 2) {
        for (std::int64_t u = detail::snap_up(extent.min_u, off); u <= extent.max_u; u += 2) {
            int negative = 0;
            int positive = 0;
            int zero = 0;
            for (const int du : {-1, 1}) {
                for (const int dv : {-1, 1}) {
                    const std::int64_t g = A * (u + du) + B * (v + dv) - C;
                    negative += g < 0;
                    positive += g > 0;
                    zero += g == 0;
                }
            }
            if ((negative > 0 && positive > 0) || zero >= 2)
                cells.push_back({static_cast<int>(u), static_cast<int>(v)});
        }
    }
    return PixelShape(parity, std::move(cells));
}

} // namespace pixoct
