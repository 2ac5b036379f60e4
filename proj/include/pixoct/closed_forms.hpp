#pragma once

// Closed-form perimeter and area of disc-like octagons. Every variant is
// evaluated in exact rational arithmetic and must come out integral; the
// measured shapes from the rasterizer are the ground truth these are checked
// against.

#include <cstdint>
#include <stdexcept>
#include <string>

#include "pixoct/errors.hpp"
#include "pixoct/rational.hpp"

namespace pixoct::closed_forms {

namespace detail {

inline void require_at_least(int d, int lo, const char* what) {
    if (d < lo)
        throw DomainError(std::string(what) + " (got d = " + std::to_string(d) + ")");
}

inline std::int64_t to_integer(const Rational& q, const char* what) {
    if (q.denominator() != 1)
        throw std::logic_error(std::string(what) + " evaluated to non-integer " + format_fraction(q));
    return q.numerator();
}

inline std::int64_t floor6(int d) { return d / 6; }
inline std::int64_t ceil6(int d) { return (d + 5) / 6; }

} // namespace detail

/// Perimeter by diameter parity. Defined for d > 1 only; the single pixel
/// (P = 1) is outside its domain.
inline std::int64_t perimeter_formula(int d) {
    detail::require_at_least(d, 2, "perimeter formula domain is d > 1");
    if (d % 2 != 0)
        return 2 * d + 4 * detail::floor6(d) - 2;
    return 2 * d + 4 * detail::ceil6(d) - 4;
}

/// P(d) = 5d - 14⌊d/6⌋ - 4 - (d - 6⌊d/6⌋)² / 2. Holds for even d only
/// (at d = 7 it gives 33/2).
inline std::int64_t perimeter_formula_compact_even(int d) {
    detail::require_at_least(d, 2, "perimeter formula domain is d > 1");
    if (d % 2 != 0)
        throw DomainError("compact perimeter form holds for even d only (got d = " + std::to_string(d) + ")");
    const std::int64_t n = detail::floor6(d);
    const std::int64_t r = d - 6 * n;
    const Rational p = Rational(5 * d - 14 * n - 4) - Rational(r * r, 2);
    return detail::to_integer(p, "compact perimeter");
}

/// (8/3)d minus a correction that depends on d mod 6.
inline Rational perimeter_by_residue(int d) {
    detail::require_at_least(d, 2, "perimeter formula domain is d > 1");
    static const Rational correction[6] = {
        Rational(4), Rational(8, 3), Rational(4, 3), Rational(4), Rational(8, 3), Rational(16, 3),
    };
    return Rational(8, 3) * d - correction[d % 6];
}

inline std::int64_t area_formula(int d) {
    detail::require_at_least(d, 1, "diameter must be >= 1");
    const std::int64_t n = detail::floor6(d);
    const std::int64_t dd = d;
    Rational a;
    if (d % 2 == 0)
        a = Rational(dd * dd, 2) + dd - 6 * n * n - 6 * n + 2 * dd * n;
    else
        a = Rational(dd * dd, 2) - 6 * n * n - 4 * n + 2 * dd * n + Rational(1, 2);
    return detail::to_integer(a, "area formula");
}

inline std::int64_t area_formula_simplified(int d) {
    detail::require_at_least(d, 1, "diameter must be >= 1");
    const std::int64_t n = detail::floor6(d);
    const std::int64_t dd = d;
    Rational a;
    if (d % 2 == 0)
        a = Rational(dd * dd, 2) + dd + 2 * n * (dd - 3 - 3 * n);
    else
        a = Rational(dd * dd, 2) + Rational(1, 2) + 2 * n * (dd - 2 - 3 * n);
    return detail::to_integer(a, "simplified area formula");
}

/// The alternate even-d rewrite d²/2 - d - 6⌊d/6⌋² + 6⌊d/6⌋ + 2d⌊d/6⌋.
/// It agrees with the main formula only when 6 | d (d = 8 gives 40, the
/// measured area is 44), so other diameters are rejected.
inline std::int64_t area_formula_even_rewrite(int d) {
    detail::require_at_least(d, 1, "diameter must be >= 1");
    if (d % 6 != 0)
        throw DomainError("even rewrite of the area formula holds only for 6 | d (got d = " + std::to_string(d) +
                          ")");
    const std::int64_t n = detail::floor6(d);
    const std::int64_t dd = d;
    return detail::to_integer(Rational(dd * dd, 2) - dd - 6 * n * n + 6 * n + 2 * dd * n, "even rewrite");
}

/// (2/3)d² with a correction that depends on d mod 6.
inline Rational area_by_residue(int d) {
    detail::require_at_least(d, 1, "diameter must be >= 1");
    const Rational base = Rational(2, 3) * (static_cast<std::int64_t>(d) * d);
    const Rational linear = Rational(2, 3) * d;
    switch (d % 6) {
    case 0: return base;
    case 2:
    case 4: return base + Rational(4, 3);
    case 1:
    case 3: return base - linear + 1;
    default: return base - linear - Rational(1, 3);
    }
}

/// Vertex-pattern class; equal classes iff diameters differ by a multiple of 6.
inline int octagon_type(int d) {
    detail::require_at_least(d, 1, "diameter must be >= 1");
    return d % 6;
}

struct AsymptoticGap {
    Rational area_gap;      // |A(d)/d² - 2/3|
    Rational perimeter_gap; // |P(d)/(4d) - 2/3|
};

inline AsymptoticGap asymptotic_gap(int d) {
    detail::require_at_least(d, 2, "asymptotic gap needs d >= 2");
    const std::int64_t dd = d;
    const Rational two_thirds(2, 3);
    return {
        abs(Rational(area_formula(d), dd * dd) - two_thirds),
        abs(Rational(perimeter_formula(d), 4 * dd) - two_thirds),
    };
}

struct OctagonFormulaReport {
    int d = 0;
    std::int64_t perimeter_thm = 0;
    std::int64_t area_thm = 0;
    std::int64_t perimeter_corollary = 0;
    std::int64_t area_corollary = 0;
    int type_class = 0;
    int block_count = 0;
};

inline OctagonFormulaReport formula_report(int d) {
    detail::require_at_least(d, 2, "perimeter formula domain is d > 1");
    return {
        d,
        perimeter_formula(d),
        area_formula(d),
        detail::to_integer(perimeter_by_residue(d), "perimeter corollary"),
        detail::to_integer(area_by_residue(d), "area corollary"),
        octagon_type(d),
        d / 6,
    };
}

} // namespace pixoct::closed_forms
