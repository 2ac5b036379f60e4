#pragma once

// Exact rational arithmetic and decimal rendering. Every value that ends up
// in a table, label or comparison is formatted from the exact fraction, never
// from a floating-point intermediate.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace pixoct {

using Rational = boost::rational<std::int64_t>;

enum class Rounding { half_up, truncate };

namespace detail {

__extension__ typedef __int128 wide_int;

inline std::int64_t pow10(int places) {
    if (places < 0 || places > 18)
        throw std::invalid_argument("decimal places must be in 0..18");
    std::int64_t p = 1;
    for (int i = 0; i < places; ++i)
        p *= 10;
    return p;
}

} // namespace detail

struct DecimalParts {
    std::int64_t whole = 0;
    std::int64_t frac = 0; // in units of 10^-places
};

/// |q| split into integer part and `places` fractional digits, rounded per
/// `mode`. Never forms |q|·10^places, so large values do not overflow.
inline DecimalParts decimal_parts(const Rational& q, int places, Rounding mode) {
    const std::int64_t scale = detail::pow10(places);
    const std::int64_t num = q.numerator() < 0 ? -q.numerator() : q.numerator();
    const std::int64_t den = q.denominator();
    DecimalParts out{num / den, 0};
    const detail::wide_int frac_scaled = static_cast<detail::wide_int>(num % den) * scale;
    out.frac = static_cast<std::int64_t>(frac_scaled / den);
    const auto leftover = static_cast<std::int64_t>(frac_scaled % den);
    if (mode == Rounding::half_up && 2 * static_cast<detail::wide_int>(leftover) >= den)
        ++out.frac;
    if (out.frac == scale) {
        ++out.whole;
        out.frac = 0;
    }
    return out;
}

/// Fixed-point rendering with exactly `places` digits after '.'.
inline std::string format_decimal(const Rational& q, int places, Rounding mode = Rounding::half_up) {
    const auto parts = decimal_parts(q, places, mode);
    std::string out;
    if (q.numerator() < 0 && (parts.whole != 0 || parts.frac != 0))
        out += '-';
    out += std::to_string(parts.whole);
    if (places > 0) {
        const std::string frac = std::to_string(parts.frac);
        out += '.';
        out.append(static_cast<std::size_t>(places) - frac.size(), '0');
        out += frac;
    }
    return out;
}

inline std::string format_fraction(const Rational& q) {
    return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

inline double to_double(const Rational& q) {
    return boost::rational_cast<double>(q);
}

/// Parses "0.83", "83/100", "1" or ",83"-style decimals (comma accepted as
/// separator) into an exact rational.
inline Rational parse_rational(std::string_view text) {
    auto fail = [&] { return std::invalid_argument("not a rational number: '" + std::string(text) + "'"); };
    if (text.empty())
        throw fail();
    bool negative = false;
    if (text.front() == '-' || text.front() == '+') {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    auto parse_digits = [&](std::string_view digits) {
        if (digits.empty() || digits.size() > 18)
            throw fail();
        std::int64_t v = 0;
        for (char ch : digits) {
            if (ch < '0' || ch > '9')
                throw fail();
            v = v * 10 + (ch - '0');
        }
        return v;
    };
    Rational value;
    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        const auto den = parse_digits(text.substr(slash + 1));
        if (den == 0)
            throw fail();
        value = Rational(parse_digits(text.substr(0, slash)), den);
    } else if (const auto dot = text.find_first_of(".,"); dot != std::string_view::npos) {
        const auto int_part = text.substr(0, dot);
        const auto frac_part = text.substr(dot + 1);
        if (int_part.empty() && frac_part.empty())
            throw fail();
        const std::int64_t whole = int_part.empty() ? 0 : parse_digits(int_part);
        const std::int64_t frac = frac_part.empty() ? 0 : parse_digits(frac_part);
        value = Rational(whole) + Rational(frac, detail::pow10(static_cast<int>(frac_part.size())));
    } else {
        value = Rational(parse_digits(text));
    }
    return negative ? -value : value;
}

inline Rational abs(const Rational& q) {
    return q < Rational(0) ? -q : q;
}

} // namespace pixoct
