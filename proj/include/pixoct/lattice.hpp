#pragma once

// Pixel shapes on the square lattice.
//
// A pixel is named by its center. Odd-diameter shapes are centered on a pixel
// center (integer coordinates), even-diameter shapes on a pixel vertex
// (half-integer coordinates). Storing (u, v) = (2x, 2y) makes both lattices
// exact integers: cells of an odd-centered shape have even u and v, cells of
// an even-centered shape have odd u and v.

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "pixoct/errors.hpp"

namespace pixoct {

enum class LatticeParity { odd_centered, even_centered };

/// 0 for odd-centered shapes, 1 for even-centered: the residue of every
/// doubled coordinate modulo 2.
constexpr int lattice_offset(LatticeParity p) noexcept {
    return p == LatticeParity::odd_centered ? 0 : 1;
}

constexpr LatticeParity parity_for_diameter(int d) noexcept {
    return (d % 2 != 0) ? LatticeParity::odd_centered : LatticeParity::even_centered;
}

constexpr const char* to_string(LatticeParity p) noexcept {
    return p == LatticeParity::odd_centered ? "odd" : "even";
}

struct DoubledCoord {
    int u = 0;
    int v = 0;

    friend constexpr bool operator==(DoubledCoord, DoubledCoord) = default;

    // Row-major order: by v, then u. This is the canonical iteration order of
    // every PixelShape.
    friend constexpr std::strong_ordering operator<=>(DoubledCoord a, DoubledCoord b) {
        if (auto c = a.v <=> b.v; c != 0)
            return c;
        return a.u <=> b.u;
    }
};

constexpr bool on_lattice(DoubledCoord c, LatticeParity p) noexcept {
    const int r = lattice_offset(p);
    return (c.u & 1) == r && (c.v & 1) == r;
}

/// The four side-sharing neighbors. One pixel step is two doubled units.
constexpr std::array<DoubledCoord, 4> neighbors4(DoubledCoord c) noexcept {
    return {{{c.u + 2, c.v}, {c.u - 2, c.v}, {c.u, c.v + 2}, {c.u, c.v - 2}}};
}

/// Closed axis-aligned box in doubled coordinates.
struct LatticeBox {
    int min_u = 0;
    int max_u = 0;
    int min_v = 0;
    int max_v = 0;

    /// Box around the origin holding the cells of a shape with diameter
    /// `side` on the lattice of matching parity: |u|, |v| <= side - 1.
    static constexpr LatticeBox centered(int side) noexcept {
        const int r = side - 1;
        return {-r, r, -r, r};
    }

    constexpr bool contains(DoubledCoord c) const noexcept {
        return c.u >= min_u && c.u <= max_u && c.v >= min_v && c.v <= max_v;
    }

    friend constexpr bool operator==(const LatticeBox&, const LatticeBox&) = default;
};

/// The eight symmetries of the square lattice that fix the origin.
enum class Symmetry {
    identity,
    rotate90,
    rotate180,
    rotate270,
    flip_u,    // (u, v) -> (-u, v)
    flip_v,    // (u, v) -> (u, -v)
    transpose, // (u, v) -> (v, u)
    anti_transpose,
};

inline constexpr std::array<Symmetry, 8> all_symmetries{
    Symmetry::identity, Symmetry::rotate90,  Symmetry::rotate180, Symmetry::rotate270,
    Symmetry::flip_u,   Symmetry::flip_v,    Symmetry::transpose, Symmetry::anti_transpose,
};

constexpr DoubledCoord apply(Symmetry s, DoubledCoord c) noexcept {
    switch (s) {
    case Symmetry::identity: return c;
    case Symmetry::rotate90: return {-c.v, c.u};
    case Symmetry::rotate180: return {-c.u, -c.v};
    case Symmetry::rotate270: return {c.v, -c.u};
    case Symmetry::flip_u: return {-c.u, c.v};
    case Symmetry::flip_v: return {c.u, -c.v};
    case Symmetry::transpose: return {c.v, c.u};
    case Symmetry::anti_transpose: return {-c.v, -c.u};
    }
    return c;
}

/// Finite set of pixels on one lattice. Cells are kept sorted row-major and
/// indexed by a dense occupancy grid over the bounding box, so membership is
/// O(1) and iteration order is deterministic.
class PixelShape {
public:
    explicit PixelShape(LatticeParity parity = LatticeParity::odd_centered) : parity_(parity) {}

    /// Throws std::invalid_argument if any cell is off the parity lattice.
    /// Duplicates are merged.
    PixelShape(LatticeParity parity, std::vector<DoubledCoord> cells) : parity_(parity), cells_(std::move(cells)) {
        for (const auto& c : cells_) {
            if (!on_lattice(c, parity_))
                throw std::invalid_argument("cell off the shape's parity lattice");
        }
        std::sort(cells_.begin(), cells_.end());
        cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
        build_index();
    }

    LatticeParity parity() const noexcept { return parity_; }
    std::size_t size() const noexcept { return cells_.size(); }
    bool empty() const noexcept { return cells_.empty(); }
    std::span<const DoubledCoord> cells() const noexcept { return cells_; }
    auto begin() const noexcept { return cells_.cbegin(); }
    auto end() const noexcept { return cells_.cend(); }

    /// Tight bounding box; nullopt for the empty shape.
    std::optional<LatticeBox> bounds() const noexcept {
        if (cells_.empty())
            return std::nullopt;
        return box_;
    }

    bool contains(DoubledCoord c) const noexcept {
        if (cells_.empty() || !box_.contains(c) || !on_lattice(c, parity_))
            return false;
        return occupancy_[index_of(c)] != 0;
    }

    friend bool operator==(const PixelShape& a, const PixelShape& b) noexcept {
        return a.parity_ == b.parity_ && a.cells_ == b.cells_;
    }

private:
    std::size_t index_of(DoubledCoord c) const noexcept {
        const auto col = static_cast<std::size_t>((c.u - box_.min_u) / 2);
        const auto row = static_cast<std::size_t>((c.v - box_.min_v) / 2);
        return row * width_ + col;
    }

    void build_index() {
        if (cells_.empty())
            return;
        box_ = {cells_.front().u, cells_.front().u, cells_.front().v, cells_.back().v};
        for (const auto& c : cells_) {
            box_.min_u = std::min(box_.min_u, c.u);
            box_.max_u = std::max(box_.max_u, c.u);
        }
        width_ = static_cast<std::size_t>((box_.max_u - box_.min_u) / 2 + 1);
        const auto height = static_cast<std::size_t>((box_.max_v - box_.min_v) / 2 + 1);
        occupancy_.assign(width_ * height, 0);
        for (const auto& c : cells_)
            occupancy_[index_of(c)] = 1;
    }

    LatticeParity parity_;
    std::vector<DoubledCoord> cells_;
    LatticeBox box_{};
    std::size_t width_ = 0;
    std::vector<std::uint8_t> occupancy_;
};

struct ShapeMetrics {
    std::int64_t area = 0;
    std::int64_t perimeter = 0;
    int diameter = 0;

    friend bool operator==(const ShapeMetrics&, const ShapeMetrics&) = default;
};

/// Cells with at least one 4-neighbor outside the shape.
inline PixelShape bounding_line(const PixelShape& s) {
    std::vector<DoubledCoord> out;
    for (const auto& c : s) {
        const auto ns = neighbors4(c);
        if (std::any_of(ns.begin(), ns.end(), [&](DoubledCoord n) { return !s.contains(n); }))
            out.push_back(c);
    }
    return PixelShape(s.parity(), std::move(out));
}

/// Side of the enveloping square, in pixels.
inline int diameter(const PixelShape& s) {
    const auto box = s.bounds();
    if (!box)
        throw EmptyShapeError();
    return std::max((box->max_u - box->min_u) / 2 + 1, (box->max_v - box->min_v) / 2 + 1);
}

inline ShapeMetrics measure(const PixelShape& s) {
    if (s.empty())
        throw EmptyShapeError();
    return {static_cast<std::int64_t>(s.size()), static_cast<std::int64_t>(bounding_line(s).size()), diameter(s)};
}

inline void require_same_lattice(const PixelShape& a, const PixelShape& b) {
    if (a.parity() != b.parity())
        throw ParityMismatch();
}

inline std::int64_t intersection_count(const PixelShape& a, const PixelShape& b) {
    require_same_lattice(a, b);
    const auto& small = a.size() <= b.size() ? a : b;
    const auto& large = a.size() <= b.size() ? b : a;
    return static_cast<std::int64_t>(
        std::count_if(small.begin(), small.end(), [&](DoubledCoord c) { return large.contains(c); }));
}

inline std::int64_t union_count(const PixelShape& a, const PixelShape& b) {
    return static_cast<std::int64_t>(a.size() + b.size()) - intersection_count(a, b);
}

inline bool equals(const PixelShape& a, const PixelShape& b) {
    require_same_lattice(a, b);
    return a == b;
}

/// a ⊆ b.
inline bool is_subset(const PixelShape& a, const PixelShape& b) {
    require_same_lattice(a, b);
    return std::all_of(a.begin(), a.end(), [&](DoubledCoord c) { return b.contains(c); });
}

inline PixelShape difference(const PixelShape& a, const PixelShape& b) {
    require_same_lattice(a, b);
    std::vector<DoubledCoord> out;
    std::copy_if(a.begin(), a.end(), std::back_inserter(out), [&](DoubledCoord c) { return !b.contains(c); });
    return PixelShape(a.parity(), std::move(out));
}

inline PixelShape transformed(const PixelShape& s, Symmetry sym) {
    std::vector<DoubledCoord> out;
    out.reserve(s.size());
    for (const auto& c : s)
        out.push_back(apply(sym, c));
    return PixelShape(s.parity(), std::move(out));
}

/// Translation by whole pixels; du and dv are in doubled units and must be
/// even so the result stays on the same lattice.
inline PixelShape translated(const PixelShape& s, int du, int dv) {
    if ((du & 1) != 0 || (dv & 1) != 0)
        throw std::invalid_argument("translation must be by whole pixels (even doubled offsets)");
    std::vector<DoubledCoord> out;
    out.reserve(s.size());
    for (const auto& c : s)
        out.push_back({c.u + du, c.v + dv});
    return PixelShape(s.parity(), std::move(out));
}

} // namespace pixoct
