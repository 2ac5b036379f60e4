#pragma once

// Byte-stable writers for sweep artifacts: proximity-matrix CSV, Graphviz
// DOT, binary PPM renderings and the JSON run manifest. Every writer is a
// pure function of its inputs.

#include <cstdint>
#include <cstdio>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <boost/crc.hpp>
#include <nlohmann/json.hpp>

#include "pixoct/lattice.hpp"
#include "pixoct/proximity.hpp"
#include "pixoct/rational.hpp"

namespace pixoct::io {

// ---------------------------------------------------------------- CSV ----

/// Rows are octagon diameters, columns disc diameters. Unplanned cells are
/// empty; values are rounded half-up to `precision` decimals with '.'.
inline std::string write_matrix_csv(const ProximityMatrix& m, int precision = 6) {
    const auto columns = m.disc_diameters();
    std::map<int, std::size_t> column_of;
    for (std::size_t i = 0; i < columns.size(); ++i)
        column_of[columns[i]] = i;

    std::string out = "d_o/d_c";
    for (int c : columns)
        out += ',' + std::to_string(c);
    out += '\n';

    for (int d_o : m.octagon_diameters()) {
        std::vector<std::string> cells(columns.size());
        for (const auto* r : m.row(d_o))
            cells[column_of.at(r->d_c)] = r->decimal(precision);
        out += std::to_string(d_o);
        for (const auto& c : cells)
            out += ',' + c;
        out += '\n';
    }
    return out;
}

/// Inverse of write_matrix_csv: the non-empty cells keyed by (d_o, d_c), as
/// the literal decimal strings.
inline std::map<DiameterPair, std::string> parse_matrix_csv(std::string_view text) {
    auto split = [](std::string_view line) {
        std::vector<std::string> fields;
        std::size_t start = 0;
        while (true) {
            const auto comma = line.find(',', start);
            fields.emplace_back(line.substr(start, comma == std::string_view::npos ? line.npos : comma - start));
            if (comma == std::string_view::npos)
                break;
            start = comma + 1;
        }
        return fields;
    };
    auto to_int = [](const std::string& s) {
        std::size_t used = 0;
        const int v = std::stoi(s, &used);
        if (used != s.size())
            throw std::invalid_argument("bad diameter in CSV: '" + s + "'");
        return v;
    };

    std::map<DiameterPair, std::string> cells;
    std::vector<int> header;
    bool first = true;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto nl = text.find('\n', pos);
        if (nl == std::string_view::npos)
            nl = text.size();
        auto line = text.substr(pos, nl - pos);
        pos = nl + 1;
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        if (line.empty())
            continue;
        const auto fields = split(line);
        if (first) {
            for (std::size_t i = 1; i < fields.size(); ++i)
                header.push_back(to_int(fields[i]));
            first = false;
            continue;
        }
        if (fields.size() != header.size() + 1)
            throw std::invalid_argument("CSV row has " + std::to_string(fields.size()) + " fields, expected " +
                                        std::to_string(header.size() + 1));
        const int d_o = to_int(fields[0]);
        for (std::size_t i = 1; i < fields.size(); ++i) {
            if (!fields[i].empty())
                cells[{d_o, header[i - 1]}] = fields[i];
        }
    }
    return cells;
}

// ---------------------------------------------------------------- DOT ----

/// Octagons are blue boxes "o<d>", discs red ellipses "c<d>". Edge labels are
/// the Jaccard distance truncated to `label_digits` decimals.
inline std::string write_graph_dot(const ProximityGraph& g, int label_digits = 5) {
    std::ostringstream os;
    os << "digraph proximity {\n";
    for (const auto& n : g.nodes) {
        if (n.kind == NodeKind::octagon)
            os << "  " << node_id(n) << " [shape=box, color=blue];\n";
        else
            os << "  " << node_id(n) << " [shape=ellipse, color=red];\n";
    }
    for (const auto& e : g.edges) {
        os << "  " << node_id(e.from) << " -> " << node_id(e.to) << " [label=\""
           << format_decimal(e.jaccard, label_digits, Rounding::truncate) << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

// ---------------------------------------------------------------- PPM ----

struct Rgb {
    std::uint8_t r = 0;
    std::uint8_t g = 0;
    std::uint8_t b = 0;

    friend constexpr bool operator==(Rgb, Rgb) = default;
};

struct Palette {
    Rgb background{255, 255, 255};
    Rgb interior{128, 128, 128};
    Rgb boundary{0, 0, 0};
    Rgb intersection{0, 160, 0};
    Rgb disc_only{0, 0, 255};
    Rgb octagon_only{255, 0, 0};
};

struct RenderStyle {
    int scale = 1; // image pixels per lattice cell
    Palette palette;
};

/// RGB raster, row 0 at the top.
struct Raster {
    int width = 0;
    int height = 0;
    std::vector<Rgb> pixels;

    Rgb at(int x, int y) const { return pixels[static_cast<std::size_t>(y) * width + x]; }
};

namespace detail {

/// Square canvas of side (enveloping diameter · scale). Cell (u, v) maps to
/// column (u - min_u)/2 and row (max_v - v)/2.
class Canvas {
public:
    Canvas(const LatticeBox& box, const RenderStyle& style) : box_(box), scale_(style.scale) {
        if (scale_ < 1)
            throw std::invalid_argument("render scale must be >= 1");
        const int side = std::max((box.max_u - box.min_u) / 2 + 1, (box.max_v - box.min_v) / 2 + 1) * scale_;
        raster_.width = side;
        raster_.height = side;
        raster_.pixels.assign(static_cast<std::size_t>(side) * side, style.palette.background);
    }

    void paint(DoubledCoord c, Rgb color) {
        const int x0 = (c.u - box_.min_u) / 2 * scale_;
        const int y0 = (box_.max_v - c.v) / 2 * scale_;
        for (int y = y0; y < y0 + scale_; ++y) {
            for (int x = x0; x < x0 + scale_; ++x)
                raster_.pixels[static_cast<std::size_t>(y) * raster_.width + x] = color;
        }
    }

    Raster take() && { return std::move(raster_); }

private:
    LatticeBox box_;
    int scale_;
    Raster raster_;
};

} // namespace detail

/// Interior cells gray, bounding-line cells black, background white.
inline Raster rasterize_shape(const PixelShape& s, const RenderStyle& style = {}) {
    if (s.empty())
        throw EmptyShapeError();
    detail::Canvas canvas(*s.bounds(), style);
    const auto rim = bounding_line(s);
    for (const auto& c : s)
        canvas.paint(c, rim.contains(c) ? style.palette.boundary : style.palette.interior);
    return std::move(canvas).take();
}

/// Intersection green, disc-only blue, octagon-only red.
inline Raster rasterize_overlay(const PixelShape& octagon, const PixelShape& disc, const RenderStyle& style = {}) {
    require_same_lattice(octagon, disc);
    if (octagon.empty() && disc.empty())
        throw EmptyShapeError();
    std::vector<DoubledCoord> all(octagon.begin(), octagon.end());
    all.insert(all.end(), disc.begin(), disc.end());
    const PixelShape both(octagon.parity(), std::move(all));
    detail::Canvas canvas(*both.bounds(), style);
    for (const auto& c : both) {
        const bool in_o = octagon.contains(c);
        const bool in_d = disc.contains(c);
        canvas.paint(c, in_o && in_d ? style.palette.intersection
                        : in_d       ? style.palette.disc_only
                                     : style.palette.octagon_only);
    }
    return std::move(canvas).take();
}

/// Binary PPM (P6, maxval 255).
inline std::string encode_ppm(const Raster& img) {
    std::string out = "P6\n" + std::to_string(img.width) + " " + std::to_string(img.height) + "\n255\n";
    out.reserve(out.size() + img.pixels.size() * 3);
    for (const auto& p : img.pixels) {
        out += static_cast<char>(p.r);
        out += static_cast<char>(p.g);
        out += static_cast<char>(p.b);
    }
    return out;
}

/// Reads the P6 images produced by encode_ppm (single-space/newline
/// separated header, no comments).
inline Raster decode_ppm(std::string_view bytes) {
    std::istringstream is{std::string(bytes)};
    std::string magic;
    int w = 0;
    int h = 0;
    int maxval = 0;
    if (!(is >> magic >> w >> h >> maxval) || magic != "P6" || maxval != 255 || w < 0 || h < 0)
        throw std::invalid_argument("not a P6/255 image");
    is.get();
    Raster img{w, h, std::vector<Rgb>(static_cast<std::size_t>(w) * h)};
    for (auto& p : img.pixels) {
        char rgb[3];
        if (!is.read(rgb, 3))
            throw std::invalid_argument("truncated PPM data");
        p = {static_cast<std::uint8_t>(rgb[0]), static_cast<std::uint8_t>(rgb[1]), static_cast<std::uint8_t>(rgb[2])};
    }
    return img;
}

inline std::string render_shape(const PixelShape& s, const RenderStyle& style = {}) {
    return encode_ppm(rasterize_shape(s, style));
}

inline std::string render_overlay(const PixelShape& octagon, const PixelShape& disc, const RenderStyle& style = {}) {
    return encode_ppm(rasterize_overlay(octagon, disc, style));
}

// -------------------------------------------------------- cell listing ----

/// Plain-text cell list: two comment lines, then one "u v" pair per line in
/// row-major order (doubled coordinates).
inline std::string write_cell_list(const PixelShape& s, std::string_view kind, int d) {
    std::ostringstream os;
    os << "# " << kind << " d=" << d << " parity=" << to_string(s.parity()) << " cells=" << s.size() << "\n";
    os << "# u v (doubled coordinates, pixel center = (u/2, v/2))\n";
    for (const auto& c : s)
        os << c.u << ' ' << c.v << '\n';
    return os.str();
}

// ----------------------------------------------------------- manifest ----

inline std::uint32_t crc32(std::string_view bytes) {
    boost::crc_32_type crc;
    crc.process_bytes(bytes.data(), bytes.size());
    return crc.checksum();
}

inline std::string hex32(std::uint32_t v) {
    char buf[9];
    std::snprintf(buf, sizeof buf, "%08x", v);
    return buf;
}

struct SweepSummary {
    std::size_t record_count = 0;
    std::size_t octagon_count = 0;
    std::size_t disc_count = 0;
    std::vector<DiameterPair> zero_distance_pairs;
    std::size_t mutual_pairs = 0;
    int precision = 6;
    int label_digits = 5;
    std::uint32_t csv_crc32 = 0;
    std::uint32_t dot_crc32 = 0;
};

inline SweepSummary summarize(const ProximityMatrix& m, std::string_view csv, std::string_view dot, int precision,
                              int label_digits) {
    SweepSummary s;
    s.record_count = m.size();
    s.octagon_count = m.octagon_diameters().size();
    s.disc_count = m.disc_diameters().size();
    for (const auto& r : m.records()) {
        if (r.jaccard == Rational(0))
            s.zero_distance_pairs.push_back({r.d_o, r.d_c});
    }
    if (!m.empty())
        s.mutual_pairs = build_graph(m).mutual_pairs().size();
    s.precision = precision;
    s.label_digits = label_digits;
    s.csv_crc32 = crc32(csv);
    s.dot_crc32 = crc32(dot);
    return s;
}

/// Key-sorted JSON, two-space indent, trailing newline.
inline std::string write_manifest(const SweepConfig& cfg, const SweepSummary& s) {
    nlohmann::json zero = nlohmann::json::array();
    for (const auto& p : s.zero_distance_pairs)
        zero.push_back({p.d_o, p.d_c});
    const nlohmann::json doc = {
        {"config",
         {
             {"d_o_max", cfg.d_o_max},
             {"small_range_limit", cfg.small_range_limit},
             {"slack_a", cfg.slack_a},
             {"ratio_k", format_fraction(cfg.ratio_k)},
         }},
        {"output",
         {
             {"precision", s.precision},
             {"label_digits", s.label_digits},
             {"csv_crc32", hex32(s.csv_crc32)},
             {"dot_crc32", hex32(s.dot_crc32)},
         }},
        {"summary",
         {
             {"record_count", s.record_count},
             {"octagon_count", s.octagon_count},
             {"disc_count", s.disc_count},
             {"mutual_nearest_pairs", s.mutual_pairs},
             {"zero_distance_pairs", zero},
         }},
    };
    return doc.dump(2) + "\n";
}

} // namespace pixoct::io
