#pragma once

// Jaccard proximity between concentric disc-like octagons and pixelated
// discs: the planned diameter pairs, the proximity matrix, nearest-neighbor
// queries, the nearest-neighbor graph and the largest inscribed disc.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <compare>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "pixoct/errors.hpp"
#include "pixoct/lattice.hpp"
#include "pixoct/rasterizer.hpp"
#include "pixoct/rational.hpp"

namespace pixoct {

/// Which (octagon, disc) diameter pairs are compared. Small octagons use a
/// fixed slack below d_o; larger ones use the ratio bound ratio_k·d_o <= d_c.
/// Only pairs with d_o - d_c even are planned, so the shapes share a center.
struct SweepConfig {
    int d_o_max = 249;
    int small_range_limit = 41;
    int slack_a = 7;
    Rational ratio_k{83, 100};

    /// Throws std::invalid_argument. d_o_max may equal small_range_limit or
    /// fall below it, in which case only the slack range is swept.
    void validate() const {
        if (d_o_max < 1)
            throw std::invalid_argument("max octagon diameter must be >= 1");
        if (small_range_limit < 1)
            throw std::invalid_argument("small range limit must be >= 1");
        if (slack_a < 0)
            throw std::invalid_argument("slack must be >= 0");
        if (ratio_k <= Rational(0) || ratio_k >= Rational(1))
            throw std::invalid_argument("ratio must lie strictly between 0 and 1");
    }

    friend bool operator==(const SweepConfig&, const SweepConfig&) = default;
};

struct DiameterPair {
    int d_o = 0;
    int d_c = 0;

    friend constexpr auto operator<=>(const DiameterPair&, const DiameterPair&) = default;
};

/// Smallest disc diameter planned for octagon diameter d_o.
inline int plan_min_disc(const SweepConfig& cfg, int d_o) {
    if (d_o <= cfg.small_range_limit) {
        int lo = std::max(1, d_o - cfg.slack_a);
        if ((d_o - lo) % 2 != 0)
            ++lo;
        return lo;
    }
    // Smallest integer >= k·d_o, then raised to the parity of d_o.
    const Rational bound = cfg.ratio_k * d_o;
    auto lo = static_cast<int>(bound.numerator() / bound.denominator());
    if (Rational(lo) < bound)
        ++lo;
    lo = std::max(lo, 1);
    if ((d_o - lo) % 2 != 0)
        ++lo;
    return lo;
}

inline bool in_plan(const SweepConfig& cfg, DiameterPair p) {
    if (p.d_o < 1 || p.d_o > cfg.d_o_max || p.d_c > p.d_o || (p.d_o - p.d_c) % 2 != 0)
        return false;
    return p.d_c >= plan_min_disc(cfg, p.d_o);
}

/// All planned pairs, ascending by (d_o, d_c).
inline std::vector<DiameterPair> pair_plan(const SweepConfig& cfg) {
    cfg.validate();
    std::vector<DiameterPair> out;
    for (int d_o = 1; d_o <= cfg.d_o_max; ++d_o) {
        for (int d_c = plan_min_disc(cfg, d_o); d_c <= d_o; d_c += 2)
            out.push_back({d_o, d_c});
    }
    return out;
}

struct JaccardResult {
    std::int64_t intersection = 0;
    std::int64_t union_size = 0;
    Rational distance;
};

/// J = 1 - |A ∩ B| / |A ∪ B|, exact.
inline JaccardResult jaccard(const PixelShape& a, const PixelShape& b) {
    require_same_lattice(a, b);
    if (a.empty() || b.empty())
        throw EmptyShapeError();
    const std::int64_t inter = intersection_count(a, b);
    const std::int64_t uni = static_cast<std::int64_t>(a.size() + b.size()) - inter;
    return {inter, uni, Rational(1) - Rational(inter, uni)};
}

struct ProximityRecord {
    int d_o = 0;
    int d_c = 0;
    std::int64_t area_intersection = 0;
    std::int64_t area_union = 0;
    Rational jaccard;

    std::string decimal(int places = 6) const { return format_decimal(jaccard, places, Rounding::half_up); }

    friend bool operator==(const ProximityRecord&, const ProximityRecord&) = default;
};

/// Concentric octagon d_o against disc d_c. Throws ParityMismatch when
/// d_o - d_c is odd.
inline ProximityRecord evaluate_pair(int d_o, int d_c) {
    const auto oct = make_octagon(OctagonSpec(d_o));
    const auto disc = make_disc(DiscSpec(d_c));
    const auto j = jaccard(oct, disc);
    return {d_o, d_c, j.intersection, j.union_size, j.distance};
}

class ProximityMatrix {
public:
    ProximityMatrix() = default;

    /// Records must be unique; they are stored sorted by (d_o, d_c).
    ProximityMatrix(SweepConfig config, std::vector<ProximityRecord> records)
        : config_(std::move(config)), records_(std::move(records)) {
        std::sort(records_.begin(), records_.end(), [](const auto& a, const auto& b) {
            return DiameterPair{a.d_o, a.d_c} < DiameterPair{b.d_o, b.d_c};
        });
        for (std::size_t i = 1; i < records_.size(); ++i) {
            if (records_[i].d_o == records_[i - 1].d_o && records_[i].d_c == records_[i - 1].d_c)
                throw std::invalid_argument("duplicate proximity record");
        }
    }

    const SweepConfig& config() const noexcept { return config_; }
    const std::vector<ProximityRecord>& records() const noexcept { return records_; }
    std::size_t size() const noexcept { return records_.size(); }
    bool empty() const noexcept { return records_.empty(); }

    const ProximityRecord* find(int d_o, int d_c) const noexcept {
        const auto it = std::lower_bound(records_.begin(), records_.end(), DiameterPair{d_o, d_c},
                                         [](const ProximityRecord& r, const DiameterPair& p) {
                                             return DiameterPair{r.d_o, r.d_c} < p;
                                         });
        if (it == records_.end() || it->d_o != d_o || it->d_c != d_c)
            return nullptr;
        return &*it;
    }

    /// Records of one octagon, ascending by d_c.
    std::vector<const ProximityRecord*> row(int d_o) const {
        std::vector<const ProximityRecord*> out;
        for (const auto& r : records_) {
            if (r.d_o == d_o)
                out.push_back(&r);
        }
        return out;
    }

    /// Records of one disc, ascending by d_o.
    std::vector<const ProximityRecord*> column(int d_c) const {
        std::vector<const ProximityRecord*> out;
        for (const auto& r : records_) {
            if (r.d_c == d_c)
                out.push_back(&r);
        }
        return out;
    }

    std::vector<int> octagon_diameters() const {
        std::vector<int> out;
        for (const auto& r : records_) {
            if (out.empty() || out.back() != r.d_o)
                out.push_back(r.d_o);
        }
        return out;
    }

    std::vector<int> disc_diameters() const {
        std::vector<int> out;
        out.reserve(records_.size());
        for (const auto& r : records_)
            out.push_back(r.d_c);
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    friend bool operator==(const ProximityMatrix&, const ProximityMatrix&) = default;

private:
    SweepConfig config_;
    std::vector<ProximityRecord> records_;
};

/// Evaluates every planned pair. Rows are distributed over `threads` workers;
/// each record lands in its plan slot, so the result does not depend on
/// scheduling.
inline ProximityMatrix run_sweep(const SweepConfig& cfg, unsigned threads = 1) {
    const auto plan = pair_plan(cfg);
    threads = std::max(1u, threads);

    std::vector<int> disc_ids;
    for (const auto& p : plan)
        disc_ids.push_back(p.d_c);
    std::sort(disc_ids.begin(), disc_ids.end());
    disc_ids.erase(std::unique(disc_ids.begin(), disc_ids.end()), disc_ids.end());

    // Row boundaries into `plan`.
    std::vector<std::size_t> row_start;
    for (std::size_t i = 0; i < plan.size(); ++i) {
        if (i == 0 || plan[i].d_o != plan[i - 1].d_o)
            row_start.push_back(i);
    }
    row_start.push_back(plan.size());

    auto parallel_for = [threads](std::size_t count, auto&& body) {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t i = next++; i < count; i = next++)
                body(i);
        };
        if (threads == 1 || count < 2) {
            worker();
            return;
        }
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < std::min<std::size_t>(threads, count); ++t)
            pool.emplace_back(worker);
    };

    std::vector<PixelShape> discs(disc_ids.empty() ? 0 : static_cast<std::size_t>(disc_ids.back()) + 1);
    parallel_for(disc_ids.size(), [&](std::size_t i) {
        discs[static_cast<std::size_t>(disc_ids[i])] = make_disc(DiscSpec(disc_ids[i]));
    });

    std::vector<ProximityRecord> records(plan.size());
    parallel_for(row_start.size() - 1, [&](std::size_t row) {
        const int d_o = plan[row_start[row]].d_o;
        const auto oct = make_octagon(OctagonSpec(d_o));
        for (std::size_t i = row_start[row]; i < row_start[row + 1]; ++i) {
            const int d_c = plan[i].d_c;
            const auto j = jaccard(oct, discs[static_cast<std::size_t>(d_c)]);
            records[i] = {d_o, d_c, j.intersection, j.union_size, j.distance};
        }
    });
    return ProximityMatrix(cfg, std::move(records));
}

/// Argmin of a row or column. Ties go to the smallest diameter; every tied
/// diameter (including the winner) is listed in `tied` when there is more
/// than one.
struct Nearest {
    int diameter = 0;
    Rational jaccard;
    std::vector<int> tied;
};

namespace detail {

template <typename Key>
Nearest argmin(const std::vector<const ProximityRecord*>& cells, Key key) {
    Nearest best;
    bool have = false;
    for (const auto* r : cells) {
        const int d = key(*r);
        if (!have || r->jaccard < best.jaccard || (r->jaccard == best.jaccard && d < best.diameter)) {
            best.diameter = d;
            best.jaccard = r->jaccard;
            have = true;
        }
    }
    for (const auto* r : cells) {
        if (r->jaccard == best.jaccard)
            best.tied.push_back(key(*r));
    }
    std::sort(best.tied.begin(), best.tied.end());
    if (best.tied.size() < 2)
        best.tied.clear();
    return best;
}

} // namespace detail

/// Disc closest to octagon d_o (minimum over its row).
inline Nearest nearest_disc(const ProximityMatrix& m, int d_o) {
    const auto cells = m.row(d_o);
    if (cells.empty())
        throw MissingDiameter("octagon diameter " + std::to_string(d_o) + " not in proximity matrix");
    return detail::argmin(cells, [](const ProximityRecord& r) { return r.d_c; });
}

/// Octagon closest to disc d_c (minimum over its column).
inline Nearest nearest_octagon(const ProximityMatrix& m, int d_c) {
    const auto cells = m.column(d_c);
    if (cells.empty())
        throw MissingDiameter("disc diameter " + std::to_string(d_c) + " not in proximity matrix");
    return detail::argmin(cells, [](const ProximityRecord& r) { return r.d_o; });
}

enum class NodeKind { octagon, disc };

struct GraphNode {
    NodeKind kind = NodeKind::octagon;
    int diameter = 0;

    friend constexpr auto operator<=>(const GraphNode&, const GraphNode&) = default;
};

inline std::string node_id(const GraphNode& n) {
    return (n.kind == NodeKind::octagon ? "o" : "c") + std::to_string(n.diameter);
}

struct GraphEdge {
    GraphNode from;
    GraphNode to;
    Rational jaccard;
    std::vector<int> tied;
};

/// Directed nearest-neighbor graph: every octagon points at its nearest disc
/// and every disc at its nearest octagon.
struct ProximityGraph {
    std::vector<GraphNode> nodes; // octagons ascending, then discs ascending
    std::vector<GraphEdge> edges; // same order as the source nodes

    const GraphEdge* out_edge(const GraphNode& n) const {
        for (const auto& e : edges) {
            if (e.from == n)
                return &e;
        }
        return nullptr;
    }

    /// Weakly connected components, each a sorted node list; components are
    /// ordered by their first node.
    std::vector<std::vector<GraphNode>> weak_components() const {
        std::vector<std::size_t> parent(nodes.size());
        std::iota(parent.begin(), parent.end(), std::size_t{0});
        auto find = [&](std::size_t x) {
            while (parent[x] != x)
                x = parent[x] = parent[parent[x]];
            return x;
        };
        auto index = [&](const GraphNode& n) {
            return static_cast<std::size_t>(std::lower_bound(nodes.begin(), nodes.end(), n) - nodes.begin());
        };
        for (const auto& e : edges) {
            const auto a = find(index(e.from));
            const auto b = find(index(e.to));
            if (a != b)
                parent[std::max(a, b)] = std::min(a, b);
        }
        std::map<std::size_t, std::vector<GraphNode>> groups;
        for (std::size_t i = 0; i < nodes.size(); ++i)
            groups[find(i)].push_back(nodes[i]);
        std::vector<std::vector<GraphNode>> out;
        for (auto& [root, members] : groups) {
            std::sort(members.begin(), members.end());
            out.push_back(std::move(members));
        }
        std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
        return out;
    }

    /// Pairs (octagon, disc) that are each other's nearest neighbor.
    std::vector<DiameterPair> mutual_pairs() const {
        std::vector<DiameterPair> out;
        for (const auto& e : edges) {
            if (e.from.kind != NodeKind::octagon)
                continue;
            const auto* back = out_edge(e.to);
            if (back && back->to == e.from)
                out.push_back({e.from.diameter, e.to.diameter});
        }
        return out;
    }
};

inline ProximityGraph build_graph(const ProximityMatrix& m) {
    if (m.empty())
        throw std::invalid_argument("cannot build a graph from an empty proximity matrix");
    ProximityGraph g;
    const auto octagons = m.octagon_diameters();
    const auto discs = m.disc_diameters();
    for (int d : octagons)
        g.nodes.push_back({NodeKind::octagon, d});
    for (int d : discs)
        g.nodes.push_back({NodeKind::disc, d});
    for (int d : octagons) {
        auto n = nearest_disc(m, d);
        g.edges.push_back({{NodeKind::octagon, d}, {NodeKind::disc, n.diameter}, n.jaccard, std::move(n.tied)});
    }
    for (int d : discs) {
        auto n = nearest_octagon(m, d);
        g.edges.push_back({{NodeKind::disc, d}, {NodeKind::octagon, n.diameter}, n.jaccard, std::move(n.tied)});
    }
    return g;
}

/// Inscribed-disc ratio of the Euclidean model, 2/√5.
inline const double euclidean_inscribed_ratio = 2.0 / std::sqrt(5.0);

struct InscribedReport {
    int d_o = 0;
    int d_c_max = 0;
    Rational ratio;

    /// 2/√5 - ratio.
    double gap_to_euclidean() const { return euclidean_inscribed_ratio - to_double(ratio); }
};

/// Largest concentric disc (same parity) contained in the octagon.
inline InscribedReport inscribed_max_disc(int d_o) {
    const auto oct = make_octagon(OctagonSpec(d_o));
    for (int d_c = d_o; d_c >= 1; d_c -= 2) {
        if (is_subset(make_disc(DiscSpec(d_c)), oct))
            return {d_o, d_c, Rational(d_c, d_o)};
    }
    // The central pixel (odd) or central 2x2 block (even) is always inside.
    throw std::logic_error("no inscribed disc found for d_o = " + std::to_string(d_o));
}

} // namespace pixoct
