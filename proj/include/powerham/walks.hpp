#ifndef POWERHAM_WALKS_HPP
#define POWERHAM_WALKS_HPP

#include <optional>
#include <vector>

#include "powerham/graph.hpp"
#include "powerham/numeric.hpp"

namespace powerham {

inline constexpr std::size_t max_walk_level = 64;

// counts[i][v] = number of (source, v)-walks with i inner vertices, i.e. walks
// of i+1 edges; vertices may repeat.
struct WalkCountTable {
    Vertex source = 0;
    std::vector<std::vector<BigInt>> counts;

    const BigInt& at(Vertex v, std::size_t inner) const { return counts[inner][v]; }
    std::size_t max_level() const { return counts.empty() ? 0 : counts.size() - 1; }
};

inline WalkCountTable count_walks(const Graph& g, Vertex x, std::size_t max_inner) {
    check_vertex(g, x);
    if (max_inner > max_walk_level) {
        throw InputError("count_walks: at most " + std::to_string(max_walk_level) + " inner vertices");
    }
    const std::size_t n = g.size();
    WalkCountTable table;
    table.source = x;
    table.counts.assign(max_inner + 1, std::vector<BigInt>(n, BigInt(0)));
    g.row(x).for_each([&](Vertex v) { table.counts[0][v] = 1; });
    for (std::size_t i = 0; i < max_inner; ++i) {
        auto& next = table.counts[i + 1];
        const auto& cur = table.counts[i];
        for (Vertex v = 0; v < n; ++v) {
            BigInt sum = 0;
            g.row(v).for_each([&](Vertex u) {
                if (!cur[u].is_zero()) {
                    sum += cur[u];
                }
            });
            next[v] = std::move(sum);
        }
    }
    return table;
}

/*
 * Constants of the walk-count lemma for a given mu:
 *   L = floor(8/mu),  delta_i = (mu^2/3)^i (1/2)^{binom(i+1,2)},
 *   c = (mu^2/48) delta_{floor(4/mu)}^2.
 */
struct DeltaSchedule {
    Rational mu;
    std::size_t L = 0;
    std::vector<Rational> delta; // delta[0..L]
    Rational c;
};

inline Rational delta_value(const Rational& mu, std::size_t i) {
    Rational base = mu * mu / 3;
    unsigned halvings = static_cast<unsigned>(i * (i + 1) / 2);
    return pow(base, static_cast<unsigned>(i)) / Rational(BigInt(1) << halvings);
}

inline DeltaSchedule delta_schedule(const Rational& mu) {
    if (mu <= 0 || mu > 1) {
        throw InputError("delta_schedule: mu must lie in (0, 1]");
    }
    DeltaSchedule s;
    s.mu = mu;
    s.L = floor(Rational(8) / mu).convert_to<std::size_t>();
    s.delta.reserve(s.L + 1);
    for (std::size_t i = 0; i <= s.L; ++i) {
        s.delta.push_back(delta_value(mu, i));
    }
    std::size_t mid = floor(Rational(4) / mu).convert_to<std::size_t>();
    Rational dm = delta_value(mu, mid);
    s.c = mu * mu / 48 * dm * dm;
    return s;
}

// X_i: vertices reached from the source by at least delta_i n^i walks with i
// inner vertices; cumulative[i] is the union of X_0..X_i.
struct LayerFamily {
    std::vector<VertexSet> layers;
    std::vector<VertexSet> cumulative;
};

// count >= r * n^i, compared exactly
inline bool meets_threshold(const BigInt& count, const Rational& r, std::size_t n, std::size_t i) {
    BigInt scale = boost::multiprecision::pow(BigInt(n), static_cast<unsigned>(i));
    return count * denominator(r) >= numerator(r) * scale;
}

inline LayerFamily layer_family(const Graph& g, Vertex x, const DeltaSchedule& schedule) {
    if (schedule.L > max_walk_level) {
        throw InputError("layer_family: schedule too long");
    }
    auto table = count_walks(g, x, schedule.L);
    const std::size_t n = g.size();
    LayerFamily family;
    VertexSet running(n);
    for (std::size_t i = 0; i <= schedule.L; ++i) {
        VertexSet layer(n);
        for (Vertex v = 0; v < n; ++v) {
            if (!table.at(v, i).is_zero() && meets_threshold(table.at(v, i), schedule.delta[i], n, i)) {
                layer.set(v);
            }
        }
        running |= layer;
        family.layers.push_back(std::move(layer));
        family.cumulative.push_back(running);
    }
    return family;
}

struct WalkLevel {
    std::size_t level = 0;
    BigInt count;
};

// Smallest l <= L with at least c n^l (x,y)-walks with l inner vertices.
inline std::optional<WalkLevel> find_walk_level(const Graph& g, Vertex x, Vertex y, const DeltaSchedule& schedule) {
    check_vertex(g, y);
    if (x == y) {
        throw InputError("find_walk_level needs distinct vertices");
    }
    auto table = count_walks(g, x, schedule.L);
    for (std::size_t l = 0; l <= schedule.L; ++l) {
        const BigInt& count = table.at(y, l);
        if (!count.is_zero() && meets_threshold(count, schedule.c, g.size(), l)) {
            return WalkLevel{l, count};
        }
    }
    return std::nullopt;
}

// Smallest l <= max_inner with any (x,y)-walk at all; the raw counterpart of
// find_walk_level.
inline std::optional<WalkLevel> shortest_walk_level(const Graph& g, Vertex x, Vertex y, std::size_t max_inner) {
    check_vertex(g, y);
    auto table = count_walks(g, x, max_inner);
    for (std::size_t l = 0; l <= max_inner; ++l) {
        if (!table.at(y, l).is_zero()) {
            return WalkLevel{l, table.at(y, l)};
        }
    }
    return std::nullopt;
}

}

#endif /* POWERHAM_WALKS_HPP */
