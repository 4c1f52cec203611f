#ifndef POWERHAM_ABSORBER_HPP
#define POWERHAM_ABSORBER_HPP

#include <algorithm>
#include <optional>
#include <vector>

#include "powerham/cliques.hpp"
#include "powerham/connector.hpp"
#include "powerham/kpath.hpp"
#include "powerham/properties.hpp"
#include "powerham/random.hpp"

namespace powerham {

// Ordered 2k-clique inside N(v) whose two halves are connectable.
struct VAbsorber {
    Vertex v = 0;
    OrderedClique tuple;

    std::size_t k() const { return tuple.size() / 2; }
    OrderedClique x_half() const { return OrderedClique(tuple.begin(), tuple.begin() + k()); }
    OrderedClique y_half() const { return OrderedClique(tuple.begin() + k(), tuple.end()); }

    friend bool operator==(const VAbsorber&, const VAbsorber&) = default;
};

// Usable for w: every tuple vertex is a neighbour of w.
inline bool absorbs(const Graph& g, const OrderedClique& tuple, Vertex w) {
    return std::all_of(tuple.begin(), tuple.end(), [&](Vertex x) { return g.adjacent(w, x); });
}

inline std::optional<std::string> absorber_violation(const Graph& g, const VAbsorber& a, std::size_t threshold) {
    if (a.tuple.empty() || a.tuple.size() % 2 != 0) {
        return "tuple must have even positive length";
    }
    if (!is_clique(g, a.tuple)) {
        return "tuple is not a clique";
    }
    if (!absorbs(g, a.tuple, a.v)) {
        return "tuple not inside N(v)";
    }
    if (!is_connectable(g, a.x_half(), threshold) || !is_connectable(g, a.y_half(), threshold)) {
        return "half not connectable";
    }
    return std::nullopt;
}

/*
 * Up to `limit` v-absorbers: 2k-cliques of N(v) in lexicographic order, each
 * expanded into its orderings in lexicographic order, kept when both halves
 * reach ceil(zeta n) common neighbours.
 */
inline std::vector<VAbsorber> find_v_absorbers(const Graph& g, Vertex v, std::size_t k, const Rational& zeta,
                                               std::size_t limit) {
    check_vertex(g, v);
    if (k == 0) {
        throw InputError("find_v_absorbers: k must be >= 1");
    }
    std::size_t threshold = ceil_mul(zeta, g.size());
    std::vector<VAbsorber> out;
    if (limit == 0) {
        return out;
    }
    for_each_clique(g, 2 * k, g.row(v), [&](const std::vector<Vertex>& clique) {
        std::vector<Vertex> order = clique;
        do {
            OrderedClique x(order.begin(), order.begin() + k);
            OrderedClique y(order.begin() + k, order.end());
            if (is_connectable(g, x, threshold) && is_connectable(g, y, threshold)) {
                out.push_back(VAbsorber{v, order});
                if (out.size() >= limit) {
                    return false;
                }
            }
        } while (std::next_permutation(order.begin(), order.end()));
        return true;
    });
    return out;
}

struct AbsorberFamily {
    std::vector<VAbsorber> members;                    // pairwise vertex-disjoint
    std::vector<std::vector<std::size_t>> per_vertex_index; // w -> members usable for w
    std::vector<char> spent;
};

struct FamilyStats {
    std::size_t candidates = 0; // connectable tuples found by the per-vertex search
    std::size_t sampled = 0;    // survivors of the Bernoulli(p) draw
    std::size_t kept = 0;
    std::size_t discarded = 0;  // sampled but intersecting an earlier member
    double discard_rate = 0.0;
    std::size_t min_per_vertex = 0;
    double mean_per_vertex = 0.0;
};

struct SampledFamily {
    AbsorberFamily family;
    FamilyStats stats;
};

inline constexpr std::size_t default_per_vertex_cap = 8;

inline void index_family(const Graph& g, AbsorberFamily& family) {
    const std::size_t n = g.size();
    family.per_vertex_index.assign(n, {});
    family.spent.assign(family.members.size(), 0);
    for (std::size_t i = 0; i < family.members.size(); ++i) {
        const auto& tuple = family.members[i].tuple;
        VertexSet common = common_neighbors_unchecked(g, tuple);
        common.for_each([&](Vertex w) { family.per_vertex_index[w].push_back(i); });
    }
}

inline void fill_usage_stats(const AbsorberFamily& family, FamilyStats& stats) {
    const std::size_t n = family.per_vertex_index.size();
    stats.kept = family.members.size();
    stats.discard_rate = stats.sampled == 0 ? 0.0 : static_cast<double>(stats.discarded) / stats.sampled;
    if (n == 0) {
        return;
    }
    std::size_t total = 0;
    stats.min_per_vertex = family.per_vertex_index[0].size();
    for (const auto& list : family.per_vertex_index) {
        total += list.size();
        stats.min_per_vertex = std::min(stats.min_per_vertex, list.size());
    }
    stats.mean_per_vertex = static_cast<double>(total) / n;
}

/*
 * Per-vertex candidate search: for each v, up to 4*cap randomised greedy
 * 2k-cliques inside N(v), shuffled into an order and kept as a candidate when
 * both halves are connectable (at most `cap` distinct vertex sets per v).
 * Each candidate enters with probability p; members are then kept greedily
 * in (v, candidate) order when disjoint from everything kept before.
 */
inline SampledFamily sample_family(const Graph& g, std::size_t k, const Rational& zeta, const Rational& p,
                                   std::uint64_t seed, std::size_t cap = default_per_vertex_cap) {
    if (p <= 0 || p > 1) {
        throw InputError("sample_family: p must lie in (0, 1]");
    }
    if (k == 0) {
        throw InputError("sample_family: k must be >= 1");
    }
    const std::size_t n = g.size();
    const std::size_t threshold = ceil_mul(zeta, n);
    SampledFamily out;
    VertexSet taken(n);
    for (Vertex v = 0; v < n; ++v) {
        SplitMix64 rng(derive_seed(seed, v));
        std::vector<std::vector<Vertex>> seen_sets;
        std::vector<VAbsorber> candidates;
        auto pool = g.row(v).to_vector();
        if (pool.size() < 2 * k) {
            continue;
        }
        for (std::size_t attempt = 0; attempt < 4 * cap && candidates.size() < cap; ++attempt) {
            rng.shuffle(pool);
            std::vector<Vertex> clique;
            for (auto w : pool) {
                if (std::all_of(clique.begin(), clique.end(), [&](Vertex u) { return g.adjacent(u, w); })) {
                    clique.push_back(w);
                    if (clique.size() == 2 * k) {
                        break;
                    }
                }
            }
            if (clique.size() < 2 * k) {
                continue;
            }
            std::vector<Vertex> key = clique;
            std::sort(key.begin(), key.end());
            if (std::find(seen_sets.begin(), seen_sets.end(), key) != seen_sets.end()) {
                continue;
            }
            OrderedClique x(clique.begin(), clique.begin() + k);
            OrderedClique y(clique.begin() + k, clique.end());
            if (!is_connectable(g, x, threshold) || !is_connectable(g, y, threshold)) {
                continue;
            }
            seen_sets.push_back(std::move(key));
            candidates.push_back(VAbsorber{v, clique});
        }
        out.stats.candidates += candidates.size();
        for (auto& cand : candidates) {
            if (!rng.bernoulli(p)) {
                continue;
            }
            ++out.stats.sampled;
            bool clash = std::any_of(cand.tuple.begin(), cand.tuple.end(), [&](Vertex u) { return taken.test(u); });
            if (clash) {
                ++out.stats.discarded;
                continue;
            }
            for (auto u : cand.tuple) {
                taken.set(u);
            }
            out.family.members.push_back(std::move(cand));
        }
    }
    index_family(g, out.family);
    fill_usage_stats(out.family, out.stats);
    return out;
}

/*
 * Keeps at most `max_members` members, chosen greedily: each round takes the
 * member usable for the most vertices that still have fewer than `target`
 * chosen members (vertices of chosen members do not count), ties to the
 * lowest index. The kept members retain their original relative order.
 */
inline AbsorberFamily select_members(const Graph& g, const AbsorberFamily& family, std::size_t max_members,
                                     std::size_t target = 2) {
    const std::size_t n = g.size();
    const std::size_t m = family.members.size();
    std::vector<VertexSet> usable(m, VertexSet(n));
    for (Vertex w = 0; w < n; ++w) {
        for (auto i : family.per_vertex_index[w]) {
            usable[i].set(w);
        }
    }
    std::vector<std::size_t> cover(n, 0);
    std::vector<char> chosen(m, 0);
    VertexSet inside(n);
    for (std::size_t round = 0; round < std::min(max_members, m); ++round) {
        std::size_t best = m;
        std::size_t best_gain = 0;
        for (std::size_t i = 0; i < m; ++i) {
            if (chosen[i]) {
                continue;
            }
            VertexSet fresh = usable[i] - inside;
            for (auto u : family.members[i].tuple) {
                fresh.reset(u);
            }
            std::size_t gain = 0;
            fresh.for_each([&](Vertex w) {
                if (cover[w] < target) {
                    ++gain;
                }
            });
            if (best == m || gain > best_gain) {
                best = i;
                best_gain = gain;
            }
        }
        if (best == m || (best_gain == 0 && round > 0)) {
            break;
        }
        chosen[best] = 1;
        usable[best].for_each([&](Vertex w) { ++cover[w]; });
        for (auto u : family.members[best].tuple) {
            inside.set(u);
        }
    }
    AbsorberFamily out;
    for (std::size_t i = 0; i < m; ++i) {
        if (chosen[i]) {
            out.members.push_back(family.members[i]);
        }
    }
    index_family(g, out);
    return out;
}

struct Segment {
    std::size_t member = 0; // index into AbsorbingPath::members
    std::size_t start = 0;  // first of 2k consecutive positions in the path
};

struct AbsorbingPath {
    KPath path;
    std::vector<VAbsorber> members;
    std::vector<Segment> segments;
    std::vector<char> spent;
    OrderedClique x_end;
    OrderedClique y_end;
    std::vector<std::size_t> dropped; // family members skipped because they could not be connected
};

inline std::optional<std::string> absorbing_path_violation(const Graph& g, const AbsorbingPath& pa) {
    if (auto bad = kpath_violation(g, pa.path.vertices, pa.path.k)) {
        return bad;
    }
    const std::size_t k = pa.path.k;
    std::size_t previous_end = 0;
    for (std::size_t s = 0; s < pa.segments.size(); ++s) {
        const auto& seg = pa.segments[s];
        std::size_t len = 2 * k + (pa.spent.size() > s && pa.spent[s] ? 1 : 0);
        if (seg.start < previous_end || seg.start + len > pa.path.size()) {
            return "segment " + std::to_string(s) + " overlaps or leaves the path";
        }
        const auto& tuple = pa.members[seg.member].tuple;
        auto at = pa.path.vertices.begin() + seg.start;
        if (!std::equal(tuple.begin(), tuple.begin() + k, at) ||
            !std::equal(tuple.begin() + k, tuple.end(), at + (len - k))) {
            return "segment " + std::to_string(s) + " does not match its absorber";
        }
        previous_end = seg.start + len;
    }
    if (pa.path.first_end() != pa.x_end || pa.path.last_end() != pa.y_end) {
        return "ends do not match";
    }
    return std::nullopt;
}

struct AssemblyOptions {
    std::size_t max_inner = default_max_inner_cap;
    std::size_t retries = 4;
    std::size_t budget = default_connect_budget;
    bool drop_unconnectable = false; // skip a member instead of failing
    std::optional<VertexSet> allowed_inner;
};

/*
 * Chains the members, in ascending order of target vertex, into one k-path:
 * member i's y-half is connected to member i+1's x-half while avoiding every
 * vertex already on the path and every member tuple.
 */
inline AbsorbingPath build_absorbing_path(const Graph& g, std::size_t k, const AbsorberFamily& family,
                                          std::uint64_t seed, const AssemblyOptions& options = {}) {
    if (family.members.empty()) {
        throw InputError("build_absorbing_path: empty family");
    }
    const std::size_t n = g.size();
    std::vector<std::size_t> order(family.members.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        order[i] = i;
    }
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return family.members[a].v < family.members[b].v; });
    VertexSet reserved(n);
    for (const auto& m : family.members) {
        if (m.tuple.size() != 2 * k) {
            throw InputError("build_absorbing_path: member tuple has the wrong length");
        }
        for (auto u : m.tuple) {
            reserved.set(u);
        }
    }
    AbsorbingPath pa;
    pa.path.k = k;
    std::size_t previous = family.members.size();
    for (std::size_t idx = 0; idx < order.size(); ++idx) {
        const auto& member = family.members[order[idx]];
        if (previous != family.members.size()) {
            ConnectRequest req;
            req.x_end = pa.path.last_end();
            req.y_end = member.x_half();
            req.k = k;
            req.max_inner = options.max_inner;
            req.budget = options.budget;
            req.allowed_inner = options.allowed_inner;
            req.forbidden = reserved;
            for (auto u : req.x_end) {
                req.forbidden.reset(u);
            }
            for (auto u : req.y_end) {
                req.forbidden.reset(u);
            }
            std::optional<KPath> link;
            for (std::size_t attempt = 0; attempt < std::max<std::size_t>(options.retries, 1) && !link; ++attempt) {
                req.seed = derive_seed(seed, idx * 64 + attempt);
                link = connect(g, req);
            }
            if (!link) {
                if (options.drop_unconnectable) {
                    pa.dropped.push_back(order[idx]);
                    for (auto u : member.tuple) {
                        reserved.reset(u);
                    }
                    continue;
                }
                throw AssemblyError("cannot connect absorber " + std::to_string(previous) + " (v=" +
                                        std::to_string(family.members[previous].v) + ") to absorber " +
                                        std::to_string(order[idx]) + " (v=" + std::to_string(member.v) + ")",
                                    previous, order[idx]);
            }
            for (std::size_t i = k; i + k < link->size(); ++i) {
                pa.path.vertices.push_back(link->vertices[i]);
                reserved.set(link->vertices[i]);
            }
        }
        pa.segments.push_back(Segment{pa.members.size(), pa.path.size()});
        pa.members.push_back(member);
        pa.path.vertices.insert(pa.path.vertices.end(), member.tuple.begin(), member.tuple.end());
        previous = order[idx];
    }
    pa.spent.assign(pa.members.size(), 0);
    pa.x_end = pa.path.first_end();
    pa.y_end = pa.path.last_end();
    return pa;
}

// Free segments usable for v.
inline std::vector<std::size_t> usable_segments(const Graph& g, const AbsorbingPath& pa, Vertex v) {
    std::vector<std::size_t> out;
    for (std::size_t s = 0; s < pa.segments.size(); ++s) {
        if (!pa.spent[s] && absorbs(g, pa.members[pa.segments[s].member].tuple, v)) {
            out.push_back(s);
        }
    }
    return out;
}

/*
 * Maximum matching of vertices to free usable segments (augmenting paths,
 * vertices and segments in ascending order). Entry i is the segment matched
 * to vertices[i], if any.
 */
inline std::vector<std::optional<std::size_t>> match_to_segments(const Graph& g, const AbsorbingPath& pa,
                                                                 const std::vector<Vertex>& vertices) {
    const std::size_t s_count = pa.segments.size();
    std::vector<std::vector<std::size_t>> adj(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        adj[i] = usable_segments(g, pa, vertices[i]);
    }
    std::vector<std::size_t> owner(s_count, vertices.size());
    std::vector<char> visited;
    auto augment = [&](auto&& self, std::size_t i) -> bool {
        for (auto s : adj[i]) {
            if (visited[s]) {
                continue;
            }
            visited[s] = 1;
            if (owner[s] == vertices.size() || self(self, owner[s])) {
                owner[s] = i;
                return true;
            }
        }
        return false;
    };
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        visited.assign(s_count, 0);
        augment(augment, i);
    }
    std::vector<std::optional<std::size_t>> out(vertices.size());
    for (std::size_t s = 0; s < s_count; ++s) {
        if (owner[s] != vertices.size()) {
            out[owner[s]] = s;
        }
    }
    return out;
}

/*
 * Inserts each v of x_set at the midpoint of a distinct free v-absorbing
 * segment and marks those segments spent. Ends are unchanged.
 */
inline KPath absorb(const Graph& g, AbsorbingPath& pa, const VertexSet& x_set) {
    check_set(g, x_set);
    auto vertices = x_set.to_vector();
    for (auto v : pa.path.vertices) {
        if (x_set.test(v)) {
            throw InputError("absorb: vertex " + std::to_string(v) + " already on the path");
        }
    }
    auto match = match_to_segments(g, pa, vertices);
    const std::size_t k = pa.path.k;
    std::vector<std::optional<Vertex>> insert_at(pa.segments.size());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (!match[i]) {
            throw CapacityError("no free absorber for vertex " + std::to_string(vertices[i]), vertices[i]);
        }
        insert_at[*match[i]] = vertices[i];
    }
    KPath out{{}, k};
    out.vertices.reserve(pa.path.size() + vertices.size());
    std::size_t next_segment = 0;
    for (std::size_t pos = 0; pos < pa.path.size(); ++pos) {
        while (next_segment < pa.segments.size() && pa.segments[next_segment].start + k < pos) {
            ++next_segment;
        }
        if (next_segment < pa.segments.size() && pa.segments[next_segment].start + k == pos &&
            insert_at[next_segment]) {
            out.vertices.push_back(*insert_at[next_segment]);
        }
        out.vertices.push_back(pa.path.vertices[pos]);
    }
    // later segments shift right by the number of insertions before them
    std::size_t shift = 0;
    for (std::size_t s = 0; s < pa.segments.size(); ++s) {
        pa.segments[s].start += shift;
        if (insert_at[s]) {
            pa.spent[s] = 1;
            ++shift;
        }
    }
    pa.path = out;
    return out;
}

}

#endif /* POWERHAM_ABSORBER_HPP */
