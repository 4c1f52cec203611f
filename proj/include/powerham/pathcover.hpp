#ifndef POWERHAM_PATHCOVER_HPP
#define POWERHAM_PATHCOVER_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "powerham/cliques.hpp"
#include "powerham/kpath.hpp"
#include "powerham/numeric.hpp"
#include "powerham/random.hpp"

namespace powerham {

inline constexpr std::size_t max_hyper_k = 7;

// Sorted vertex tuple of length <= 8, padded with 0xFFFF.
struct TupleKey {
    std::array<std::uint16_t, 8> v;

    TupleKey() { v.fill(0xFFFF); }

    template <class It>
    static TupleKey of_sorted(It first, It last) {
        TupleKey key;
        std::size_t i = 0;
        for (; first != last; ++first) {
            key.v[i++] = static_cast<std::uint16_t>(*first);
        }
        return key;
    }

    template <class It>
    static TupleKey of(It first, It last) {
        TupleKey key = of_sorted(first, last);
        auto end = std::find(key.v.begin(), key.v.end(), std::uint16_t(0xFFFF));
        std::sort(key.v.begin(), end);
        return key;
    }

    friend bool operator==(const TupleKey&, const TupleKey&) = default;
};

struct TupleKeyHash {
    std::size_t operator()(const TupleKey& key) const {
        std::uint64_t a = 0, b = 0;
        for (int i = 0; i < 4; ++i) {
            a = (a << 16) | key.v[i];
            b = (b << 16) | key.v[i + 4];
        }
        return static_cast<std::size_t>(SplitMix64::mix(a ^ SplitMix64::mix(b)));
    }
};

/*
 * (k+1)-uniform hypergraph whose edges are the (k+1)-cliques of a host graph.
 * Each k-subset of an edge maps to the sorted list of vertices completing it to
 * an edge; the k-tuple degree is the length of that list.
 */
struct CliqueHypergraph {
    std::size_t n = 0;
    std::size_t k = 1;
    std::vector<std::vector<Vertex>> edges; // sorted (k+1)-tuples, lexicographic
    std::unordered_map<TupleKey, std::vector<Vertex>, TupleKeyHash> extensions;

    bool empty() const { return edges.empty(); }

    std::size_t degree(const TupleKey& tuple) const {
        auto it = extensions.find(tuple);
        return it == extensions.end() ? 0 : it->second.size();
    }

    template <class Range>
    std::size_t degree_of(const Range& tuple) const {
        return degree(TupleKey::of(std::begin(tuple), std::end(tuple)));
    }

    const std::vector<Vertex>* completions(const TupleKey& tuple) const {
        auto it = extensions.find(tuple);
        return it == extensions.end() ? nullptr : &it->second;
    }

    bool contains_edge(std::vector<Vertex> e) const {
        std::sort(e.begin(), e.end());
        Vertex last = e.back();
        e.pop_back();
        auto* list = completions(TupleKey::of_sorted(e.begin(), e.end()));
        return list && std::binary_search(list->begin(), list->end(), last);
    }
};

namespace detail {

inline void index_edge(CliqueHypergraph& h, const std::vector<Vertex>& e) {
    // drop one vertex at a time; e is sorted so each k-subset stays sorted
    std::vector<Vertex> sub(e.size() - 1);
    for (std::size_t skip = 0; skip < e.size(); ++skip) {
        std::size_t j = 0;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (i != skip) {
                sub[j++] = e[i];
            }
        }
        h.extensions[TupleKey::of_sorted(sub.begin(), sub.end())].push_back(e[skip]);
    }
}

inline CliqueHypergraph hypergraph_from_edges(std::size_t n, std::size_t k, std::vector<std::vector<Vertex>> edges) {
    CliqueHypergraph h;
    h.n = n;
    h.k = k;
    h.edges = std::move(edges);
    h.extensions.reserve(h.edges.size());
    for (const auto& e : h.edges) {
        index_edge(h, e);
    }
    for (auto& [key, list] : h.extensions) {
        std::sort(list.begin(), list.end());
    }
    return h;
}

}

inline CliqueHypergraph build_clique_hypergraph(const Graph& g, std::size_t k, const VertexSet& within) {
    if (k == 0 || k > max_hyper_k) {
        throw InputError("clique hypergraph needs 1 <= k <= " + std::to_string(max_hyper_k));
    }
    if (g.size() > 0xFFFF) {
        throw InputError("clique hypergraph: too many vertices");
    }
    std::vector<std::vector<Vertex>> edges;
    for_each_clique(g, k + 1, within, [&](const std::vector<Vertex>& c) { edges.push_back(c); });
    return detail::hypergraph_from_edges(g.size(), k, std::move(edges));
}

inline CliqueHypergraph build_clique_hypergraph(const Graph& g, std::size_t k) {
    return build_clique_hypergraph(g, k, VertexSet::full(g.size()));
}

/*
 * Repeatedly deletes every edge containing a k-subset of degree <= threshold
 * until all surviving k-subsets have degree > threshold. The fixpoint is the
 * largest sub-hypergraph with that property, so the removal order does not
 * matter; `order_seed` randomises the worklist (used to test exactly that).
 */
inline CliqueHypergraph prune(const CliqueHypergraph& h, std::size_t threshold,
                              std::optional<std::uint64_t> order_seed = std::nullopt) {
    const std::size_t m = h.edges.size();
    std::vector<char> alive(m, 1);
    std::unordered_map<TupleKey, std::vector<std::uint32_t>, TupleKeyHash> incident;
    incident.reserve(h.extensions.size());
    std::vector<Vertex> sub(h.k);
    auto for_each_subset = [&](const std::vector<Vertex>& e, auto&& f) {
        for (std::size_t skip = 0; skip < e.size(); ++skip) {
            std::size_t j = 0;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (i != skip) {
                    sub[j++] = e[i];
                }
            }
            f(TupleKey::of_sorted(sub.begin(), sub.end()));
        }
    };
    for (std::uint32_t id = 0; id < m; ++id) {
        for_each_subset(h.edges[id], [&](const TupleKey& key) { incident[key].push_back(id); });
    }
    std::unordered_map<TupleKey, std::size_t, TupleKeyHash> degree;
    degree.reserve(incident.size());
    std::vector<TupleKey> work;
    for (const auto& [key, ids] : incident) {
        degree[key] = ids.size();
        if (ids.size() <= threshold) {
            work.push_back(key);
        }
    }
    // hash-map iteration order is unspecified; fix it before processing
    std::sort(work.begin(), work.end(), [](const TupleKey& a, const TupleKey& b) { return a.v < b.v; });
    std::optional<SplitMix64> rng;
    if (order_seed) {
        rng.emplace(*order_seed);
        rng->shuffle(work);
    }
    std::size_t head = 0;
    while (head < work.size()) {
        TupleKey key;
        if (rng) {
            std::size_t pick = head + rng->below(work.size() - head);
            std::swap(work[head], work[pick]);
        }
        key = work[head++];
        for (auto id : incident[key]) {
            if (!alive[id]) {
                continue;
            }
            alive[id] = 0;
            for_each_subset(h.edges[id], [&](const TupleKey& other) {
                std::size_t& d = degree[other];
                --d;
                if (d == threshold) {
                    work.push_back(other);
                }
            });
        }
    }
    std::vector<std::vector<Vertex>> kept;
    for (std::size_t id = 0; id < m; ++id) {
        if (alive[id]) {
            kept.push_back(h.edges[id]);
        }
    }
    return detail::hypergraph_from_edges(h.n, h.k, std::move(kept));
}

inline constexpr std::size_t default_restarts = 8;

/*
 * Maximal tight path: start at a random edge, then extend alternately at the
 * tail and the head by an unused vertex completing the end k-tuple to an edge.
 * Among candidates the one whose new end tuple has the most unused completions
 * wins, ties to the lowest id. The longest of `restarts` seeded attempts is
 * returned; its ends admit no further extension.
 */
inline KPath greedy_tight_path(const CliqueHypergraph& h, std::uint64_t seed, std::size_t restarts = default_restarts) {
    if (h.empty()) {
        throw NoCliquesError("greedy_tight_path: empty hypergraph");
    }
    const std::size_t k = h.k;
    SplitMix64 rng(seed);
    KPath best{{}, k};
    std::vector<char> used(h.n, 0);
    std::vector<Vertex> tuple(k);

    auto remaining = [&](const std::vector<Vertex>& end_tuple, Vertex extra) {
        auto* list = h.completions(TupleKey::of(end_tuple.begin(), end_tuple.end()));
        if (!list) {
            return std::size_t(0);
        }
        std::size_t c = 0;
        for (auto w : *list) {
            if (!used[w] && w != extra) {
                ++c;
            }
        }
        return c;
    };

    for (std::size_t attempt = 0; attempt < std::max<std::size_t>(restarts, 1); ++attempt) {
        std::fill(used.begin(), used.end(), 0);
        const auto& start = h.edges[rng.below(h.edges.size())];
        std::deque<Vertex> path(start.begin(), start.end());
        for (auto v : path) {
            used[v] = 1;
        }
        bool tail_open = true;
        bool head_open = true;
        bool at_tail = true;
        while (tail_open || head_open) {
            if ((at_tail && !tail_open) || (!at_tail && !head_open)) {
                at_tail = !at_tail;
                continue;
            }
            // end tuple in path order, outermost vertex last
            for (std::size_t i = 0; i < k; ++i) {
                tuple[i] = at_tail ? path[path.size() - k + i] : path[k - 1 - i];
            }
            auto* list = h.completions(TupleKey::of(tuple.begin(), tuple.end()));
            Vertex pick = h.n;
            std::size_t pick_score = 0;
            if (list) {
                std::vector<Vertex> next_end(tuple.begin() + 1, tuple.end());
                next_end.push_back(0);
                for (auto w : *list) {
                    if (used[w]) {
                        continue;
                    }
                    next_end.back() = w;
                    std::size_t score = remaining(next_end, w);
                    if (pick == h.n || score > pick_score) {
                        pick = w;
                        pick_score = score;
                    }
                }
            }
            if (pick == h.n) {
                (at_tail ? tail_open : head_open) = false;
            }
            else {
                used[pick] = 1;
                if (at_tail) {
                    path.push_back(pick);
                }
                else {
                    path.push_front(pick);
                }
            }
            at_tail = !at_tail;
        }
        if (path.size() > best.vertices.size()) {
            best.vertices.assign(path.begin(), path.end());
        }
    }
    return best;
}

struct PathCover {
    std::vector<KPath> paths;
    std::vector<Vertex> leftover;
    bool reached_stop = false; // leftover shrank to stop_size
    std::string stop_reason;
};

/*
 * Repeated path extraction: on the uncovered, non-excluded set L, rebuild the
 * clique hypergraph of g[L], prune at ceil(zeta |L|), take a greedy tight path,
 * and continue until |L| <= stop_size or no hyperedge survives.
 */
inline PathCover cover_with_paths(const Graph& g, std::size_t k, const Rational& zeta, const VertexSet& excluded,
                                  std::size_t stop_size, std::uint64_t seed) {
    check_set(g, excluded);
    PathCover cover;
    VertexSet remaining = excluded.complement();
    std::uint64_t round = 0;
    while (true) {
        std::size_t left = remaining.count();
        if (left <= stop_size) {
            cover.reached_stop = true;
            cover.stop_reason = "stop size reached";
            break;
        }
        auto h = build_clique_hypergraph(g, k, remaining);
        auto pruned = prune(h, ceil_mul(zeta, left));
        if (pruned.empty()) {
            cover.stop_reason = "no connectable cliques left";
            break;
        }
        auto path = greedy_tight_path(pruned, derive_seed(seed, round++));
        for (auto v : path.vertices) {
            remaining.reset(v);
        }
        cover.paths.push_back(std::move(path));
    }
    cover.leftover = remaining.to_vector();
    return cover;
}

}

#endif /* POWERHAM_PATHCOVER_HPP */
