#ifndef POWERHAM_CLIQUES_HPP
#define POWERHAM_CLIQUES_HPP

#include <cstdint>
#include <vector>

#include "powerham/graph.hpp"
#include "powerham/numeric.hpp"

namespace powerham {

namespace detail {

template <class Visit>
bool clique_dfs(const Graph& g, std::size_t k, std::vector<Bitset>& cand,
                std::vector<Vertex>& current, Visit& visit) {
    std::size_t depth = current.size();
    if (depth == k) {
        return visit(static_cast<const std::vector<Vertex>&>(current));
    }
    const Bitset& pool = cand[depth];
    // not enough candidates left to finish a clique
    if (pool.count() < k - depth) {
        return true;
    }
    for (Vertex v = pool.first(); v < g.size(); v = pool.next(v + 1)) {
        current.push_back(v);
        if (depth + 1 < k) {
            cand[depth + 1].assign_and(pool, g.row(v));
            cand[depth + 1].keep_above(v);
        }
        bool go_on = clique_dfs(g, k, cand, current, visit);
        current.pop_back();
        if (!go_on) {
            return false;
        }
    }
    return true;
}

}

/*
 * Calls visit(clique) for every k-clique inside `within`, each once, as a sorted
 * vertex tuple, in lexicographic order. visit may return false to stop early
 * (a void-returning visitor never stops).
 */
template <class Visit>
void for_each_clique(const Graph& g, std::size_t k, const VertexSet& within, Visit&& visit) {
    check_set(g, within);
    auto wrapped = [&](const std::vector<Vertex>& c) -> bool {
        if constexpr (std::is_void_v<decltype(visit(c))>) {
            visit(c);
            return true;
        }
        else {
            return visit(c);
        }
    };
    if (k == 0) {
        wrapped(std::vector<Vertex>{});
        return;
    }
    std::vector<Bitset> cand(k, Bitset(g.size()));
    cand[0] = within;
    std::vector<Vertex> current;
    current.reserve(k);
    detail::clique_dfs(g, k, cand, current, wrapped);
}

inline std::vector<OrderedClique> list_cliques(const Graph& g, std::size_t k, const VertexSet& within) {
    std::vector<OrderedClique> out;
    for_each_clique(g, k, within, [&](const std::vector<Vertex>& c) { out.push_back(c); });
    return out;
}

inline std::vector<OrderedClique> list_cliques(const Graph& g, std::size_t k) {
    return list_cliques(g, k, VertexSet::full(g.size()));
}

namespace detail {

inline std::uint64_t count_cliques_from(const Graph& g, std::size_t remaining, const Bitset& pool,
                                        std::vector<Bitset>& scratch, std::size_t depth) {
    if (remaining == 0) {
        return 1;
    }
    if (remaining == 1) {
        return pool.count();
    }
    std::uint64_t total = 0;
    Bitset& next = scratch[depth];
    for (Vertex v = pool.first(); v < g.size(); v = pool.next(v + 1)) {
        next.assign_and(pool, g.row(v));
        next.keep_above(v);
        if (next.count() + 1 < remaining) {
            continue;
        }
        total += count_cliques_from(g, remaining - 1, next, scratch, depth + 1);
    }
    return total;
}

}

// Unordered k-cliques inside `within`.
inline BigInt count_cliques(const Graph& g, std::size_t k, const VertexSet& within) {
    check_set(g, within);
    if (k == 0) {
        return 1;
    }
    if (k == 1) {
        return within.count();
    }
    std::vector<Bitset> scratch(k, Bitset(g.size()));
    Bitset pool(g.size());
    BigInt total = 0;
    // per-root accumulation keeps the machine-word partial sums small
    within.for_each([&](Vertex v) {
        pool.assign_and(within, g.row(v));
        pool.keep_above(v);
        total += detail::count_cliques_from(g, k - 1, pool, scratch, 0);
    });
    return total;
}

// Ordered k-tuples of distinct, mutually adjacent vertices (k! per clique).
// k = 0 counts the empty tuple once; k > n gives 0.
inline BigInt count_ordered_cliques(const Graph& g, std::size_t k) {
    if (k > g.size()) {
        return 0;
    }
    return count_cliques(g, k, VertexSet::full(g.size())) * factorial(static_cast<unsigned>(k));
}

}

#endif /* POWERHAM_CLIQUES_HPP */
