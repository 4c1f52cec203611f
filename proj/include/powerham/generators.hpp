#ifndef POWERHAM_GENERATORS_HPP
#define POWERHAM_GENERATORS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "powerham/graph.hpp"
#include "powerham/numeric.hpp"
#include "powerham/random.hpp"

namespace powerham {

/*
 * Two cliques A and B of size ceil((1/2 + mu/2) n) sharing floor(mu n)
 * vertices, trimmed to exactly n vertices by shrinking A\B and B\A in turn.
 * Vertex layout: A\B first, then A∩B, then B\A.
 */
struct TwoCliquesLayout {
    std::size_t only_a = 0;
    std::size_t shared = 0;
    std::size_t only_b = 0;
};

inline TwoCliquesLayout two_cliques_layout(std::size_t n, const Rational& mu) {
    if (mu <= 0 || mu > 1) {
        throw InputError("two_overlapping_cliques: mu must lie in (0, 1]");
    }
    std::size_t clique = ceil_mul(Rational(1, 2) + mu / 2, n);
    std::int64_t shared = floor_mul(mu, n);
    if (shared < 0 || static_cast<std::size_t>(shared) > clique || clique > n) {
        throw InputError("two_overlapping_cliques: infeasible sizes");
    }
    TwoCliquesLayout layout;
    layout.shared = static_cast<std::size_t>(shared);
    layout.only_a = clique - layout.shared;
    layout.only_b = clique - layout.shared;
    bool shrink_a = true;
    while (layout.only_a + layout.only_b + layout.shared > n) {
        std::size_t& part = shrink_a ? layout.only_a : layout.only_b;
        if (part == 0) {
            std::size_t& other = shrink_a ? layout.only_b : layout.only_a;
            if (other == 0) {
                throw InputError("two_overlapping_cliques: infeasible sizes");
            }
            --other;
        }
        else {
            --part;
        }
        shrink_a = !shrink_a;
    }
    if (layout.only_a + layout.only_b + layout.shared != n) {
        throw InputError("two_overlapping_cliques: infeasible sizes");
    }
    return layout;
}

inline Graph two_overlapping_cliques(std::size_t n, const Rational& mu) {
    auto layout = two_cliques_layout(n, mu);
    std::size_t a_end = layout.only_a + layout.shared; // A = [0, a_end)
    std::size_t b_begin = layout.only_a;               // B = [b_begin, n)
    GraphBuilder b(n);
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            bool both_a = v < a_end;
            bool both_b = u >= b_begin;
            if (both_a || both_b) {
                b.add_edge(u, v);
            }
        }
    }
    return std::move(b).build();
}

inline Graph complete_multipartite(const std::vector<std::size_t>& part_sizes) {
    std::size_t n = 0;
    std::vector<std::size_t> part_of;
    for (std::size_t i = 0; i < part_sizes.size(); ++i) {
        if (part_sizes[i] == 0) {
            throw InputError("complete_multipartite: part sizes must be >= 1");
        }
        n += part_sizes[i];
        part_of.insert(part_of.end(), part_sizes[i], i);
    }
    GraphBuilder b(n);
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (part_of[u] != part_of[v]) {
                b.add_edge(u, v);
            }
        }
    }
    return std::move(b).build();
}

inline Graph complete_graph(std::size_t n) {
    return complete_multipartite(std::vector<std::size_t>(n, 1));
}

// one Bernoulli(p) draw per unordered pair, pairs in lexicographic order
inline Graph gnp(std::size_t n, const Rational& p, std::uint64_t seed) {
    if (p < 0 || p > 1) {
        throw InputError("gnp: p must lie in [0, 1]");
    }
    SplitMix64 rng(seed);
    GraphBuilder b(n);
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (rng.bernoulli(p)) {
                b.add_edge(u, v);
            }
        }
    }
    return std::move(b).build();
}

// sides [0, floor(n/2)) and [floor(n/2), n); one draw per cross pair in
// lexicographic order
inline Graph random_bipartite(std::size_t n, const Rational& p, std::uint64_t seed) {
    if (p < 0 || p > 1) {
        throw InputError("random_bipartite: p must lie in [0, 1]");
    }
    SplitMix64 rng(seed);
    std::size_t half = n / 2;
    GraphBuilder b(n);
    for (Vertex u = 0; u < half; ++u) {
        for (Vertex v = half; v < n; ++v) {
            if (rng.bernoulli(p)) {
                b.add_edge(u, v);
            }
        }
    }
    return std::move(b).build();
}

// Independent set [0, floor((1-mu) n)) fully joined to a clique on the rest.
inline Graph clique_complement(std::size_t n, const Rational& mu) {
    if (mu <= 0 || mu > 1) {
        throw InputError("clique_complement: mu must lie in (0, 1]");
    }
    std::size_t independent = static_cast<std::size_t>(floor_mul(Rational(1) - mu, n));
    GraphBuilder b(n);
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (v >= independent) {
                b.add_edge(u, v);
            }
        }
    }
    return std::move(b).build();
}

enum class Family { two_cliques, multipartite, gnp, random_bipartite, clique_complement };

inline const char* to_string(Family f) {
    switch (f) {
    case Family::two_cliques:
        return "two_cliques";
    case Family::multipartite:
        return "multipartite";
    case Family::gnp:
        return "gnp";
    case Family::random_bipartite:
        return "random_bipartite";
    case Family::clique_complement:
        return "clique_complement";
    }
    return "?";
}

inline Family parse_family(const std::string& name) {
    for (auto f : {Family::two_cliques, Family::multipartite, Family::gnp, Family::random_bipartite,
                   Family::clique_complement}) {
        if (name == to_string(f)) {
            return f;
        }
    }
    throw InputError("unknown graph family '" + name + "'");
}

struct GenSpec {
    Family family = Family::gnp;
    std::size_t n = 0;
    Rational mu = Rational(1, 2);
    Rational p = Rational(1, 2);
    std::vector<std::size_t> parts;
    std::uint64_t seed = 0;
};

inline Graph generate(const GenSpec& spec) {
    switch (spec.family) {
    case Family::two_cliques:
        return two_overlapping_cliques(spec.n, spec.mu);
    case Family::multipartite:
        return complete_multipartite(spec.parts);
    case Family::gnp:
        return gnp(spec.n, spec.p, spec.seed);
    case Family::random_bipartite:
        return random_bipartite(spec.n, spec.p, spec.seed);
    case Family::clique_complement:
        return clique_complement(spec.n, spec.mu);
    }
    throw InputError("unknown graph family");
}

// Standard small graphs used throughout the tests and examples.
inline Graph cycle_graph(std::size_t n) {
    GraphBuilder b(n);
    for (Vertex v = 0; n >= 3 && v < n; ++v) {
        b.add_edge(v, (v + 1) % n);
    }
    return std::move(b).build();
}

inline Graph path_graph(std::size_t n) {
    GraphBuilder b(n);
    for (Vertex v = 0; v + 1 < n; ++v) {
        b.add_edge(v, v + 1);
    }
    return std::move(b).build();
}

inline Graph empty_graph(std::size_t n) {
    return Graph(n);
}

inline Graph star_graph(std::size_t n) {
    GraphBuilder b(n);
    for (Vertex v = 1; v < n; ++v) {
        b.add_edge(0, v);
    }
    return std::move(b).build();
}

// vertex-disjoint union, second graph's ids shifted by first.size()
inline Graph disjoint_union(const Graph& a, const Graph& b) {
    GraphBuilder out(a.size() + b.size());
    for (auto [u, v] : a.edges()) {
        out.add_edge(u, v);
    }
    for (auto [u, v] : b.edges()) {
        out.add_edge(u + a.size(), v + a.size());
    }
    return std::move(out).build();
}

}

#endif /* POWERHAM_GENERATORS_HPP */
