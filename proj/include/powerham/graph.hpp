#ifndef POWERHAM_GRAPH_HPP
#define POWERHAM_GRAPH_HPP

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "powerham/bitset.hpp"
#include "powerham/error.hpp"

namespace powerham {

// Ordered tuple of distinct, pairwise adjacent vertices.
using OrderedClique = std::vector<Vertex>;

inline constexpr std::size_t max_vertices = 4096;

/*
 * Immutable undirected simple graph. Adjacency is kept as one bit row per
 * vertex, so neighbourhood intersections are word-parallel.
 */
class Graph {
public:
    Graph() = default;

    explicit Graph(std::size_t n) : rows_(n, Bitset(n)) {
        if (n > max_vertices) {
            throw InputError("graphs are limited to " + std::to_string(max_vertices) + " vertices");
        }
    }

    Graph(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges) : Graph(n) {
        for (auto [u, v] : edges) {
            add_edge(u, v);
        }
    }

    std::size_t size() const { return rows_.size(); }
    std::size_t edge_count() const { return edge_count_; }

    const Bitset& row(Vertex v) const { return rows_[v]; }

    bool adjacent(Vertex u, Vertex v) const { return rows_[u].test(v); }

    std::size_t degree(Vertex v) const { return rows_[v].count(); }

    // edges as (u, v) with u < v, lexicographically sorted
    std::vector<std::pair<Vertex, Vertex>> edges() const {
        std::vector<std::pair<Vertex, Vertex>> out;
        out.reserve(edge_count_);
        for (Vertex u = 0; u < size(); ++u) {
            Vertex v = rows_[u].next(u + 1);
            while (v < size()) {
                out.emplace_back(u, v);
                v = rows_[u].next(v + 1);
            }
        }
        return out;
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.rows_ == b.rows_;
    }

private:
    friend class GraphBuilder;

    // duplicate edges are ignored; loops are rejected
    void add_edge(Vertex u, Vertex v) {
        if (u >= size() || v >= size()) {
            throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
        }
        if (u == v) {
            throw InputError("loop at vertex " + std::to_string(u));
        }
        if (!rows_[u].test(v)) {
            rows_[u].set(v);
            rows_[v].set(u);
            ++edge_count_;
        }
    }

    std::vector<Bitset> rows_;
    std::size_t edge_count_ = 0;
};

// Mutable staging area; the finished Graph never changes.
class GraphBuilder {
public:
    explicit GraphBuilder(std::size_t n) : g_(n) {}

    GraphBuilder& add_edge(Vertex u, Vertex v) {
        g_.add_edge(u, v);
        return *this;
    }

    bool has_edge(Vertex u, Vertex v) const { return g_.adjacent(u, v); }

    Graph build() && { return std::move(g_); }

private:
    Graph g_;
};

inline void check_vertex(const Graph& g, Vertex v) {
    if (v >= g.size()) {
        throw InputError("vertex " + std::to_string(v) + " out of range for n=" + std::to_string(g.size()));
    }
}

inline void check_set(const Graph& g, const VertexSet& s) {
    if (s.size() != g.size()) {
        throw InputError("vertex set universe " + std::to_string(s.size()) +
                         " does not match n=" + std::to_string(g.size()));
    }
}

inline VertexSet neighbors(const Graph& g, Vertex v) {
    check_vertex(g, v);
    return g.row(v);
}

inline bool is_clique(const Graph& g, const std::vector<Vertex>& t) {
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i] >= g.size()) {
            return false;
        }
        for (std::size_t j = i + 1; j < t.size(); ++j) {
            if (t[i] == t[j] || !g.adjacent(t[i], t[j])) {
                return false;
            }
        }
    }
    return true;
}

// Common neighbourhood of t with no validation; t's own members are never in it
// because the graph is loop-free and t is a clique.
inline VertexSet common_neighbors_unchecked(const Graph& g, const std::vector<Vertex>& t) {
    VertexSet out = VertexSet::full(g.size());
    for (auto v : t) {
        out &= g.row(v);
    }
    return out;
}

inline VertexSet common_neighborhood(const Graph& g, const OrderedClique& t) {
    if (!is_clique(g, t)) {
        throw InputError("common_neighborhood requires a clique");
    }
    VertexSet out = common_neighbors_unchecked(g, t);
    for (auto v : t) {
        out.reset(v);
    }
    return out;
}

// e(U): edges with both ends in U
inline std::size_t edges_within(const Graph& g, const VertexSet& u) {
    check_set(g, u);
    std::size_t twice = 0;
    u.for_each([&](Vertex v) { twice += Bitset::count_and(g.row(v), u); });
    return twice / 2;
}

// e(X,Y): ordered pairs (x,y) in X x Y with xy an edge; overlaps count twice
inline std::size_t edges_between(const Graph& g, const VertexSet& x, const VertexSet& y) {
    check_set(g, x);
    check_set(g, y);
    std::size_t total = 0;
    x.for_each([&](Vertex v) { total += Bitset::count_and(g.row(v), y); });
    return total;
}

struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> original; // new id -> original id
};

inline InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
    check_set(g, keep);
    InducedSubgraph out;
    out.original = keep.to_vector();
    std::vector<Vertex> relabel(g.size(), g.size());
    for (Vertex i = 0; i < out.original.size(); ++i) {
        relabel[out.original[i]] = i;
    }
    GraphBuilder b(out.original.size());
    for (Vertex i = 0; i < out.original.size(); ++i) {
        Bitset row = g.row(out.original[i]) & keep;
        row.for_each([&](Vertex w) {
            if (relabel[w] > i) {
                b.add_edge(i, relabel[w]);
            }
        });
    }
    out.graph = std::move(b).build();
    return out;
}

/*
 * Text format:
 *
 *     p <n> <m>
 *     e <u> <v>      (m lines, 0-indexed)
 *
 * Lines starting with '#' and blank lines are skipped. The writer emits edges
 * with u < v in lexicographic order, so write(read(write(g))) is byte-identical.
 */
inline Graph read_graph(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t seen = 0;
    GraphBuilder builder(0);
    auto fail = [&](const std::string& msg) {
        throw InputError("graph text line " + std::to_string(line_no) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') {
            continue;
        }
        std::istringstream fields(line.substr(start));
        std::string tag;
        fields >> tag;
        if (tag == "p") {
            if (have_header) {
                fail("duplicate header");
            }
            long long nn = -1, mm = -1;
            if (!(fields >> nn >> mm) || nn < 0 || mm < 0) {
                fail("malformed header");
            }
            if (static_cast<std::size_t>(nn) > max_vertices) {
                fail("too many vertices");
            }
            n = static_cast<std::size_t>(nn);
            m = static_cast<std::size_t>(mm);
            builder = GraphBuilder(n);
            have_header = true;
        }
        else if (tag == "e") {
            if (!have_header) {
                fail("edge before header");
            }
            long long u = -1, v = -1;
            if (!(fields >> u >> v) || u < 0 || v < 0 ||
                static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n) {
                fail("malformed edge");
            }
            if (u == v) {
                fail("loop");
            }
            if (builder.has_edge(u, v)) {
                fail("duplicate edge");
            }
            builder.add_edge(u, v);
            ++seen;
        }
        else {
            fail("unknown line tag '" + tag + "'");
        }
        std::string extra;
        if (fields >> extra) {
            fail("trailing tokens");
        }
    }
    if (!have_header) {
        throw InputError("graph text: missing 'p <n> <m>' header");
    }
    if (seen != m) {
        throw InputError("graph text: header announces " + std::to_string(m) + " edges, found " +
                         std::to_string(seen));
    }
    return std::move(builder).build();
}

inline void write_graph(std::ostream& out, const Graph& g) {
    out << "p " << g.size() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) {
        out << "e " << u << ' ' << v << '\n';
    }
}

inline std::string to_text(const Graph& g) {
    std::ostringstream s;
    write_graph(s, g);
    return s.str();
}

inline Graph from_text(const std::string& text) {
    std::istringstream s(text);
    return read_graph(s);
}

}

#endif /* POWERHAM_GRAPH_HPP */
