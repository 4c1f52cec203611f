#include <gtest/gtest.h>

#include <sstream>

#include "oracles.hpp"
#include "powerham/powerham.hpp"

using namespace powerham;

namespace {

VertexSet set_of(std::size_t n, std::initializer_list<Vertex> vs) {
    return VertexSet::of(n, vs);
}

}

TEST(Neighbors, CompleteGraph) {
    EXPECT_EQ(neighbors(complete_graph(4), 0).to_vector(), (std::vector<Vertex>{1, 2, 3}));
}

TEST(Neighbors, EdgelessAndCycle) {
    EXPECT_TRUE(neighbors(empty_graph(3), 1).to_vector().empty());
    EXPECT_EQ(neighbors(cycle_graph(5), 2).to_vector(), (std::vector<Vertex>{1, 3}));
}

TEST(Neighbors, OutOfRangeThrows) {
    EXPECT_THROW(neighbors(cycle_graph(5), 5), InputError);
}

TEST(CommonNeighborhood, Examples) {
    EXPECT_EQ(common_neighborhood(complete_graph(5), {0, 1}).to_vector(), (std::vector<Vertex>{2, 3, 4}));
    EXPECT_TRUE(common_neighborhood(cycle_graph(5), {0, 1}).to_vector().empty());
    EXPECT_THROW(common_neighborhood(cycle_graph(5), {0, 2}), InputError);
}

TEST(CommonNeighborhood, SharedBlockOfTwoCliques) {
    auto g = two_overlapping_cliques(12, Rational(1, 3));
    auto layout = two_cliques_layout(12, Rational(1, 3));
    ASSERT_GE(layout.shared, 2u);
    Vertex a = layout.only_a;
    Vertex b = layout.only_a + 1;
    auto got = common_neighborhood(g, {a, b});
    EXPECT_EQ(got.count(), 10u);
    for (Vertex v = 0; v < 12; ++v) {
        bool expected = v != a && v != b && g.adjacent(a, v) && g.adjacent(b, v);
        EXPECT_EQ(got.test(v), expected);
    }
}

TEST(EdgesWithin, Examples) {
    EXPECT_EQ(edges_within(complete_graph(5), set_of(5, {0, 1, 2})), 3u);
    EXPECT_EQ(edges_within(gnp(9, Rational(1, 2), 4), VertexSet(9)), 0u);
    EXPECT_EQ(edges_within(cycle_graph(6), set_of(6, {0, 1, 2, 3})), 3u);
}

TEST(EdgesBetween, Examples) {
    auto k33 = complete_multipartite({3, 3});
    EXPECT_EQ(edges_between(k33, set_of(6, {0, 1, 2}), set_of(6, {3, 4, 5})), 9u);
    auto c4 = cycle_graph(4);
    // only (0,1) and (1,2); (1,0) is not in X x Y
    EXPECT_EQ(oracle::pairs_between(c4, {0, 1}, {1, 2}), 2u);
    EXPECT_EQ(edges_between(c4, set_of(4, {0, 1}), set_of(4, {1, 2})), 2u);
    EXPECT_EQ(edges_between(c4, set_of(4, {0, 1}), set_of(4, {0, 1})), 2u);
}

TEST(EdgesBetween, WholeVertexSetCountsEachEdgeTwice) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto g = gnp(4 + seed, Rational(1, 2), seed);
        auto all = VertexSet::full(g.size());
        EXPECT_EQ(edges_between(g, all, all), 2 * g.edge_count());
    }
}

TEST(EdgesBetween, MatchesPairEnumeration) {
    SplitMix64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        auto g = gnp(14, Rational(2, 5), 100 + trial);
        VertexSet x(14), y(14);
        for (Vertex v = 0; v < 14; ++v) {
            if (rng.below(2)) {
                x.set(v);
            }
            if (rng.below(2)) {
                y.set(v);
            }
        }
        EXPECT_EQ(edges_between(g, x, y), oracle::pairs_between(g, x.to_vector(), y.to_vector()));
        EXPECT_EQ(edges_within(g, x), oracle::edges_in(g, x.to_vector()));
    }
}

TEST(EdgesWithin, NeverExceedsPairs) {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        auto g = gnp(12, Rational(3, 4), seed);
        SplitMix64 rng(seed);
        VertexSet u(12);
        for (Vertex v = 0; v < 12; ++v) {
            if (rng.below(3)) {
                u.set(v);
            }
        }
        std::size_t s = u.count();
        EXPECT_LE(edges_within(g, u), s * (s - (s ? 1 : 0)) / 2);
    }
}

TEST(GraphInvariants, SymmetricLoopFreeEdgeCount) {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        auto g = gnp(32, Rational(1, 3), seed);
        std::size_t degree_sum = 0;
        for (Vertex u = 0; u < g.size(); ++u) {
            EXPECT_FALSE(g.adjacent(u, u));
            degree_sum += g.degree(u);
            for (Vertex v = 0; v < g.size(); ++v) {
                EXPECT_EQ(g.adjacent(u, v), g.adjacent(v, u));
            }
        }
        EXPECT_EQ(degree_sum, 2 * g.edge_count());
    }
}

TEST(GraphConstruction, RejectsLoopsAndRange) {
    EXPECT_THROW(Graph(3, {{1, 1}}), InputError);
    EXPECT_THROW(Graph(3, {{0, 3}}), InputError);
    EXPECT_THROW(Graph(max_vertices + 1), InputError);
    Graph g(3, {{0, 1}, {1, 0}});
    EXPECT_EQ(g.edge_count(), 1u);
}

TEST(CountOrderedCliques, Examples) {
    EXPECT_EQ(count_ordered_cliques(complete_graph(4), 3), BigInt(24));
    EXPECT_EQ(count_ordered_cliques(cycle_graph(5), 3), BigInt(0));
    EXPECT_EQ(count_ordered_cliques(complete_graph(3), 5), BigInt(0));
    EXPECT_EQ(count_ordered_cliques(complete_graph(3), 0), BigInt(1));
}

TEST(CountOrderedCliques, TriangleLoopOracle) {
    auto g = gnp(20, Rational(1, 2), 7);
    EXPECT_EQ(count_ordered_cliques(g, 3), BigInt(oracle::ordered_triangles(g)));
    EXPECT_EQ(count_ordered_cliques(g, 3), BigInt(750));
}

TEST(CountOrderedCliques, FactorialTimesListing) {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        auto g = gnp(8 + seed, Rational(3, 5), seed);
        for (std::size_t k = 1; k <= 4; ++k) {
            auto listed = list_cliques(g, k);
            EXPECT_EQ(count_ordered_cliques(g, k), factorial(static_cast<unsigned>(k)) * BigInt(listed.size()));
        }
    }
}

TEST(ListCliques, Examples) {
    EXPECT_EQ(list_cliques(complete_graph(4), 2).size(), 6u);
    auto g = gnp(10, Rational(1, 2), 1);
    auto u = set_of(10, {1, 4, 7});
    EXPECT_EQ(list_cliques(g, 1, u).size(), 3u);
}

TEST(ListCliques, MatchesBruteForce) {
    auto g = gnp(15, Rational(3, 5), 3);
    EXPECT_EQ(list_cliques(g, 3), oracle::cliques(g, 3));
    SplitMix64 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        auto h = gnp(14, Rational(7, 10), 50 + trial);
        VertexSet within(14);
        for (Vertex v = 0; v < 14; ++v) {
            if (rng.below(4)) {
                within.set(v);
            }
        }
        for (std::size_t k = 2; k <= 4; ++k) {
            EXPECT_EQ(list_cliques(h, k, within), oracle::cliques(h, k, within.to_vector()));
        }
    }
}

TEST(CountOrderedCliques, DenseGraphsMeetCountingBound) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto g = gnp(12, Rational(7, 10), seed);
        const Rational n(12);
        for (Rational d : {Rational(1, 4), Rational(1, 2), Rational(2, 3)}) {
            auto rho = denseness_exact(g, d).rho_star;
            for (std::size_t k = 1; k <= 4; ++k) {
                Rational bound = (pow(d, static_cast<unsigned>(k * (k - 1) / 2)) - Rational(k * (k - 1)) * rho) *
                                 pow(n, static_cast<unsigned>(k));
                EXPECT_GE(Rational(count_ordered_cliques(g, k)), bound) << "seed " << seed << " k " << k;
            }
        }
    }
}

TEST(GraphText, RoundTripIsByteIdentical) {
    auto g = gnp(25, Rational(1, 3), 9);
    auto text = to_text(g);
    EXPECT_EQ(from_text(text), g);
    EXPECT_EQ(to_text(from_text(text)), text);
}

TEST(GraphText, SkipsCommentsAndRejectsGarbage) {
    auto g = from_text("# hello\np 3 2\n\ne 0 1\n# mid\ne 1 2\n");
    EXPECT_EQ(g.edge_count(), 2u);
    EXPECT_THROW(from_text("p 3 1\ne 0 0\n"), InputError);
    EXPECT_THROW(from_text("p 3 2\ne 0 1\n"), InputError);
    EXPECT_THROW(from_text("e 0 1\n"), InputError);
    EXPECT_THROW(from_text("p 3 1\ne 0 5\n"), InputError);
    EXPECT_THROW(from_text("p 3 2\ne 0 1\ne 1 0\n"), InputError);
    EXPECT_THROW(from_text("p 3 1\nx 0 1\n"), InputError);
}

TEST(InducedSubgraph, RelabelsInOrder) {
    auto g = cycle_graph(6);
    auto sub = induced_subgraph(g, set_of(6, {0, 1, 2, 4}));
    EXPECT_EQ(sub.original, (std::vector<Vertex>{0, 1, 2, 4}));
    EXPECT_EQ(sub.graph.edge_count(), 2u);
    EXPECT_TRUE(sub.graph.adjacent(0, 1));
    EXPECT_TRUE(sub.graph.adjacent(1, 2));
}
