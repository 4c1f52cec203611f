#include <gtest/gtest.h>

#include "oracles.hpp"
#include "powerham/powerham.hpp"

using namespace powerham;

namespace {

Graph random_graph(std::size_t n, std::uint64_t seed) {
    SplitMix64 rng(seed);
    Rational p(1 + rng.below(9), 10);
    return gnp(n, p, seed);
}

}

TEST(Denseness, CompleteGraphWithFullDensity) {
    for (std::size_t n : {3u, 5u, 8u}) {
        auto g = complete_graph(n);
        auto r = denseness_exact(g, 1);
        EXPECT_EQ(r.rho_star, Rational(1, 2 * n));
        EXPECT_EQ(r.rho_star, oracle::rho_star(g, 1));
        EXPECT_EQ(r.witness.size(), n);
    }
}

TEST(Denseness, EdgelessZeroDensity) {
    EXPECT_EQ(denseness_exact(empty_graph(6), 0).rho_star, 0);
    EXPECT_EQ(denseness_heuristic(empty_graph(6), 0, 1000, 1).rho_star, 0);
}

TEST(Denseness, CompleteBipartiteHalf) {
    auto g = complete_multipartite({4, 4});
    auto r = denseness_exact(g, Rational(1, 2));
    EXPECT_EQ(r.rho_star, Rational(1, 16));
    EXPECT_EQ(r.witness, (std::vector<Vertex>{0, 1, 2, 3}));
    auto h = denseness_heuristic(g, Rational(1, 2), 1000, 3);
    EXPECT_LE(h.rho_star, r.rho_star);
    EXPECT_EQ(h.mode, Mode::heuristic);
}

TEST(Denseness, MatchesSubsetOracleAndWitnessAttainsMax) {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        auto g = random_graph(4 + seed % 9, seed);
        for (Rational d : {Rational(1, 3), Rational(1, 2), Rational(4, 5)}) {
            auto r = denseness_exact(g, d);
            ASSERT_EQ(r.rho_star, oracle::rho_star(g, d));
            if (r.rho_star > 0) {
                Rational s(r.witness.size());
                Rational deficit = d * s * s / 2 - Rational(oracle::edges_in(g, r.witness));
                EXPECT_EQ(deficit / Rational(g.size() * g.size()), r.rho_star);
            }
        }
    }
}

TEST(Denseness, TooLargeForExactScan) {
    EXPECT_THROW(denseness_exact(empty_graph(max_exact_scan + 1), Rational(1, 2)), SizeError);
}

TEST(Denseness, HeuristicNeverExceedsExact) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto g = random_graph(8 + seed % 13, seed + 40);
        auto d = Rational(1, 2);
        EXPECT_LE(denseness_heuristic(g, d, 2000, seed).rho_star, denseness_exact(g, d).rho_star);
    }
}

TEST(Denseness, HeuristicOnLargerGraphWithControlSubgraph) {
    auto g = gnp(40, Rational(1, 2), 21);
    auto h = denseness_heuristic(g, Rational(1, 2), 20000, 21);
    Rational s(h.witness.size());
    Rational deficit = Rational(1, 2) * s * s / 2 - Rational(oracle::edges_in(g, h.witness));
    EXPECT_EQ(std::max(deficit, Rational(0)) / 1600, h.rho_star);
    VertexSet keep(40);
    for (Vertex v = 0; v < 20; ++v) {
        keep.set(2 * v);
    }
    auto control = induced_subgraph(g, keep).graph;
    auto exact = denseness_exact(control, Rational(1, 2)).rho_star;
    EXPECT_LE(denseness_heuristic(control, Rational(1, 2), 20000, 21).rho_star, exact);
}

TEST(Inseparable, CompleteAndDisconnected) {
    EXPECT_EQ(inseparable_exact(complete_graph(7)).mu_star, 1);
    EXPECT_EQ(inseparable_heuristic(complete_graph(7), 1000, 1).mu_star, 1);
    auto two = disjoint_union(complete_graph(4), complete_graph(5));
    auto r = inseparable_exact(two);
    EXPECT_EQ(r.mu_star, 0);
    EXPECT_EQ(r.witness, (std::vector<Vertex>{0, 1, 2, 3}));
    EXPECT_EQ(inseparable_heuristic(two, 1000, 2).mu_star, 0);
}

TEST(Inseparable, TwoOverlappingCliquesFixture) {
    auto g = two_overlapping_cliques(12, Rational(1, 3));
    auto r = inseparable_exact(g);
    EXPECT_EQ(r.mu_star, oracle::mu_star(g));
    EXPECT_EQ(r.mu_star, Rational(1, 2));
    EXPECT_EQ(r.witness, (std::vector<Vertex>{0, 1, 2, 3}));
}

TEST(Inseparable, MatchesBipartitionOracle) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        auto g = random_graph(2 + seed % 12, seed + 7);
        auto r = inseparable_exact(g);
        ASSERT_EQ(r.mu_star, oracle::mu_star(g)) << seed;
        ASSERT_GE(r.witness.size(), 1u);
        ASSERT_LE(r.witness.size(), g.size() - 1);
        EXPECT_EQ(cut_ratio(g, VertexSet::from_range(g.size(), r.witness)), r.mu_star);
    }
}

TEST(Inseparable, HeuristicIsUpperBound) {
    auto g = gnp(24, Rational(2, 5), 5);
    auto exact = inseparable_exact(g).mu_star;
    EXPECT_EQ(exact, Rational(4, 23));
    EXPECT_GE(inseparable_heuristic(g, 20000, 5).mu_star, exact);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto h = random_graph(6 + seed % 12, seed + 300);
        EXPECT_GE(inseparable_heuristic(h, 3000, seed).mu_star, inseparable_exact(h).mu_star);
    }
}

TEST(Inseparable, SingletonBound) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        auto g = random_graph(3 + seed % 17, seed + 900);
        EXPECT_LE(inseparable_exact(g).mu_star, Rational(min_degree(g), g.size() - 1));
    }
}

TEST(Inseparable, HighMinimumDegreeImpliesInseparable) {
    int checked = 0;
    for (std::uint64_t seed = 0; checked < 40 && seed < 4000; ++seed) {
        std::size_t n = 8 + seed % 11;
        auto g = gnp(n, Rational(17, 20), seed);
        for (Rational mu : {Rational(1, 20), Rational(1, 10), Rational(1, 5)}) {
            if (Rational(min_degree(g)) >= (Rational(1, 2) + mu) * Rational(n)) {
                EXPECT_GE(inseparable_exact(g).mu_star, mu);
                ++checked;
            }
        }
    }
    EXPECT_GE(checked, 40);
}

TEST(Inseparable, StableUnderSmallDeletions) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        std::size_t n = 10 + seed % 9;
        auto g = gnp(n, Rational(3, 4), seed + 77);
        auto mu = inseparable_exact(g).mu_star;
        if (mu == 0) {
            continue;
        }
        SplitMix64 rng(seed);
        for (Rational beta : {Rational(1, 4), Rational(2, 5)}) {
            std::size_t limit = floor_mul(beta * mu, n);
            VertexSet keep = VertexSet::full(n);
            for (std::size_t i = 0; i < limit; ++i) {
                keep.reset(rng.below(n));
            }
            auto rest = induced_subgraph(g, keep).graph;
            if (rest.size() >= 2) {
                EXPECT_GE(inseparable_exact(rest).mu_star, (1 - 2 * beta) * mu);
            }
        }
    }
}

TEST(Connectable, CompleteGraphHasAllCliques) {
    for (std::size_t k = 1; k <= 3; ++k) {
        auto g = complete_graph(2 * k + 2);
        auto set = connectable_cliques(g, k, Rational(1, 2));
        EXPECT_EQ(set.cliques.size(), list_cliques(g, k).size());
    }
}

TEST(Connectable, TriangleFreeIsEmpty) {
    EXPECT_TRUE(connectable_cliques(cycle_graph(5), 2, Rational(1, 100)).cliques.empty());
    EXPECT_TRUE(connectable_cliques(random_bipartite(16, Rational(4, 5), 4), 2, Rational(1, 100)).cliques.empty());
}

TEST(Connectable, MatchesEdgeFilter) {
    auto g = gnp(30, Rational(7, 10), 2);
    Rational zeta(1, 5);
    auto set = connectable_cliques(g, 2, zeta);
    EXPECT_EQ(set.threshold, 6u);
    std::vector<std::vector<Vertex>> expected;
    for (const auto& e : oracle::cliques(g, 2)) {
        if (oracle::common_count(g, e) >= 6) {
            expected.push_back(e);
        }
    }
    EXPECT_EQ(set.cliques, expected);
}

TEST(Connectable, RejectsBadParameters) {
    EXPECT_THROW(connectable_cliques(complete_graph(4), 0, Rational(1, 2)), InputError);
    EXPECT_THROW(connectable_cliques(complete_graph(4), 1, Rational(0)), InputError);
    EXPECT_THROW(connectable_cliques(complete_graph(4), 1, Rational(3, 2)), InputError);
}

TEST(RobustMatchable, DenseGraphsPass) {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        auto g = random_graph(5 + seed % 12, seed + 11);
        Rational d(1, 2);
        auto rho = denseness_exact(g, d).rho_star;
        EXPECT_TRUE(robustly_matchable_exact(g, rho, d).matchable) << seed;
    }
}

TEST(RobustMatchable, EdgelessFails) {
    auto r = robustly_matchable_exact(empty_graph(16), Rational(1, 100), Rational(1, 2));
    EXPECT_FALSE(r.matchable);
    EXPECT_FALSE(r.witness.empty());
    EXPECT_EQ(r.witness.size(), 4u);
    EXPECT_FALSE(oracle::robustly_matchable(empty_graph(16), Rational(1, 100), Rational(1, 2)));
}

TEST(RobustMatchable, CompleteGraphPasses) {
    for (std::size_t n : {4u, 9u, 14u}) {
        for (Rational d : {Rational(1, 2), Rational(1)}) {
            EXPECT_TRUE(robustly_matchable_exact(complete_graph(n), Rational(1, 2 * n), d).matchable);
        }
    }
}

TEST(RobustMatchable, MatchesDefinitionOracle) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        auto g = random_graph(4 + seed % 10, seed + 500);
        for (Rational rho : {Rational(1, 100), Rational(1, 20), Rational(1, 8)}) {
            auto r = robustly_matchable_exact(g, rho, Rational(1, 2));
            ASSERT_EQ(r.matchable, oracle::robustly_matchable(g, rho, Rational(1, 2))) << seed;
        }
    }
}

TEST(MinDegree, Examples) {
    EXPECT_EQ(min_degree(complete_graph(5)), 4u);
    EXPECT_EQ(min_degree(star_graph(5)), 1u);
    auto g = two_overlapping_cliques(12, Rational(1, 3));
    std::size_t scan = g.size();
    for (Vertex v = 0; v < g.size(); ++v) {
        scan = std::min(scan, neighbors(g, v).count());
    }
    EXPECT_EQ(min_degree(g), scan);
    EXPECT_EQ(min_degree(g), 7u);
    EXPECT_THROW(min_degree(Graph(0)), InputError);
}

TEST(PairedDensity, MatchesPairOracle) {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        auto g = random_graph(3 + seed % 6, seed + 60);
        for (Rational d : {Rational(1, 3), Rational(1, 2)}) {
            EXPECT_EQ(bipartite_density_exact(g, d).rho_star, oracle::paired_rho_star(g, d)) << seed;
        }
    }
}

TEST(PairedDensity, DenseCheckOnSpecificPair) {
    auto g = complete_multipartite({3, 3});
    auto a = VertexSet::of(6, {0, 1, 2});
    auto b = VertexSet::of(6, {3, 4, 5});
    EXPECT_TRUE(check_bipartite_density(g, a, b, 0, 1));
    EXPECT_FALSE(check_bipartite_density(g, a, a, Rational(1, 9), Rational(1, 2)));
}
