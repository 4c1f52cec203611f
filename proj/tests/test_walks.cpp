#include <gtest/gtest.h>

#include "oracles.hpp"
#include "powerham/powerham.hpp"

using namespace powerham;

TEST(CountWalks, SmallExamples) {
    EXPECT_EQ(count_walks(complete_graph(3), 0, 2).at(1, 1), BigInt(1));
    EXPECT_EQ(count_walks(cycle_graph(4), 0, 2).at(2, 1), BigInt(2));
    EXPECT_EQ(count_walks(path_graph(3), 0, 3).at(2, 2), BigInt(0));
    EXPECT_EQ(count_walks(path_graph(3), 0, 3).at(2, 1), BigInt(1));
}

TEST(CountWalks, LevelCapAndRange) {
    EXPECT_THROW(count_walks(complete_graph(3), 0, max_walk_level + 1), InputError);
    EXPECT_THROW(count_walks(complete_graph(3), 3, 1), InputError);
    EXPECT_EQ(count_walks(complete_graph(3), 0, max_walk_level).max_level(), max_walk_level);
}

TEST(CountWalks, MatrixPowerIdentity) {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        std::size_t n = 10 + 6 * seed;
        auto g = gnp(n, Rational(1 + seed % 4, 5), seed);
        auto powers = oracle::matrix_powers(g, 10);
        for (Vertex x = 0; x < n; x += 3) {
            auto table = count_walks(g, x, 10);
            for (std::size_t i = 0; i <= 10; ++i) {
                for (Vertex v = 0; v < n; ++v) {
                    ASSERT_EQ(table.at(v, i), powers[i][x][v]) << "seed " << seed << " i " << i;
                }
            }
        }
    }
}

TEST(CountWalks, Symmetric) {
    auto g = gnp(22, Rational(1, 3), 8);
    for (Vertex x = 0; x < 22; x += 5) {
        auto from_x = count_walks(g, x, 8);
        for (Vertex y = 0; y < 22; ++y) {
            auto from_y = count_walks(g, y, 8);
            for (std::size_t i = 0; i <= 8; ++i) {
                EXPECT_EQ(from_x.at(y, i), from_y.at(x, i));
            }
        }
    }
}

TEST(DeltaSchedule, UnitMu) {
    auto s = delta_schedule(1);
    EXPECT_EQ(s.L, 8u);
    ASSERT_EQ(s.delta.size(), 9u);
    EXPECT_EQ(s.delta[0], 1);
    EXPECT_EQ(s.delta[1], Rational(1, 6));
    EXPECT_EQ(s.delta[2], Rational(1, 9 * 8));
    EXPECT_EQ(s.c, s.delta[4] * s.delta[4] / 48);
}

TEST(DeltaSchedule, HalfMu) {
    auto s = delta_schedule(Rational(1, 2));
    EXPECT_EQ(s.L, 16u);
    EXPECT_EQ(s.c, s.delta[8] * s.delta[8] / 192);
    // (1/12)^8 * 2^-36
    EXPECT_EQ(s.delta[8], Rational(1) / (pow(Rational(12), 8) * pow(Rational(2), 36)));
}

TEST(DeltaSchedule, PositiveDecreasing) {
    for (Rational mu : {Rational(1, 8), Rational(1, 5), Rational(1, 3), Rational(3, 4), Rational(1)}) {
        auto s = delta_schedule(mu);
        EXPECT_EQ(s.L, floor(Rational(8) / mu).convert_to<std::size_t>());
        EXPECT_EQ(s.delta[0], 1);
        for (std::size_t i = 1; i <= s.L; ++i) {
            EXPECT_GT(s.delta[i], 0);
            EXPECT_LT(s.delta[i], s.delta[i - 1]);
        }
    }
    EXPECT_THROW(delta_schedule(0), InputError);
    EXPECT_THROW(delta_schedule(Rational(5, 4)), InputError);
}

TEST(LayerFamily, CompleteGraph) {
    auto g = complete_graph(7);
    auto f = layer_family(g, 0, delta_schedule(1));
    EXPECT_EQ(f.layers[0].to_vector(), (std::vector<Vertex>{1, 2, 3, 4, 5, 6}));
}

TEST(LayerFamily, EdgelessIsEmpty) {
    auto f = layer_family(empty_graph(6), 2, delta_schedule(Rational(1, 2)));
    for (const auto& layer : f.layers) {
        EXPECT_FALSE(layer.any());
    }
}

TEST(LayerFamily, RecomputedFromTable) {
    auto g = gnp(20, Rational(3, 5), 11);
    auto schedule = delta_schedule(Rational(1, 4));
    for (Vertex x : {0u, 7u, 19u}) {
        auto f = layer_family(g, x, schedule);
        auto powers = oracle::matrix_powers(g, schedule.L);
        ASSERT_EQ(f.layers.size(), schedule.L + 1);
        for (std::size_t i = 0; i <= schedule.L; ++i) {
            for (Vertex v = 0; v < 20; ++v) {
                const BigInt& walks = powers[i][x][v];
                bool expected = walks > 0 && Rational(walks) >= schedule.delta[i] * pow(Rational(20), i);
                EXPECT_EQ(f.layers[i].test(v), expected);
            }
            if (i > 0) {
                EXPECT_TRUE(f.cumulative[i - 1].is_subset_of(f.cumulative[i]));
            }
        }
        EXPECT_EQ(f.layers[0], neighbors(g, x));
    }
}

TEST(FindWalkLevel, CompleteGraphDirect) {
    auto s = delta_schedule(1);
    EXPECT_LT(s.c, 1);
    auto w = find_walk_level(complete_graph(9), 2, 5, s);
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ(w->level, 0u);
    EXPECT_EQ(w->count, BigInt(1));
}

TEST(FindWalkLevel, DisconnectedAndErrors) {
    auto g = disjoint_union(complete_graph(4), complete_graph(4));
    EXPECT_FALSE(find_walk_level(g, 0, 6, delta_schedule(Rational(1, 2))).has_value());
    EXPECT_THROW(find_walk_level(g, 1, 1, delta_schedule(Rational(1, 2))), InputError);
}

TEST(FindWalkLevel, AcrossTwoCliques) {
    auto g = two_overlapping_cliques(12, Rational(1, 3));
    auto w = find_walk_level(g, 0, 11, delta_schedule(Rational(1, 3)));
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ(w->level, 1u);
    EXPECT_EQ(w->count, BigInt(4));
}

TEST(FindWalkLevel, InseparableGraphsConnectEveryPair) {
    int graphs = 0;
    int misses = 0;
    for (std::uint64_t seed = 0; graphs < 8 && seed < 200; ++seed) {
        auto g = gnp(14 + seed % 6, Rational(3, 5), seed);
        auto mu = inseparable_exact(g).mu_star;
        if (mu < Rational(1, 8)) {
            continue;
        }
        ++graphs;
        auto s = delta_schedule(mu);
        if (s.L > max_walk_level) {
            continue;
        }
        for (Vertex x = 0; x < g.size(); ++x) {
            for (Vertex y = x + 1; y < g.size(); ++y) {
                auto w = find_walk_level(g, x, y, s);
                misses += w ? 0 : 1;
                if (w) {
                    EXPECT_LE(w->level, s.L);
                }
            }
        }
    }
    EXPECT_EQ(graphs, 8);
    RecordProperty("walk_level_misses", misses);
}

TEST(ShortestWalkLevel, MatchesDistanceMinusOne) {
    auto g = path_graph(6);
    auto w = shortest_walk_level(g, 0, 5, 10);
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ(w->level, 4u);
    EXPECT_FALSE(shortest_walk_level(disjoint_union(g, g), 0, 7, 10).has_value());
}
