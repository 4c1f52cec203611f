#include <gtest/gtest.h>

#include "oracles.hpp"
#include "powerham/powerham.hpp"
#include "powerham/serialize.hpp"

using namespace powerham;

namespace {

std::int64_t stage_count(const AttemptReport& a, const std::string& stage, const std::string& key) {
    for (const auto& s : a.stages) {
        if (s.name == stage) {
            for (const auto& [name, value] : s.counts) {
                if (name == key) {
                    return value;
                }
            }
        }
    }
    ADD_FAILURE() << "missing " << stage << "." << key;
    return -1;
}

VertexSet span_set(std::size_t n, Vertex lo, Vertex hi) {
    VertexSet s(n);
    for (Vertex v = lo; v < hi; ++v) {
        s.set(v);
    }
    return s;
}

Graph complete_except_inside(std::size_t n, const std::vector<Vertex>& hole) {
    GraphBuilder b(n);
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            bool inside = std::count(hole.begin(), hole.end(), u) && std::count(hole.begin(), hole.end(), v);
            if (!inside) {
                b.add_edge(u, v);
            }
        }
    }
    return std::move(b).build();
}

}

TEST(Verify, Examples) {
    EXPECT_TRUE(verify(cycle_graph(5), Certificate{1, {0, 1, 2, 3, 4}}).ok);
    EXPECT_TRUE(verify(complete_graph(5), Certificate{2, {3, 1, 4, 0, 2}}).ok);
    auto v = verify(cycle_graph(6), Certificate{2, {0, 1, 2, 3, 4, 5}});
    EXPECT_FALSE(v.ok);
    ASSERT_TRUE(v.violation.has_value());
    EXPECT_EQ(*v.violation, std::make_pair(Vertex{0}, Vertex{2}));
}

TEST(Verify, RejectsNonPermutations) {
    EXPECT_THROW(verify(cycle_graph(5), Certificate{1, {0, 1, 2, 3}}), InputError);
    EXPECT_THROW(verify(cycle_graph(5), Certificate{1, {0, 1, 2, 3, 3}}), InputError);
    EXPECT_THROW(verify(cycle_graph(5), Certificate{1, {0, 1, 2, 3, 5}}), InputError);
}

TEST(Verify, AgreesWithOracleCheck) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        std::size_t n = 5 + seed % 6;
        auto g = gnp(n, Rational(4, 5), seed);
        std::vector<Vertex> ord(n);
        for (Vertex v = 0; v < n; ++v) {
            ord[v] = v;
        }
        SplitMix64 rng(seed);
        for (std::size_t i = n; i > 1; --i) {
            std::swap(ord[i - 1], ord[rng() % i]);
        }
        for (std::size_t k : {1u, 2u}) {
            EXPECT_EQ(verify(g, Certificate{k, ord}).ok, oracle::valid_cycle_power(g, ord, k));
        }
    }
}

TEST(CanonicalOrdering, RotationAndDirection) {
    EXPECT_EQ(canonical_ordering({3, 4, 0, 2, 1}), (std::vector<Vertex>{0, 2, 1, 3, 4}));
    EXPECT_EQ(canonical_ordering({2, 0, 1}), (std::vector<Vertex>{0, 1, 2}));
}

TEST(ExtractCliqueFactor, ConsecutiveWindows) {
    auto g = complete_graph(10);
    auto factor = extract_clique_factor(g, Certificate{2, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9}});
    ASSERT_EQ(factor.size(), 3u);
    EXPECT_EQ(factor[2], (std::vector<Vertex>{6, 7, 8}));
}

TEST(BruteForceOracle, NamedExamples) {
    EXPECT_FALSE(brute_force_oracle(complete_multipartite({3, 4}), 1).has_value());
    EXPECT_FALSE(brute_force_oracle(cycle_graph(5), 2).has_value());
    auto cert = brute_force_oracle(complete_graph(7), 3);
    ASSERT_TRUE(cert.has_value());
    EXPECT_TRUE(verify(complete_graph(7), *cert).ok);
    EXPECT_EQ(cert->ordering, (std::vector<Vertex>{0, 1, 2, 3, 4, 5, 6}));
    EXPECT_FALSE(brute_force_oracle(clique_complement(10, Rational(2, 5)), 1).has_value());
    EXPECT_THROW(brute_force_oracle(complete_graph(15), 1), SizeError);
    EXPECT_THROW(brute_force_oracle(complete_graph(4), 0), InputError);
}

TEST(BruteForceOracle, AgreesWithPermutationScan) {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        std::size_t n = 4 + seed % 6;
        std::size_t k = 1 + seed % 3;
        auto g = gnp(n, Rational(3 + seed % 3, 6), seed);
        auto cert = brute_force_oracle(g, k);
        EXPECT_EQ(cert.has_value(), oracle::has_cycle_power(g, k)) << "seed " << seed;
        if (cert) {
            EXPECT_TRUE(oracle::valid_cycle_power(g, cert->ordering, k));
            EXPECT_EQ(cert->ordering, canonical_ordering(cert->ordering));
        }
    }
}

TEST(Pipeline, CompleteGraph) {
    PipelineConfig cfg;
    auto r = find_hamiltonian_power(complete_graph(30), cfg);
    ASSERT_TRUE(r.certificate.has_value());
    EXPECT_TRUE(r.report.success);
    EXPECT_TRUE(verify(complete_graph(30), *r.certificate).ok);
    EXPECT_EQ(extract_clique_factor(complete_graph(30), *r.certificate).size(), 10u);
}

TEST(Pipeline, TriangleFreeFailsAtAbsorbingPath) {
    PipelineConfig cfg;
    auto r = find_hamiltonian_power(cycle_graph(7), cfg);
    EXPECT_FALSE(r.certificate.has_value());
    EXPECT_FALSE(r.report.success);
    EXPECT_EQ(r.report.failed_stage, "absorbing_path");
    EXPECT_EQ(r.report.attempts.size(), cfg.retries + 1);
}

TEST(Pipeline, RandomGraphFixture) {
    auto g = gnp(60, Rational(3, 4), 1);
    PipelineConfig cfg;
    cfg.seed = 1;
    auto r = find_hamiltonian_power(g, cfg);
    ASSERT_TRUE(r.certificate.has_value());
    EXPECT_TRUE(verify(g, *r.certificate).ok);
    ASSERT_EQ(r.report.attempts.size(), 1u);
    const auto& a = r.report.attempts[0];
    EXPECT_EQ(r.report.max_inner, 24u);
    EXPECT_EQ(stage_count(a, "absorbing_path", "segments"), 3);
    EXPECT_EQ(stage_count(a, "absorbing_path", "size"), 14);
    EXPECT_EQ(stage_count(a, "reservoir", "size"), 6);
    EXPECT_EQ(stage_count(a, "cover", "covered"), 38);
    EXPECT_EQ(stage_count(a, "cover", "leftover"), 2);
    EXPECT_EQ(stage_count(a, "connect", "reservoir_used"), 1);
    EXPECT_EQ(stage_count(a, "absorb", "to_absorb"), 7);
    // the parts partition the vertex set
    EXPECT_EQ(stage_count(a, "absorbing_path", "size") + stage_count(a, "reservoir", "size") +
                  stage_count(a, "cover", "covered") + stage_count(a, "cover", "leftover"),
              60);
    EXPECT_EQ(r.certificate->ordering.front(), 0u);
    EXPECT_EQ(r.certificate->ordering[1], 34u);
}

TEST(Pipeline, StageNamesInOrder) {
    auto r = find_hamiltonian_power(gnp(50, Rational(4, 5), 3), PipelineConfig{});
    ASSERT_TRUE(r.report.success);
    std::vector<std::string> names;
    for (const auto& s : r.report.attempts.back().stages) {
        names.push_back(s.name);
    }
    EXPECT_EQ(names, (std::vector<std::string>{"absorbing_path", "reservoir", "cover", "connect", "absorb"}));
}

TEST(Pipeline, Deterministic) {
    auto g = gnp(50, Rational(3, 4), 5);
    PipelineConfig cfg;
    cfg.k = 3;
    cfg.seed = 9;
    auto a = find_hamiltonian_power(g, cfg);
    auto b = find_hamiltonian_power(g, cfg);
    EXPECT_EQ(a.certificate, b.certificate);
    EXPECT_EQ(to_json(a.report).dump(), to_json(b.report).dump());
}

TEST(Pipeline, SoundAndReservoirBounded) {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        std::size_t k = 1 + seed % 3;
        std::size_t n = 40 + 5 * (seed % 4);
        auto g = gnp(n, Rational(3, 4), 200 + seed);
        PipelineConfig cfg;
        cfg.k = k;
        cfg.seed = seed;
        auto r = find_hamiltonian_power(g, cfg);
        if (!r.certificate) {
            continue;
        }
        EXPECT_TRUE(verify(g, *r.certificate).ok);
        EXPECT_EQ(extract_clique_factor(g, *r.certificate).size(), n / (k + 1));
        const auto& a = r.report.attempts.back();
        auto connections = stage_count(a, "connect", "connections");
        EXPECT_LE(stage_count(a, "connect", "reservoir_used"),
                  connections * static_cast<std::int64_t>(r.report.max_inner));
    }
}

TEST(Pipeline, SmallGraphsNeverBeatTheOracle) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        std::size_t n = 7 + seed % 6;
        std::size_t k = 1 + seed % 3;
        auto g = gnp(n, Rational(4 + seed % 3, 7), seed);
        PipelineConfig cfg;
        cfg.k = k;
        cfg.seed = seed;
        cfg.retries = 1;
        auto r = find_hamiltonian_power(g, cfg);
        if (r.certificate) {
            EXPECT_TRUE(brute_force_oracle(g, k).has_value()) << seed;
            EXPECT_TRUE(verify(g, *r.certificate).ok);
        }
    }
}

TEST(Pipeline, TinyGraphs) {
    auto r = find_hamiltonian_power(complete_graph(5), PipelineConfig{});
    ASSERT_TRUE(r.certificate.has_value());
    EXPECT_FALSE(find_hamiltonian_power(path_graph(5), PipelineConfig{}).certificate.has_value());
}

TEST(PipelineConfig, Validation) {
    PipelineConfig cfg;
    cfg.k = 0;
    EXPECT_THROW(find_hamiltonian_power(complete_graph(10), cfg), ConfigError);
    cfg = {};
    cfg.zeta = 1;
    EXPECT_THROW(validate_config(cfg), ConfigError);
    cfg = {};
    cfg.reservoir_fraction = 0;
    EXPECT_THROW(validate_config(cfg), ConfigError);
    cfg = {};
    cfg.stop_fraction = Rational(3, 2);
    EXPECT_THROW(validate_config(cfg), ConfigError);
    EXPECT_NO_THROW(validate_config(PipelineConfig{}));
}

TEST(PipelineConfig, PaperConstantsRefuseDeskScale) {
    PipelineConfig cfg;
    cfg.mode = PipelineMode::paper_constants;
    cfg.paper_mu = Rational(1, 2);
    EXPECT_THROW(find_hamiltonian_power(complete_graph(40), cfg), ConfigError);
}

TEST(HittingSets, CompleteGraphTwoSets) {
    auto g = complete_graph(40);
    std::vector<VertexSet> sets{span_set(40, 0, 10), span_set(40, 20, 30)};
    auto r = find_with_hitting_sets(g, PipelineConfig{}, sets);
    ASSERT_TRUE(r.certificate.has_value());
    ASSERT_EQ(r.set_tallies.size(), 2u);
    for (auto t : r.set_tallies) {
        EXPECT_GE(t, 1u);
    }
}

TEST(HittingSets, EdgelessSetIsInfeasible) {
    auto g = complete_except_inside(30, {0, 1, 2, 3, 4, 5});
    std::vector<VertexSet> sets{span_set(30, 0, 6)};
    EXPECT_THROW(find_with_hitting_sets(g, PipelineConfig{}, sets), InfeasibleSetError);
    std::vector<VertexSet> small{VertexSet::of(30, {10, 11})};
    EXPECT_THROW(find_with_hitting_sets(g, PipelineConfig{}, small), InputError);
}

TEST(HittingSets, RandomGraphFixture) {
    auto g = gnp(80, Rational(3, 4), 2);
    std::vector<VertexSet> sets;
    for (Vertex i = 0; i < 3; ++i) {
        sets.push_back(span_set(80, 20 * i, 20 * i + 20));
    }
    auto r = find_with_hitting_sets(g, PipelineConfig{}, sets);
    ASSERT_TRUE(r.certificate.has_value());
    EXPECT_TRUE(verify(g, *r.certificate).ok);
    EXPECT_EQ(r.set_tallies, (std::vector<std::size_t>{7, 8, 7}));
}
