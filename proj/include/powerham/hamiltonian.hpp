#ifndef POWERHAM_HAMILTONIAN_HPP
#define POWERHAM_HAMILTONIAN_HPP

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "powerham/absorber.hpp"
#include "powerham/connector.hpp"
#include "powerham/constants.hpp"
#include "powerham/pathcover.hpp"
#include "powerham/properties.hpp"

namespace powerham {

// Cyclic ordering of all vertices witnessing the k-th power of a Hamiltonian cycle.
struct Certificate {
    std::size_t k = 1;
    std::vector<Vertex> ordering;

    friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct Verdict {
    bool ok = true;
    std::optional<std::pair<Vertex, Vertex>> violation;
};

inline void check_permutation(const Graph& g, const std::vector<Vertex>& ordering) {
    if (ordering.size() != g.size()) {
        throw InputError("ordering has " + std::to_string(ordering.size()) + " entries for " +
                         std::to_string(g.size()) + " vertices");
    }
    std::vector<char> seen(g.size(), 0);
    for (auto v : ordering) {
        if (v >= g.size() || seen[v]) {
            throw InputError("ordering is not a permutation of the vertex set");
        }
        seen[v] = 1;
    }
}

// Scans positions i = 0..n-1 and offsets 1..k; reports the first missing edge.
inline Verdict verify(const Graph& g, const Certificate& cert) {
    check_permutation(g, cert.ordering);
    const std::size_t n = cert.ordering.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t d = 1; d <= cert.k; ++d) {
            std::size_t j = (i + d) % n;
            if (j == i) {
                continue;
            }
            Vertex a = cert.ordering[i];
            Vertex b = cert.ordering[j];
            if (!g.adjacent(a, b)) {
                return Verdict{false, std::make_pair(a, b)};
            }
        }
    }
    return Verdict{};
}

// Rotation starting at vertex 0, direction with the smaller second entry.
inline std::vector<Vertex> canonical_ordering(std::vector<Vertex> ordering) {
    if (ordering.empty()) {
        return ordering;
    }
    auto zero = std::min_element(ordering.begin(), ordering.end());
    std::rotate(ordering.begin(), zero, ordering.end());
    if (ordering.size() > 2 && ordering.back() < ordering[1]) {
        std::reverse(ordering.begin() + 1, ordering.end());
    }
    return ordering;
}

// floor(n/(k+1)) vertex-disjoint (k+1)-cliques from consecutive windows.
inline std::vector<std::vector<Vertex>> extract_clique_factor(const Graph& g, const Certificate& cert) {
    check_permutation(g, cert.ordering);
    const std::size_t w = cert.k + 1;
    std::vector<std::vector<Vertex>> out;
    for (std::size_t start = 0; start + w <= cert.ordering.size(); start += w) {
        std::vector<Vertex> clique(cert.ordering.begin() + start, cert.ordering.begin() + start + w);
        if (!is_clique(g, clique)) {
            throw InputError("certificate window at " + std::to_string(start) + " is not a clique");
        }
        out.push_back(std::move(clique));
    }
    return out;
}

inline constexpr std::size_t max_oracle_n = 14;

/*
 * Exhaustive search over cyclic orderings with vertex 0 first and
 * ordering[1] < ordering[n-1]. Each new vertex must be adjacent to the
 * previous k; once the ordering wraps, also to the first few. Failed states
 * (placed set, first max(k,2) vertices, last k vertices) are memoised.
 */
inline std::optional<Certificate> brute_force_oracle(const Graph& g, std::size_t k) {
    const std::size_t n = g.size();
    if (n > max_oracle_n) {
        throw SizeError("brute_force_oracle: n must be <= " + std::to_string(max_oracle_n));
    }
    if (k == 0) {
        throw InputError("brute_force_oracle: k must be >= 1");
    }
    Certificate cert{k, {}};
    if (n == 0) {
        return cert;
    }
    std::vector<Vertex> ord{0};
    std::uint32_t placed = 1;
    const std::size_t head = std::max<std::size_t>(k, 2);
    const bool memo_ok = 4 * (head + k) + n <= 64;
    std::unordered_set<std::uint64_t> failed;

    auto key = [&]() {
        std::uint64_t h = placed;
        int shift = static_cast<int>(n);
        for (std::size_t i = 0; i < head; ++i, shift += 4) {
            std::uint64_t v = i < ord.size() ? ord[i] : 15;
            h |= v << shift;
        }
        for (std::size_t i = 0; i < k; ++i, shift += 4) {
            std::uint64_t v = i < ord.size() ? ord[ord.size() - 1 - i] : 15;
            h |= v << shift;
        }
        return h;
    };

    auto fits = [&](Vertex w) {
        const std::size_t pos = ord.size();
        for (std::size_t back = 1; back <= k && back <= pos; ++back) {
            if (!g.adjacent(w, ord[pos - back])) {
                return false;
            }
        }
        // cyclic neighbours among the first vertices: j with n - pos + j <= k
        for (std::size_t j = 0; j < pos && n - pos + j <= k; ++j) {
            if (!g.adjacent(w, ord[j])) {
                return false;
            }
        }
        if (pos == n - 1 && n > 2 && w < ord[1]) {
            return false;
        }
        return true;
    };

    auto search = [&](auto&& self) -> bool {
        if (ord.size() == n) {
            return true;
        }
        std::uint64_t state = 0;
        if (memo_ok) {
            state = key();
            if (failed.count(state)) {
                return false;
            }
        }
        for (Vertex w = 1; w < n; ++w) {
            if ((placed >> w) & 1u || !fits(w)) {
                continue;
            }
            ord.push_back(w);
            placed |= 1u << w;
            if (self(self)) {
                return true;
            }
            ord.pop_back();
            placed &= ~(1u << w);
        }
        if (memo_ok) {
            failed.insert(state);
        }
        return false;
    };

    if (!search(search)) {
        return std::nullopt;
    }
    cert.ordering = canonical_ordering(ord);
    return cert;
}

enum class PipelineMode { practical, paper_constants };

struct PipelineConfig {
    std::size_t k = 2;
    Rational zeta = Rational(1, 8);               // connectable threshold fraction
    Rational reservoir_fraction = Rational(1, 8);
    std::optional<Rational> stop_fraction;        // unset: half the absorbing capacity
    std::size_t retries = 3;                      // extra reseeded attempts
    std::uint64_t seed = 0;
    PipelineMode mode = PipelineMode::practical;

    Rational absorber_p = Rational(1, 2);         // per-candidate inclusion probability
    std::size_t per_vertex_cap = default_per_vertex_cap;
    Rational absorber_fraction = Rational(1, 4);  // share of vertices inside absorber tuples
    std::optional<std::size_t> max_inner;         // unset: (L+2)k from the measured mu, capped
    std::size_t connect_budget = 200'000;
    bool window_fallback = true;                  // insert unmatched vertices into any fitting 2k-window
    std::optional<Rational> paper_d;              // d and mu for the paper-constants check
    std::optional<Rational> paper_mu;
};

inline void validate_config(const PipelineConfig& cfg) {
    auto in_unit = [](const Rational& r) { return r > 0 && r < 1; };
    if (cfg.k == 0) {
        throw ConfigError("k must be >= 1");
    }
    if (!in_unit(cfg.zeta) || !in_unit(cfg.reservoir_fraction) || !in_unit(cfg.absorber_fraction)) {
        throw ConfigError("zeta, reservoir and absorber fractions must lie in (0, 1)");
    }
    if (cfg.stop_fraction && !in_unit(*cfg.stop_fraction)) {
        throw ConfigError("stop fraction must lie in (0, 1)");
    }
    if (cfg.absorber_p <= 0 || cfg.absorber_p > 1) {
        throw ConfigError("absorber probability must lie in (0, 1]");
    }
}

struct StageEntry {
    std::string name;
    bool ok = false;
    std::uint64_t seed = 0;
    std::vector<std::pair<std::string, std::int64_t>> counts;
    std::string note;
    double millis = 0.0;

    void count(const std::string& key, std::int64_t value) { counts.emplace_back(key, value); }
};

struct AttemptReport {
    std::size_t attempt = 0;
    std::uint64_t seed = 0;
    std::vector<StageEntry> stages;
    bool ok = false;
    std::string failed_stage;
    std::string message;
};

struct StageReport {
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t max_inner = 0;
    bool success = false;
    std::string failed_stage;
    std::string message;
    std::vector<AttemptReport> attempts;
};

struct PipelineResult {
    std::optional<Certificate> certificate;
    StageReport report;
    std::vector<std::size_t> set_tallies; // hitting-sets variant only
};

namespace detail {

class StageTimer {
public:
    explicit StageTimer(StageEntry& entry) : entry_(entry), start_(std::chrono::steady_clock::now()) {}
    ~StageTimer() {
        entry_.millis =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    StageEntry& entry_;
    std::chrono::steady_clock::time_point start_;
};

struct StageFailure {
    std::string stage;
    std::string message;
};

struct Piece {
    std::vector<Vertex> inner; // connection vertices placed before the path
    KPath path;
};

// Cyclic k-windows of the ordering lying inside u.
inline std::size_t windows_inside(const std::vector<Vertex>& cyc, std::size_t k, const VertexSet& u) {
    const std::size_t n = cyc.size();
    if (n < k) {
        return 0;
    }
    std::size_t tally = 0;
    for (std::size_t i = 0; i < n; ++i) {
        bool inside = true;
        for (std::size_t j = 0; j < k && inside; ++j) {
            inside = u.test(cyc[(i + j) % n]);
        }
        tally += inside ? 1 : 0;
    }
    return tally;
}

/*
 * Insertion points for v in the cycle: after position `before` whenever the
 * 2k consecutive vertices around it all lie in N(v) and the cut is not
 * protected. Cyclic distances never shrink on insertion, so the cycle stays
 * valid.
 */
template <class Visit>
inline void for_each_window(const Graph& g, const std::vector<Vertex>& cyc, std::size_t k, Vertex v,
                            const std::vector<std::pair<Vertex, Vertex>>& protected_pairs, Visit&& visit) {
    const std::size_t n = cyc.size();
    if (n < 2 * k) {
        return;
    }
    std::size_t run = 0; // consecutive neighbours of v ending at the current position
    for (std::size_t step = 0; step < n + 2 * k - 1; ++step) {
        std::size_t pos = step % n;
        run = g.adjacent(v, cyc[pos]) ? run + 1 : 0;
        if (run < 2 * k) {
            continue;
        }
        // window ends at pos; the insertion point follows its k-th vertex
        std::size_t before = (pos + n - k) % n;
        std::size_t after = (before + 1) % n;
        if (std::find(protected_pairs.begin(), protected_pairs.end(), std::make_pair(cyc[before], cyc[after])) !=
            protected_pairs.end()) {
            continue;
        }
        if (!visit(after)) {
            return;
        }
    }
}

inline std::size_t count_windows(const Graph& g, const std::vector<Vertex>& cyc, std::size_t k, Vertex v,
                                 const std::vector<std::pair<Vertex, Vertex>>& protected_pairs) {
    std::size_t count = 0;
    for_each_window(g, cyc, k, v, protected_pairs, [&](std::size_t) {
        ++count;
        return true;
    });
    return count;
}

inline bool insert_into_window(const Graph& g, std::vector<Vertex>& cyc, std::size_t k, Vertex v,
                               const std::vector<std::pair<Vertex, Vertex>>& protected_pairs) {
    std::optional<std::size_t> at;
    for_each_window(g, cyc, k, v, protected_pairs, [&](std::size_t after) {
        at = after;
        return false;
    });
    if (!at) {
        return false;
    }
    cyc.insert(cyc.begin() + static_cast<std::ptrdiff_t>(*at == 0 ? cyc.size() : *at), v);
    return true;
}

inline std::size_t default_max_inner(const Graph& g, std::size_t k, std::uint64_t seed) {
    if (g.size() < 2) {
        return 0;
    }
    auto report = inseparable_heuristic(g, 4 * g.size(), seed);
    if (report.mu_star <= 0) {
        return default_max_inner_cap;
    }
    std::size_t L = floor(Rational(8) / report.mu_star).convert_to<std::size_t>();
    return std::min(default_max_inner_cap, (L + 2) * k);
}

inline void check_paper_constants(const Graph& g, const PipelineConfig& cfg) {
    const std::size_t n = g.size();
    Rational d = cfg.paper_d ? *cfg.paper_d : Rational(1, 2);
    Rational mu;
    if (cfg.paper_mu) {
        mu = *cfg.paper_mu;
    }
    else {
        if (n < 2) {
            throw ConfigError("paper constants need at least two vertices");
        }
        mu = inseparable_heuristic(g, 4 * n, cfg.seed).mu_star;
    }
    if (mu <= 0 || mu > 1 || d <= 0 || d > 1) {
        throw ConfigError("paper constants need d and mu in (0, 1]");
    }
    auto constants = main_constants(d, mu, cfg.k);
    if (!n_large_enough(constants, n)) {
        throw ConfigError("paper constants require log2(n) > " + std::to_string(constants.log2_n0) +
                          "; use practical mode");
    }
}

struct AttemptInput {
    const Graph& g;
    const PipelineConfig& cfg;
    std::size_t max_inner;
    std::vector<OrderedClique> extra_cliques; // stitched onto the absorbing path, kept as windows
};

/*
 * One seeded run of the five stages. Throws StageFailure naming the stage.
 */
inline Certificate run_attempt(const AttemptInput& in, std::uint64_t seed, AttemptReport& rep) {
    const Graph& g = in.g;
    const PipelineConfig& cfg = in.cfg;
    const std::size_t n = g.size();
    const std::size_t k = cfg.k;

    auto stage = [&](const char* name, std::uint64_t stream) -> StageEntry& {
        rep.stages.push_back(StageEntry{name, false, derive_seed(seed, stream), {}, {}, 0.0});
        return rep.stages.back();
    };
    auto connect_with = [&](const OrderedClique& from, const OrderedClique& to, const VertexSet* allowed,
                            const VertexSet* forbidden, std::uint64_t s) {
        ConnectRequest req;
        req.x_end = from;
        req.y_end = to;
        req.k = k;
        req.max_inner = in.max_inner;
        req.budget = cfg.connect_budget;
        req.seed = s;
        if (allowed) {
            req.allowed_inner = *allowed;
        }
        if (forbidden) {
            req.forbidden = *forbidden;
            for (auto u : from) {
                req.forbidden.reset(u);
            }
            for (auto u : to) {
                req.forbidden.reset(u);
            }
        }
        return connect(g, req);
    };

    VertexSet protected_vertices(n);
    for (const auto& c : in.extra_cliques) {
        for (auto u : c) {
            protected_vertices.set(u);
        }
    }

    // (1) absorbing path
    AbsorbingPath pa;
    std::size_t capacity = 0;
    {
        StageEntry& st = stage("absorbing_path", 1);
        StageTimer timer(st);
        auto sampled = sample_family(g, k, cfg.zeta, cfg.absorber_p, st.seed, cfg.per_vertex_cap);
        AbsorberFamily family;
        for (auto& m : sampled.family.members) {
            bool clash = std::any_of(m.tuple.begin(), m.tuple.end(), [&](Vertex u) { return protected_vertices.test(u); });
            if (!clash) {
                family.members.push_back(m);
            }
        }
        index_family(g, family);
        st.count("candidates", static_cast<std::int64_t>(sampled.stats.candidates));
        st.count("sampled", static_cast<std::int64_t>(sampled.stats.sampled));
        st.count("discarded", static_cast<std::int64_t>(sampled.stats.discarded));
        st.count("family", static_cast<std::int64_t>(family.members.size()));
        if (family.members.empty()) {
            st.note = "no v-absorbers";
            throw StageFailure{"absorbing_path", "no v-absorbers found"};
        }
        std::size_t budget_vertices = floor_mul(cfg.absorber_fraction, n);
        std::size_t max_members = std::max<std::size_t>(1, budget_vertices / (2 * k));
        AbsorberFamily chosen = select_members(g, family, max_members);
        AssemblyOptions opts;
        opts.max_inner = in.max_inner;
        opts.budget = cfg.connect_budget;
        opts.drop_unconnectable = true;
        pa = build_absorbing_path(g, k, chosen, derive_seed(st.seed, 1), opts);
        std::vector<std::pair<Vertex, Vertex>> unused_pairs;
        // stitch the extra cliques after the last absorber
        VertexSet reserved(n);
        for (auto v : pa.path.vertices) {
            reserved.set(v);
        }
        reserved |= protected_vertices;
        for (std::size_t i = 0; i < in.extra_cliques.size(); ++i) {
            const auto& c = in.extra_cliques[i];
            auto link = connect_with(pa.path.last_end(), c, nullptr, &reserved, derive_seed(st.seed, 100 + i));
            if (!link) {
                st.note = "extra clique " + std::to_string(i) + " not connectable";
                throw StageFailure{"absorbing_path", st.note};
            }
            for (std::size_t j = k; j < link->size(); ++j) {
                pa.path.vertices.push_back(link->vertices[j]);
                reserved.set(link->vertices[j]);
            }
        }
        pa.y_end = pa.path.last_end();
        if (auto bad = absorbing_path_violation(g, pa)) {
            throw StageFailure{"absorbing_path", "internal: " + *bad};
        }
        capacity = pa.segments.size();
        st.count("selected", static_cast<std::int64_t>(chosen.members.size()));
        st.count("dropped", static_cast<std::int64_t>(pa.dropped.size()));
        st.count("segments", static_cast<std::int64_t>(capacity));
        st.count("size", static_cast<std::int64_t>(pa.path.size()));
        st.ok = true;
    }

    VertexSet on_path(n);
    for (auto v : pa.path.vertices) {
        on_path.set(v);
    }

    // (2) reservoir
    VertexSet reservoir(n);
    {
        StageEntry& st = stage("reservoir", 2);
        StageTimer timer(st);
        SplitMix64 rng(st.seed);
        for (Vertex v = 0; v < n; ++v) {
            if (!on_path.test(v) && rng.bernoulli(cfg.reservoir_fraction)) {
                reservoir.set(v);
            }
        }
        st.count("size", static_cast<std::int64_t>(reservoir.count()));
        st.ok = true;
    }

    // (3) cover
    PathCover cover;
    {
        StageEntry& st = stage("cover", 3);
        StageTimer timer(st);
        std::size_t stop = cfg.stop_fraction ? static_cast<std::size_t>(floor_mul(*cfg.stop_fraction, n)) : capacity / 2;
        VertexSet excluded = on_path | reservoir;
        cover = cover_with_paths(g, k, cfg.zeta, excluded, stop, st.seed);
        std::size_t covered = 0;
        for (const auto& p : cover.paths) {
            covered += p.size();
        }
        st.count("stop_size", static_cast<std::int64_t>(stop));
        st.count("paths", static_cast<std::int64_t>(cover.paths.size()));
        st.count("covered", static_cast<std::int64_t>(covered));
        st.count("leftover", static_cast<std::int64_t>(cover.leftover.size()));
        st.note = cover.stop_reason;
        st.ok = true;
    }

    // (4) cyclic connection through the reservoir and the cover leftover
    std::vector<Piece> pieces;
    std::vector<Vertex> closing;
    VertexSet pool = reservoir;
    for (auto v : cover.leftover) {
        pool.set(v);
    }
    {
        StageEntry& st = stage("connect", 4);
        StageTimer timer(st);
        std::vector<KPath> remaining = cover.paths;
        std::size_t dissolved = 0;
        std::size_t reservoir_used = 0;
        std::uint64_t calls = 0;
        auto dissolve = [&](const KPath& p) {
            for (auto v : p.vertices) {
                pool.set(v);
            }
            ++dissolved;
        };
        auto take = [&](const KPath& link) {
            std::vector<Vertex> inner(link.vertices.begin() + k, link.vertices.end() - k);
            for (auto v : inner) {
                pool.reset(v);
            }
            return inner;
        };
        const std::size_t max_trim = 2 * k;
        // Joins `from` to `target` after trimming up to max_trim vertices off
        // the front of target; trimmed vertices become usable inner vertices.
        auto link_front = [&](const OrderedClique& from, const KPath& target) -> std::optional<Piece> {
            for (std::size_t t = 0; t <= max_trim && target.size() >= t + k; ++t) {
                VertexSet allowed = pool;
                for (std::size_t i = 0; i < t; ++i) {
                    allowed.set(target.vertices[i]);
                }
                KPath trimmed{std::vector<Vertex>(target.vertices.begin() + static_cast<std::ptrdiff_t>(t),
                                                  target.vertices.end()),
                              k};
                auto link = connect_with(from, trimmed.first_end(), &allowed, nullptr, derive_seed(st.seed, calls++));
                if (link) {
                    for (std::size_t i = 0; i < t; ++i) {
                        pool.set(target.vertices[i]);
                    }
                    return Piece{take(*link), std::move(trimmed)};
                }
            }
            return std::nullopt;
        };
        OrderedClique current = pa.y_end;
        while (true) {
            bool advanced = false;
            for (std::size_t i = 0; i < remaining.size() && !advanced; ++i) {
                for (int dir = 0; dir < 2 && !advanced; ++dir) {
                    KPath candidate = dir == 0 ? remaining[i] : remaining[i].reversed();
                    if (auto piece = link_front(current, candidate)) {
                        current = piece->path.last_end();
                        pieces.push_back(std::move(*piece));
                        remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(i));
                        advanced = true;
                    }
                }
            }
            if (advanced) {
                continue;
            }
            if (!remaining.empty()) {
                // nothing connects from here: give up the shortest path
                auto shortest = std::min_element(remaining.begin(), remaining.end(),
                                                 [](const KPath& a, const KPath& b) { return a.size() < b.size(); });
                dissolve(*shortest);
                remaining.erase(shortest);
                continue;
            }
            // close the cycle, trimming the tail of the last piece if needed
            bool closed = false;
            if (pieces.empty()) {
                auto link = connect_with(current, pa.x_end, &pool, nullptr, derive_seed(st.seed, calls++));
                if (link) {
                    closing = take(*link);
                    closed = true;
                }
            }
            else {
                KPath& last = pieces.back().path;
                for (std::size_t t = 0; t <= max_trim && last.size() >= t + k && !closed; ++t) {
                    VertexSet allowed = pool;
                    for (std::size_t i = last.size() - t; i < last.size(); ++i) {
                        allowed.set(last.vertices[i]);
                    }
                    OrderedClique from(last.vertices.end() - static_cast<std::ptrdiff_t>(t + k),
                                       last.vertices.end() - static_cast<std::ptrdiff_t>(t));
                    auto link = connect_with(from, pa.x_end, &allowed, nullptr, derive_seed(st.seed, calls++));
                    if (link) {
                        for (std::size_t i = last.size() - t; i < last.size(); ++i) {
                            pool.set(last.vertices[i]);
                        }
                        last.vertices.resize(last.size() - t);
                        closing = take(*link);
                        closed = true;
                    }
                }
            }
            if (closed) {
                break;
            }
            if (pieces.empty()) {
                st.note = "absorbing path ends cannot be joined";
                throw StageFailure{"connect", st.note};
            }
            // the last piece blocks the closing connection: drop it
            for (auto v : pieces.back().inner) {
                pool.set(v);
            }
            dissolve(pieces.back().path);
            pieces.pop_back();
            current = pieces.empty() ? pa.y_end : pieces.back().path.last_end();
        }
        for (const auto& piece : pieces) {
            for (auto v : piece.inner) {
                reservoir_used += reservoir.test(v) ? 1 : 0;
            }
        }
        for (auto v : closing) {
            reservoir_used += reservoir.test(v) ? 1 : 0;
        }
        st.count("connections", static_cast<std::int64_t>(pieces.size() + 1));
        st.count("dissolved", static_cast<std::int64_t>(dissolved));
        st.count("reservoir_used", static_cast<std::int64_t>(reservoir_used));
        st.count("calls", static_cast<std::int64_t>(calls));
        st.ok = true;
    }

    // (5) absorption of the leftover and the unused reservoir
    std::vector<Vertex> cycle;
    {
        StageEntry& st = stage("absorb", 5);
        StageTimer timer(st);
        auto rest = pool.to_vector();
        auto match = match_to_segments(g, pa, rest);
        VertexSet matched(n);
        std::vector<Vertex> unmatched;
        for (std::size_t i = 0; i < rest.size(); ++i) {
            if (match[i]) {
                matched.set(rest[i]);
            }
            else {
                unmatched.push_back(rest[i]);
            }
        }
        KPath absorbed = absorb(g, pa, matched);
        cycle = absorbed.vertices;
        for (const auto& piece : pieces) {
            cycle.insert(cycle.end(), piece.inner.begin(), piece.inner.end());
            cycle.insert(cycle.end(), piece.path.vertices.begin(), piece.path.vertices.end());
        }
        cycle.insert(cycle.end(), closing.begin(), closing.end());
        st.count("to_absorb", static_cast<std::int64_t>(rest.size()));
        st.count("matched", static_cast<std::int64_t>(matched.count()));
        std::size_t fallback = 0;
        if (!unmatched.empty()) {
            if (!cfg.window_fallback) {
                st.note = "no free absorber for vertex " + std::to_string(unmatched.front());
                throw StageFailure{"absorb", st.note};
            }
            std::vector<std::pair<Vertex, Vertex>> protected_pairs;
            for (const auto& c : in.extra_cliques) {
                for (std::size_t j = 0; j + 1 < c.size(); ++j) {
                    protected_pairs.emplace_back(c[j], c[j + 1]);
                }
            }
            // most constrained vertex first
            while (!unmatched.empty()) {
                std::size_t best = unmatched.size();
                std::size_t best_windows = 0;
                for (std::size_t i = 0; i < unmatched.size(); ++i) {
                    std::size_t w = count_windows(g, cycle, k, unmatched[i], protected_pairs);
                    if (w > 0 && (best == unmatched.size() || w < best_windows)) {
                        best = i;
                        best_windows = w;
                    }
                }
                if (best == unmatched.size()) {
                    break;
                }
                insert_into_window(g, cycle, k, unmatched[best], protected_pairs);
                unmatched.erase(unmatched.begin() + static_cast<std::ptrdiff_t>(best));
                ++fallback;
            }
            if (!unmatched.empty()) {
                st.note = "vertex " + std::to_string(unmatched.front()) + " fits no window";
                st.count("fallback", static_cast<std::int64_t>(fallback));
                throw StageFailure{"absorb", st.note};
            }
        }
        st.count("fallback", static_cast<std::int64_t>(fallback));
        st.ok = true;
    }

    Certificate cert{k, cycle};
    if (cycle.size() != n) {
        throw StageFailure{"absorb", "internal: cycle has " + std::to_string(cycle.size()) + " vertices"};
    }
    auto verdict = verify(g, cert);
    if (!verdict.ok) {
        throw StageFailure{"absorb", "internal: certificate failed verification at (" +
                                         std::to_string(verdict.violation->first) + "," +
                                         std::to_string(verdict.violation->second) + ")"};
    }
    cert.ordering = canonical_ordering(cert.ordering);
    extract_clique_factor(g, cert);
    return cert;
}

inline PipelineResult run_pipeline(const Graph& g, const PipelineConfig& cfg,
                                   const std::vector<OrderedClique>& extra_cliques) {
    validate_config(cfg);
    if (cfg.mode == PipelineMode::paper_constants) {
        check_paper_constants(g, cfg);
    }
    const std::size_t n = g.size();
    PipelineResult result;
    result.report.n = n;
    result.report.k = cfg.k;
    if (n <= 2 * cfg.k + 1) {
        // every pair is within cyclic distance k
        std::vector<Vertex> ord(n);
        for (Vertex v = 0; v < n; ++v) {
            ord[v] = v;
        }
        Certificate cert{cfg.k, ord};
        if (verify(g, cert).ok) {
            result.certificate = cert;
            result.report.success = true;
        }
        else {
            result.report.failed_stage = "absorbing_path";
            result.report.message = "graph on at most 2k+1 vertices is not complete";
        }
        return result;
    }
    result.report.max_inner = cfg.max_inner ? *cfg.max_inner : default_max_inner(g, cfg.k, cfg.seed);
    AttemptInput input{g, cfg, result.report.max_inner, extra_cliques};
    for (std::size_t attempt = 0; attempt <= cfg.retries; ++attempt) {
        AttemptReport rep;
        rep.attempt = attempt;
        rep.seed = derive_seed(cfg.seed, 1000 + attempt);
        try {
            result.certificate = run_attempt(input, rep.seed, rep);
            rep.ok = true;
        }
        catch (const StageFailure& failure) {
            rep.failed_stage = failure.stage;
            rep.message = failure.message;
            if (!rep.stages.empty() && rep.stages.back().name == failure.stage) {
                rep.stages.back().ok = false;
            }
        }
        result.report.attempts.push_back(rep);
        if (rep.ok) {
            result.report.success = true;
            result.report.failed_stage.clear();
            result.report.message.clear();
            return result;
        }
        result.report.failed_stage = rep.failed_stage;
        result.report.message = rep.message;
    }
    return result;
}

}

/*
 * Absorbing path, reservoir, path cover, cyclic connection and absorption,
 * retried with fresh seeds up to cfg.retries times. Any returned certificate
 * has passed verify.
 */
inline PipelineResult find_hamiltonian_power(const Graph& g, const PipelineConfig& cfg) {
    return detail::run_pipeline(g, cfg, {});
}

inline constexpr std::size_t max_hitting_sets = 64;

/*
 * Pipeline variant that stitches one connectable k-clique from inside each
 * set onto the absorbing path, so that every set contains at least one
 * k-window of the final cycle. Tallies count cyclic k-windows inside each set.
 */
inline PipelineResult find_with_hitting_sets(const Graph& g, const PipelineConfig& cfg,
                                             const std::vector<VertexSet>& sets, std::size_t per_set_min = 1) {
    validate_config(cfg);
    if (sets.size() > max_hitting_sets) {
        throw InputError("find_with_hitting_sets: at most 64 sets");
    }
    const std::size_t n = g.size();
    const std::size_t k = cfg.k;
    const std::size_t threshold = ceil_mul(cfg.zeta, n);
    VertexSet used(n);
    std::vector<OrderedClique> extra;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        check_set(g, sets[i]);
        if (sets[i].count() < 2 * k) {
            throw InputError("hitting set " + std::to_string(i) + " has fewer than 2k vertices");
        }
        std::optional<OrderedClique> pick;
        for_each_clique(g, k, sets[i] - used, [&](const std::vector<Vertex>& c) {
            if (is_connectable(g, c, threshold)) {
                pick = c;
                return false;
            }
            return true;
        });
        if (!pick) {
            throw InfeasibleSetError("hitting set " + std::to_string(i) + " contains no connectable k-clique", i);
        }
        for (auto u : *pick) {
            used.set(u);
        }
        extra.push_back(*pick);
    }
    PipelineResult result = detail::run_pipeline(g, cfg, extra);
    if (result.certificate) {
        for (const auto& s : sets) {
            result.set_tallies.push_back(detail::windows_inside(result.certificate->ordering, k, s));
        }
        for (std::size_t i = 0; i < sets.size(); ++i) {
            if (result.set_tallies[i] < per_set_min) {
                result.report.success = false;
                result.report.failed_stage = "absorb";
                result.report.message = "set " + std::to_string(i) + " has too few windows";
                result.certificate.reset();
                break;
            }
        }
    }
    return result;
}

}

#endif /* POWERHAM_HAMILTONIAN_HPP */
