#ifndef POWERHAM_CONNECTOR_HPP
#define POWERHAM_CONNECTOR_HPP

#include <optional>
#include <string>
#include <vector>

#include "powerham/cliques.hpp"
#include "powerham/kpath.hpp"
#include "powerham/numeric.hpp"
#include "powerham/random.hpp"
#include "powerham/walks.hpp"

namespace powerham {

inline constexpr std::size_t default_max_inner_cap = 24;
inline constexpr std::size_t default_connect_budget = 2'000'000;

struct ConnectRequest {
    OrderedClique x_end;
    OrderedClique y_end;
    std::size_t k = 1;
    std::size_t max_inner = default_max_inner_cap;
    VertexSet forbidden;                    // empty universe means "nothing forbidden"
    std::optional<VertexSet> allowed_inner; // restricts inner vertices when set
    std::uint64_t seed = 0;
    std::size_t budget = default_connect_budget; // search-node cap per request
};

struct ConnectStats {
    std::size_t nodes = 0;
    bool budget_exhausted = false;
};

namespace detail {

inline void validate_request(const Graph& g, const ConnectRequest& req) {
    if (req.k == 0) {
        throw InputError("connect: k must be >= 1");
    }
    if (req.x_end.size() != req.k || req.y_end.size() != req.k) {
        throw InputError("connect: ends must have exactly k vertices");
    }
    if (!is_clique(g, req.x_end) || !is_clique(g, req.y_end)) {
        throw InputError("connect: ends must be cliques");
    }
    for (auto a : req.x_end) {
        for (auto b : req.y_end) {
            if (a == b) {
                throw InputError("connect: ends overlap");
            }
        }
    }
    if (req.forbidden.size() != 0) {
        check_set(g, req.forbidden);
        for (auto v : req.x_end) {
            if (req.forbidden.test(v)) {
                throw InputError("connect: forbidden set meets an end");
            }
        }
        for (auto v : req.y_end) {
            if (req.forbidden.test(v)) {
                throw InputError("connect: forbidden set meets an end");
            }
        }
    }
    if (req.allowed_inner) {
        check_set(g, *req.allowed_inner);
    }
}

inline VertexSet neighbourhood_of_set(const Graph& g, const VertexSet& s) {
    VertexSet out(g.size());
    s.for_each([&](Vertex v) { out |= g.row(v); });
    return out;
}

/*
 * Search state for (x, y; k)-paths with exactly m inner vertices. Sequence
 * positions: x_1..x_k, w_1..w_m, y_1..y_k. Inner vertex w_i must be adjacent
 * to x_i..x_k (i <= k) and to y_1..y_{k-(m-i)} (m-i < k). The per-position
 * filters are the intersection of a forward and a backward vertex-level
 * reachability sweep, a relaxation of the ordered-tuple state graph that
 * discards branches which cannot reach the far end.
 */
class ConnectionSearch {
public:
    ConnectionSearch(const Graph& g, const ConnectRequest& req, std::size_t m) : g_(g), req_(req), m_(m) {
        const std::size_t n = g.size();
        const std::size_t k = req.k;
        base_ = VertexSet::full(n);
        if (req.forbidden.size() != 0) {
            base_ -= req.forbidden;
        }
        for (auto v : req.x_end) {
            base_.reset(v);
        }
        for (auto v : req.y_end) {
            base_.reset(v);
        }
        if (req.allowed_inner) {
            base_ &= *req.allowed_inner;
        }
        // junction between x and y when fewer than k inner vertices sit between them
        for (std::size_t a = 1; a <= k; ++a) {
            for (std::size_t j = 1; j + m <= a; ++j) {
                if (!g.adjacent(req.x_end[a - 1], req.y_end[j - 1])) {
                    feasible_ = false;
                    return;
                }
            }
        }
        filters_.assign(m + 1, VertexSet(n));
        for (std::size_t i = 1; i <= m; ++i) {
            VertexSet f = base_;
            for (std::size_t a = i; a <= k; ++a) {
                f &= g.row(req.x_end[a - 1]);
            }
            if (m - i < k) {
                for (std::size_t j = 1; j <= k - (m - i); ++j) {
                    f &= g.row(req.y_end[j - 1]);
                }
            }
            if (i > 1) {
                f &= neighbourhood_of_set(g, filters_[i - 1]);
            }
            filters_[i] = std::move(f);
        }
        for (std::size_t i = m; i >= 1; --i) {
            if (i < m) {
                filters_[i] &= neighbourhood_of_set(g, filters_[i + 1]);
            }
            if (filters_[i].none()) {
                feasible_ = false;
                return;
            }
        }
    }

    bool feasible() const { return feasible_; }

    // First sequence found; candidates tried in an order drawn from rng.
    std::optional<std::vector<Vertex>> find(SplitMix64& rng, ConnectStats& stats, std::size_t budget) {
        if (!feasible_) {
            return std::nullopt;
        }
        init_sequence();
        found_.reset();
        rng_ = &rng;
        stats_ = &stats;
        budget_ = budget;
        descend_find(1);
        return found_;
    }

    // Number of valid inner sequences, or nullopt once `budget` nodes are spent.
    std::optional<BigInt> count(std::size_t budget) {
        if (!feasible_) {
            return BigInt(0);
        }
        init_sequence();
        ConnectStats local;
        stats_ = &local;
        budget_ = budget;
        BigInt total = descend_count(1);
        if (local.budget_exhausted) {
            return std::nullopt;
        }
        return total;
    }

private:
    void init_sequence() {
        seq_.assign(req_.x_end.begin(), req_.x_end.end());
        used_ = VertexSet(g_.size());
    }

    VertexSet candidates(std::size_t i) const {
        VertexSet c = filters_[i] - used_;
        for (std::size_t back = 1; back <= req_.k; ++back) {
            c &= g_.row(seq_[seq_.size() - back]);
        }
        return c;
    }

    bool spend() {
        if (++stats_->nodes > budget_) {
            stats_->budget_exhausted = true;
            return false;
        }
        return true;
    }

    bool descend_find(std::size_t i) {
        if (i > m_) {
            found_ = std::vector<Vertex>(seq_.begin() + req_.k, seq_.end());
            return true;
        }
        if (!spend()) {
            return true;
        }
        auto order = candidates(i).to_vector();
        rng_->shuffle(order);
        for (auto w : order) {
            seq_.push_back(w);
            used_.set(w);
            bool done = descend_find(i + 1);
            seq_.pop_back();
            used_.reset(w);
            if (done) {
                return true;
            }
        }
        return false;
    }

    BigInt descend_count(std::size_t i) {
        if (i > m_) {
            return 1;
        }
        if (stats_->budget_exhausted || !spend()) {
            return 0;
        }
        VertexSet c = candidates(i);
        if (i == m_) {
            return c.count();
        }
        BigInt total = 0;
        c.for_each([&](Vertex w) {
            seq_.push_back(w);
            used_.set(w);
            total += descend_count(i + 1);
            seq_.pop_back();
            used_.reset(w);
        });
        return total;
    }

    const Graph& g_;
    const ConnectRequest& req_;
    std::size_t m_;
    bool feasible_ = true;
    VertexSet base_;
    std::vector<VertexSet> filters_; // filters_[i] for inner position i (1-based)
    std::vector<Vertex> seq_;
    VertexSet used_;
    std::optional<std::vector<Vertex>> found_;
    SplitMix64* rng_ = nullptr;
    ConnectStats* stats_ = nullptr;
    std::size_t budget_ = 0;
};

}

/*
 * Shortest (x, y; k)-path with at most max_inner inner vertices: iterative
 * deepening over the inner count, depth-first inside each level. Inner
 * vertices are distinct, avoid the forbidden set and the ends, and come from
 * allowed_inner when given. Complete unless the node budget runs out
 * (reported through stats).
 */
inline std::optional<KPath> connect(const Graph& g, const ConnectRequest& req, ConnectStats* stats = nullptr) {
    detail::validate_request(g, req);
    ConnectStats local;
    ConnectStats& st = stats ? *stats : local;
    SplitMix64 rng(req.seed);
    for (std::size_t m = 0; m <= req.max_inner; ++m) {
        detail::ConnectionSearch search(g, req, m);
        if (!search.feasible()) {
            continue;
        }
        auto inner = search.find(rng, st, req.budget);
        if (inner) {
            KPath path{req.x_end, req.k};
            path.vertices.insert(path.vertices.end(), inner->begin(), inner->end());
            path.vertices.insert(path.vertices.end(), req.y_end.begin(), req.y_end.end());
            return path;
        }
        if (st.budget_exhausted) {
            break;
        }
    }
    return std::nullopt;
}

inline constexpr std::size_t max_enumerate_inner = 6;
inline constexpr std::size_t max_enumerate_n = 30;
inline constexpr std::size_t default_enumerate_budget = 50'000'000;

// Exact number of (x, y; k)-paths with exactly m inner vertices.
inline BigInt enumerate_connections(const Graph& g, const ConnectRequest& req, std::size_t m,
                                    std::size_t budget = default_enumerate_budget) {
    detail::validate_request(g, req);
    if (m > max_enumerate_inner || g.size() > max_enumerate_n) {
        throw SizeError("enumerate_connections: limited to m <= 6 and n <= 30");
    }
    detail::ConnectionSearch search(g, req, m);
    auto total = search.count(budget);
    if (!total) {
        throw SizeError("enumerate_connections: node budget exceeded");
    }
    return *total;
}

/*
 * (k, l, a)-rope: parts Z_0..Z_{l+1}; Z_0 and Z_{l+1} are the ends, Z_1..Z_a
 * are k-cliques, the remaining inner parts are single vertices, and
 * consecutive parts are completely joined.
 */
struct Rope {
    std::vector<std::vector<Vertex>> parts;
    std::size_t length = 0; // l, the number of inner parts
    std::size_t blown = 0;  // a, the number of blown-up inner parts
};

inline std::optional<std::string> rope_violation(const Graph& g, const Rope& rope, std::size_t k) {
    if (rope.parts.size() != rope.length + 2) {
        return "part count does not match length";
    }
    for (std::size_t i = 0; i < rope.parts.size(); ++i) {
        std::size_t expected = (i == 0 || i == rope.length + 1 || i <= rope.blown) ? k : 1;
        if (rope.parts[i].size() != expected) {
            return "part " + std::to_string(i) + " has the wrong size";
        }
        if (!is_clique(g, rope.parts[i])) {
            return "part " + std::to_string(i) + " is not a clique";
        }
    }
    for (std::size_t i = 0; i + 1 < rope.parts.size(); ++i) {
        for (auto a : rope.parts[i]) {
            for (auto b : rope.parts[i + 1]) {
                if (a == b || !g.adjacent(a, b)) {
                    return "parts " + std::to_string(i) + " and " + std::to_string(i + 1) + " not completely joined";
                }
            }
        }
    }
    return std::nullopt;
}

inline constexpr std::size_t rope_retry_budget = 32;

/*
 * Randomised rope construction between two cliques: sample a uniform walk
 * whose first inner vertex lies in N(x) and last in N(y), with the shortest
 * feasible number of inner vertices l <= L+2, then blow up inner parts
 * Z_1..Z_{a_target} one at a time into a random k-clique in the common
 * neighbourhood of the two adjacent parts. Up to 32 fresh attempts on a dead end.
 */
inline std::optional<Rope> build_rope(const Graph& g, const OrderedClique& x_end, const OrderedClique& y_end,
                                      std::size_t k, const DeltaSchedule& schedule, std::size_t a_target,
                                      std::uint64_t seed) {
    ConnectRequest probe;
    probe.x_end = x_end;
    probe.y_end = y_end;
    probe.k = k;
    detail::validate_request(g, probe);
    const std::size_t n = g.size();
    const std::size_t max_length = schedule.L + 2;

    VertexSet pool = VertexSet::full(n);
    for (auto v : x_end) {
        pool.reset(v);
    }
    for (auto v : y_end) {
        pool.reset(v);
    }
    VertexSet nx = common_neighbors_unchecked(g, x_end) & pool;
    VertexSet ny = common_neighbors_unchecked(g, y_end) & pool;

    // ways[i][v]: walks inside pool with i+1 vertices, starting in N(x), ending at v
    std::vector<std::vector<BigInt>> ways;
    std::size_t length = 0;
    bool joined = true;
    for (auto a : x_end) {
        for (auto b : y_end) {
            joined = joined && g.adjacent(a, b);
        }
    }
    if (!joined) {
        ways.push_back(std::vector<BigInt>(n, BigInt(0)));
        nx.for_each([&](Vertex v) { ways[0][v] = 1; });
        bool found = false;
        for (length = 1; length <= max_length; ++length) {
            const auto& cur = ways[length - 1];
            BigInt total = 0;
            ny.for_each([&](Vertex v) { total += cur[v]; });
            if (total > 0) {
                found = true;
                break;
            }
            std::vector<BigInt> next(n, BigInt(0));
            pool.for_each([&](Vertex v) {
                BigInt sum = 0;
                (g.row(v) & pool).for_each([&](Vertex u) { sum += cur[u]; });
                next[v] = std::move(sum);
            });
            ways.push_back(std::move(next));
        }
        if (!found) {
            return std::nullopt;
        }
        a_target = std::min(a_target, length);
    }
    else {
        length = 0;
        a_target = 0;
    }

    SplitMix64 rng(seed);
    auto pick_weighted = [&](const VertexSet& among, const std::vector<BigInt>& weight) -> Vertex {
        BigInt total = 0;
        among.for_each([&](Vertex v) { total += weight[v]; });
        BigInt r = rng.below(total);
        Vertex chosen = n;
        among.for_each([&](Vertex v) {
            if (chosen != n) {
                return;
            }
            if (r < weight[v]) {
                chosen = v;
            }
            else {
                r -= weight[v];
            }
        });
        return chosen;
    };

    for (std::size_t attempt = 0; attempt < rope_retry_budget; ++attempt) {
        Rope rope;
        rope.length = length;
        rope.parts.assign(length + 2, {});
        rope.parts.front() = x_end;
        rope.parts.back() = y_end;
        if (length > 0) {
            Vertex v = pick_weighted(ny, ways[length - 1]);
            rope.parts[length] = {v};
            for (std::size_t i = length - 1; i >= 1; --i) {
                VertexSet back = g.row(v) & pool;
                if (i - 1 == 0) {
                    back &= nx;
                }
                v = pick_weighted(back, ways[i - 1]);
                rope.parts[i] = {v};
            }
        }
        bool dead = false;
        for (std::size_t a = 0; a < a_target; ++a) {
            // blow up part a+1 inside the common neighbourhood of its neighbours
            VertexSet room = pool;
            for (auto v : rope.parts[a]) {
                room &= g.row(v);
            }
            for (auto v : rope.parts[a + 2]) {
                room &= g.row(v);
            }
            for (std::size_t i = 1; i <= length; ++i) {
                if (i != a + 1) {
                    for (auto v : rope.parts[i]) {
                        room.reset(v);
                    }
                }
            }
            auto cliques = list_cliques(g, k, room);
            if (cliques.empty()) {
                dead = true;
                break;
            }
            rope.parts[a + 1] = cliques[rng.below(cliques.size())];
            rope.blown = a + 1;
        }
        if (!dead) {
            return rope;
        }
    }
    return std::nullopt;
}

// The concatenated parts of a fully blown-up rope, if no vertex repeats.
inline std::optional<KPath> rope_to_path(const Rope& rope, std::size_t k) {
    if (rope.blown != rope.length) {
        throw InputError("rope_to_path: rope is not fully blown up");
    }
    KPath path{{}, k};
    std::vector<Vertex> seen;
    for (const auto& part : rope.parts) {
        path.vertices.insert(path.vertices.end(), part.begin(), part.end());
    }
    seen = path.vertices;
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
        return std::nullopt;
    }
    return path;
}

}

#endif /* POWERHAM_CONNECTOR_HPP */
