#ifndef POWERHAM_PROPERTIES_HPP
#define POWERHAM_PROPERTIES_HPP

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <vector>

#include "powerham/cliques.hpp"
#include "powerham/graph.hpp"
#include "powerham/numeric.hpp"
#include "powerham/random.hpp"

namespace powerham {

enum class Mode { exact, heuristic };

inline const char* to_string(Mode m) {
    return m == Mode::exact ? "exact" : "heuristic";
}

inline constexpr std::size_t max_exact_scan = 26;
inline constexpr std::size_t max_robust_scan = 22;
inline constexpr std::size_t max_paired_scan = 16;

// Minimal rho for which the graph is (rho, d)-dense, i.e.
// e(U) >= d|U|^2/2 - rho n^2 for all U.
struct DensenessReport {
    Rational d;
    Rational rho_star;
    std::vector<Vertex> witness;
    Mode mode = Mode::exact;
};

// Smallest edge-expansion ratio e(X, V\X) / (|X||V\X|) over nontrivial X.
struct InseparabilityReport {
    Rational mu_star;
    std::vector<Vertex> witness;
    Mode mode = Mode::exact;
};

struct ConnectableSet {
    std::size_t k = 0;
    Rational zeta;
    std::size_t threshold = 0; // ceil(zeta * n)
    std::vector<OrderedClique> cliques;
};

struct RobustMatchingReport {
    Rational rho;
    Rational d;
    bool matchable = true;
    std::vector<Vertex> witness; // a failing U when !matchable
};

// Largest violation of e(X,Y) >= d|X||Y| - rho n^2 over all pairs X, Y.
struct PairedDensityReport {
    Rational d;
    Rational rho_star;
    std::vector<Vertex> x;
    std::vector<Vertex> y;
};

namespace detail {

inline std::vector<std::uint32_t> small_rows(const Graph& g) {
    std::vector<std::uint32_t> rows(g.size());
    for (Vertex v = 0; v < g.size(); ++v) {
        rows[v] = static_cast<std::uint32_t>(g.row(v).words().empty() ? 0 : g.row(v).words()[0]);
    }
    return rows;
}

// Lexicographic order of the sorted member lists of two masks.
inline bool mask_lex_less(std::uint64_t a, std::uint64_t b) {
    if (a == b) {
        return false;
    }
    int i = std::countr_zero(a ^ b);
    std::uint64_t above = i == 63 ? 0 : ~std::uint64_t(0) << (i + 1);
    if ((a >> i) & 1) {
        return (b & above) != 0;
    }
    return (a & above) == 0;
}

inline std::vector<Vertex> mask_members(std::uint64_t mask) {
    std::vector<Vertex> out;
    while (mask) {
        out.push_back(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return out;
}

inline bool vector_lex_less(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// Visits every subset of [0, n) in Gray-code order; step(v, added) is called
// after vertex v entered (added) or left the current mask.
template <class Step>
void gray_scan(std::size_t n, Step&& step) {
    std::uint64_t mask = 0;
    std::uint64_t total = std::uint64_t(1) << n;
    for (std::uint64_t i = 1; i < total; ++i) {
        int v = std::countr_zero(i);
        std::uint64_t bit = std::uint64_t(1) << v;
        bool added = !(mask & bit);
        mask ^= bit;
        step(static_cast<Vertex>(v), added, mask);
    }
}

inline void require_scan_size(const Graph& g, std::size_t limit, const char* what) {
    if (g.size() > limit) {
        throw SizeError(std::string(what) + ": exhaustive scan limited to n <= " + std::to_string(limit) +
                        " (got n=" + std::to_string(g.size()) + "); use the heuristic mode");
    }
}

}

/*
 * Exhaustive subset scan. For each size s the Gray-code walk keeps the minimum
 * of e(U) and the lexicographically least U attaining it; the deficit
 * d s^2/2 - e(U) is then maximised over s. O(2^n) with O(1) word operations per
 * subset.
 */
inline DensenessReport denseness_exact(const Graph& g, const Rational& d) {
    detail::require_scan_size(g, max_exact_scan, "denseness_exact");
    const std::size_t n = g.size();
    auto rows = detail::small_rows(g);

    std::vector<std::int64_t> min_e(n + 1, std::numeric_limits<std::int64_t>::max());
    std::vector<std::uint64_t> best(n + 1, 0);
    min_e[0] = 0;
    std::int64_t e = 0;
    std::size_t s = 0;
    detail::gray_scan(n, [&](Vertex v, bool added, std::uint64_t mask) {
        std::int64_t inside = std::popcount(rows[v] & static_cast<std::uint32_t>(mask));
        if (added) {
            e += inside;
            ++s;
        }
        else {
            e -= inside;
            --s;
        }
        if (e < min_e[s] || (e == min_e[s] && detail::mask_lex_less(mask, best[s]))) {
            min_e[s] = e;
            best[s] = mask;
        }
    });

    DensenessReport report;
    report.d = d;
    report.mode = Mode::exact;
    Rational best_deficit = 0;
    std::uint64_t witness = 0;
    for (std::size_t size = 0; size <= n; ++size) {
        Rational deficit = d * Rational(size * size) / 2 - Rational(min_e[size]);
        if (deficit > best_deficit || (deficit == best_deficit && detail::mask_lex_less(best[size], witness))) {
            best_deficit = deficit;
            witness = best[size];
        }
    }
    report.rho_star = n == 0 ? Rational(0) : best_deficit / Rational(n * n);
    report.witness = detail::mask_members(witness);
    return report;
}

/*
 * Randomised local search over subsets (steepest single-vertex flips with
 * restarts, seeded by a max-inner-degree peeling sweep). Every candidate is an
 * actual subset, so the reported rho is a lower bound on the exact value.
 * `budget` caps the total number of flips.
 */
inline DensenessReport denseness_heuristic(const Graph& g, const Rational& d, std::size_t budget,
                                           std::uint64_t seed) {
    const std::size_t n = g.size();
    const double dd = to_double(d);
    SplitMix64 rng(seed);

    std::vector<char> best_set(n, 0);
    double best_value = 0.0;
    std::size_t flips = 0;

    std::vector<char> in(n, 0);
    std::vector<std::int64_t> inner(n, 0); // |N(v) ∩ U|
    std::int64_t e = 0;
    std::size_t s = 0;

    auto value = [&]() { return dd * double(s) * double(s) / 2.0 - double(e); };
    auto flip = [&](Vertex v) {
        if (in[v]) {
            in[v] = 0;
            --s;
            e -= inner[v];
        }
        else {
            in[v] = 1;
            ++s;
            e += inner[v];
        }
        std::int64_t delta = in[v] ? 1 : -1;
        g.row(v).for_each([&](Vertex w) { inner[w] += delta; });
        ++flips;
    };
    auto record = [&]() {
        double val = value();
        if (val > best_value + 1e-12) {
            best_value = val;
            best_set = in;
        }
    };
    auto reset_to = [&](const std::vector<char>& target) {
        for (Vertex v = 0; v < n; ++v) {
            if (in[v] != target[v]) {
                flip(v);
            }
        }
    };
    auto climb = [&]() {
        while (flips < budget) {
            double current = value();
            double best_gain = 1e-12;
            Vertex best_v = n;
            for (Vertex v = 0; v < n; ++v) {
                double gain = in[v] ? (-dd * (2.0 * double(s) - 1.0) / 2.0 + double(inner[v]))
                                    : (dd * (2.0 * double(s) + 1.0) / 2.0 - double(inner[v]));
                if (gain > best_gain) {
                    best_gain = gain;
                    best_v = v;
                }
            }
            if (best_v == n) {
                break;
            }
            flip(best_v);
            (void)current;
            record();
        }
    };

    // peeling sweep from V: drop the vertex with most neighbours inside
    reset_to(std::vector<char>(n, 1));
    record();
    while (s > 0 && flips < budget) {
        Vertex pick = n;
        for (Vertex v = 0; v < n; ++v) {
            if (in[v] && (pick == n || inner[v] > inner[pick])) {
                pick = v;
            }
        }
        flip(pick);
        record();
    }
    if (best_value > 0) {
        reset_to(best_set);
        climb();
    }

    while (flips < budget) {
        std::vector<char> start(n, 0);
        double density = rng.unit();
        for (Vertex v = 0; v < n; ++v) {
            start[v] = rng.unit() < density;
        }
        reset_to(start);
        record();
        std::size_t before = flips;
        climb();
        if (flips == before) {
            // already a local optimum; force progress so the budget is spent
            flip(static_cast<Vertex>(rng.below(std::max<std::size_t>(n, 1))));
            record();
        }
        if (n == 0) {
            break;
        }
    }

    DensenessReport report;
    report.d = d;
    report.mode = Mode::heuristic;
    std::vector<Vertex> witness;
    for (Vertex v = 0; v < n; ++v) {
        if (best_set[v]) {
            witness.push_back(v);
        }
    }
    VertexSet w = VertexSet::from_range(n, witness);
    Rational deficit = d * Rational(witness.size() * witness.size()) / 2 - Rational(edges_within(g, w));
    if (deficit <= 0 || n == 0) {
        report.rho_star = 0;
        report.witness.clear();
    }
    else {
        report.rho_star = deficit / Rational(n * n);
        report.witness = std::move(witness);
    }
    return report;
}

/*
 * Exhaustive bipartition scan: the cut e(X, V\X) is maintained incrementally
 * along the Gray code, and the minimum of cut / (|X||V\X|) is taken over all
 * 1 <= |X| <= n-1 with the lexicographically least minimiser as witness.
 */
inline InseparabilityReport inseparable_exact(const Graph& g) {
    detail::require_scan_size(g, max_exact_scan, "inseparable_exact");
    const std::size_t n = g.size();
    if (n < 2) {
        throw InputError("inseparability needs at least two vertices");
    }
    auto rows = detail::small_rows(g);
    std::vector<std::int64_t> deg(n);
    for (Vertex v = 0; v < n; ++v) {
        deg[v] = std::popcount(rows[v]);
    }

    std::vector<std::int64_t> min_cut(n + 1, std::numeric_limits<std::int64_t>::max());
    std::vector<std::uint64_t> best(n + 1, 0);
    std::int64_t cut = 0;
    std::size_t s = 0;
    detail::gray_scan(n, [&](Vertex v, bool added, std::uint64_t mask) {
        std::int64_t inside = std::popcount(rows[v] & static_cast<std::uint32_t>(mask));
        if (added) {
            cut += deg[v] - 2 * inside;
            ++s;
        }
        else {
            cut += 2 * inside - deg[v];
            --s;
        }
        if (cut < min_cut[s] || (cut == min_cut[s] && detail::mask_lex_less(mask, best[s]))) {
            min_cut[s] = cut;
            best[s] = mask;
        }
    });

    InseparabilityReport report;
    report.mode = Mode::exact;
    bool have = false;
    std::uint64_t witness = 0;
    for (std::size_t size = 1; size < n; ++size) {
        Rational ratio(min_cut[size], static_cast<std::int64_t>(size * (n - size)));
        if (!have || ratio < report.mu_star ||
            (ratio == report.mu_star && detail::mask_lex_less(best[size], witness))) {
            report.mu_star = ratio;
            witness = best[size];
            have = true;
        }
    }
    report.witness = detail::mask_members(witness);
    return report;
}

inline Rational cut_ratio(const Graph& g, const VertexSet& x) {
    std::size_t s = x.count();
    if (s == 0 || s == g.size()) {
        throw InputError("cut_ratio needs a nontrivial bipartition");
    }
    std::size_t cut = edges_between(g, x, x.complement());
    return Rational(cut, s * (g.size() - s));
}

namespace detail {

// Fiedler-vector estimate by power iteration on (c I - L), deflating the
// all-ones eigenvector each round.
inline std::vector<double> fiedler_vector(const Graph& g, SplitMix64& rng, std::size_t iterations = 200,
                                          double tolerance = 1e-9) {
    const std::size_t n = g.size();
    std::vector<double> deg(n);
    double max_deg = 0;
    for (Vertex v = 0; v < n; ++v) {
        deg[v] = double(g.degree(v));
        max_deg = std::max(max_deg, deg[v]);
    }
    const double shift = 2.0 * max_deg + 1.0;
    std::vector<double> x(n), y(n);
    for (auto& xi : x) {
        xi = rng.unit() - 0.5;
    }
    auto deflate_normalise = [&](std::vector<double>& vec) {
        double mean = std::accumulate(vec.begin(), vec.end(), 0.0) / double(n);
        double norm = 0;
        for (auto& val : vec) {
            val -= mean;
            norm += val * val;
        }
        norm = std::sqrt(norm);
        if (norm > 0) {
            for (auto& val : vec) {
                val /= norm;
            }
        }
    };
    deflate_normalise(x);
    double previous = 0;
    for (std::size_t it = 0; it < iterations; ++it) {
        for (Vertex v = 0; v < n; ++v) {
            double lx = deg[v] * x[v];
            g.row(v).for_each([&](Vertex w) { lx -= x[w]; });
            y[v] = shift * x[v] - lx;
        }
        double rayleigh = 0;
        for (Vertex v = 0; v < n; ++v) {
            rayleigh += x[v] * y[v];
        }
        deflate_normalise(y);
        std::swap(x, y);
        if (it > 0 && std::abs(rayleigh - previous) < tolerance) {
            break;
        }
        previous = rayleigh;
    }
    return x;
}

}

/*
 * Upper bound on mu*: the best cut among degree-ordered prefixes, connected
 * components, a spectral sweep along the Fiedler vector, and randomised local
 * search (budget = number of flips).
 */
inline InseparabilityReport inseparable_heuristic(const Graph& g, std::size_t budget, std::uint64_t seed) {
    const std::size_t n = g.size();
    if (n < 2) {
        throw InputError("inseparability needs at least two vertices");
    }
    SplitMix64 rng(seed);
    InseparabilityReport report;
    report.mode = Mode::heuristic;
    bool have = false;

    auto consider = [&](const VertexSet& x) {
        std::size_t s = x.count();
        if (s == 0 || s == n) {
            return;
        }
        Rational r = cut_ratio(g, x);
        auto members = x.to_vector();
        if (!have || r < report.mu_star || (r == report.mu_star && detail::vector_lex_less(members, report.witness))) {
            report.mu_star = r;
            report.witness = std::move(members);
            have = true;
        }
    };
    auto sweep = [&](const std::vector<Vertex>& order) {
        // prefix cuts, updated incrementally
        VertexSet x(n);
        std::int64_t cut = 0;
        std::size_t best_prefix = 0;
        Rational best_ratio;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            Vertex v = order[i];
            cut += std::int64_t(g.degree(v)) - 2 * std::int64_t(Bitset::count_and(g.row(v), x));
            x.set(v);
            Rational r(cut, std::int64_t((i + 1) * (n - i - 1)));
            if (best_prefix == 0 || r < best_ratio) {
                best_ratio = r;
                best_prefix = i + 1;
            }
        }
        consider(VertexSet::from_range(n, std::vector<Vertex>(order.begin(), order.begin() + best_prefix)));
    };

    // (a) degree-ordered sweep
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) < g.degree(b); });
    sweep(order);

    // connected components
    std::vector<int> comp(n, -1);
    int components = 0;
    for (Vertex s0 = 0; s0 < n; ++s0) {
        if (comp[s0] >= 0) {
            continue;
        }
        VertexSet members(n);
        std::vector<Vertex> stack{s0};
        comp[s0] = components;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            members.set(v);
            g.row(v).for_each([&](Vertex w) {
                if (comp[w] < 0) {
                    comp[w] = components;
                    stack.push_back(w);
                }
            });
        }
        ++components;
        if (members.count() < n) {
            consider(members);
        }
    }

    // (b) spectral sweep
    auto fiedler = detail::fiedler_vector(g, rng);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return fiedler[a] < fiedler[b]; });
    sweep(order);

    // (c) local search on the ratio, starting from the incumbent and random sets
    std::size_t flips = 0;
    auto ratio_of = [&](std::int64_t cut, std::size_t s) {
        return double(cut) / double(s * (n - s));
    };
    while (flips < budget) {
        std::vector<char> in(n, 0);
        std::size_t s = 0;
        if (flips == 0) {
            for (auto v : report.witness) {
                in[v] = 1;
            }
        }
        else {
            double density = 0.1 + 0.4 * rng.unit();
            for (Vertex v = 0; v < n; ++v) {
                in[v] = rng.unit() < density;
            }
        }
        std::vector<std::int64_t> inner(n, 0);
        std::int64_t cut = 0;
        for (Vertex v = 0; v < n; ++v) {
            if (in[v]) {
                ++s;
                g.row(v).for_each([&](Vertex w) { ++inner[w]; });
            }
        }
        if (s == 0 || s == n) {
            in[rng.below(n)] ^= 1;
            s = 0;
            std::fill(inner.begin(), inner.end(), 0);
            for (Vertex v = 0; v < n; ++v) {
                if (in[v]) {
                    ++s;
                    g.row(v).for_each([&](Vertex w) { ++inner[w]; });
                }
            }
        }
        for (Vertex v = 0; v < n; ++v) {
            if (in[v]) {
                cut += std::int64_t(g.degree(v)) - inner[v];
            }
        }
        while (flips < budget) {
            double current = ratio_of(cut, s);
            double best_val = current - 1e-12;
            Vertex best_v = n;
            for (Vertex v = 0; v < n; ++v) {
                std::int64_t deg = std::int64_t(g.degree(v));
                if (in[v]) {
                    if (s == 1) {
                        continue;
                    }
                    // v leaves X: its edges into X become cut, its edges out of X stop being cut
                    std::int64_t nc = cut - (deg - inner[v]) + inner[v];
                    double val = ratio_of(nc, s - 1);
                    if (val < best_val) {
                        best_val = val;
                        best_v = v;
                    }
                }
                else {
                    if (s + 1 == n) {
                        continue;
                    }
                    std::int64_t nc = cut + (deg - inner[v]) - inner[v];
                    double val = ratio_of(nc, s + 1);
                    if (val < best_val) {
                        best_val = val;
                        best_v = v;
                    }
                }
            }
            ++flips;
            if (best_v == n) {
                break;
            }
            std::int64_t deg = std::int64_t(g.degree(best_v));
            if (in[best_v]) {
                cut = cut - (deg - inner[best_v]) + inner[best_v];
                in[best_v] = 0;
                --s;
                g.row(best_v).for_each([&](Vertex w) { --inner[w]; });
            }
            else {
                cut = cut + (deg - inner[best_v]) - inner[best_v];
                in[best_v] = 1;
                ++s;
                g.row(best_v).for_each([&](Vertex w) { ++inner[w]; });
            }
        }
        VertexSet x(n);
        for (Vertex v = 0; v < n; ++v) {
            if (in[v]) {
                x.set(v);
            }
        }
        consider(x);
    }
    return report;
}

inline ConnectableSet connectable_cliques(const Graph& g, std::size_t k, const Rational& zeta) {
    if (k == 0) {
        throw InputError("connectable cliques need k >= 1");
    }
    if (zeta <= 0 || zeta > 1) {
        throw InputError("zeta must lie in (0, 1]");
    }
    ConnectableSet out;
    out.k = k;
    out.zeta = zeta;
    out.threshold = ceil_mul(zeta, g.size());
    Bitset common(g.size());
    for_each_clique(g, k, VertexSet::full(g.size()), [&](const std::vector<Vertex>& c) {
        common = g.row(c[0]);
        for (std::size_t i = 1; i < c.size(); ++i) {
            common &= g.row(c[i]);
        }
        if (common.count() >= out.threshold) {
            out.cliques.push_back(c);
        }
    });
    return out;
}

// Number of (k+1)-cliques extending the k-clique t: its common neighbourhood size.
inline std::size_t extension_count(const Graph& g, const std::vector<Vertex>& t) {
    return common_neighbors_unchecked(g, t).count();
}

inline bool is_connectable(const Graph& g, const std::vector<Vertex>& t, std::size_t threshold) {
    return is_clique(g, t) && extension_count(g, t) >= threshold;
}

/*
 * Exhaustive check of the robust-matchability disjunction over every U:
 * e(U) >= d|U|^2/2 - rho n^2, or |U| <= n/2 + rho n and at least |U| - rho n
 * outside vertices have >= d|U| - rho n neighbours in U.
 */
inline RobustMatchingReport robustly_matchable_exact(const Graph& g, const Rational& rho, const Rational& d) {
    detail::require_scan_size(g, max_robust_scan, "robustly_matchable_exact");
    const std::size_t n = g.size();
    auto rows = detail::small_rows(g);
    const Rational rn2 = rho * Rational(n * n);
    const Rational rn = rho * Rational(n);
    std::vector<std::int64_t> e_min(n + 1), nb_min(n + 1), count_min(n + 1);
    std::vector<char> size_ok(n + 1);
    for (std::size_t s = 0; s <= n; ++s) {
        e_min[s] = ceil(d * Rational(s * s) / 2 - rn2).convert_to<std::int64_t>();
        nb_min[s] = ceil(d * Rational(s) - rn).convert_to<std::int64_t>();
        count_min[s] = ceil(Rational(s) - rn).convert_to<std::int64_t>();
        size_ok[s] = Rational(s) <= Rational(n, 2) + rn;
    }

    RobustMatchingReport report;
    report.rho = rho;
    report.d = d;
    bool failed = false;
    std::uint64_t worst = 0;
    auto check = [&](std::uint64_t mask, std::size_t s, std::int64_t e) {
        if (e >= e_min[s]) {
            return;
        }
        if (size_ok[s]) {
            std::int64_t good = 0;
            for (Vertex v = 0; v < n; ++v) {
                if (!((mask >> v) & 1) && std::popcount(rows[v] & static_cast<std::uint32_t>(mask)) >= nb_min[s]) {
                    ++good;
                }
            }
            if (good >= count_min[s]) {
                return;
            }
        }
        if (!failed || detail::mask_lex_less(mask, worst)) {
            worst = mask;
            failed = true;
        }
    };
    check(0, 0, 0);
    std::int64_t e = 0;
    std::size_t s = 0;
    detail::gray_scan(n, [&](Vertex v, bool added, std::uint64_t mask) {
        std::int64_t inside = std::popcount(rows[v] & static_cast<std::uint32_t>(mask));
        if (added) {
            e += inside;
            ++s;
        }
        else {
            e -= inside;
            --s;
        }
        check(mask, s, e);
    });
    report.matchable = !failed;
    if (failed) {
        report.witness = detail::mask_members(worst);
    }
    return report;
}

inline std::size_t min_degree(const Graph& g) {
    if (g.size() == 0) {
        throw InputError("min_degree of the empty graph");
    }
    std::size_t best = g.size();
    for (Vertex v = 0; v < g.size(); ++v) {
        best = std::min(best, g.degree(v));
    }
    return best;
}

// e(X,Y) >= d|X||Y| - rho n^2 for this particular pair.
inline bool check_bipartite_density(const Graph& g, const VertexSet& x, const VertexSet& y, const Rational& rho,
                                    const Rational& d) {
    Rational lhs(edges_between(g, x, y));
    Rational rhs = d * Rational(x.count() * y.count()) - rho * Rational(g.size() * g.size());
    return lhs >= rhs;
}

/*
 * Paired variant over all (X, Y). For fixed X the worst Y collects exactly the
 * vertices y with d|X| - |N(y) ∩ X| > 0, so the 4^n pair space reduces to a
 * 2^n scan over X. Limited to n <= 16.
 */
inline PairedDensityReport bipartite_density_exact(const Graph& g, const Rational& d) {
    detail::require_scan_size(g, max_paired_scan, "bipartite_density_exact");
    const std::size_t n = g.size();
    auto rows = detail::small_rows(g);
    const BigInt p = numerator(d);
    const BigInt q = denominator(d);
    if (p > 1'000'000'000 || q > 1'000'000'000) {
        throw InputError("bipartite_density_exact: density denominator too large");
    }
    const std::int64_t dp = p.convert_to<std::int64_t>();
    const std::int64_t dq = q.convert_to<std::int64_t>();

    std::int64_t best = 0; // scaled by dq
    std::uint64_t best_x = 0, best_y = 0;
    std::uint64_t total = std::uint64_t(1) << n;
    for (std::uint64_t x = 0; x < total; ++x) {
        std::int64_t sx = std::popcount(x);
        std::int64_t deficit = 0;
        std::uint64_t y = 0;
        for (Vertex v = 0; v < n; ++v) {
            std::int64_t contribution = dp * sx - dq * std::popcount(rows[v] & static_cast<std::uint32_t>(x));
            if (contribution > 0) {
                deficit += contribution;
                y |= std::uint64_t(1) << v;
            }
        }
        if (deficit > best || (deficit == best && deficit > 0 && detail::mask_lex_less(x, best_x))) {
            best = deficit;
            best_x = x;
            best_y = y;
        }
    }
    PairedDensityReport report;
    report.d = d;
    report.rho_star = n == 0 ? Rational(0) : Rational(best, dq * std::int64_t(n * n));
    report.x = detail::mask_members(best_x);
    report.y = detail::mask_members(best_y);
    return report;
}

}

#endif /* POWERHAM_PROPERTIES_HPP */
