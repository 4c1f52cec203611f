#ifndef POWERHAM_CONSTANTS_HPP
#define POWERHAM_CONSTANTS_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "powerham/numeric.hpp"
#include "powerham/walks.hpp"

namespace powerham {

// Exact value while it stays small enough to store, log2 magnitude always.
struct Magnitude {
    std::optional<Rational> exact;
    double log2 = 0.0;

    static Magnitude of(const Rational& r) { return Magnitude{r, powerham::log2(r)}; }
    static Magnitude of_log(double lg) { return Magnitude{std::nullopt, lg}; }

    std::string str() const {
        if (exact) {
            return to_string(*exact);
        }
        return "2^" + std::to_string(log2);
    }
};

inline constexpr std::size_t max_exact_bits = 1u << 16;

inline std::size_t bit_size(const Rational& r) {
    auto bits = [](const BigInt& v) -> std::size_t { return v.is_zero() ? 0 : msb(abs(v)) + 1; };
    return bits(numerator(r)) + bits(denominator(r));
}

inline Magnitude magnitude_product(const Magnitude& a, const Magnitude& b) {
    if (a.exact && b.exact) {
        Rational p = *a.exact * *b.exact;
        if (bit_size(p) <= max_exact_bits) {
            return Magnitude::of(p);
        }
    }
    return Magnitude::of_log(a.log2 + b.log2);
}

inline Magnitude magnitude_min(const Magnitude& a, const Magnitude& b) {
    if (a.exact && b.exact) {
        return *a.exact <= *b.exact ? a : b;
    }
    return a.log2 <= b.log2 ? a : b;
}

inline Rational d_power(const Rational& d, std::size_t t) {
    return pow(d, static_cast<unsigned>(binomial(t, 2)));
}

struct PathLemmaConstants {
    Rational rho;  // d^{C(k+1,2)} / (2k(k+1))
    Rational zeta; // d^{C(k+1,2)} / (3(k+1))
};

inline PathLemmaConstants path_lemma_constants(const Rational& d, std::size_t k) {
    Rational top = d_power(d, k + 1);
    return {top / (2 * k * (k + 1)), top / (3 * (k + 1))};
}

struct ConnectingConstants {
    DeltaSchedule walk;
    std::vector<Magnitude> xi; // xi_0 .. xi_{L+2}
    Magnitude xi_final;        // xi_{L+2} / 2
    Magnitude rho;             // d^{C(k,2)} xi^2 / (8k^2)
    std::size_t M = 0;         // (L+2) k
};

inline ConnectingConstants connecting_constants(const Rational& d, const Rational& mu, const Rational& zeta,
                                                std::size_t k) {
    if (k == 0) {
        throw InputError("constants: k must be >= 1");
    }
    if (d <= 0 || d > 1 || zeta <= 0) {
        throw InputError("constants: d must lie in (0, 1] and zeta must be positive");
    }
    ConnectingConstants c;
    c.walk = delta_schedule(mu);
    const std::size_t L = c.walk.L;
    c.M = (L + 2) * k;
    Rational step = d_power(d, k) / (2 * Rational(factorial(static_cast<unsigned>(k))));
    c.xi.push_back(Magnitude::of(zeta * zeta * c.walk.c / (L + 1)));
    for (std::size_t i = 0; i < L + 2; ++i) {
        const Magnitude& prev = c.xi.back();
        Magnitude next;
        if (prev.exact) {
            Rational r = step * pow(*prev.exact / 2, static_cast<unsigned>(k + 1));
            if (bit_size(r) <= max_exact_bits) {
                next = Magnitude::of(r);
            }
            else {
                next = Magnitude::of_log(log2(r));
            }
        }
        else {
            next = Magnitude::of_log(log2(step) + static_cast<double>(k + 1) * (prev.log2 - 1.0));
        }
        c.xi.push_back(next);
    }
    c.xi_final = magnitude_product(c.xi.back(), Magnitude::of(Rational(1, 2)));
    Magnitude sq = magnitude_product(c.xi_final, c.xi_final);
    c.rho = magnitude_product(sq, Magnitude::of(d_power(d, k) / (8 * k * k)));
    return c;
}

struct AbsorbingConstants {
    Rational zeta;  // d^{C(2k+1,2)} mu^{2k+1} / 2^{2k+3}
    ConnectingConstants inner; // connecting constants for (d, mu/2, zeta/2, k)
    Rational alpha; // zeta^2 / (24 (10k^2 + M))
    Magnitude rho;  // min{rho'/4, d^{C(2k+1,2)} mu^2 / (8(2k+1)^2)}
    Rational sample_coefficient; // zeta / (6 (10k^2 + M)); divide by n^{2k-1} for p
};

inline AbsorbingConstants absorbing_constants(const Rational& d, const Rational& mu, std::size_t k) {
    AbsorbingConstants a;
    Rational top = d_power(d, 2 * k + 1);
    a.zeta = top * pow(mu, static_cast<unsigned>(2 * k + 1)) / Rational(BigInt(1) << (2 * k + 3));
    a.inner = connecting_constants(d, mu / 2, a.zeta / 2, k);
    std::size_t denom = 10 * k * k + a.inner.M;
    a.alpha = a.zeta * a.zeta / (24 * denom);
    Magnitude first = magnitude_product(a.inner.rho, Magnitude::of(Rational(1, 4)));
    Magnitude second = Magnitude::of(top * mu * mu / (8 * (2 * k + 1) * (2 * k + 1)));
    a.rho = magnitude_min(first, second);
    a.sample_coefficient = a.zeta / (6 * denom);
    return a;
}

struct MainConstants {
    Rational d;
    Rational mu;
    std::size_t k = 1;
    PathLemmaConstants path;
    AbsorbingConstants absorbing;
    Rational zeta_connect; // min{zeta_A/2, alpha_A zeta_P/2}
    ConnectingConstants connect;
    Magnitude rho;         // min{rho_A, alpha_A^2 rho_P/4, rho_C/4}
    Rational reservoir_p;  // alpha_A / 4
    double log2_n0 = 0.0;  // n beyond which the size condition on n holds
};

inline MainConstants main_constants(const Rational& d, const Rational& mu, std::size_t k) {
    MainConstants m;
    m.d = d;
    m.mu = mu;
    m.k = k;
    m.path = path_lemma_constants(d, k);
    m.absorbing = absorbing_constants(d, mu, k);
    const Rational& alpha = m.absorbing.alpha;
    m.zeta_connect = std::min<Rational>(m.absorbing.zeta / 2, alpha * m.path.zeta / 2);
    m.connect = connecting_constants(d, mu / 2, m.zeta_connect, k);
    Magnitude rho = magnitude_min(m.absorbing.rho, Magnitude::of(alpha * alpha * m.path.rho / 4));
    m.rho = magnitude_min(rho, magnitude_product(m.connect.rho, Magnitude::of(Rational(1, 4))));
    m.reservoir_p = alpha / 4;
    // 2 M_C^2 / (alpha_A zeta_P) < xi_C / 4 * (alpha_A / 8)^{M_C} * n
    double mc = static_cast<double>(m.connect.M);
    double lhs = log2(Rational(2 * m.connect.M * m.connect.M) / (alpha * m.path.zeta));
    double rhs_coeff = m.connect.xi_final.log2 - 2.0 + mc * log2(alpha / 8);
    m.log2_n0 = lhs - rhs_coeff;
    return m;
}

// True when n satisfies the size condition of the main constants.
inline bool n_large_enough(const MainConstants& m, std::size_t n) {
    return n > 0 && std::log2(static_cast<double>(n)) > m.log2_n0;
}

}

#endif /* POWERHAM_CONSTANTS_HPP */
