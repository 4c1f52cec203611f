#ifndef POWERHAM_RANDOM_HPP
#define POWERHAM_RANDOM_HPP

#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#include "powerham/numeric.hpp"

namespace powerham {

/*
 * Counter-based SplitMix64 stream.
 *
 * The i-th output (i = 0, 1, ...) of the stream with seed s is
 *
 *     z  = s + (i + 1) * 0x9E3779B97F4A7C15          (mod 2^64)
 *     z  = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
 *     z  = (z ^ (z >> 27)) * 0x94D049BB133111EB
 *     out = z ^ (z >> 31)
 *
 * which is the reference SplitMix64 generator started from state s.
 * Test vector: seed 0 yields 0xE220A8397B1DCDAF, 0x6E789E6AA1B965F4,
 * 0x06C45D188009454F. Any port must reproduce these.
 *
 * Bernoulli(p) for an exact rational p = a/b consumes one output x and
 * succeeds iff x * b < a * 2^64.
 */
class SplitMix64 {
public:
    using result_type = std::uint64_t;

    static constexpr std::uint64_t golden = 0x9E3779B97F4A7C15ull;

    explicit SplitMix64(std::uint64_t seed = 0) : seed_(seed) {}

    static constexpr std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    result_type operator()() {
        ++counter_;
        return mix(seed_ + counter_ * golden);
    }

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    std::uint64_t seed() const { return seed_; }
    std::uint64_t counter() const { return counter_; }

    // uniform integer in [0, bound), bound > 0; rejection sampling so the
    // result is exactly uniform
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t limit = max() - max() % bound;
        std::uint64_t x;
        do {
            x = (*this)();
        } while (x >= limit);
        return x % bound;
    }

    // uniform double in [0, 1)
    double unit() {
        return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
    }

    bool bernoulli(const Rational& p) {
        std::uint64_t x = (*this)();
        const BigInt& a = numerator(p);
        const BigInt& b = denominator(p);
        if (a <= 0) {
            return false;
        }
        if (a >= b) {
            return true;
        }
        if (b <= BigInt(std::numeric_limits<std::uint64_t>::max())) {
            __extension__ using u128 = unsigned __int128;
            u128 lhs = static_cast<u128>(x) * b.convert_to<std::uint64_t>();
            u128 rhs = static_cast<u128>(a.convert_to<std::uint64_t>()) << 64;
            return lhs < rhs;
        }
        return BigInt(x) * b < (a << 64);
    }

    bool bernoulli(double p) {
        return unit() < p;
    }

    // uniform big integer in [0, bound), bound > 0
    BigInt below(const BigInt& bound) {
        if (bound <= BigInt(std::numeric_limits<std::uint64_t>::max())) {
            return BigInt(below(bound.convert_to<std::uint64_t>()));
        }
        std::size_t bits = boost::multiprecision::msb(bound) + 1;
        std::size_t words = (bits + 63) / 64;
        while (true) {
            BigInt x = 0;
            for (std::size_t i = 0; i < words; ++i) {
                x = (x << 64) | BigInt((*this)());
            }
            x &= (BigInt(1) << bits) - 1;
            if (x < bound) {
                return x;
            }
        }
    }

    template <class T>
    void shuffle(std::vector<T>& items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            std::size_t j = below(i);
            std::swap(items[i - 1], items[j]);
        }
    }

private:
    std::uint64_t seed_;
    std::uint64_t counter_ = 0;
};

// Independent child seed for a named sub-stream; used to split one user seed
// into per-stage streams.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    return SplitMix64::mix(seed ^ SplitMix64::mix(stream + SplitMix64::golden));
}

}

#endif /* POWERHAM_RANDOM_HPP */
