#ifndef POWERHAM_NUMERIC_HPP
#define POWERHAM_NUMERIC_HPP

#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "powerham/error.hpp"

namespace powerham {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numerator(const Rational& r) {
    return boost::multiprecision::numerator(r);
}

inline BigInt denominator(const Rational& r) {
    return boost::multiprecision::denominator(r);
}

// Parses "p/q", an integer, or a plain decimal ("0.75", "-1.5e-2") into an
// exact rational.
inline Rational parse_rational(std::string_view text) {
    auto fail = [&]() -> Rational {
        throw InputError("not a rational number: '" + std::string(text) + "'");
    };
    if (text.empty()) {
        return fail();
    }
    auto parse_int = [&](std::string_view digits) -> BigInt {
        std::size_t i = 0;
        bool negative = false;
        if (i < digits.size() && (digits[i] == '+' || digits[i] == '-')) {
            negative = digits[i] == '-';
            ++i;
        }
        if (i == digits.size()) {
            fail();
        }
        BigInt value = 0;
        for (; i < digits.size(); ++i) {
            if (digits[i] < '0' || digits[i] > '9') {
                fail();
            }
            value = value * 10 + (digits[i] - '0');
        }
        return negative ? BigInt(-value) : value;
    };

    auto slash = text.find('/');
    if (slash != std::string_view::npos) {
        BigInt p = parse_int(text.substr(0, slash));
        BigInt q = parse_int(text.substr(slash + 1));
        if (q == 0) {
            throw InputError("zero denominator in '" + std::string(text) + "'");
        }
        return Rational(p, q);
    }

    // decimal with optional exponent
    std::string_view mantissa = text;
    long exponent = 0;
    auto e_pos = text.find_first_of("eE");
    if (e_pos != std::string_view::npos) {
        mantissa = text.substr(0, e_pos);
        BigInt e = parse_int(text.substr(e_pos + 1));
        if (abs(e) > 4096) {
            fail();
        }
        exponent = e.convert_to<long>();
    }
    bool negative = false;
    if (!mantissa.empty() && (mantissa[0] == '+' || mantissa[0] == '-')) {
        negative = mantissa[0] == '-';
        mantissa.remove_prefix(1);
    }
    auto dot = mantissa.find('.');
    std::string digits(mantissa.substr(0, dot));
    if (dot != std::string_view::npos) {
        auto frac = mantissa.substr(dot + 1);
        digits += frac;
        exponent -= static_cast<long>(frac.size());
    }
    if (digits.empty()) {
        return fail();
    }
    BigInt value = parse_int(digits);
    BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(std::labs(exponent)));
    Rational r = exponent >= 0 ? Rational(value * scale) : Rational(value, scale);
    return negative ? Rational(-r) : r;
}

// Always "p/q", including integers ("3/1") and zero ("0/1").
inline std::string to_string(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

inline BigInt floor(const Rational& r) {
    BigInt q = numerator(r) / denominator(r);
    if (numerator(r) < 0 && q * denominator(r) != numerator(r)) {
        q -= 1;
    }
    return q;
}

inline BigInt ceil(const Rational& r) {
    BigInt f = floor(r);
    return f == r ? f : BigInt(f + 1);
}

// ceil(r * n) as a machine integer; thresholds of the form "at least r*n".
inline std::size_t ceil_mul(const Rational& r, std::size_t n) {
    BigInt c = ceil(r * Rational(n));
    if (c < 0) {
        return 0;
    }
    return c.convert_to<std::size_t>();
}

inline std::int64_t floor_mul(const Rational& r, std::size_t n) {
    return floor(r * Rational(n)).convert_to<std::int64_t>();
}

inline Rational pow(const Rational& r, unsigned e) {
    return Rational(boost::multiprecision::pow(numerator(r), e),
                    boost::multiprecision::pow(denominator(r), e));
}

inline BigInt factorial(unsigned n) {
    BigInt f = 1;
    for (unsigned i = 2; i <= n; ++i) {
        f *= i;
    }
    return f;
}

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) {
        return 0;
    }
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

// log2 of a positive big integer, accurate to double precision even when the
// value itself is far outside double range.
inline double log2(const BigInt& v) {
    if (v <= 0) {
        return -INFINITY;
    }
    std::size_t bits = boost::multiprecision::msb(v) + 1;
    if (bits <= 60) {
        return std::log2(v.convert_to<double>());
    }
    BigInt top = v >> (bits - 60);
    return std::log2(top.convert_to<double>()) + static_cast<double>(bits - 60);
}

inline double log2(const Rational& r) {
    return log2(numerator(r)) - log2(denominator(r));
}

inline double to_double(const Rational& r) {
    return r.convert_to<double>();
}

}

#endif /* POWERHAM_NUMERIC_HPP */
