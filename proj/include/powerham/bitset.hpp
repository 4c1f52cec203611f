#ifndef POWERHAM_BITSET_HPP
#define POWERHAM_BITSET_HPP

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace powerham {

using Vertex = std::size_t;

// Fixed-universe bit row. Every binary operation requires equal universes.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t universe)
        : size_(universe), words_((universe + 63) / 64, 0) {}

    static Bitset full(std::size_t universe) {
        Bitset b(universe);
        for (auto& w : b.words_) {
            w = ~std::uint64_t(0);
        }
        b.trim();
        return b;
    }

    static Bitset of(std::size_t universe, std::initializer_list<Vertex> members) {
        Bitset b(universe);
        for (auto v : members) {
            b.set(v);
        }
        return b;
    }

    template <class Range>
    static Bitset from_range(std::size_t universe, const Range& members) {
        Bitset b(universe);
        for (auto v : members) {
            b.set(static_cast<Vertex>(v));
        }
        return b;
    }

    std::size_t size() const { return size_; }

    void set(Vertex v) { words_[v >> 6] |= std::uint64_t(1) << (v & 63); }
    void reset(Vertex v) { words_[v >> 6] &= ~(std::uint64_t(1) << (v & 63)); }
    void flip(Vertex v) { words_[v >> 6] ^= std::uint64_t(1) << (v & 63); }
    bool test(Vertex v) const { return (words_[v >> 6] >> (v & 63)) & 1; }

    void clear() {
        for (auto& w : words_) {
            w = 0;
        }
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) {
            c += std::popcount(w);
        }
        return c;
    }

    bool any() const {
        for (auto w : words_) {
            if (w) {
                return true;
            }
        }
        return false;
    }
    bool none() const { return !any(); }

    // first member >= from, or size() if there is none
    Vertex next(Vertex from) const {
        if (from >= size_) {
            return size_;
        }
        std::size_t i = from >> 6;
        std::uint64_t w = words_[i] & (~std::uint64_t(0) << (from & 63));
        while (true) {
            if (w) {
                return (i << 6) + std::countr_zero(w);
            }
            if (++i == words_.size()) {
                return size_;
            }
            w = words_[i];
        }
    }
    Vertex first() const { return next(0); }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w) {
                f((i << 6) + std::countr_zero(w));
                w &= w - 1;
            }
        }
    }

    std::vector<Vertex> to_vector() const {
        std::vector<Vertex> out;
        out.reserve(count());
        for_each([&](Vertex v) { out.push_back(v); });
        return out;
    }

    // drops every member <= v
    void keep_above(Vertex v) {
        std::size_t i = v >> 6;
        for (std::size_t j = 0; j < i; ++j) {
            words_[j] = 0;
        }
        if ((v & 63) == 63) {
            words_[i] = 0;
        }
        else {
            words_[i] &= ~std::uint64_t(0) << ((v & 63) + 1);
        }
    }

    Bitset& operator&=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            words_[i] &= o.words_[i];
        }
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            words_[i] |= o.words_[i];
        }
        return *this;
    }
    Bitset& operator^=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            words_[i] ^= o.words_[i];
        }
        return *this;
    }
    // set difference
    Bitset& operator-=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            words_[i] &= ~o.words_[i];
        }
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset operator-(Bitset a, const Bitset& b) { return a -= b; }

    Bitset complement() const {
        Bitset c(size_);
        for (std::size_t i = 0; i < words_.size(); ++i) {
            c.words_[i] = ~words_[i];
        }
        c.trim();
        return c;
    }

    // this = a & b without reallocating
    void assign_and(const Bitset& a, const Bitset& b) {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            words_[i] = a.words_[i] & b.words_[i];
        }
    }

    static std::size_t count_and(const Bitset& a, const Bitset& b) {
        std::size_t c = 0;
        for (std::size_t i = 0; i < a.words_.size(); ++i) {
            c += std::popcount(a.words_[i] & b.words_[i]);
        }
        return c;
    }

    bool is_subset_of(const Bitset& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            if (words_[i] & ~o.words_[i]) {
                return false;
            }
        }
        return true;
    }

    bool intersects(const Bitset& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            if (words_[i] & o.words_[i]) {
                return true;
            }
        }
        return false;
    }

    const std::vector<std::uint64_t>& words() const { return words_; }

    friend bool operator==(const Bitset&, const Bitset&) = default;

private:
    void trim() {
        if (size_ & 63) {
            words_.back() &= (std::uint64_t(1) << (size_ & 63)) - 1;
        }
    }

    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

// A subset of the vertex universe [0, n).
using VertexSet = Bitset;

}

#endif /* POWERHAM_BITSET_HPP */
