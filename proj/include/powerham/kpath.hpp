#ifndef POWERHAM_KPATH_HPP
#define POWERHAM_KPATH_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "powerham/graph.hpp"

namespace powerham {

// k-th power of a path: every k+1 consecutive vertices are pairwise adjacent.
struct KPath {
    std::vector<Vertex> vertices;
    std::size_t k = 1;

    std::size_t size() const { return vertices.size(); }

    // ordered k-tuple of the first k vertices
    OrderedClique first_end() const {
        return OrderedClique(vertices.begin(), vertices.begin() + std::min(k, vertices.size()));
    }
    // ordered k-tuple of the last k vertices
    OrderedClique last_end() const {
        return OrderedClique(vertices.end() - std::min(k, vertices.size()), vertices.end());
    }

    KPath reversed() const {
        KPath r{vertices, k};
        std::reverse(r.vertices.begin(), r.vertices.end());
        return r;
    }

    friend bool operator==(const KPath&, const KPath&) = default;
};

// Describes the first violated k-path condition, or nullopt for a valid path.
inline std::optional<std::string> kpath_violation(const Graph& g, const std::vector<Vertex>& seq, std::size_t k) {
    if (seq.size() < k) {
        return "shorter than k";
    }
    std::vector<char> seen(g.size(), 0);
    for (auto v : seq) {
        if (v >= g.size()) {
            return "vertex " + std::to_string(v) + " out of range";
        }
        if (seen[v]) {
            return "vertex " + std::to_string(v) + " repeated";
        }
        seen[v] = 1;
    }
    for (std::size_t i = 0; i < seq.size(); ++i) {
        for (std::size_t j = i + 1; j < seq.size() && j <= i + k; ++j) {
            if (!g.adjacent(seq[i], seq[j])) {
                return "positions " + std::to_string(i) + "," + std::to_string(j) + " (vertices " +
                       std::to_string(seq[i]) + "," + std::to_string(seq[j]) + ") not adjacent";
            }
        }
    }
    return std::nullopt;
}

inline bool is_kpath(const Graph& g, const KPath& p) {
    return !kpath_violation(g, p.vertices, p.k).has_value();
}

}

#endif /* POWERHAM_KPATH_HPP */
