#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "csfcat/tree.hpp"

namespace csfcat {

/**
 * Canonical form of a tree as a balanced-parenthesis string: the
 * rooted encoding at the tree's center, with children ordered by their
 * encodings. Equal codes characterize isomorphic trees; the length is
 * always 2*order.
 */
struct CanonicalCode {
    std::string code;

    bool operator==(const CanonicalCode&) const = default;
    bool operator<(const CanonicalCode& other) const { return code < other.code; }
};

// The one or two middle vertices of a longest path, by iterative leaf
// stripping.
inline std::vector<int> centers(const Tree& t) {
    int n = t.order();
    if (n == 1) return {0};
    std::vector<int> deg(n);
    std::vector<int> layer;
    for (int v = 0; v < n; ++v) {
        deg[v] = t.degree(v);
        if (deg[v] == 1) layer.push_back(v);
    }
    int remaining = n;
    while (remaining > 2) {
        remaining -= static_cast<int>(layer.size());
        std::vector<int> next;
        for (int v : layer) {
            deg[v] = 0;
            for (int w : t.neighbors(v)) {
                if (deg[w] > 0 && --deg[w] == 1) next.push_back(w);
            }
        }
        layer = std::move(next);
    }
    std::sort(layer.begin(), layer.end());
    return layer;
}

namespace detail {

inline std::string rooted_code(const Tree& t, int v, int parent) {
    std::vector<std::string> child_codes;
    for (int w : t.neighbors(v)) {
        if (w != parent) child_codes.push_back(rooted_code(t, w, v));
    }
    std::sort(child_codes.begin(), child_codes.end());
    std::string s = "(";
    for (const auto& c : child_codes) s += c;
    s += ')';
    return s;
}

} // namespace detail

inline CanonicalCode canonical_code(const Tree& t) {
    std::string best;
    for (int c : centers(t)) {
        std::string code = detail::rooted_code(t, c, -1);
        if (best.empty() || code < best) best = std::move(code);
    }
    return CanonicalCode{best};
}

inline bool are_isomorphic(const Tree& a, const Tree& b) {
    if (a.order() != b.order()) return false;
    return canonical_code(a) == canonical_code(b);
}

} // namespace csfcat
