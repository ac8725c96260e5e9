#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "csfcat/errors.hpp"
#include "csfcat/partition.hpp"
#include "csfcat/sparse_polynomial.hpp"
#include "csfcat/tree.hpp"

namespace csfcat {

inline constexpr int kDefaultSubsetBound = 20;
inline constexpr int kDefaultColoringBound = 8;

namespace detail {

// Component-size partition of the spanning subgraph selected by an edge
// bitmask, via union-find over the tree's edge list.
inline Partition partition_of_mask(const Tree& t, std::uint32_t mask) {
    int n = t.order();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    const auto& edges = t.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (mask & (std::uint32_t{1} << i)) {
            parent[find(edges[i].first)] = find(edges[i].second);
        }
    }
    std::vector<int> size(n, 0);
    for (int v = 0; v < n; ++v) ++size[find(v)];
    std::vector<int> parts;
    for (int v = 0; v < n; ++v) {
        if (size[v] > 0) parts.push_back(size[v]);
    }
    return Partition(std::move(parts));
}

} // namespace detail

/**
 * Partition of the vertex count by the component orders of the spanning
 * subgraph with the given edge subset.
 */
inline Partition components_partition(const Tree& t,
                                      const std::vector<std::pair<int, int>>& subset) {
    std::set<std::pair<int, int>> have(t.edges().begin(), t.edges().end());
    std::uint32_t mask = 0;
    for (auto [u, v] : subset) {
        if (u > v) std::swap(u, v);
        auto it = std::lower_bound(t.edges().begin(), t.edges().end(),
                                   std::make_pair(u, v));
        if (it == t.edges().end() || *it != std::make_pair(u, v)) {
            throw EdgeNotInTree("edge " + std::to_string(u) + "-" +
                                std::to_string(v) + " is not in the tree");
        }
        mask |= std::uint32_t{1} << (it - t.edges().begin());
    }
    return detail::partition_of_mask(t, mask);
}

/**
 * Chromatic symmetric function in the power-sum basis: the signed sum,
 * over all edge subsets, of the component-size partition key. The result
 * is homogeneous of degree order.
 */
inline SparsePolynomial csf_power_sum(const Tree& t,
                                      int bound = kDefaultSubsetBound) {
    if (t.order() > bound) {
        throw BoundExceeded("csf_power_sum limited to order " +
                            std::to_string(bound) + ", got " +
                            std::to_string(t.order()));
    }
    int m = t.order() - 1;
    SparsePolynomial p;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
        int sign = __builtin_popcount(mask) % 2 == 0 ? 1 : -1;
        p.add_term(detail::partition_of_mask(t, mask), sign);
    }
    return p;
}

/**
 * Polynomial in finitely many color variables, keyed by the exponent
 * vector over colors 1..m.
 */
struct TruncatedMonomialPolynomial {
    std::map<std::vector<int>, std::int64_t> terms;

    void add_term(const std::vector<int>& key, std::int64_t c) {
        if (c == 0) return;
        auto [it, inserted] = terms.emplace(key, c);
        if (!inserted) {
            it->second = detail::checked_add(it->second, c);
            if (it->second == 0) terms.erase(it);
        }
    }

    bool operator==(const TruncatedMonomialPolynomial&) const = default;

    std::string to_string() const {
        if (terms.empty()) return "0";
        std::string s;
        for (const auto& [key, c] : terms) {
            if (!s.empty()) s += " + ";
            s += std::to_string(c) + "*x^(";
            for (std::size_t i = 0; i < key.size(); ++i) {
                if (i) s += ',';
                s += std::to_string(key[i]);
            }
            s += ')';
        }
        return s;
    }
};

/**
 * Chromatic symmetric function truncated to m colors, computed directly
 * from the definition: one term per proper coloring, keyed by the count
 * of vertices in each color class. Exponential in the order, so capped.
 */
inline TruncatedMonomialPolynomial csf_by_colorings(
    const Tree& t, int m, int bound = kDefaultColoringBound) {
    if (m < 1) throw BoundExceeded("need at least one color");
    if (t.order() > bound) {
        throw BoundExceeded("csf_by_colorings limited to order " +
                            std::to_string(bound) + ", got " +
                            std::to_string(t.order()));
    }
    int n = t.order();
    std::vector<int> color(n, 0);
    TruncatedMonomialPolynomial result;
    while (true) {
        bool proper = true;
        for (const auto& [u, v] : t.edges()) {
            if (color[u] == color[v]) {
                proper = false;
                break;
            }
        }
        if (proper) {
            std::vector<int> content(m, 0);
            for (int v = 0; v < n; ++v) ++content[color[v]];
            result.add_term(content, 1);
        }
        int i = 0;
        while (i < n && color[i] == m - 1) color[i++] = 0;
        if (i == n) break;
        ++color[i];
    }
    return result;
}

/**
 * Expansion of a partition-indexed power-sum polynomial into monomials
 * over the first m variables, by repeated convolution of the single-part
 * sums. Intended for small m only.
 */
inline TruncatedMonomialPolynomial truncate_power_sum(const SparsePolynomial& p,
                                                      int m) {
    TruncatedMonomialPolynomial result;
    for (const auto& [key, c] : p) {
        std::map<std::vector<int>, std::int64_t> acc;
        acc[std::vector<int>(m, 0)] = c;
        for (int part : key.parts()) {
            std::map<std::vector<int>, std::int64_t> next;
            for (const auto& [e, ce] : acc) {
                for (int i = 0; i < m; ++i) {
                    std::vector<int> e2 = e;
                    e2[i] += part;
                    auto [it, inserted] = next.emplace(e2, ce);
                    if (!inserted) it->second = detail::checked_add(it->second, ce);
                }
            }
            acc = std::move(next);
        }
        for (const auto& [e, ce] : acc) result.add_term(e, ce);
    }
    return result;
}

/**
 * Change of variables turning the U-polynomial of a tree of the given
 * order into its chromatic symmetric function: each key picks up the
 * parity of its length plus the order.
 */
inline SparsePolynomial csf_from_upoly(const SparsePolynomial& u, int order) {
    SparsePolynomial result;
    for (const auto& [key, c] : u) {
        if (key.weight() != order) {
            throw WeightMismatch("key " + key.to_string() + " has weight " +
                                 std::to_string(key.weight()) +
                                 ", expected " + std::to_string(order));
        }
        int sign = (order + key.length()) % 2 == 0 ? 1 : -1;
        result.add_term(key, detail::checked_mul(c, sign));
    }
    return result;
}

} // namespace csfcat
