#pragma once

#include <cstdint>
#include <vector>

#include "csfcat/csf.hpp"
#include "csfcat/errors.hpp"
#include "csfcat/partition.hpp"
#include "csfcat/sparse_polynomial.hpp"
#include "csfcat/tree.hpp"

namespace csfcat {

// U-polynomial of a tree: coefficients count the edge subsets whose
// spanning subgraph has the key as its component-size partition. On
// trees the auxiliary variable of the general invariant carries exponent
// zero everywhere, so it is not represented.
using UPolynomial = SparsePolynomial;

/// Direct enumeration over all 2^(order-1) edge subsets.
inline UPolynomial upoly_naive(const Tree& t, int bound = kDefaultSubsetBound) {
    if (t.order() > bound) {
        throw BoundExceeded("upoly_naive limited to order " +
                            std::to_string(bound) + ", got " +
                            std::to_string(t.order()));
    }
    int m = t.order() - 1;
    UPolynomial u;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
        u.add_term(detail::partition_of_mask(t, mask), 1);
    }
    return u;
}

namespace detail {

// State of the rooted scan at one vertex: slot k-1 carries the
// distribution of completed components over all edge choices in the
// processed subtree that leave k vertices in the open component
// containing the vertex.
using OpenComponentTable = std::vector<SparsePolynomial>;

inline OpenComponentTable upoly_scan(const Tree& t, int v, int parent) {
    OpenComponentTable table(1);
    table[0].add_term(Partition{}, 1);
    for (int w : t.neighbors(v)) {
        if (w == parent) continue;
        OpenComponentTable child = upoly_scan(t, w, v);

        // Either cut the edge to the child, completing the child's open
        // component, or keep it, merging the open components.
        SparsePolynomial child_closed;
        for (std::size_t k2 = 0; k2 < child.size(); ++k2) {
            for (const auto& [key, c] : child[k2]) {
                child_closed.add_term(key.with_part(static_cast<int>(k2) + 1), c);
            }
        }
        OpenComponentTable next(table.size() + child.size());
        for (std::size_t k1 = 0; k1 < table.size(); ++k1) {
            if (table[k1].empty()) continue;
            next[k1] = poly_add(next[k1],
                                poly_product(table[k1], child_closed));
            for (std::size_t k2 = 0; k2 < child.size(); ++k2) {
                if (child[k2].empty()) continue;
                next[k1 + k2 + 1] = poly_add(
                    next[k1 + k2 + 1], poly_product(table[k1], child[k2]));
            }
        }
        table = std::move(next);
    }
    return table;
}

} // namespace detail

/**
 * U-polynomial by a bottom-up scan from the root: linear passes over the
 * tree instead of subset enumeration. Any root yields the same result;
 * vertex 0 is the fixed default.
 */
inline UPolynomial upoly_tree_dp(const Tree& t, int root = 0) {
    detail::OpenComponentTable table = detail::upoly_scan(t, root, -1);
    UPolynomial u;
    for (std::size_t k = 0; k < table.size(); ++k) {
        for (const auto& [key, c] : table[k]) {
            u.add_term(key.with_part(static_cast<int>(k) + 1), c);
        }
    }
    return u;
}

/// Drop every term whose partition contains a part of size q or less.
inline SparsePolynomial restrict_min_part(const SparsePolynomial& u, int q) {
    SparsePolynomial r;
    for (const auto& [key, c] : u) {
        if (key.empty() || key.min_part() > q) r.add_term(key, c);
    }
    return r;
}

} // namespace csfcat
