#pragma once

#include <random>
#include <set>
#include <string>
#include <vector>

#include "csfcat/canonical.hpp"
#include "csfcat/errors.hpp"
#include "csfcat/tree.hpp"

namespace csfcat {

namespace detail {

// Tree from a rooted level sequence (root at level 1): the parent of
// vertex i is the nearest earlier vertex one level up.
inline Tree tree_from_levels(const std::vector<int>& levels) {
    int n = static_cast<int>(levels.size());
    std::vector<std::pair<int, int>> edges;
    edges.reserve(n - 1);
    for (int i = 1; i < n; ++i) {
        for (int j = i - 1; j >= 0; --j) {
            if (levels[j] == levels[i] - 1) {
                edges.emplace_back(j, i);
                break;
            }
        }
    }
    return Tree(n, std::move(edges));
}

// Successor rule for canonical rooted level sequences in decreasing
// lexicographic order, from the path (1,2,...,n) down to the star
// (1,2,2,...,2). Returns false when the current sequence is the last.
inline bool next_level_sequence(std::vector<int>& levels) {
    int n = static_cast<int>(levels.size());
    int p = -1;
    for (int i = n - 1; i >= 0; --i) {
        if (levels[i] > 2) {
            p = i;
            break;
        }
    }
    if (p < 0) return false;
    int q = -1;
    for (int i = p - 1; i >= 0; --i) {
        if (levels[i] == levels[p] - 1) {
            q = i;
            break;
        }
    }
    for (int i = p; i < n; ++i) levels[i] = levels[i - (p - q)];
    return true;
}

} // namespace detail

/**
 * All trees of the given order, exactly one per isomorphism class.
 * Canonical rooted trees are generated by the level-sequence successor
 * rule and deduplicated by the free canonical code, so the output order
 * is deterministic.
 */
inline std::vector<Tree> enumerate_trees(int order) {
    if (order < 1) throw BoundExceeded("tree order must be at least 1");
    if (order > 20) {
        throw BoundExceeded("tree enumeration capped at order 20, got " +
                            std::to_string(order));
    }
    std::vector<Tree> result;
    if (order == 1) {
        result.emplace_back(1, std::vector<std::pair<int, int>>{});
        return result;
    }
    std::vector<int> levels(order);
    for (int i = 0; i < order; ++i) levels[i] = i + 1;
    std::set<std::string> seen;
    do {
        Tree t = detail::tree_from_levels(levels);
        if (seen.insert(canonical_code(t).code).second) result.push_back(t);
    } while (detail::next_level_sequence(levels));
    return result;
}

// Labeled tree decoded from a Pruefer sequence of length n-2.
inline Tree tree_from_prufer(const std::vector<int>& seq, int n) {
    if (n == 1) return Tree(1, {});
    if (n == 2) return Tree(2, {{0, 1}});
    std::vector<int> deg(n, 1);
    for (int s : seq) ++deg[s];
    std::vector<std::pair<int, int>> edges;
    edges.reserve(n - 1);
    int ptr = 0;
    while (deg[ptr] != 1) ++ptr;
    int leaf = ptr;
    for (int s : seq) {
        edges.emplace_back(leaf, s);
        if (--deg[s] == 1 && s < ptr) {
            leaf = s;
        } else {
            ++ptr;
            while (deg[ptr] != 1) ++ptr;
            leaf = ptr;
        }
    }
    edges.emplace_back(leaf, n - 1);
    return Tree(n, std::move(edges));
}

// Uniformly random labeled tree.
inline Tree random_tree(int order, std::mt19937& rng) {
    if (order <= 2) return tree_from_prufer({}, order);
    std::uniform_int_distribution<int> pick(0, order - 1);
    std::vector<int> seq(order - 2);
    for (int& s : seq) s = pick(rng);
    return tree_from_prufer(seq, order);
}

} // namespace csfcat
