#pragma once

#include <map>
#include <numeric>
#include <vector>

#include "csfcat/errors.hpp"
#include "csfcat/tree.hpp"

namespace csfcat {

/// Multiset of twig lengths, as length -> multiplicity.
struct TwigMultiset {
    std::map<int, int> counts;

    int multiplicity(int length) const {
        auto it = counts.find(length);
        return it == counts.end() ? 0 : it->second;
    }

    // Number of vertices covered by twigs.
    int total_vertices() const {
        int s = 0;
        for (const auto& [len, mult] : counts) s += len * mult;
        return s;
    }

    bool operator==(const TwigMultiset&) const = default;
};

/**
 * The trunk: vertex set of the smallest subtree containing every vertex
 * of degree at least three. Computed by stripping leaves that are not
 * degree->=3 vertices until only required attachments remain. Throws
 * NoTrunk for paths, which have no such vertex.
 */
inline std::vector<int> trunk(const Tree& t) {
    int n = t.order();
    std::vector<bool> required(n, false);
    bool any = false;
    for (int v = 0; v < n; ++v) {
        if (t.degree(v) >= 3) {
            required[v] = true;
            any = true;
        }
    }
    if (!any) throw NoTrunk("tree is a path; no vertex of degree 3 or more");

    std::vector<int> deg(n);
    std::vector<bool> alive(n, true);
    std::vector<int> strip;
    for (int v = 0; v < n; ++v) {
        deg[v] = t.degree(v);
        if (deg[v] <= 1 && !required[v]) strip.push_back(v);
    }
    while (!strip.empty()) {
        int v = strip.back();
        strip.pop_back();
        alive[v] = false;
        for (int w : t.neighbors(v)) {
            if (alive[w] && --deg[w] == 1 && !required[w]) strip.push_back(w);
        }
    }
    std::vector<int> result;
    for (int v = 0; v < n; ++v) {
        if (alive[v]) result.push_back(v);
    }
    return result;
}

/// One pendant path from a leaf to the trunk.
struct Twig {
    int leaf = -1;          // pendant endpoint
    int attach = -1;        // trunk vertex the twig ends at
    int first_off_trunk = -1; // twig vertex adjacent to the trunk
    int length = 0;         // edge count, equals vertices off the trunk
};

inline std::vector<Twig> twig_list(const Tree& t) {
    std::vector<int> trunk_vertices = trunk(t);
    std::vector<bool> in_trunk(t.order(), false);
    for (int v : trunk_vertices) in_trunk[v] = true;

    std::vector<Twig> twigs;
    for (int leaf = 0; leaf < t.order(); ++leaf) {
        if (t.degree(leaf) != 1) continue;
        Twig tw;
        tw.leaf = leaf;
        int prev = -1, cur = leaf;
        while (!in_trunk[cur]) {
            int next = -1;
            for (int w : t.neighbors(cur)) {
                if (w != prev) next = w;
            }
            prev = cur;
            cur = next;
            ++tw.length;
        }
        tw.attach = cur;
        tw.first_off_trunk = prev;
        twigs.push_back(tw);
    }
    return twigs;
}

inline TwigMultiset twigs(const Tree& t) {
    TwigMultiset m;
    for (const Twig& tw : twig_list(t)) ++m.counts[tw.length];
    return m;
}

} // namespace csfcat
