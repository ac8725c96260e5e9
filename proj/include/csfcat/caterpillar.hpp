#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "csfcat/composition.hpp"
#include "csfcat/errors.hpp"
#include "csfcat/lpolynomial.hpp"
#include "csfcat/tree.hpp"
#include "csfcat/trunk.hpp"
#include "csfcat/upolynomial.hpp"

namespace csfcat {

/**
 * Build plan of a proper q-caterpillar: a spine path of ell vertices
 * with spine_counts[i] >= 1 pendant paths of length exactly q glued to
 * the i-th spine vertex. The associated composition has parts
 * q*spine_counts[i] + 1, so the tree order equals its weight.
 */
struct CaterpillarSpec {
    int q = 0;
    std::vector<int> spine_counts;

    static CaterpillarSpec from_composition(const Composition& a, int q) {
        if (q < 2) throw Error("leg length q must be at least 2");
        CaterpillarSpec spec;
        spec.q = q;
        for (int part : a.parts()) {
            if (part <= 1 || part % q != 1) {
                throw BadComposition("part " + std::to_string(part) +
                                     " must exceed 1 and be congruent to 1 modulo " +
                                     std::to_string(q));
            }
            spec.spine_counts.push_back((part - 1) / q);
        }
        return spec;
    }

    Composition composition() const {
        std::vector<int> parts;
        parts.reserve(spine_counts.size());
        for (int p : spine_counts) parts.push_back(q * p + 1);
        return Composition(std::move(parts));
    }

    int order() const {
        int n = 0;
        for (int p : spine_counts) n += q * p + 1;
        return n;
    }
};

/**
 * The proper q-caterpillar of a composition with all parts > 1 and
 * congruent to 1 modulo q. Spine vertices get labels 0..ell-1; leg
 * vertices follow in spine order.
 */
inline Tree caterpillar_from_composition(const Composition& a, int q) {
    CaterpillarSpec spec = CaterpillarSpec::from_composition(a, q);
    int ell = static_cast<int>(spec.spine_counts.size());
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < ell; ++i) edges.emplace_back(i, i + 1);
    int next = ell;
    for (int i = 0; i < ell; ++i) {
        for (int leg = 0; leg < spec.spine_counts[i]; ++leg) {
            int prev = i;
            for (int step = 0; step < q; ++step) {
                edges.emplace_back(prev, next);
                prev = next++;
            }
        }
    }
    return Tree(spec.order(), std::move(edges));
}

/// Spine path plus the leg count at each spine vertex.
struct SpineDecomposition {
    std::vector<int> spine;
    std::vector<int> leg_counts;

    Composition composition(int q) const {
        std::vector<int> parts;
        parts.reserve(leg_counts.size());
        for (int p : leg_counts) parts.push_back(q * p + 1);
        return Composition(std::move(parts));
    }
};

/**
 * Attempt to decompose a tree as a proper q-caterpillar. Paths are
 * matched against the three feasible orders. Otherwise the trunk must
 * be a path, every twig must have length q or q+1, and each twig of
 * length q+1 must extend the spine one vertex past a trunk endpoint;
 * all spine vertices must keep at least one leg.
 */
inline std::optional<SpineDecomposition> spine_decomposition(const Tree& t, int q) {
    if (q < 1) throw Error("leg length q must be at least 1");

    if (is_path(t)) {
        int n = t.order();
        std::vector<int> endpoints;
        for (int v = 0; v < n; ++v) {
            if (t.degree(v) <= 1) endpoints.push_back(v);
        }
        if (n == q + 1) {
            return SpineDecomposition{{endpoints.front()}, {1}};
        }
        if (n == 2 * q + 1) {
            std::vector<int> path = tree_path(t, endpoints[0], endpoints[1]);
            return SpineDecomposition{{path[q]}, {2}};
        }
        if (n == 2 * q + 2) {
            std::vector<int> path = tree_path(t, endpoints[0], endpoints[1]);
            std::vector<int> spine{path[q], path[q + 1]};
            if (spine[0] > spine[1]) std::swap(spine[0], spine[1]);
            return SpineDecomposition{std::move(spine), {1, 1}};
        }
        return std::nullopt;
    }

    std::vector<int> trunk_vertices = trunk(t);
    std::vector<bool> in_trunk(t.order(), false);
    for (int v : trunk_vertices) in_trunk[v] = true;

    // The trunk must itself be a path.
    std::vector<int> trunk_path;
    if (trunk_vertices.size() == 1) {
        trunk_path = trunk_vertices;
    } else {
        std::vector<int> ends;
        for (int v : trunk_vertices) {
            int induced = 0;
            for (int w : t.neighbors(v)) {
                if (in_trunk[w]) ++induced;
            }
            if (induced > 2) return std::nullopt;
            if (induced == 1) ends.push_back(v);
        }
        if (ends.size() != 2) return std::nullopt;
        trunk_path = tree_path(t, std::min(ends[0], ends[1]),
                               std::max(ends[0], ends[1]));
        if (trunk_path.size() != trunk_vertices.size()) return std::nullopt;
    }

    std::map<int, std::vector<Twig>> attached;
    for (const Twig& tw : twig_list(t)) {
        if (tw.length != q && tw.length != q + 1) return std::nullopt;
        attached[tw.attach].push_back(tw);
    }

    // Long twigs may only extend the spine past a trunk endpoint; a
    // one-vertex trunk can extend on both sides.
    int front_vertex = trunk_path.front();
    int back_vertex = trunk_path.back();
    std::optional<Twig> front_ext, back_ext;
    for (auto& [vertex, twigs_here] : attached) {
        std::vector<Twig> long_twigs;
        for (const Twig& tw : twigs_here) {
            if (tw.length == q + 1) long_twigs.push_back(tw);
        }
        if (long_twigs.empty()) continue;
        std::sort(long_twigs.begin(), long_twigs.end(),
                  [](const Twig& a, const Twig& b) {
                      return a.first_off_trunk < b.first_off_trunk;
                  });
        if (trunk_path.size() == 1) {
            if (long_twigs.size() > 2) return std::nullopt;
            front_ext = long_twigs[0];
            if (long_twigs.size() == 2) back_ext = long_twigs[1];
        } else if (vertex == front_vertex) {
            if (long_twigs.size() > 1) return std::nullopt;
            front_ext = long_twigs[0];
        } else if (vertex == back_vertex) {
            if (long_twigs.size() > 1) return std::nullopt;
            back_ext = long_twigs[0];
        } else {
            return std::nullopt;
        }
    }

    SpineDecomposition d;
    if (front_ext) {
        d.spine.push_back(front_ext->first_off_trunk);
        d.leg_counts.push_back(1);
    }
    for (int v : trunk_path) {
        int legs = 0;
        auto it = attached.find(v);
        if (it != attached.end()) {
            for (const Twig& tw : it->second) {
                if (tw.length == q) ++legs;
            }
        }
        if (legs == 0) return std::nullopt;
        d.spine.push_back(v);
        d.leg_counts.push_back(legs);
    }
    if (back_ext) {
        d.spine.push_back(back_ext->first_off_trunk);
        d.leg_counts.push_back(1);
    }
    return d;
}

inline bool is_proper_q_caterpillar(const Tree& t, int q) {
    return spine_decomposition(t, q).has_value();
}

/**
 * Recognizer through tree invariants alone: paths are matched by order;
 * any other tree qualifies exactly when the trunk consists of all the
 * high-degree vertices, the twig lengths stay within {q, q+1} with at
 * most two of the longer kind, and the diameter matches the trunk
 * length plus the two longest twig descents.
 */
inline bool is_proper_q_caterpillar_by_invariants(const Tree& t, int q) {
    if (q < 1) throw Error("leg length q must be at least 1");
    if (is_path(t)) {
        int n = t.order();
        return n == q + 1 || n == 2 * q + 1 || n == 2 * q + 2;
    }
    std::vector<int> trunk_vertices = trunk(t);
    std::vector<int> counts = degree_counts(t);
    int delta1 = counts.size() > 1 ? counts[1] : 0;
    int delta2 = counts.size() > 2 ? counts[2] : 0;
    if (static_cast<int>(trunk_vertices.size()) != t.order() - delta1 - delta2) {
        return false;
    }
    TwigMultiset tw = twigs(t);
    for (const auto& [len, mult] : tw.counts) {
        if (len != q && len != q + 1) return false;
    }
    int long_twigs = tw.multiplicity(q + 1);
    if (long_twigs > 2) return false;
    return diameter(t) ==
           static_cast<int>(trunk_vertices.size()) - 1 + 2 * q + long_twigs;
}

/**
 * The composition of a proper q-caterpillar: parts q*p_i + 1 along the
 * spine, canonicalized to the lexicographically smaller of the two
 * orientations.
 */
inline Composition composition_from_caterpillar(const Tree& t, int q) {
    if (q < 2) throw Error("leg length q must be at least 2");
    auto d = spine_decomposition(t, q);
    if (!d) {
        throw NotAProperQCaterpillar("tree of order " + std::to_string(t.order()) +
                                     " is not a proper " + std::to_string(q) +
                                     "-caterpillar");
    }
    Composition c = d->composition(q);
    Composition r = reverse_composition(c);
    return std::min(c, r);
}

/**
 * Every proper q-caterpillar of order at most max_order, one entry per
 * qualifying composition (a composition and its reversal both appear,
 * as distinct entries). Compositions are listed per weight ascending,
 * lexicographically within each weight.
 */
inline std::vector<std::pair<Composition, Tree>> enumerate_proper_q_caterpillars(
    int q, int max_order, int bound = 24) {
    if (q < 2) throw Error("leg length q must be at least 2");
    if (max_order > bound) {
        throw BoundExceeded("caterpillar enumeration capped at order " +
                            std::to_string(bound) + ", got " +
                            std::to_string(max_order));
    }
    std::vector<std::pair<Composition, Tree>> result;
    std::vector<int> parts;
    auto rec = [&](auto&& self, int remaining) -> void {
        if (remaining == 0 && !parts.empty()) {
            Composition c(parts);
            result.emplace_back(c, caterpillar_from_composition(c, q));
            return;
        }
        for (int part = q + 1; part <= remaining; part += q) {
            parts.push_back(part);
            self(self, remaining - part);
            parts.pop_back();
        }
    };
    for (int n = q + 1; n <= max_order; ++n) rec(rec, n);
    return result;
}

/**
 * Instance check of the evaluation identity: restricting the tree's
 * U-polynomial to parts above q equals the L-polynomial of the tree's
 * composition.
 */
inline bool upoly_restriction_matches_lpolynomial(const Tree& t, int q) {
    Composition c = composition_from_caterpillar(t, q);
    return restrict_min_part(upoly_tree_dp(t), q) == l_polynomial(c);
}

} // namespace csfcat
