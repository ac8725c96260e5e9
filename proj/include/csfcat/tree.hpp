#pragma once

#include <algorithm>
#include <cctype>
#include <numeric>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "csfcat/errors.hpp"

namespace csfcat {

/**
 * Immutable tree on vertices 0..order-1. Construction validates the
 * tree axioms: exactly order-1 edges, no self-loops or duplicates,
 * connected. Adjacency lists are kept sorted so traversals are
 * deterministic.
 */
class Tree {
public:
    Tree(int order, std::vector<std::pair<int, int>> edges) : order_(order) {
        if (order < 1) throw NotATree("tree order must be at least 1");
        if (static_cast<int>(edges.size()) != order - 1) {
            throw NotATree("a tree on " + std::to_string(order) +
                           " vertices needs exactly " +
                           std::to_string(order - 1) + " edges, got " +
                           std::to_string(edges.size()));
        }
        std::set<std::pair<int, int>> seen;
        for (auto& [u, v] : edges) {
            if (u < 0 || u >= order || v < 0 || v >= order) {
                throw BadLabel("vertex label out of range: " +
                               std::to_string(u) + "-" + std::to_string(v));
            }
            if (u == v) throw NotATree("self-loop at vertex " + std::to_string(u));
            if (u > v) std::swap(u, v);
            if (!seen.insert({u, v}).second) {
                throw NotATree("duplicate edge " + std::to_string(u) + "-" +
                               std::to_string(v));
            }
        }
        edges_.assign(seen.begin(), seen.end());

        // Connectivity by union-find; with order-1 edges this also rules
        // out cycles.
        std::vector<int> parent(order);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        int components = order;
        for (const auto& [u, v] : edges_) {
            int ru = find(u), rv = find(v);
            if (ru != rv) {
                parent[ru] = rv;
                --components;
            }
        }
        if (components != 1) throw NotATree("edge set is not connected");

        adj_.assign(order, {});
        for (const auto& [u, v] : edges_) {
            adj_[u].push_back(v);
            adj_[v].push_back(u);
        }
        for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
    }

    int order() const { return order_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

private:
    int order_;
    std::vector<std::pair<int, int>> edges_; // normalized u<v, sorted
    std::vector<std::vector<int>> adj_;
};

inline Tree tree_from_edges(int order, std::vector<std::pair<int, int>> edges) {
    return Tree(order, std::move(edges));
}

// Vertex degrees sorted decreasingly.
inline std::vector<int> degree_sequence(const Tree& t) {
    std::vector<int> degs(t.order());
    for (int v = 0; v < t.order(); ++v) degs[v] = t.degree(v);
    std::sort(degs.begin(), degs.end(), std::greater<int>());
    return degs;
}

// counts[i] = number of vertices of degree i (index 0 unused except K1).
inline std::vector<int> degree_counts(const Tree& t) {
    std::vector<int> counts(t.order(), 0);
    for (int v = 0; v < t.order(); ++v) ++counts[t.degree(v)];
    return counts;
}

inline bool is_path(const Tree& t) {
    for (int v = 0; v < t.order(); ++v) {
        if (t.degree(v) > 2) return false;
    }
    return true;
}

inline std::vector<int> bfs_distances(const Tree& t, int src) {
    std::vector<int> dist(t.order(), -1);
    std::queue<int> q;
    dist[src] = 0;
    q.push(src);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : t.neighbors(v)) {
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
        }
    }
    return dist;
}

// Longest path length in edges, by double breadth-first search.
inline int diameter(const Tree& t) {
    auto d0 = bfs_distances(t, 0);
    int u = static_cast<int>(std::max_element(d0.begin(), d0.end()) - d0.begin());
    auto d1 = bfs_distances(t, u);
    return *std::max_element(d1.begin(), d1.end());
}

// Vertices along the unique u..v path, endpoints included.
inline std::vector<int> tree_path(const Tree& t, int u, int v) {
    std::vector<int> parent(t.order(), -1);
    std::queue<int> q;
    parent[u] = u;
    q.push(u);
    while (!q.empty() && parent[v] < 0) {
        int x = q.front();
        q.pop();
        for (int w : t.neighbors(x)) {
            if (parent[w] < 0) {
                parent[w] = x;
                q.push(w);
            }
        }
    }
    std::vector<int> path{v};
    while (path.back() != u) path.push_back(parent[path.back()]);
    std::reverse(path.begin(), path.end());
    return path;
}

// Rebuild the tree with vertex i renamed to perm[i].
inline Tree relabeled(const Tree& t, const std::vector<int>& perm) {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(t.edges().size());
    for (const auto& [u, v] : t.edges()) edges.emplace_back(perm[u], perm[v]);
    return Tree(t.order(), std::move(edges));
}

// Text format `n; u1-v1, u2-v2, ...` with 0-based labels.
inline Tree parse_tree(const std::string& text) {
    auto fail = [&](const std::string& why) -> ParseError {
        return ParseError("bad tree literal \"" + text + "\": " + why);
    };
    std::size_t semi = text.find(';');
    std::string head = text.substr(0, semi == std::string::npos ? text.size() : semi);
    auto parse_int = [&](const std::string& s) {
        std::size_t pos = 0;
        int value = 0;
        try {
            value = std::stoi(s, &pos);
        } catch (const std::exception&) {
            throw fail("expected integer, got \"" + s + "\"");
        }
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos != s.size()) throw fail("trailing characters in \"" + s + "\"");
        return value;
    };
    int order = parse_int(head);
    std::vector<std::pair<int, int>> edges;
    if (semi != std::string::npos) {
        std::string rest = text.substr(semi + 1);
        std::size_t start = 0;
        while (start <= rest.size()) {
            std::size_t comma = rest.find(',', start);
            std::string item = rest.substr(
                start, comma == std::string::npos ? std::string::npos : comma - start);
            std::size_t a = item.find_first_not_of(" \t");
            if (a != std::string::npos) {
                std::size_t b = item.find_last_not_of(" \t");
                item = item.substr(a, b - a + 1);
                std::size_t dash = item.find('-');
                if (dash == std::string::npos) throw fail("edge \"" + item + "\" lacks '-'");
                edges.emplace_back(parse_int(item.substr(0, dash)),
                                   parse_int(item.substr(dash + 1)));
            }
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
    }
    return Tree(order, std::move(edges));
}

inline std::string format_tree(const Tree& t) {
    std::string s = std::to_string(t.order()) + ";";
    bool first = true;
    for (const auto& [u, v] : t.edges()) {
        s += first ? " " : ", ";
        s += std::to_string(u) + "-" + std::to_string(v);
        first = false;
    }
    return s;
}

} // namespace csfcat
