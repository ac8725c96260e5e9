#pragma once

#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "csfcat/composition.hpp"
#include "csfcat/errors.hpp"

namespace csfcat {

/**
 * Ordered factor list under the composition product. In normal form the
 * factors are irreducible and no adjacent pair forms a trivial
 * factorization; that normal form is unique.
 */
struct Factorization {
    std::vector<Composition> factors;

    Composition composed() const {
        Composition r = factors.front();
        for (std::size_t i = 1; i < factors.size(); ++i) {
            r = compose(r, factors[i]);
        }
        return r;
    }

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (i) s += " o ";
            s += factors[i].to_string();
        }
        return s;
    }

    bool operator==(const Factorization&) const = default;
};

// A factorization e o h is trivial when either side is the identity,
// both are single parts, or both consist solely of ones.
inline bool is_trivial_factorization(const Composition& e, const Composition& h) {
    if (e.is_identity() || h.is_identity()) return true;
    if (e.length() == 1 && h.length() == 1) return true;
    if (e.is_all_ones() && h.is_all_ones()) return true;
    return false;
}

namespace detail {

// Greedy parse of `a` as a concatenation of near-concatenation powers
// of `eta`; the block multiplicities form the left factor. The parse is
// deterministic: at each decision point only one continuation matches.
inline std::optional<Composition> parse_as_power_blocks(const Composition& a,
                                                        const Composition& eta) {
    const std::vector<int>& parts = a.parts();
    const std::vector<int>& e = eta.parts();
    int s = static_cast<int>(e.size());
    std::vector<int> multiplicities;

    if (s == 1) {
        for (int p : parts) {
            if (p % e[0] != 0) return std::nullopt;
            multiplicities.push_back(p / e[0]);
        }
        return Composition(std::move(multiplicities));
    }

    std::size_t i = 0;
    while (i < parts.size()) {
        // One block: e1..e_{s-1}, then copies glued by merged parts.
        for (int j = 0; j < s - 1; ++j) {
            if (i >= parts.size() || parts[i] != e[j]) return std::nullopt;
            ++i;
        }
        int copies = 1;
        while (true) {
            if (i >= parts.size()) return std::nullopt;
            if (parts[i] == e[s - 1]) {
                ++i;
                break;
            }
            if (parts[i] == e[s - 1] + e[0]) {
                ++i;
                ++copies;
                for (int j = 1; j < s - 1; ++j) {
                    if (i >= parts.size() || parts[i] != e[j]) return std::nullopt;
                    ++i;
                }
                continue;
            }
            return std::nullopt;
        }
        multiplicities.push_back(copies);
    }
    return Composition(std::move(multiplicities));
}

} // namespace detail

/**
 * Every non-trivial ordered pair (e, h) with e o h = a. The right factor
 * is determined by a prefix length and a reduced final part, since its
 * leading parts must literally prefix a; each successful parse is
 * re-verified by recomposition.
 */
inline std::vector<std::pair<Composition, Composition>> factor_once(
    const Composition& a) {
    std::vector<std::pair<Composition, Composition>> result;
    const std::vector<int>& parts = a.parts();
    for (int m = 1; m <= a.length(); ++m) {
        for (int t = 1; t <= parts[m - 1]; ++t) {
            std::vector<int> eta_parts(parts.begin(), parts.begin() + (m - 1));
            eta_parts.push_back(t);
            Composition eta(std::move(eta_parts));
            auto eps = detail::parse_as_power_blocks(a, eta);
            if (!eps) continue;
            if (is_trivial_factorization(*eps, eta)) continue;
            if (compose(*eps, eta) == a) result.emplace_back(*eps, eta);
        }
    }
    return result;
}

namespace detail {

using FactorPicker = std::function<std::size_t(std::size_t)>;

inline void split_recursive(const Composition& a,
                            const FactorPicker& pick,
                            std::vector<Composition>& out) {
    auto pairs = factor_once(a);
    if (pairs.empty()) {
        out.push_back(a);
        return;
    }
    const auto& [eps, eta] = pairs[pick(pairs.size()) % pairs.size()];
    split_recursive(eps, pick, out);
    split_recursive(eta, pick, out);
}

// Merge adjacent trivial pairs and drop identity factors until stable.
inline void normalize_factors(std::vector<Composition>& factors) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < factors.size();) {
            if (factors[i].is_identity() && factors.size() > 1) {
                factors.erase(factors.begin() + i);
                changed = true;
                continue;
            }
            ++i;
        }
        for (std::size_t i = 0; i + 1 < factors.size(); ++i) {
            const Composition& x = factors[i];
            const Composition& y = factors[i + 1];
            if (x.length() == 1 && y.length() == 1) {
                factors[i] = Composition({x.parts()[0] * y.parts()[0]});
                factors.erase(factors.begin() + i + 1);
                changed = true;
                break;
            }
            if (x.is_all_ones() && y.is_all_ones()) {
                factors[i] = Composition::all_ones(x.length() * y.length());
                factors.erase(factors.begin() + i + 1);
                changed = true;
                break;
            }
        }
    }
}

} // namespace detail

/**
 * The unique irreducible factorization: recursively split off factors,
 * then merge adjacent trivial pairs into single factors. The picker
 * selects among candidate splits; any choice yields the same normal
 * form.
 */
inline Factorization irreducible_factorization(
    const Composition& a,
    const detail::FactorPicker& pick = [](std::size_t) { return std::size_t{0}; }) {
    if (a.is_identity()) {
        throw IdentityComposition("the identity composition has no factorization");
    }
    std::vector<Composition> factors;
    detail::split_recursive(a, pick, factors);
    detail::normalize_factors(factors);
    return Factorization{std::move(factors)};
}

/**
 * All compositions sharing the L-polynomial of a: every product of the
 * irreducible factors with each factor independently reversed or not,
 * in factor order. Returned sorted and deduplicated.
 */
inline std::vector<Composition> l_equivalence_class(const Composition& a) {
    Factorization f = irreducible_factorization(a);
    std::size_t k = f.factors.size();
    std::set<Composition> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        std::vector<Composition> choice;
        choice.reserve(k);
        for (std::size_t i = 0; i < k; ++i) {
            if (mask & (std::uint64_t{1} << i)) {
                choice.push_back(reverse_composition(f.factors[i]));
            } else {
                choice.push_back(f.factors[i]);
            }
        }
        out.insert(Factorization{std::move(choice)}.composed());
    }
    return std::vector<Composition>(out.begin(), out.end());
}

/**
 * Shape check for compositions whose parts share a fixed nonzero
 * residue and have coprime gcd: such a composition is either
 * irreducible or factors as an all-ones composition times one
 * irreducible.
 */
inline bool has_modular_factorization_shape(const Composition& g, int h, int q) {
    if (q < 2) throw HypothesisViolated("modulus must be at least 2");
    int r = ((h % q) + q) % q;
    if (r == 0) throw HypothesisViolated("residue must not be divisible by the modulus");
    int gcd = 0;
    for (int p : g.parts()) {
        if (p % q != r) {
            throw HypothesisViolated("part " + std::to_string(p) +
                                     " is not congruent to " + std::to_string(r) +
                                     " modulo " + std::to_string(q));
        }
        gcd = std::gcd(gcd, p);
    }
    if (gcd != 1) throw HypothesisViolated("parts must have gcd 1");
    if (g.is_identity()) return true;
    Factorization f = irreducible_factorization(g);
    if (f.factors.size() == 1) return true;
    return f.factors.size() == 2 && f.factors[0].is_all_ones();
}

} // namespace csfcat
