#pragma once

#include <algorithm>
#include <exception>
#include <map>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"

#include "csfcat/caterpillar.hpp"
#include "csfcat/composition.hpp"
#include "csfcat/csf.hpp"
#include "csfcat/enumerate.hpp"
#include "csfcat/lpolynomial.hpp"
#include "csfcat/upolynomial.hpp"

namespace csfcat {

namespace detail {

// Run fn(0..count-1) over a fixed-size worker pool. Callers write
// results into preallocated slots, so the outcome does not depend on
// the thread count.
template <typename F>
void parallel_for(std::size_t count, int threads, F&& fn) {
    if (threads <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::size_t workers = std::min<std::size_t>(threads, count);
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = w; i < count; i += workers) fn(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

} // namespace detail

/// Compositions of n whose parts all exceed 1 and are 1 modulo q,
/// in lexicographic order. These index proper q-caterpillars of order n.
inline std::vector<Composition> qualifying_compositions(int q, int n) {
    std::vector<Composition> result;
    std::vector<int> parts;
    auto rec = [&](auto&& self, int remaining) -> void {
        if (remaining == 0 && !parts.empty()) {
            result.emplace_back(parts);
            return;
        }
        for (int part = q + 1; part <= remaining; part += q) {
            parts.push_back(part);
            self(self, remaining - part);
            parts.pop_back();
        }
    };
    rec(rec, n);
    return result;
}

struct OrderGroupStats {
    int n = 0;
    int compositions = 0;
    int classes = 0;
    int max_class = 0;
    bool pass = true;
};

struct DistinctionViolation {
    int n = 0;
    std::vector<Composition> group;
    std::string poly;
};

// A group sharing one L-polynomial is admissible exactly when it is a
// palindromic singleton or a composition together with its reversal.
inline std::vector<DistinctionViolation> check_groups_are_reversal_pairs(
    int n, const std::map<std::string, std::vector<Composition>>& groups) {
    std::vector<DistinctionViolation> violations;
    for (const auto& [poly, members] : groups) {
        bool ok = false;
        if (members.size() == 1) {
            ok = members[0] == reverse_composition(members[0]);
        } else if (members.size() == 2) {
            ok = members[1] == reverse_composition(members[0]);
        }
        if (!ok) violations.push_back({n, members, poly});
    }
    return violations;
}

/**
 * Report of the exhaustive distinction run: all qualifying compositions
 * up to max_order grouped by L-polynomial, expecting only
 * reversal pairs, with independent regrouping by restricted
 * U-polynomial and by chromatic symmetric function on a bounded sample.
 */
struct DistinctionReport {
    int q = 0;
    int max_order = 0;
    std::vector<OrderGroupStats> per_order;
    std::vector<DistinctionViolation> violations;
    long upoly_cross_checked = 0;
    long csf_cross_checked = 0;
    std::vector<std::string> cross_check_failures;

    bool pass() const {
        return violations.empty() && cross_check_failures.empty();
    }

    std::string to_text() const {
        std::string s;
        for (const auto& st : per_order) {
            s += "q=" + std::to_string(q) + " n=" + std::to_string(st.n) +
                 " classes=" + std::to_string(st.classes) +
                 " max_class=" + std::to_string(st.max_class) +
                 (st.pass ? " PASS" : " FAIL") + "\n";
        }
        for (const auto& v : violations) {
            s += "VIOLATION n=" + std::to_string(v.n) + ":";
            for (const auto& c : v.group) s += " | " + c.to_string();
            s += " share L-polynomial " + v.poly + "\n";
        }
        for (const auto& f : cross_check_failures) s += "CROSS-CHECK FAIL: " + f + "\n";
        s += "cross-checked " + std::to_string(upoly_cross_checked) +
             " restricted u-polynomials, " + std::to_string(csf_cross_checked) +
             " chromatic symmetric functions\n";
        s += "theorem1 q=" + std::to_string(q) + " max_order=" +
             std::to_string(max_order) + (pass() ? " PASS" : " FAIL") + "\n";
        return s;
    }

    nlohmann::json to_json() const {
        nlohmann::json per = nlohmann::json::array();
        for (const auto& st : per_order) {
            per.push_back({{"n", st.n},
                           {"compositions", st.compositions},
                           {"classes", st.classes},
                           {"max_class", st.max_class},
                           {"pass", st.pass}});
        }
        nlohmann::json viols = nlohmann::json::array();
        for (const auto& v : violations) {
            nlohmann::json group = nlohmann::json::array();
            for (const auto& c : v.group) group.push_back(c.to_string());
            viols.push_back({{"n", v.n}, {"group", group}, {"poly", v.poly}});
        }
        return {{"q", q},
                {"max_order", max_order},
                {"per_order", per},
                {"violations", viols},
                {"upoly_cross_checked", upoly_cross_checked},
                {"csf_cross_checked", csf_cross_checked},
                {"cross_check_failures", cross_check_failures},
                {"pass", pass()}};
    }
};

/**
 * Exhaustively verify, for one q, that equal L-polynomials only pair a
 * qualifying composition with its reversal, for every order up to
 * max_order. A bounded sample is re-checked through the U-polynomial
 * of the built caterpillar and, for small orders, through the full
 * chromatic symmetric function.
 */
inline DistinctionReport verify_caterpillar_distinction(int q, int max_order,
                                                        int threads = 1,
                                                        int csf_order_cap = 14,
                                                        int larger_samples = 50,
                                                        int bound = 24) {
    if (q < 2) throw Error("leg length q must be at least 2");
    if (max_order > bound) {
        throw BoundExceeded("distinction run capped at order " +
                            std::to_string(bound) + ", got " +
                            std::to_string(max_order));
    }
    DistinctionReport report;
    report.q = q;
    report.max_order = max_order;

    for (int n = q + 1; n <= max_order; ++n) {
        std::vector<Composition> comps = qualifying_compositions(q, n);
        if (comps.empty()) continue;

        std::vector<std::string> keys(comps.size());
        detail::parallel_for(comps.size(), threads, [&](std::size_t i) {
            keys[i] = l_polynomial(comps[i]).serialize();
        });
        std::map<std::string, std::vector<Composition>> groups;
        for (std::size_t i = 0; i < comps.size(); ++i) {
            groups[keys[i]].push_back(comps[i]);
        }

        OrderGroupStats st;
        st.n = n;
        st.compositions = static_cast<int>(comps.size());
        st.classes = static_cast<int>(groups.size());
        for (const auto& [key, members] : groups) {
            st.max_class = std::max(st.max_class, static_cast<int>(members.size()));
        }
        auto violations = check_groups_are_reversal_pairs(n, groups);
        st.pass = violations.empty();
        report.per_order.push_back(st);
        report.violations.insert(report.violations.end(), violations.begin(),
                                 violations.end());

        // Cross-checks: small orders in full, larger ones sampled below.
        if (n <= csf_order_cap) {
            std::vector<std::string> ukeys(comps.size()), ckeys(comps.size());
            detail::parallel_for(comps.size(), threads, [&](std::size_t i) {
                Tree t = caterpillar_from_composition(comps[i], q);
                ukeys[i] = restrict_min_part(upoly_tree_dp(t), q).serialize();
                ckeys[i] = csf_power_sum(t).serialize();
            });
            for (std::size_t i = 0; i < comps.size(); ++i) {
                ++report.upoly_cross_checked;
                if (ukeys[i] != keys[i]) {
                    report.cross_check_failures.push_back(
                        "restricted u-polynomial differs from L-polynomial for " +
                        comps[i].to_string());
                }
            }
            // Regroup by chromatic symmetric function and compare the
            // induced partitions of the index set.
            std::map<std::string, std::vector<std::size_t>> by_l, by_csf;
            for (std::size_t i = 0; i < comps.size(); ++i) {
                by_l[keys[i]].push_back(i);
                by_csf[ckeys[i]].push_back(i);
            }
            std::set<std::vector<std::size_t>> pl, pc;
            for (const auto& [k, v] : by_l) pl.insert(v);
            for (const auto& [k, v] : by_csf) pc.insert(v);
            report.csf_cross_checked += static_cast<long>(comps.size());
            if (pl != pc) {
                report.cross_check_failures.push_back(
                    "csf grouping differs from L-polynomial grouping at n=" +
                    std::to_string(n));
            }
        }
    }

    // Random larger instances: the U-polynomial route must keep agreeing
    // with the L-polynomial beyond the exhaustive cap.
    std::vector<Composition> pool;
    for (int n = csf_order_cap + 1; n <= max_order; ++n) {
        auto comps = qualifying_compositions(q, n);
        pool.insert(pool.end(), comps.begin(), comps.end());
    }
    if (!pool.empty() && larger_samples > 0) {
        std::mt19937 rng(12345);
        std::vector<Composition> sample;
        for (int i = 0; i < larger_samples; ++i) {
            sample.push_back(pool[rng() % pool.size()]);
        }
        std::vector<int> ok(sample.size(), 0);
        detail::parallel_for(sample.size(), threads, [&](std::size_t i) {
            Tree t = caterpillar_from_composition(sample[i], q);
            ok[i] = restrict_min_part(upoly_tree_dp(t), q) ==
                            l_polynomial(sample[i])
                        ? 1
                        : 0;
        });
        for (std::size_t i = 0; i < sample.size(); ++i) {
            ++report.upoly_cross_checked;
            if (!ok[i]) {
                report.cross_check_failures.push_back(
                    "restricted u-polynomial differs from L-polynomial for " +
                    sample[i].to_string());
            }
        }
    }
    return report;
}

/// Outcome of one range-style verification command.
struct CheckReport {
    std::string name;
    std::vector<std::pair<std::string, std::string>> params;
    long checked = 0;
    std::vector<std::string> notes;
    std::vector<std::string> failures;

    bool pass() const { return failures.empty(); }

    std::string to_text() const {
        std::string s;
        for (const auto& note : notes) s += note + "\n";
        for (const auto& f : failures) s += "FAIL: " + f + "\n";
        s += name;
        for (const auto& [k, v] : params) s += " " + k + "=" + v;
        s += " checked=" + std::to_string(checked);
        s += pass() ? " PASS" : " FAIL";
        s += "\n";
        return s;
    }

    nlohmann::json to_json() const {
        nlohmann::json p = nlohmann::json::object();
        for (const auto& [k, v] : params) p[k] = v;
        return {{"name", name},
                {"params", p},
                {"checked", checked},
                {"notes", notes},
                {"failures", failures},
                {"pass", pass()}};
    }
};

/**
 * The change of variables from the U-polynomial must reproduce the
 * chromatic symmetric function on every tree up to max_order, through
 * both U-polynomial routes.
 */
inline CheckReport verify_csf_transform_range(int max_order) {
    CheckReport report;
    report.name = "eq3";
    report.params = {{"max_order", std::to_string(max_order)}};
    for (int n = 1; n <= max_order; ++n) {
        for (const Tree& t : enumerate_trees(n)) {
            SparsePolynomial expected = csf_power_sum(t);
            if (csf_from_upoly(upoly_naive(t), n) != expected ||
                csf_from_upoly(upoly_tree_dp(t), n) != expected) {
                report.failures.push_back("transform mismatch for " + format_tree(t));
            }
            ++report.checked;
        }
    }
    return report;
}

/// Both U-polynomial methods must agree on every proper q-caterpillar
/// restriction instance up to max_order.
inline CheckReport verify_upoly_restriction_range(int q, int max_order,
                                                  int threads = 1) {
    CheckReport report;
    report.name = "lemma3";
    report.params = {{"q", std::to_string(q)},
                     {"max_order", std::to_string(max_order)}};
    auto entries = enumerate_proper_q_caterpillars(q, max_order);
    std::vector<int> ok(entries.size(), 0);
    detail::parallel_for(entries.size(), threads, [&](std::size_t i) {
        ok[i] = upoly_restriction_matches_lpolynomial(entries[i].second, q) ? 1 : 0;
    });
    for (std::size_t i = 0; i < entries.size(); ++i) {
        ++report.checked;
        if (!ok[i]) {
            report.failures.push_back("restriction mismatch for composition " +
                                      entries[i].first.to_string());
        }
    }
    return report;
}

/// The spine-decomposition recognizer and the invariant-based recognizer
/// must agree on every tree up to max_order.
inline CheckReport verify_recognizer_equivalence(int q, int max_order) {
    CheckReport report;
    report.name = "prop1";
    report.params = {{"q", std::to_string(q)},
                     {"max_order", std::to_string(max_order)}};
    long caterpillars = 0;
    for (int n = 1; n <= max_order; ++n) {
        for (const Tree& t : enumerate_trees(n)) {
            bool structural = is_proper_q_caterpillar(t, q);
            bool invariants = is_proper_q_caterpillar_by_invariants(t, q);
            if (structural != invariants) {
                report.failures.push_back("recognizers disagree on " + format_tree(t));
            }
            if (structural) ++caterpillars;
            ++report.checked;
        }
    }
    report.notes.push_back("recognized " + std::to_string(caterpillars) +
                           " proper " + std::to_string(q) + "-caterpillars");
    return report;
}

} // namespace csfcat
