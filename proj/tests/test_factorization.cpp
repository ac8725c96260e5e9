#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <random>
#include <set>

#include "csfcat/factorization.hpp"
#include "csfcat/lpolynomial.hpp"
#include "oracles.hpp"

using namespace csfcat;

namespace {
Composition C(std::vector<int> parts) { return Composition(std::move(parts)); }
} // namespace

TEST_CASE("trivial factorizations", "[factorization]") {
    CHECK(is_trivial_factorization(C({1}), C({4, 7})));
    CHECK(is_trivial_factorization(C({4, 7}), C({1})));
    CHECK(is_trivial_factorization(C({3}), C({4})));
    CHECK(is_trivial_factorization(C({1, 1}), C({1, 1, 1})));
    CHECK_FALSE(is_trivial_factorization(C({1, 1}), C({2, 5})));
    CHECK_FALSE(is_trivial_factorization(C({2, 5}), C({2})));
}

TEST_CASE("factor search on the worked example", "[factorization]") {
    auto pairs = factor_once(C({4, 10, 4, 10}));
    REQUIRE(pairs.size() == 2);
    // Deterministic candidate order: single-part right factors first.
    CHECK(pairs[0] == std::make_pair(C({2, 5, 2, 5}), C({2})));
    CHECK(pairs[1] == std::make_pair(C({1, 1}), C({4, 10})));
    for (const auto& [e, h] : pairs) CHECK(compose(e, h) == C({4, 10, 4, 10}));
}

TEST_CASE("factor search agrees with pairwise recomposition", "[factorization]") {
    std::vector<Composition> targets = {
        C({4, 10, 4, 10}), C({2, 1}), C({6}), C({1, 1, 1, 1}), C({3, 3, 1, 3, 3}),
        C({2, 2, 2}),      C({4, 4}), C({2, 5, 3, 2, 3}), C({9}), C({2, 4, 2, 4}),
    };
    for (const auto& a : targets) {
        std::set<std::pair<Composition, Composition>> fast;
        for (const auto& p : factor_once(a)) fast.insert(p);
        std::set<std::pair<Composition, Composition>> slow;
        for (const auto& p : oracles::all_factor_pairs(a)) slow.insert(p);
        REQUIRE(fast == slow);
    }
}

TEST_CASE("irreducible compositions yield no factor pairs", "[factorization]") {
    CHECK(factor_once(C({2, 1})).empty());
    CHECK(factor_once(C({6})).empty());       // (2)o(3) and (3)o(2) are trivial
    CHECK(factor_once(C({1, 1, 1, 1})).empty()); // all-ones splits are trivial
    CHECK(factor_once(C({2, 5})).empty());
}

TEST_CASE("unique irreducible factorization of the worked example", "[factorization]") {
    Factorization f = irreducible_factorization(C({4, 10, 4, 10}));
    REQUIRE(f.factors.size() == 3);
    CHECK(f.factors[0] == C({1, 1}));
    CHECK(f.factors[1] == C({2, 5}));
    CHECK(f.factors[2] == C({2}));
    CHECK(f.to_string() == "1 1 o 2 5 o 2");
    CHECK(f.composed() == C({4, 10, 4, 10}));
}

TEST_CASE("factorization of irreducibles and the identity", "[factorization]") {
    CHECK(irreducible_factorization(C({2, 1})).factors ==
          std::vector<Composition>{C({2, 1})});
    CHECK(irreducible_factorization(C({6})).factors ==
          std::vector<Composition>{C({6})});
    CHECK_THROWS_AS(irreducible_factorization(C({1})), IdentityComposition);
}

TEST_CASE("normal form is independent of the split order", "[factorization]") {
    std::mt19937 rng(1234);
    detail::FactorPicker random_pick = [&rng](std::size_t count) {
        return static_cast<std::size_t>(rng() % count);
    };
    for (int n = 2; n <= 10; ++n) {
        for (const auto& a : compositions_of(n)) {
            Factorization canonical = irreducible_factorization(a);
            CHECK(canonical.composed() == a);
            for (const auto& factor : canonical.factors) {
                CHECK(factor_once(factor).empty());
                CHECK_FALSE(factor.is_identity());
            }
            for (std::size_t i = 0; i + 1 < canonical.factors.size(); ++i) {
                CHECK_FALSE(is_trivial_factorization(canonical.factors[i],
                                                     canonical.factors[i + 1]));
            }
            for (int trial = 0; trial < 3; ++trial) {
                REQUIRE(irreducible_factorization(a, random_pick) == canonical);
            }
        }
    }
}

TEST_CASE("equivalence class of the worked example", "[factorization]") {
    auto cls = l_equivalence_class(C({4, 10, 4, 10}));
    REQUIRE(cls.size() == 2);
    CHECK(cls[0] == C({4, 10, 4, 10}));
    CHECK(cls[1] == C({10, 4, 10, 4}));
}

TEST_CASE("palindromic irreducibles form singleton classes", "[factorization]") {
    CHECK(l_equivalence_class(C({3, 1, 3})) == std::vector<Composition>{C({3, 1, 3})});
    CHECK(l_equivalence_class(C({7})) == std::vector<Composition>{C({7})});
    CHECK_THROWS_AS(l_equivalence_class(C({1})), IdentityComposition);
}

TEST_CASE("classes partition compositions exactly like L-polynomial equality", "[factorization]") {
    for (int n = 2; n <= 9; ++n) {
        // Brute-force grouping by the L-polynomial.
        std::map<std::string, std::set<Composition>> by_poly;
        for (const auto& a : compositions_of(n)) {
            by_poly[l_polynomial(a).serialize()].insert(a);
        }
        for (const auto& [key, expected] : by_poly) {
            for (const auto& a : expected) {
                auto cls = l_equivalence_class(a);
                std::set<Composition> got(cls.begin(), cls.end());
                REQUIRE(got == expected);
                CHECK(got.count(reverse_composition(a)) == 1);
            }
        }
    }
}

TEST_CASE("modular factorization shape", "[factorization]") {
    CHECK(has_modular_factorization_shape(C({3, 3, 1, 3, 3}), 1, 2));
    CHECK(has_modular_factorization_shape(C({5, 3}), 1, 2));
    CHECK_THROWS_AS(has_modular_factorization_shape(C({2, 4}), 1, 2),
                    HypothesisViolated); // parts even, gcd 2
    CHECK_THROWS_AS(has_modular_factorization_shape(C({4, 2}), 2, 2),
                    HypothesisViolated); // residue 0
    CHECK_THROWS_AS(has_modular_factorization_shape(C({3, 4}), 1, 2),
                    HypothesisViolated); // parts disagree modulo 2
    // Reducible case with an all-ones head: (1,1) o (3,5) = (3,5,3,5).
    CHECK(irreducible_factorization(C({3, 5, 3, 5})).factors ==
          std::vector<Composition>{C({1, 1}), C({3, 5})});
    CHECK(has_modular_factorization_shape(C({3, 5, 3, 5}), 1, 2));
    CHECK(has_modular_factorization_shape(C({1, 1, 1}), 1, 2));
}
