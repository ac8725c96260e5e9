#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <string>

#include "csfcat/enumerate.hpp"
#include "oracles.hpp"

using namespace csfcat;

namespace {
// Class counts for orders 1..13; 1..10 confirmed against the Pruefer
// oracle, run once and frozen here. The live cross-check below stops at 8.
const long kClassCounts[] = {1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301};
} // namespace

TEST_CASE("enumeration counts match the frozen oracle fixture", "[enumerate]") {
    for (int n = 1; n <= 13; ++n) {
        CHECK(static_cast<long>(enumerate_trees(n).size()) == kClassCounts[n - 1]);
    }
}

TEST_CASE("enumeration agrees with live Pruefer dedup for small orders", "[enumerate]") {
    for (int n = 1; n <= 8; ++n) {
        CHECK(static_cast<long>(enumerate_trees(n).size()) ==
              oracles::prufer_class_count(n));
    }
}

TEST_CASE("enumeration yields no duplicate classes", "[enumerate]") {
    for (int n = 1; n <= 11; ++n) {
        std::set<std::string> codes;
        for (const Tree& t : enumerate_trees(n)) {
            CHECK(t.order() == n);
            CHECK(codes.insert(canonical_code(t).code).second);
        }
    }
}

TEST_CASE("order four has exactly the path and the star", "[enumerate]") {
    auto trees = enumerate_trees(4);
    REQUIRE(trees.size() == 2);
    std::set<std::vector<int>> degree_seqs;
    for (const Tree& t : trees) degree_seqs.insert(degree_sequence(t));
    CHECK(degree_seqs.count({2, 2, 1, 1}) == 1);
    CHECK(degree_seqs.count({3, 1, 1, 1}) == 1);
}

TEST_CASE("enumeration bounds", "[enumerate]") {
    CHECK_THROWS_AS(enumerate_trees(0), BoundExceeded);
    CHECK_THROWS_AS(enumerate_trees(21), BoundExceeded);
}

TEST_CASE("Pruefer decoding produces valid labeled trees", "[enumerate]") {
    CHECK(tree_from_prufer({}, 1).order() == 1);
    CHECK(tree_from_prufer({}, 2).edges() ==
          std::vector<std::pair<int, int>>{{0, 1}});
    // (0,0) encodes the star at vertex 0 on 4 vertices.
    Tree star = tree_from_prufer({0, 0}, 4);
    CHECK(degree_sequence(star) == std::vector<int>{3, 1, 1, 1});

    std::mt19937 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        Tree t = random_tree(3 + static_cast<int>(rng() % 14), rng);
        CHECK(static_cast<int>(t.edges().size()) == t.order() - 1);
    }
}
