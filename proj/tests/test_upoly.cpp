#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "csfcat/caterpillar.hpp"
#include "csfcat/enumerate.hpp"
#include "csfcat/lpolynomial.hpp"
#include "csfcat/upolynomial.hpp"

using namespace csfcat;

TEST_CASE("U-polynomials of the smallest trees", "[upoly]") {
    CHECK(upoly_naive(parse_tree("1;")) ==
          SparsePolynomial::from_terms({{Partition({1}), 1}}));
    CHECK(upoly_tree_dp(parse_tree("2;0-1")) ==
          SparsePolynomial::from_terms({{Partition({1, 1}), 1}, {Partition({2}), 1}}));
    // Brute force over the four edge subsets of the 3-path.
    SparsePolynomial p3 = SparsePolynomial::from_terms(
        {{Partition({1, 1, 1}), 1}, {Partition({2, 1}), 2}, {Partition({3}), 1}});
    CHECK(upoly_naive(parse_tree("3;0-1,1-2")) == p3);
    CHECK(upoly_tree_dp(parse_tree("3;0-1,1-2")) == p3);
}

TEST_CASE("coefficient mass and extreme keys", "[upoly]") {
    for (int n = 1; n <= 9; ++n) {
        for (const Tree& t : enumerate_trees(n)) {
            UPolynomial u = upoly_naive(t);
            CHECK(u.coefficient_sum() == std::int64_t{1} << (n - 1));
            CHECK(u.coeff(Partition({n})) == 1);
            CHECK(u.coeff(Partition(std::vector<int>(n, 1))) == 1);
            for (const auto& [key, c] : u) {
                CHECK(c > 0);
                CHECK(key.weight() == n);
            }
        }
    }
}

TEST_CASE("scan method equals subset enumeration on all small trees", "[upoly]") {
    for (int n = 1; n <= 10; ++n) {
        for (const Tree& t : enumerate_trees(n)) {
            REQUIRE(upoly_tree_dp(t) == upoly_naive(t));
        }
    }
}

TEST_CASE("scan method equals subset enumeration on random larger trees", "[upoly]") {
    std::mt19937 rng(31337);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + static_cast<int>(rng() % 15); // up to 16
        Tree t = random_tree(n, rng);
        REQUIRE(upoly_tree_dp(t) == upoly_naive(t));
    }
}

TEST_CASE("scan result does not depend on the root", "[upoly]") {
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 10; ++trial) {
        Tree t = random_tree(9, rng);
        UPolynomial expected = upoly_naive(t);
        for (int root = 0; root < t.order(); ++root) {
            REQUIRE(upoly_tree_dp(t, root) == expected);
        }
    }
}

TEST_CASE("restriction drops terms with small parts", "[upoly]") {
    SparsePolynomial u = SparsePolynomial::from_terms(
        {{Partition({1, 1}), 1}, {Partition({2}), 1}});
    CHECK(restrict_min_part(u, 1) ==
          SparsePolynomial::from_terms({{Partition({2}), 1}}));
    CHECK(restrict_min_part(u, 0) == u);
    CHECK(restrict_min_part(u, 5).empty());
}

TEST_CASE("restricted caterpillar terms come from supersets of the leg edges", "[upoly]") {
    // Composition (4,4,7) at q=3: spine 0-1-2 with legs of length 3.
    const int q = 3;
    Tree t = caterpillar_from_composition(Composition({4, 4, 7}), q);
    SparsePolynomial restricted = restrict_min_part(upoly_tree_dp(t), q);
    CHECK(restricted ==
          SparsePolynomial::from_terms({{Partition({7, 4, 4}), 1},
                                        {Partition({8, 7}), 1},
                                        {Partition({11, 4}), 1},
                                        {Partition({15}), 1}}));

    // Independently: enumerate subsets directly and keep those containing
    // every non-spine edge.
    std::vector<int> spine_edge_idx;
    const auto& edges = t.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (edges[i].first < 3 && edges[i].second < 3) {
            spine_edge_idx.push_back(static_cast<int>(i));
        }
    }
    REQUIRE(spine_edge_idx.size() == 2);
    std::uint32_t all = (std::uint32_t{1} << edges.size()) - 1;
    std::uint32_t non_spine = all;
    for (int i : spine_edge_idx) non_spine &= ~(std::uint32_t{1} << i);
    SparsePolynomial direct;
    for (std::uint32_t pick = 0; pick < 4; ++pick) {
        std::uint32_t mask = non_spine;
        if (pick & 1) mask |= std::uint32_t{1} << spine_edge_idx[0];
        if (pick & 2) mask |= std::uint32_t{1} << spine_edge_idx[1];
        direct.add_term(detail::partition_of_mask(t, mask), 1);
    }
    CHECK(direct == restricted);

    // The same terms form the L-polynomial of the composition.
    CHECK(restricted == l_polynomial(Composition({4, 4, 7})));
}

TEST_CASE("naive method respects its bound", "[upoly]") {
    Tree t = caterpillar_from_composition(Composition({3, 3}), 2);
    CHECK_THROWS_AS(upoly_naive(t, 5), BoundExceeded);
}
