#include <doctest.h>

#include <random>

#include "abctree/canonical.hpp"
#include "abctree/enumerate.hpp"
#include "abctree/tree.hpp"
#include "support/oracles.hpp"

using namespace abctree;

TEST_CASE("make_path shapes") {
    CHECK(make_path(1).edges().empty());
    LabeledTree p4 = make_path(4);
    CHECK(p4.edges() == std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});
    CHECK(degrees(p4) == DegreeSequence{1, 2, 2, 1});
    CHECK_THROWS_AS(make_path(0), std::invalid_argument);
}

TEST_CASE("make_star shapes") {
    CHECK(make_star(2).edges() == std::vector<Edge>{{0, 1}});
    CHECK(degrees(make_star(4)) == DegreeSequence{3, 1, 1, 1});
    CHECK(make_star(6).degree(0) == 5);
    CHECK_THROWS_AS(make_star(0), std::invalid_argument);
}

TEST_CASE("degrees") {
    CHECK(degrees(make_path(4)) == DegreeSequence{1, 2, 2, 1});
    CHECK(degrees(make_star(5)) == DegreeSequence{4, 1, 1, 1, 1});
    CHECK(degrees(make_path(1)) == DegreeSequence{0});
    for (int n = 2; n <= 12; ++n) {
        TreeStream s(n);
        while (s.advance()) {
            DegreeSequence d = degrees(s.current());
            int sum = 0;
            for (int x : d) {
                CHECK(x >= 1);
                sum += x;
            }
            CHECK(sum == 2 * (n - 1));
        }
    }
}

TEST_CASE("neighbors") {
    CHECK(make_path(3).neighbors(1) == std::vector<int>{0, 2});
    CHECK(make_star(4).neighbors(0) == std::vector<int>{1, 2, 3});
    CHECK(make_path(1).neighbors(0).empty());
    CHECK_THROWS_AS(make_path(3).neighbors(3), std::invalid_argument);
    CHECK_THROWS_AS(make_path(3).neighbors(-1), std::invalid_argument);
}

TEST_CASE("tree validation") {
    CHECK_THROWS_AS(LabeledTree(3, {{0, 1}}), std::invalid_argument);          // too few
    CHECK_THROWS_AS(LabeledTree(3, {{0, 1}, {0, 1}}), std::invalid_argument);  // dup
    CHECK_THROWS_AS(LabeledTree(3, {{0, 1}, {1, 0}}), std::invalid_argument);  // dup normalized
    CHECK_THROWS_AS(LabeledTree(3, {{0, 0}, {1, 2}}), std::invalid_argument);  // self-loop
    CHECK_THROWS_AS(LabeledTree(3, {{0, 1}, {0, 3}}), std::invalid_argument);  // range
    CHECK_THROWS_AS(LabeledTree(4, {{0, 1}, {2, 3}, {0, 1}}), std::invalid_argument);
    // n-1 edges but disconnected (with a duplicate removed it would be a multigraph)
    CHECK_THROWS_AS(SimpleGraph(4, {{0, 0}}), std::invalid_argument);
    CHECK_NOTHROW(SimpleGraph(4, {{0, 1}, {2, 3}})); // graphs may be disconnected
}

TEST_CASE("diameter") {
    CHECK(diameter(make_path(4)) == 3);
    CHECK(diameter(make_star(6)) == 2);
    CHECK(diameter(oracles::make_spider({2, 2, 2})) == 4);
    CHECK(diameter(make_path(1)) == 0);
    CHECK(diameter(make_path(2)) == 1);
    for (int n = 1; n <= 60; ++n)
        CHECK(diameter(make_path(n)) == n - 1);
    for (int n = 3; n <= 30; ++n)
        CHECK(diameter(make_star(n)) == 2);
    // against the all-pairs BFS oracle over every class of small orders
    for (int n = 2; n <= 9; ++n) {
        TreeStream s(n);
        while (s.advance()) {
            LabeledTree t = s.current();
            CHECK(diameter(t) == oracles::all_pairs_diameter(t));
        }
    }
}

TEST_CASE("canonical code equality and separation") {
    LabeledTree p4 = make_path(4);
    LabeledTree p4_relabeled(4, {{2, 0}, {0, 3}, {3, 1}});
    CHECK(canonical_code(p4) == canonical_code(p4_relabeled));
    CHECK(canonical_code(p4) != canonical_code(make_star(4)));
}

TEST_CASE("canonical code is relabeling-invariant") {
    std::mt19937 rng(20260808u);
    for (int n = 2; n <= 12; n += 2) {
        TreeStream s(n);
        int sampled = 0;
        while (s.advance() && sampled < 5) {
            LabeledTree t = s.current();
            CanonicalCode code = canonical_code(t);
            for (int rep = 0; rep < 100; ++rep)
                CHECK(canonical_code(oracles::relabel(t, rng)) == code);
            ++sampled;
        }
    }
}

TEST_CASE("canonical code distinguishes all classes at n = 10") {
    std::vector<CanonicalCode> codes;
    TreeStream s(10);
    while (s.advance())
        codes.push_back(canonical_code(s.current()));
    std::sort(codes.begin(), codes.end());
    CHECK(codes.size() == 106);
    CHECK(std::adjacent_find(codes.begin(), codes.end()) == codes.end());
}
