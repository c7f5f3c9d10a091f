#include <doctest.h>

#include "extenso/extremal_search.hpp"
#include "extenso/logvalue.hpp"
#include "extenso/poset.hpp"

using namespace extenso;

TEST_CASE("build applies transitive closure") {
    Poset p(3, {{0, 1}, {1, 2}});
    CHECK(p.less(0, 2));
    CHECK(!p.less(2, 0));
    CHECK(p.comp_count() == 3);
}

TEST_CASE("cycles and bad indices are rejected") {
    CHECK_THROWS_AS(Poset(2, {{0, 1}, {1, 0}}), CycleError);
    CHECK_THROWS_AS(Poset(3, {{0, 1}, {1, 2}, {2, 0}}), CycleError);
    CHECK_THROWS_AS(Poset(2, {{0, 2}}), IndexError);
    CHECK_THROWS_AS(Poset(2, {{-1, 0}}), IndexError);
}

TEST_CASE("empty relation gives an antichain") {
    Poset p(4, {});
    CHECK(p.comp_count() == 0);
    CHECK(p.height() == 1);
    CHECK(p.width() == 4);
    CHECK(p.level_partition().levels.size() == 1);
}

TEST_CASE("comp counts") {
    CHECK(chain_example(Partition{{5}}).comp_count() == 10);
    CHECK(chain_example(Partition{{3, 3}}).comp_count() == 6);
    // one max, one min, 4-antichain between
    Poset p(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 5}, {2, 5}, {3, 5}, {4, 5}});
    CHECK(p.comp_count() == 9);
}

TEST_CASE("height and width against subset brute force") {
    Poset two_chains = chain_example(Partition{{3, 3}});
    CHECK(two_chains.height() == 3);
    CHECK(two_chains.width() == 2);
    CHECK(two_chains.height() == height_bruteforce(two_chains));
    CHECK(two_chains.width() == width_bruteforce(two_chains));

    Poset bl = boolean_lattice(3);
    CHECK(bl.size() == 8);
    CHECK(bl.height() == 4);
    CHECK(bl.width() == 3);
    CHECK(bl.height() == height_bruteforce(bl));
    CHECK(bl.width() == width_bruteforce(bl));
}

TEST_CASE("width matching equals brute force on all posets n<=5") {
    for (int n = 1; n <= 5; ++n) {
        enumerate_labeled_posets(n, [&](const SmallPoset& sp) {
            Poset p = sp.to_poset();
            REQUIRE(p.width() == width_bruteforce(p));
        });
    }
}

TEST_CASE("balanced partitions") {
    CHECK(balanced_parts(7, 3).parts == std::vector<int>{2, 2, 3});
    CHECK(balanced_parts(6, 3).parts == std::vector<int>{2, 2, 2});
    CHECK(balanced_parts(5, 4).parts == std::vector<int>{1, 1, 1, 2});
    CHECK_THROWS_AS(balanced_parts(5, 0), RangeError);
    CHECK_THROWS_AS(balanced_parts(5, 6), RangeError);
}

TEST_CASE("two-block examples and the boolean lattice") {
    CHECK(two_block_chain(6, 3).comp_count() == 6);
    CHECK(two_block_antichain(6, 3).comp_count() == 9);
    CHECK_THROWS_AS(two_block_chain(6, 4), RangeError);
    CHECK(boolean_lattice(1).comp_count() == 1);
    CHECK(boolean_lattice(2).comp_count() == 5);
    CHECK(boolean_lattice(3).comp_count() == 19); // 3^t - 2^t
    CHECK_THROWS_AS(boolean_lattice(5), RangeError);
}

TEST_CASE("chain and antichain examples are complementary") {
    for (int n = 2; n <= 9; ++n)
        for (int k = 1; k <= n; ++k) {
            Partition parts = balanced_parts(n, k);
            int cc = chain_example(parts).comp_count();
            int ca = antichain_example(parts).comp_count();
            CHECK(cc + ca == choose2(n));
        }
}

TEST_CASE("balanced comp inequalities up to n=50") {
    for (int n = 1; n <= 50; ++n)
        for (int k = 1; k <= n; ++k) {
            Partition parts = balanced_parts(n, k);
            int64_t m = choose2(n);
            int64_t cc = chain_example(parts).comp_count();
            int64_t ca = antichain_example(parts).comp_count();
            CHECK(cc * k <= m);           // comp(C~) <= (1/k) C(n,2)
            CHECK(ca * k >= (k - 1) * m); // comp(A~) >= (1-1/k) C(n,2)
        }
}

TEST_CASE("levels are antichains covering the poset") {
    Poset bl = boolean_lattice(3);
    LevelPartition lp = bl.level_partition();
    REQUIRE(lp.levels.size() == 4);
    int total = 0;
    for (const auto& level : lp.levels) {
        total += int(level.size());
        for (size_t i = 0; i < level.size(); ++i)
            for (size_t j = i + 1; j < level.size(); ++j)
                CHECK(!bl.comparable(level[i], level[j]));
    }
    CHECK(total == bl.size());
    // every point above level 1 covers something one level down
    for (size_t li = 1; li < lp.levels.size(); ++li)
        for (int v : lp.levels[li]) {
            bool above_prev = false;
            for (int u : lp.levels[li - 1])
                if (bl.less(u, v)) above_prev = true;
            CHECK(above_prev);
        }
}
