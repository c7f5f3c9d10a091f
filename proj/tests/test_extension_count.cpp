#include <doctest.h>

#include <cmath>
#include <map>

#include "extenso/extension_count.hpp"
#include "extenso/extremal_search.hpp"
#include "extenso/poset.hpp"

using namespace extenso;

TEST_CASE("worked small cases") {
    // two disjoint 3-chains: multinomial(6; 3,3) = 20
    CHECK(count_extensions(chain_example(Partition{{3, 3}})) == 20);
    // 1 < {4-antichain} < 1: 4! = 24
    CHECK(count_extensions(antichain_example(Partition{{1, 4, 1}})) == 24);
    CHECK(count_extensions(Poset(1, {})) == 1);
    CHECK(count_extensions(Poset(5, {})) == 120);
    CHECK(count_extensions(chain_example(Partition{{6}})) == 1);
}

TEST_CASE("chains of chains: multinomial coefficient") {
    // e(C~) = n! / prod n_i!
    CHECK(count_extensions(chain_example(Partition{{2, 2, 2}})) == 90);
    CHECK(count_extensions(chain_example(Partition{{1, 2, 3}})) == 60);
    CHECK(count_extensions(chain_example(Partition{{4, 4}})) == 70);
}

TEST_CASE("antichains of antichains: product of factorials") {
    // e(A~) = prod n_i!
    CHECK(count_extensions(antichain_example(Partition{{3, 3}})) == 36);
    CHECK(count_extensions(antichain_example(Partition{{2, 3, 2}})) == 24);
    CHECK(count_extensions(antichain_example(Partition{{4, 1, 3}})) == 144);
}

TEST_CASE("dp equals permutation brute force on every poset n<=5") {
    for (int n = 1; n <= 5; ++n) {
        enumerate_labeled_posets(n, [&](const SmallPoset& sp) {
            Poset p = sp.to_poset();
            REQUIRE(count_extensions(p) == count_extensions_bruteforce(p));
            REQUIRE(BigCount(sp.extensions()) == count_extensions_bruteforce(p));
        });
    }
}

TEST_CASE("boolean lattice counts") {
    CHECK(count_extensions(boolean_lattice(2)) == 2);
    CHECK(count_extensions(boolean_lattice(3)) == 48);
    CHECK(count_extensions_bruteforce(boolean_lattice(3)) == 48);
}

TEST_CASE("bignum path agrees with the dense path") {
    // disjoint chains keep downset counts small, so n=24 stays cheap
    Poset p = chain_example(Partition{{6, 6, 6, 6}});
    CountingCaps caps;
    caps.max_n = 30;
    BigCount e = count_extensions(p, caps);
    // multinomial(24; 6,6,6,6)
    CHECK(e == BigCount("2308743493056"));
}

TEST_CASE("caps raise CapacityError") {
    Poset p(21, {});
    CountingCaps caps; // max_n = 20
    CHECK_THROWS_AS(count_extensions(p, caps), CapacityError);
    CountingCaps tiny;
    tiny.memory_budget = 16;
    CHECK_THROWS_AS(count_extensions(Poset(8, {}), tiny), CapacityError);
}

TEST_CASE("hook lengths and the hook bound") {
    Poset chain = chain_example(Partition{{4}});
    HookVector h = hook_lengths(chain);
    CHECK(h.lambda == std::vector<int>{1, 2, 3, 4});
    CHECK(hook_lower_bound(chain).log2 == doctest::Approx(0.0));

    Poset anti(3, {});
    CHECK(hook_lengths(anti).lambda == std::vector<int>{1, 1, 1});
    CHECK(hook_lower_bound(anti).log2 == doctest::Approx(std::log2(6.0)));
}

TEST_CASE("hook equality characterization, exhaustive n<=5") {
    for (int n = 1; n <= 5; ++n) {
        enumerate_labeled_posets(n, [&](const SmallPoset& sp) {
            Poset p = sp.to_poset();
            double lhs = std::log2(double(sp.extensions()));
            double rhs = hook_lower_bound(p).log2;
            REQUIRE(lhs >= rhs - 1e-9);
            bool tight = std::abs(lhs - rhs) < 1e-9;
            REQUIRE(tight == hook_equality_holds(p));
        });
    }
}

TEST_CASE("orientation profile partitions n!") {
    for (const Poset& p : {chain_example(Partition{{3, 2}}), antichain_example(Partition{{1, 3, 1}}),
                           boolean_lattice(2), Poset(4, {{0, 1}, {0, 2}, {0, 3}})}) {
        auto profile = orientation_profile(p);
        BigCount total = 0;
        int poset_hits = 0;
        BigCount poset_count = 0;
        for (const auto& oc : profile) {
            total += oc.extensions;
            if (oc.is_poset_orientation) {
                ++poset_hits;
                poset_count = oc.extensions;
            }
        }
        BigCount fact = 1;
        for (int i = 2; i <= p.size(); ++i) fact *= i;
        CHECK(total == fact);
        CHECK(poset_hits == 1);
        CHECK(poset_count == count_extensions(p));
    }
}

TEST_CASE("orientation profile rejects large comparability graphs") {
    CHECK_THROWS_AS(orientation_profile(chain_example(Partition{{6}})), CapacityError);
}
