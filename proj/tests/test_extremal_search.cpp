#include <doctest.h>

#include <map>

#include "extenso/extremal_search.hpp"

using namespace extenso;

TEST_CASE("labeled poset counts match the known sequence") {
    // 1, 3, 19, 219, 4231, 130023 labeled posets on 1..6 points
    CHECK(count_labeled_posets(1) == 1);
    CHECK(count_labeled_posets(2) == 3);
    CHECK(count_labeled_posets(3) == 19);
    CHECK(count_labeled_posets(4) == 219);
    CHECK(count_labeled_posets(5) == 4231);
    CHECK(count_labeled_posets(6) == 130023);
}

TEST_CASE("enumeration yields distinct valid posets") {
    std::map<uint64_t, int> seen;
    enumerate_labeled_posets(4, [&](const SmallPoset& sp) {
        CHECK(++seen[sp.encode()] == 1);
        Poset p = sp.to_poset(); // would throw on a broken relation
        CHECK(p.comp_count() == sp.comp());
        CHECK(BigCount(sp.extensions()) == count_extensions(p));
        Poset rt = decode_small_poset(4, sp.encode());
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) CHECK(rt.less(i, j) == p.less(i, j));
    });
    CHECK(seen.size() == 219);
}

TEST_CASE("enumeration cap is enforced") {
    CHECK_THROWS_AS(enumerate_labeled_posets(7, [](const SmallPoset&) {}, 6), RangeError);
    CHECK_THROWS_AS(enumerate_labeled_posets(9, [](const SmallPoset&) {}), RangeError);
}

TEST_CASE("prefix subtrees partition the enumeration") {
    uint64_t via_prefixes = 0;
    for (const SmallPoset& root : enumeration_prefixes(5)) {
        SmallPoset p = root;
        auto count = [&](const SmallPoset&) { ++via_prefixes; };
        detail::extend_posets(5, root.n, p, count);
    }
    CHECK(via_prefixes == 4231);
}

TEST_CASE("extremal table n=3 spot values") {
    ExtremalTable t = extremal_table(3);
    CHECK(t.total_posets == 19);
    // comp >= 1 still allows e = 3 (single relation on 3 points)
    CHECK(t.at(1).f_plus_at_least_m == 3);
    // comp <= 2 forces e >= 2 (chain plus isolated point is optimal)
    CHECK(t.at(2).f_minus_at_most_m == 2);
    // full chain and full antichain at the ends
    CHECK(t.at(3).f_plus_at_least_m == 1);
    CHECK(t.at(0).f_minus_at_most_m == 6);
    CHECK(t.at(0).f_plus_at_least_m == 6);
    CHECK(t.at(3).f_minus_at_most_m == 1);
}

TEST_CASE("table is monotone and witnesses check out") {
    for (int n : {3, 4, 5}) {
        ExtremalTable t = extremal_table(n);
        int64_t m_max = choose2(n);
        REQUIRE(int64_t(t.records.size()) == m_max + 1);
        for (int64_t m = 0; m <= m_max; ++m) {
            const ExtremalRecord& r = t.at(m);
            if (m > 0) {
                CHECK(r.f_plus_at_least_m <= t.at(m - 1).f_plus_at_least_m);
                CHECK(r.f_minus_at_most_m <= t.at(m - 1).f_minus_at_most_m);
            }
            Poset wp = decode_small_poset(n, r.plus_witness);
            CHECK(wp.comp_count() >= m);
            CHECK(count_extensions(wp) == r.f_plus_at_least_m);
            Poset wm = decode_small_poset(n, r.minus_witness);
            CHECK(wm.comp_count() <= m);
            CHECK(count_extensions(wm) == r.f_minus_at_most_m);
        }
    }
}

TEST_CASE("table agrees with a direct scan at n=4") {
    std::vector<BigCount> best_max(7, 0), best_min(7);
    enumerate_labeled_posets(4, [&](const SmallPoset& sp) {
        BigCount e = sp.extensions();
        int c = sp.comp();
        if (e > best_max[c]) best_max[c] = e;
        if (best_min[c] == 0 || e < best_min[c]) best_min[c] = e;
    });
    ExtremalTable t = extremal_table(4);
    for (int64_t m = 0; m <= 6; ++m) {
        BigCount mx = 0, mn = 0;
        for (int c = int(m); c <= 6; ++c)
            if (best_max[c] > mx) mx = best_max[c];
        for (int c = 0; c <= int(m); ++c)
            if (mn == 0 || (best_min[c] != 0 && best_min[c] < mn)) mn = best_min[c];
        CHECK(t.at(m).f_plus_at_least_m == mx);
        CHECK(t.at(m).f_minus_at_most_m == mn);
    }
}

TEST_CASE("sweep output does not depend on the job count") {
    ExtremalTable t1 = extremal_table(5, 1);
    ExtremalTable t4 = extremal_table(5, 4);
    REQUIRE(t1.records.size() == t4.records.size());
    for (size_t m = 0; m < t1.records.size(); ++m) {
        CHECK(t1.records[m].f_plus_at_least_m == t4.records[m].f_plus_at_least_m);
        CHECK(t1.records[m].f_minus_at_most_m == t4.records[m].f_minus_at_most_m);
        CHECK(t1.records[m].plus_witness == t4.records[m].plus_witness);
        CHECK(t1.records[m].minus_witness == t4.records[m].minus_witness);
    }
}

TEST_CASE("conjecture checks on small ground sets") {
    for (int n = 2; n <= 5; ++n)
        for (int k = 2; k <= n; ++k) {
            ConjectureReport a = check_conjecture_antichain(n, k);
            INFO("antichain n=", n, " k=", k);
            CHECK(a.pass);
            CHECK(a.family == "antichain");
            ConjectureReport c = check_conjecture_chain(n, k);
            INFO("chain n=", n, " k=", k);
            CHECK(c.pass);
            CHECK(c.family == "chain");
        }
}

TEST_CASE("conjecture thresholds match the balanced constructions") {
    ConjectureReport a = check_conjecture_antichain(4, 2);
    // A~(4,2): two 2-antichains stacked; comp = 4, e = 2!*2! = 4
    CHECK(a.comp_threshold == 4);
    CHECK(a.construction_e == 4);
    ConjectureReport c = check_conjecture_chain(4, 2);
    // C~(4,2): two disjoint 2-chains; comp = 2, e = C(4,2) = 6
    CHECK(c.comp_threshold == 2);
    CHECK(c.construction_e == 6);
}
