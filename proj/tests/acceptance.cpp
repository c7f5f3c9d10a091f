// Acceptance gate: twelve numbered end-to-end checks, one PASS/FAIL line
// each.  Exit status is the number of failing checks.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "extenso/bounds.hpp"
#include "extenso/entropy.hpp"
#include "extenso/extension_count.hpp"
#include "extenso/extremal_search.hpp"
#include "extenso/random_orders.hpp"
#include "extenso/rng.hpp"

using namespace extenso;

namespace {

int failures = 0;

void report(int idx, const char* what, bool ok, const std::string& detail = "") {
    std::printf("criterion %2d: %s  %s%s%s\n", idx, ok ? "PASS" : "FAIL", what,
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++failures;
}

// Seeded random poset: orient each pair along a random permutation with
// probability ~0.35, then close transitively.  Always acyclic.
Poset random_poset(int n, uint64_t seed) {
    Rng rng(seed);
    std::vector<int> order = rng.permutation(n);
    std::vector<std::pair<int, int>> rel;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (rng.bounded(100) < 35) rel.emplace_back(order[a], order[b]);
    return Poset(n, rel);
}

double mpz_log2(const BigCount& v) {
    signed long exp;
    double d = mpz_get_d_2exp(&exp, v.get_mpz_t());
    return std::log2(d) + double(exp);
}

// 1. DP count == permutation brute force, exhaustively for n <= 6 and on
//    200 seeded random posets at n in {7, 8}.
void criterion_1() {
    long long mismatches = 0, checked = 0;
    for (int n = 1; n <= 6; ++n)
        enumerate_labeled_posets(n, [&](const SmallPoset& sp) {
            Poset p = sp.to_poset();
            ++checked;
            if (count_extensions(p) != count_extensions_bruteforce(p)) ++mismatches;
        });
    for (int i = 0; i < 200; ++i) {
        int n = 7 + (i & 1);
        Poset p = random_poset(n, 1000 + uint64_t(i));
        ++checked;
        if (count_extensions(p) != count_extensions_bruteforce(p)) ++mismatches;
    }
    report(1, "exact count equals permutation oracle", mismatches == 0,
           std::to_string(checked) + " posets, " + std::to_string(mismatches) + " mismatches");
}

// 2. Worked 6-point examples: two disjoint 3-chains and the
//    min / 4-antichain / max poset.
void criterion_2() {
    Poset c = chain_example(Partition{{3, 3}});
    Poset a = antichain_example(Partition{{1, 4, 1}});
    bool ok = c.comp_count() == 6 && count_extensions(c) == 20 && a.comp_count() == 9 &&
              count_extensions(a) == 24;
    report(2, "worked pairs (comp,e) = (6,20) and (9,24)", ok);
}

// 3. Exact extremal formulas agree with the exhaustive table at every
//    admissible (n, m), n <= 6.
void criterion_3() {
    long long exceptions = 0, admissible = 0;
    for (int n = 2; n <= 6; ++n) {
        ExtremalTable t = extremal_table(n);
        int64_t mm = choose2(n);
        for (int64_t m = 0; m <= mm; ++m) {
            // very dense: (1 - m/mm) * mm <= n/2, i.e. 2*(mm - m) <= n
            if (2 * (mm - m) <= n) {
                ++admissible;
                BigCount expect = 1;
                if (m > 0)
                    expect = fplus_dense_exact(n, Density(m, mm));
                else
                    mpz_mul_2exp(expect.get_mpz_t(), expect.get_mpz_t(), mm); // delta = 0
                if (t.at(m).f_plus_at_least_m != expect) ++exceptions;
            }
            // very sparse: (m/mm)*(n-1) <= 1, i.e. 2*m <= n
            if (2 * m <= n) {
                ++admissible;
                BigCount expect;
                if (m > 0)
                    expect = fminus_sparse_exact_count(n, Density(m, mm));
                else
                    mpz_fac_ui(expect.get_mpz_t(), unsigned(n));
                if (t.at(m).f_minus_at_most_m != expect) ++exceptions;
            }
        }
    }
    report(3, "dense/sparse closed forms match the exhaustive table", exceptions == 0,
           std::to_string(admissible) + " admissible cells, " + std::to_string(exceptions) +
               " exceptions");
}

// 4. Every applicable formula bound brackets the exact count, n <= 6.
void criterion_4() {
    long long violations = 0, checked = 0;
    for (int n = 1; n <= 6; ++n)
        enumerate_labeled_posets(n, [&](const SmallPoset& sp) {
            ++checked;
            if (!bounds_report(sp.to_poset()).sandwich_ok) ++violations;
        });
    report(4, "all bounds bracket the exact count", violations == 0,
           std::to_string(checked) + " posets, " + std::to_string(violations) + " violations");
}

// 5. Hook-length bound is tight exactly on the characterized class, n <= 6.
void criterion_5() {
    long long wrong = 0;
    const double eps = 1e-9;
    for (int n = 1; n <= 6; ++n)
        enumerate_labeled_posets(n, [&](const SmallPoset& sp) {
            Poset p = sp.to_poset();
            double lhs = std::log2(double(sp.extensions()));
            bool tight = std::abs(lhs - hook_lower_bound(p).log2) < eps;
            if (tight != hook_equality_holds(p)) ++wrong;
        });
    report(5, "hook bound tight exactly on the characterized class", wrong == 0);
}

// 6. Acyclic orientations of the comparability graph partition n!, and the
//    poset's own orientation attains the maximum, n <= 5.
void criterion_6() {
    long long bad = 0;
    for (int n = 1; n <= 5; ++n)
        enumerate_labeled_posets(n, [&](const SmallPoset& sp) {
            Poset p = sp.to_poset();
            auto profile = orientation_profile(p);
            BigCount total = 0, best = 0, own = 0;
            for (const auto& oc : profile) {
                total += oc.extensions;
                if (oc.extensions > best) best = oc.extensions;
                if (oc.is_poset_orientation) own = oc.extensions;
            }
            BigCount fact;
            mpz_fac_ui(fact.get_mpz_t(), unsigned(n));
            if (total != fact || own != best || own != count_extensions(p)) ++bad;
        });
    report(6, "orientation counts partition n! with the poset maximal", bad == 0);
}

// 7. Entropy complement identity and counting sandwich on a 50-poset set.
void criterion_7() {
    const double tol = 1e-6;
    double worst_split = 0.0;
    long long sandwich_fail = 0;
    std::vector<Poset> set;
    set.push_back(chain_example(Partition{{3, 3}}));
    set.push_back(antichain_example(Partition{{1, 4, 1}}));
    set.push_back(boolean_lattice(3));
    set.push_back(chain_example(Partition{{8}}));
    set.push_back(Poset(8, {}));
    for (int i = 0; int(set.size()) < 50; ++i) set.push_back(random_poset(4 + i % 5, 7000 + i));
    for (const Poset& p : set) {
        EntropySandwich s = entropy_sandwich(p, tol);
        double n = double(p.size());
        worst_split = std::max(worst_split,
                               std::abs(s.H_G + s.H_Gbar - std::log2(n)));
        double slack = n * 1e-4;
        if (s.entropy_lower_log2 > s.log2_e + slack || s.log2_e > s.entropy_upper_log2 + slack ||
            s.half_entropy_lower_log2 > s.log2_e + slack)
            ++sandwich_fail;
    }
    bool ok = worst_split <= 2e-4 && sandwich_fail == 0;
    char buf[96];
    std::snprintf(buf, sizeof buf, "worst |H+Hbar-log2 n| = %.2e, %lld sandwich failures",
                  worst_split, sandwich_fail);
    report(7, "entropy splits and brackets the count", ok, buf);
}

// 8. Monte Carlo chain-polytope volume within 4 stderr of exact e,
//    10 seeded posets n <= 10, 1e6 samples each.
void criterion_8() {
    auto t0 = std::chrono::steady_clock::now();
    long long misses = 0;
    double worst_sigma = 0.0;
    for (int i = 0; i < 10; ++i) {
        Poset p = random_poset(5 + i % 6, 8800 + uint64_t(i));
        double exact = mpz_log2(count_extensions(p));
        VolumeEstimate v = chain_volume_mc(p, 1000000, 9000 + uint64_t(i));
        double sig = std::abs(v.estimate - std::exp2(exact)) / v.stderr_;
        worst_sigma = std::max(worst_sigma, sig);
        if (sig > 4.0) ++misses;
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    char buf[96];
    std::snprintf(buf, sizeof buf, "worst deviation %.2f stderr, %.1f s", worst_sigma, secs);
    report(8, "volume Monte Carlo matches exact counts", misses == 0 && secs < 120.0, buf);
}

// 9. Random interval orders: mean comparable pairs near C(n,2)/3, and the
//    two-interval comparability probability near 1/3.
void criterion_9() {
    ConcentrationStats s = comp_concentration_experiment(100, 2000, 31);
    double mean_dev = std::abs(s.mean_z - 1650.0) / (s.sd_z / std::sqrt(2000.0));
    bool mean_ok = std::abs(s.mean_z - 1650.0) <= 3.0 * s.sd_z;

    long long comparable = 0;
    const long long trials = 100000;
    for (long long t = 0; t < trials; ++t) {
        auto [p, f] = concentration_trial(2, 77, t);
        if (p.comp_count() == 1) ++comparable;
    }
    double phat = double(comparable) / double(trials);
    double sigma = std::sqrt((1.0 / 3.0) * (2.0 / 3.0) / double(trials));
    bool pair_ok = std::abs(phat - 1.0 / 3.0) <= 3.0 * sigma;
    char buf[96];
    std::snprintf(buf, sizeof buf, "mean %.1f (dev %.2f sd of mean), pair rate %.4f", s.mean_z,
                  mean_dev, phat);
    report(9, "interval-order comparability statistics", mean_ok && pair_ok, buf);
}

// 10. Dyadic decomposition: groups are antichains, no precedence runs
//     against the dyadic order, and both factorial bounds hold, on 200
//     seeded families with n <= 12.
void criterion_10() {
    long long bad = 0;
    for (int t = 0; t < 200; ++t) {
        int n = 4 + t % 9;
        auto [p, f] = sample_interval_poset(n, 5000 + uint64_t(t));
        DyadicBound db = dyadic_lower_bound(f);
        BigCount e = count_extensions(p);
        if (db.factorial_product > e) ++bad;
        BigCount af;
        mpz_fac_ui(af.get_mpz_t(), unsigned(max_antichain_size(p)));
        if (af > e) ++bad;
        // groups are antichains
        for (const auto& g : db.groups)
            for (size_t a = 0; a < g.members.size(); ++a)
                for (size_t b = a + 1; b < g.members.size(); ++b)
                    if (p.comparable(g.members[a], g.members[b])) ++bad;
        // no member of a later group (by dyadic point) precedes an earlier one
        auto point = [](const DyadicGroup& g) { return double(g.i) / std::exp2(g.j); };
        for (const auto& g1 : db.groups)
            for (const auto& g2 : db.groups)
                if (point(g1) < point(g2))
                    for (int x : g2.members)
                        for (int y : g1.members)
                            if (p.less(x, y)) ++bad;
    }
    report(10, "dyadic groups behave and bound the count", bad == 0,
           "200 families, " + std::to_string(bad) + " defects");
}

// 11. Construction witnesses at n = 1000 for four densities.
void criterion_11() {
    long long bad = 0, families = 0;
    for (auto [p, q] :
         {std::pair<int64_t, int64_t>{1, 10}, {1, 3}, {1, 2}, {9, 10}}) {
        for (const auto& c : construction_bounds_check(1000, Density(p, q))) {
            ++families;
            if (!c.comp_ok || !c.bound_ok) ++bad;
        }
    }
    report(11, "witness families verified at n = 1000", bad == 0,
           std::to_string(families) + " families, " + std::to_string(bad) + " failures");
}

// 12. Conjecture harness completes for all n <= 6, 2 <= k <= n, and any
//     counterexample witnesses decode into valid posets.
void criterion_12() {
    long long runs = 0, holds = 0, invalid_witness = 0;
    for (int n = 2; n <= 6; ++n)
        for (int k = 2; k <= n; ++k)
            for (int side = 0; side < 2; ++side) {
                ConjectureReport r = side == 0 ? check_conjecture_antichain(n, k)
                                               : check_conjecture_chain(n, k);
                ++runs;
                if (r.pass) ++holds;
                if (r.counterexample) {
                    try {
                        Poset w = decode_small_poset(n, *r.counterexample);
                        if (w.comp_count() != r.counterexample_comp ||
                            count_extensions(w) != r.counterexample_e)
                            ++invalid_witness;
                    } catch (const std::exception&) {
                        ++invalid_witness;
                    }
                }
            }
    report(12, "conjecture harness complete with valid verdicts", invalid_witness == 0,
           std::to_string(runs) + " runs, " + std::to_string(holds) + " hold, " +
               std::to_string(runs - holds) + " refuted");
}

} // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    criterion_12();
    std::printf("%s (%d failing)\n", failures == 0 ? "ALL CRITERIA PASS" : "FAILURES PRESENT",
                failures);
    return failures;
}
