#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "extenso/extension_count.hpp"
#include "extenso/poset.hpp"

namespace extenso {

// n closed intervals in (0,1); a_j < b_j strictly.
struct IntervalFamily {
    std::vector<std::pair<double, double>> intervals;

    int size() const { return static_cast<int>(intervals.size()); }
};

// Interval order: i < j iff interval i ends before interval j begins.
Poset interval_poset(const IntervalFamily& f);

// 2n independent uniforms paired into intervals; ties resampled.
std::pair<Poset, IntervalFamily> sample_interval_poset(int n, uint64_t seed);

// Intersection of k independent uniform linear orders.
Poset sample_kdim_poset(int n, int k, uint64_t seed);
// Deterministic variant for fixtures: poset from explicitly given orders.
Poset kdim_poset_from_orders(const std::vector<std::vector<int>>& orders);

// True iff the poset contains no induced 2+2 (interval orders are exactly
// the 2+2-free posets).
bool has_induced_two_plus_two(const Poset& p);

struct ConcentrationStats {
    int n = 0;
    int64_t trials = 0;
    double expected_z = 0.0; // C(n,2)/3
    double mean_z = 0.0;
    double sd_z = 0.0;
    // |Z - C(n,2)/3| >= a*C(n,2) tail fractions vs. 2 exp(-a^2 n / 2)
    std::vector<double> thresholds{0.05, 0.1};
    std::vector<double> tail_fraction;
    std::vector<double> tail_bound;
};

// Sharded across threads with per-trial derived seeds; results do not
// depend on thread count.
ConcentrationStats comp_concentration_experiment(int n, int64_t trials, uint64_t seed);

// The exact family trial t of the experiment draws, for per-trial output.
std::pair<Poset, IntervalFamily> concentration_trial(int n, uint64_t seed, int64_t trial);

// The unique minimal-level dyadic point i/2^j inside (a, b), i odd.
std::pair<int64_t, int> dyadic_group_of(double a, double b);

struct DyadicGroup {
    int64_t i = 0;
    int j = 0;
    std::vector<int> members;
};

struct DyadicBound {
    std::vector<DyadicGroup> groups;
    BigCount factorial_product;       // prod N(i,j)!
    std::vector<int64_t> level_totals; // N_j, indexed from j=1
    double refined_log2 = 0.0;        // sum_j N_j log2(N_j / 2^{j-1})
};

DyadicBound dyadic_lower_bound(const IntervalFamily& f);

// Maximum antichain, i.e. width of the poset.
int max_antichain_size(const Poset& p);

} // namespace extenso
