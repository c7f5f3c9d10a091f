#include "extenso/random_orders.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include <omp.h>

#include "extenso/rng.hpp"

namespace extenso {

Poset interval_poset(const IntervalFamily& f) {
    int n = f.size();
    std::vector<std::pair<int, int>> rel;
    for (int i = 0; i < n; ++i) {
        auto [ai, bi] = f.intervals[i];
        if (!(0.0 < ai && ai < bi && bi < 1.0))
            throw RangeError("interval_poset: intervals must satisfy 0 < a < b < 1");
        for (int j = 0; j < n; ++j)
            if (i != j && bi < f.intervals[j].first) rel.emplace_back(i, j);
    }
    return Poset(std::max(n, 1), rel);
}

namespace {

IntervalFamily sample_intervals(int n, Rng& rng) {
    IntervalFamily f;
    f.intervals.reserve(n);
    for (int j = 0; j < n; ++j) {
        double x, y;
        do {
            x = rng.uniform();
            y = rng.uniform();
        } while (x == y || x == 0.0 || y == 0.0);
        f.intervals.emplace_back(std::min(x, y), std::max(x, y));
    }
    return f;
}

int interval_comp_count(const IntervalFamily& f) {
    int z = 0;
    int n = f.size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            auto [ai, bi] = f.intervals[i];
            auto [aj, bj] = f.intervals[j];
            if (bi < aj || bj < ai) ++z;
        }
    return z;
}

} // namespace

std::pair<Poset, IntervalFamily> sample_interval_poset(int n, uint64_t seed) {
    if (n < 1) throw RangeError("sample_interval_poset: n < 1");
    Rng rng(seed);
    IntervalFamily f = sample_intervals(n, rng);
    return {interval_poset(f), std::move(f)};
}

Poset kdim_poset_from_orders(const std::vector<std::vector<int>>& orders) {
    if (orders.empty()) throw RangeError("kdim_poset_from_orders: need at least one order");
    int n = static_cast<int>(orders[0].size());
    std::vector<std::vector<int>> pos(orders.size(), std::vector<int>(n));
    for (size_t i = 0; i < orders.size(); ++i) {
        if (static_cast<int>(orders[i].size()) != n)
            throw RangeError("kdim_poset_from_orders: order length mismatch");
        std::vector<bool> seen(n, false);
        for (int v : orders[i]) {
            if (v < 0 || v >= n || seen[v])
                throw PreconditionError("kdim_poset_from_orders: order is not a permutation of [n]");
            seen[v] = true;
        }
        for (int idx = 0; idx < n; ++idx) pos[i][orders[i][idx]] = idx;
    }
    std::vector<std::pair<int, int>> rel;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (x == y) continue;
            bool before_all = true;
            for (auto& pv : pos)
                if (pv[x] >= pv[y]) { before_all = false; break; }
            if (before_all) rel.emplace_back(x, y);
        }
    return Poset(n, rel);
}

Poset sample_kdim_poset(int n, int k, uint64_t seed) {
    if (n < 1 || k < 1) throw RangeError("sample_kdim_poset: need n >= 1 and k >= 1");
    Rng rng(seed);
    std::vector<std::vector<int>> orders;
    for (int i = 0; i < k; ++i) orders.push_back(rng.permutation(n));
    return kdim_poset_from_orders(orders);
}

bool has_induced_two_plus_two(const Poset& p) {
    int n = p.size();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (!p.less(a, b)) continue;
            for (int c = 0; c < n; ++c) {
                if (c == a || c == b) continue;
                for (int d = 0; d < n; ++d) {
                    if (d == a || d == b || d == c || !p.less(c, d)) continue;
                    if (!p.comparable(a, c) && !p.comparable(a, d) &&
                        !p.comparable(b, c) && !p.comparable(b, d))
                        return true;
                }
            }
        }
    return false;
}

ConcentrationStats comp_concentration_experiment(int n, int64_t trials, uint64_t seed) {
    if (trials < 30) throw RangeError("comp_concentration_experiment: need >= 30 trials");
    ConcentrationStats st;
    st.n = n;
    st.trials = trials;
    int64_t m = choose2(n);
    st.expected_z = double(m) / 3.0;

    std::vector<int> z(trials);
    Rng base(seed);
#pragma omp parallel for schedule(static)
    for (int64_t t = 0; t < trials; ++t) {
        Rng rng = base.derive(uint64_t(t));
        IntervalFamily f = sample_intervals(n, rng);
        z[t] = interval_comp_count(f);
    }

    double sum = 0.0;
    for (int v : z) sum += v;
    st.mean_z = sum / double(trials);
    double ss = 0.0;
    for (int v : z) ss += (v - st.mean_z) * (v - st.mean_z);
    st.sd_z = trials > 1 ? std::sqrt(ss / double(trials - 1)) : 0.0;
    for (double a : st.thresholds) {
        int64_t hits = 0;
        for (int v : z)
            if (std::fabs(double(v) - st.expected_z) >= a * double(m)) ++hits;
        st.tail_fraction.push_back(double(hits) / double(trials));
        st.tail_bound.push_back(2.0 * std::exp(-a * a * double(n) / 2.0));
    }
    return st;
}

std::pair<Poset, IntervalFamily> concentration_trial(int n, uint64_t seed, int64_t trial) {
    Rng rng = Rng(seed).derive(uint64_t(trial));
    IntervalFamily f = sample_intervals(n, rng);
    return {interval_poset(f), std::move(f)};
}

std::pair<int64_t, int> dyadic_group_of(double a, double b) {
    if (!(0.0 < a && a < b && b < 1.0)) throw RangeError("dyadic_group_of: need 0 < a < b < 1");
    double scale = 1.0;
    for (int j = 1; j <= 60; ++j) {
        scale *= 2.0; // exact: power-of-two scaling
        int64_t lo = int64_t(std::floor(a * scale)) + 1;
        int64_t hi = int64_t(std::ceil(b * scale)) - 1; // strict: an exact endpoint is excluded
        if (lo <= hi) {
            if ((lo & 1) == 0)
                throw DegenerateError("dyadic_group_of: even index at minimal level (dyadic endpoint)");
            return {lo, j};
        }
    }
    throw DegenerateError("dyadic_group_of: no dyadic point found up to level 60");
}

DyadicBound dyadic_lower_bound(const IntervalFamily& f) {
    DyadicBound out;
    std::map<std::pair<int, int64_t>, std::vector<int>> groups; // (j, i) -> members
    for (int k = 0; k < f.size(); ++k) {
        auto [i, j] = dyadic_group_of(f.intervals[k].first, f.intervals[k].second);
        groups[{j, i}].push_back(k);
    }
    out.factorial_product = 1;
    int max_j = 0;
    for (auto& [key, members] : groups) max_j = std::max(max_j, key.first);
    out.level_totals.assign(max_j + 1, 0);
    for (auto& [key, members] : groups) {
        DyadicGroup g;
        g.j = key.first;
        g.i = key.second;
        g.members = members;
        out.level_totals[g.j] += static_cast<int64_t>(members.size());
        BigCount fac;
        mpz_fac_ui(fac.get_mpz_t(), static_cast<unsigned long>(members.size()));
        out.factorial_product *= fac;
        out.groups.push_back(std::move(g));
    }
    out.refined_log2 = 0.0;
    for (int j = 1; j <= max_j; ++j) {
        int64_t nj = out.level_totals[j];
        if (nj > 0) out.refined_log2 += double(nj) * std::log2(double(nj) / std::exp2(j - 1));
    }
    return out;
}

int max_antichain_size(const Poset& p) { return p.width(); }

} // namespace extenso
