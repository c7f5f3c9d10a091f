#include "extenso/extension_count.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <unordered_map>

namespace extenso {

namespace {

std::vector<uint32_t> below_masks32(const Poset& p) {
    std::vector<uint32_t> below(p.size());
    for (int v = 0; v < p.size(); ++v)
        below[v] = uint32_t(p.below_words(v)[0]);
    return below;
}

} // namespace

CountingCaps counting_caps_from_env() {
    CountingCaps caps;
    if (const char* s = std::getenv("EXTENSO_CAP_N")) {
        int v = std::atoi(s);
        if (v > 0) caps.max_n = v;
    }
    return caps;
}

uint64_t count_extensions_dense_u64(const std::vector<uint64_t>& below, int n) {
    std::vector<uint64_t> f(size_t(1) << n, 0);
    f[0] = 1;
    uint64_t full = (n == 64) ? ~uint64_t(0) : (uint64_t(1) << n) - 1;
    for (uint64_t mask = 0; mask < full; ++mask) {
        uint64_t fm = f[mask];
        if (fm == 0) continue;
        uint64_t cand = ~mask & full;
        while (cand) {
            int x = std::countr_zero(cand);
            cand &= cand - 1;
            if ((below[x] & ~mask) == 0) f[mask | (uint64_t(1) << x)] += fm;
        }
    }
    return f[full];
}

BigCount count_extensions(const Poset& p, const CountingCaps& caps) {
    int n = p.size();
    if (n > caps.max_n)
        throw CapacityError("count_extensions: n=" + std::to_string(n) + " exceeds cap " +
                            std::to_string(caps.max_n) + " (set EXTENSO_CAP_N to raise)");
    if (n <= 20) {
        if ((size_t(8) << n) > caps.memory_budget)
            throw CapacityError("count_extensions: downset table exceeds memory budget");
        std::vector<uint64_t> below(n);
        for (int v = 0; v < n; ++v) below[v] = p.below_words(v)[0];
        uint64_t e = count_extensions_dense_u64(below, n);
        return BigCount(e);
    }
    if (n > 63) throw CapacityError("count_extensions: n > 63 unsupported");
    // Stream downsets level by level; only two popcount layers live at once.
    std::vector<uint64_t> below(n);
    for (int v = 0; v < n; ++v) below[v] = p.below_words(v)[0];
    uint64_t full = (uint64_t(1) << n) - 1;
    std::unordered_map<uint64_t, BigCount> cur;
    cur[0] = 1;
    for (int level = 0; level < n; ++level) {
        std::unordered_map<uint64_t, BigCount> next;
        for (auto& [mask, cnt] : cur) {
            uint64_t cand = ~mask & full;
            while (cand) {
                int x = std::countr_zero(cand);
                cand &= cand - 1;
                if ((below[x] & ~mask) == 0) next[mask | (uint64_t(1) << x)] += cnt;
            }
            if ((cur.size() + next.size()) * 96 > caps.memory_budget)
                throw CapacityError("count_extensions: downset table exceeds memory budget");
        }
        cur = std::move(next);
    }
    return cur.at(full);
}

BigCount count_extensions_bruteforce(const Poset& p) {
    int n = p.size();
    if (n > 10) throw RangeError("count_extensions_bruteforce: n > 10");
    std::vector<uint32_t> below = below_masks32(p);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    uint64_t count = 0;
    do {
        uint32_t seen = 0;
        bool ok = true;
        for (int x : perm) {
            if (below[x] & ~seen) { ok = false; break; }
            seen |= uint32_t(1) << x;
        }
        if (ok) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return BigCount(count);
}

HookVector hook_lengths(const Poset& p) {
    HookVector h;
    h.lambda.resize(p.size());
    for (int v = 0; v < p.size(); ++v) {
        int c = 0;
        for (uint64_t w : p.below_words(v)) c += std::popcount(w);
        h.lambda[v] = c + 1;
    }
    return h;
}

LogValue hook_lower_bound(const Poset& p) {
    HookVector h = hook_lengths(p);
    double l = log2_factorial(p.size());
    for (int lam : h.lambda) l -= std::log2(double(lam));
    return LogValue{l};
}

bool hook_equality_holds(const Poset& p) {
    // Equality class of the downset hook bound: every point has at most one
    // upper cover, so each component is a tree hanging below its unique
    // maximal point and the downsets multiply out exactly.
    int n = p.size();
    for (int v = 0; v < n; ++v) {
        int covers = 0;
        for (int u = 0; u < n; ++u) {
            if (!p.less(v, u)) continue;
            bool is_cover = true;
            for (int w = 0; w < n; ++w)
                if (p.less(v, w) && p.less(w, u)) { is_cover = false; break; }
            if (is_cover && ++covers > 1) return false;
        }
    }
    return true;
}

std::vector<OrientationCount> orientation_profile(const Poset& p) {
    int n = p.size();
    auto edges = p.comparability_edges();
    int m = static_cast<int>(edges.size());
    if (m > 14) throw CapacityError("orientation_profile: comp(P) > 14");
    if (n > 20) throw CapacityError("orientation_profile: n > 20");

    uint64_t poset_bits = 0;
    for (int i = 0; i < m; ++i)
        if (p.less(edges[i].second, edges[i].first)) poset_bits |= uint64_t(1) << i;

    std::vector<OrientationCount> out;
    std::vector<uint64_t> below(n);
    for (uint64_t bits = 0; bits < (uint64_t(1) << m); ++bits) {
        std::fill(below.begin(), below.end(), 0);
        for (int i = 0; i < m; ++i) {
            auto [a, b] = edges[i];
            if ((bits >> i) & 1u)
                below[a] |= uint64_t(1) << b; // b below a
            else
                below[b] |= uint64_t(1) << a; // a below b
        }
        // cyclic orientations admit no consistent linear order and drop out
        uint64_t cnt = count_extensions_dense_u64(below, n);
        if (cnt == 0) continue;
        out.push_back({bits, BigCount(cnt), bits == poset_bits});
    }
    return out;
}

} // namespace extenso
