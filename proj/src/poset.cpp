#include "extenso/poset.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

namespace extenso {

namespace {

int popcount_words(const std::vector<uint64_t>& w) {
    int c = 0;
    for (uint64_t x : w) c += std::popcount(x);
    return c;
}

bool subset_words(const std::vector<uint64_t>& a, const std::vector<uint64_t>& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] & ~b[i]) return false;
    return true;
}

} // namespace

int Partition::total() const {
    return std::accumulate(parts.begin(), parts.end(), 0);
}

Poset::Poset(int n, const std::vector<std::pair<int, int>>& relations) : n_(n) {
    if (n <= 0) throw RangeError("poset must have at least one point");
    words_ = (n + 63) / 64;
    below_.assign(n, std::vector<uint64_t>(words_, 0));
    for (auto [a, b] : relations) {
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw IndexError("relation endpoint out of range: (" + std::to_string(a) +
                             "," + std::to_string(b) + ")");
        if (a == b) throw CycleError("self-relation on point " + std::to_string(a));
        below_[b][a >> 6] |= uint64_t(1) << (a & 63);
    }
    // Warshall over bit rows.
    for (int k = 0; k < n; ++k)
        for (int b = 0; b < n; ++b)
            if ((below_[b][k >> 6] >> (k & 63)) & 1u)
                for (int w = 0; w < words_; ++w) below_[b][w] |= below_[k][w];
    for (int a = 0; a < n; ++a)
        if ((below_[a][a >> 6] >> (a & 63)) & 1u)
            throw CycleError("relation pairs imply a cycle through point " + std::to_string(a));
    above_.assign(n, std::vector<uint64_t>(words_, 0));
    for (int b = 0; b < n; ++b)
        for (int a = 0; a < n; ++a)
            if ((below_[b][a >> 6] >> (a & 63)) & 1u)
                above_[a][b >> 6] |= uint64_t(1) << (b & 63);
}

int Poset::comp_count() const {
    int total = 0;
    for (int b = 0; b < n_; ++b) total += popcount_words(below_[b]);
    return total;
}

int Poset::height() const {
    // below_ is closed, so sorting by downset size is a topological order.
    std::vector<int> order(n_), depth(n_, 1);
    std::iota(order.begin(), order.end(), 0);
    std::vector<int> dsz(n_);
    for (int v = 0; v < n_; ++v) dsz[v] = popcount_words(below_[v]);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return dsz[a] < dsz[b]; });
    int h = 0;
    for (int v : order) {
        for (int u = 0; u < n_; ++u)
            if (less(u, v)) depth[v] = std::max(depth[v], depth[u] + 1);
        h = std::max(h, depth[v]);
    }
    return h;
}

int Poset::width() const {
    // Dilworth: width = n - max matching in the comparability DAG.
    std::vector<std::vector<int>> adj(n_);
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            if (less(a, b)) adj[a].push_back(b);
    std::vector<int> match_right(n_, -1);
    std::vector<char> used;
    auto augment = [&](auto&& self, int v) -> bool {
        for (int u : adj[v]) {
            if (used[u]) continue;
            used[u] = 1;
            if (match_right[u] < 0 || self(self, match_right[u])) {
                match_right[u] = v;
                return true;
            }
        }
        return false;
    };
    int matching = 0;
    for (int v = 0; v < n_; ++v) {
        used.assign(n_, 0);
        if (augment(augment, v)) ++matching;
    }
    return n_ - matching;
}

LevelPartition Poset::level_partition() const {
    LevelPartition lp;
    std::vector<uint64_t> removed(words_, 0);
    int placed = 0;
    while (placed < n_) {
        std::vector<int> level;
        for (int v = 0; v < n_; ++v) {
            if ((removed[v >> 6] >> (v & 63)) & 1u) continue;
            if (subset_words(below_[v], removed)) level.push_back(v);
        }
        for (int v : level) removed[v >> 6] |= uint64_t(1) << (v & 63);
        placed += static_cast<int>(level.size());
        lp.levels.push_back(std::move(level));
    }
    return lp;
}

std::vector<int> Poset::minimal_points() const {
    std::vector<int> out;
    for (int v = 0; v < n_; ++v)
        if (popcount_words(below_[v]) == 0) out.push_back(v);
    return out;
}

std::vector<int> Poset::maximal_points() const {
    std::vector<int> out;
    for (int v = 0; v < n_; ++v)
        if (popcount_words(above_[v]) == 0) out.push_back(v);
    return out;
}

std::vector<std::pair<int, int>> Poset::relation_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int b = 0; b < n_; ++b)
        for (int a = 0; a < n_; ++a)
            if (less(a, b)) out.emplace_back(a, b);
    return out;
}

std::vector<std::pair<int, int>> Poset::comparability_edges() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < n_; ++a)
        for (int b = a + 1; b < n_; ++b)
            if (comparable(a, b)) out.emplace_back(a, b);
    return out;
}

Partition balanced_parts(int n, int k) {
    if (k < 1 || k > n) throw RangeError("balanced_parts: k must be in [1, n]");
    Partition p;
    int q = n / k, r = n % k;
    // small parts first, per the nondecreasing convention
    for (int i = 0; i < k - r; ++i) p.parts.push_back(q);
    for (int i = 0; i < r; ++i) p.parts.push_back(q + 1);
    return p;
}

Poset chain_example(const Partition& parts) {
    int n = parts.total();
    std::vector<std::pair<int, int>> rel;
    int base = 0;
    for (int sz : parts.parts) {
        if (sz <= 0) throw RangeError("chain_example: parts must be positive");
        for (int i = 1; i < sz; ++i) rel.emplace_back(base + i - 1, base + i);
        base += sz;
    }
    return Poset(n, rel);
}

Poset antichain_example(const Partition& parts) {
    int n = parts.total();
    std::vector<std::pair<int, int>> rel;
    int base = 0, prev_base = 0, prev_sz = 0;
    for (int sz : parts.parts) {
        if (sz <= 0) throw RangeError("antichain_example: parts must be positive");
        for (int i = 0; i < prev_sz; ++i)
            for (int j = 0; j < sz; ++j) rel.emplace_back(prev_base + i, base + j);
        prev_base = base;
        prev_sz = sz;
        base += sz;
    }
    return Poset(n, rel);
}

Poset two_block_chain(int n, int t) {
    if (t < 1 || 2 * t > n + 1) throw RangeError("two_block_chain: need 1 <= t <= (n+1)/2");
    return chain_example(Partition{{t, n - t}});
}

Poset two_block_antichain(int n, int t) {
    if (t < 1 || 2 * t > n + 1) throw RangeError("two_block_antichain: need 1 <= t <= (n+1)/2");
    return antichain_example(Partition{{t, n - t}});
}

Poset boolean_lattice(int t, int max_t) {
    if (t < 1 || t > max_t)
        throw RangeError("boolean_lattice: t must be in [1, " + std::to_string(max_t) + "]");
    int n = 1 << t;
    std::vector<std::pair<int, int>> rel;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b && (a & b) == a) rel.emplace_back(a, b);
    return Poset(n, rel);
}

int width_bruteforce(const Poset& p) {
    int n = p.size();
    if (n > 20) throw RangeError("width_bruteforce: n too large");
    int best = 0;
    for (uint32_t s = 1; s < (uint32_t(1) << n); ++s) {
        bool anti = true;
        for (int a = 0; a < n && anti; ++a) {
            if (!((s >> a) & 1u)) continue;
            for (int b = a + 1; b < n && anti; ++b)
                if (((s >> b) & 1u) && p.comparable(a, b)) anti = false;
        }
        if (anti) best = std::max(best, std::popcount(s));
    }
    return best;
}

int height_bruteforce(const Poset& p) {
    int n = p.size();
    if (n > 20) throw RangeError("height_bruteforce: n too large");
    int best = 0;
    for (uint32_t s = 1; s < (uint32_t(1) << n); ++s) {
        bool chain = true;
        for (int a = 0; a < n && chain; ++a) {
            if (!((s >> a) & 1u)) continue;
            for (int b = a + 1; b < n && chain; ++b)
                if (((s >> b) & 1u) && !p.comparable(a, b)) chain = false;
        }
        if (chain) best = std::max(best, std::popcount(s));
    }
    return best;
}

} // namespace extenso
