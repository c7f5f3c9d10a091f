#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "extenso/extension_count.hpp"
#include "extenso/poset.hpp"

namespace extenso {

// Compact transitively closed relation on up to 8 points, used by the
// exhaustive sweep where building a full Poset per candidate would dominate.
struct SmallPoset {
    int n = 0;
    std::array<uint16_t, 8> below{}; // below[v]: strict downset mask
    std::array<uint16_t, 8> above{}; // above[v]: strict upset mask

    int comp() const {
        int c = 0;
        for (int v = 0; v < n; ++v) c += std::popcount(below[v]);
        return c;
    }

    // relation bitmask, 8 bits per point; total order on posets
    uint64_t encode() const {
        uint64_t e = 0;
        for (int v = 0; v < n; ++v) e |= uint64_t(below[v]) << (8 * v);
        return e;
    }

    uint64_t extensions() const {
        std::vector<uint64_t> b(n);
        for (int v = 0; v < n; ++v) b[v] = below[v];
        return count_extensions_dense_u64(b, n);
    }

    Poset to_poset() const;
};

Poset decode_small_poset(int n, uint64_t enc);

int enumeration_cap_from_env(); // default 6, EXTENSO_CAP_N may raise

namespace detail {

// Extend a closed relation on {0..k-1} by point k: choose a downward
// closed set A below k and an upward closed set B above k with A x B
// already related; the result is closed by construction.
template <class F>
void extend_posets(int n, int k, SmallPoset& p, F& visit) {
    if (k == n) {
        visit(const_cast<const SmallPoset&>(p));
        return;
    }
    uint16_t full = uint16_t((1u << k) - 1);
    uint16_t kbit = uint16_t(1u << k);
    for (uint16_t a = 0;; ++a) {
        bool closed = true;
        uint16_t allowed = uint16_t(full & ~a);
        for (uint16_t t = a; t; t &= t - 1) {
            int i = std::countr_zero(t);
            if (p.below[i] & ~a) { closed = false; break; }
            allowed &= p.above[i];
        }
        if (closed) {
            uint16_t b = allowed;
            for (;;) {
                bool up_closed = true;
                for (uint16_t t = b; t; t &= t - 1)
                    if (p.above[std::countr_zero(t)] & ~b) { up_closed = false; break; }
                if (up_closed) {
                    p.below[k] = a;
                    p.above[k] = b;
                    for (uint16_t t = a; t; t &= t - 1) p.above[std::countr_zero(t)] |= kbit;
                    for (uint16_t t = b; t; t &= t - 1) p.below[std::countr_zero(t)] |= kbit;
                    p.n = k + 1;
                    extend_posets(n, k + 1, p, visit);
                    p.n = k;
                    for (uint16_t t = a; t; t &= t - 1) p.above[std::countr_zero(t)] &= ~kbit;
                    for (uint16_t t = b; t; t &= t - 1) p.below[std::countr_zero(t)] &= ~kbit;
                    p.below[k] = 0;
                    p.above[k] = 0;
                }
                if (b == 0) break;
                b = uint16_t((b - 1) & allowed);
            }
        }
        if (a == full) break;
    }
}

} // namespace detail

// Serial reference: every transitively closed irreflexive antisymmetric
// relation on [n], each exactly once.
template <class F>
void enumerate_labeled_posets(int n, F&& visit, int cap = enumeration_cap_from_env()) {
    if (n < 1 || n > 8) throw RangeError("enumerate_labeled_posets: n must be in [1, 8]");
    if (n > cap)
        throw RangeError("enumerate_labeled_posets: n exceeds cap " + std::to_string(cap) +
                         " (set EXTENSO_CAP_N to raise)");
    SmallPoset p;
    detail::extend_posets(n, 0, p, visit);
}

// Subtree roots for the parallel sweep: all posets on the first
// min(n-1, prefix) points.
std::vector<SmallPoset> enumeration_prefixes(int n, int prefix = 3);

uint64_t count_labeled_posets(int n, int jobs = 0, int cap = enumeration_cap_from_env());

struct ExtremalRecord {
    int64_t m = 0;
    BigCount f_plus_at_least_m;  // max e over comp >= m
    BigCount f_minus_at_most_m;  // min e over comp <= m
    uint64_t plus_witness = 0;   // encoded poset attaining f_plus
    uint64_t minus_witness = 0;  // encoded poset attaining f_minus
};

struct ExtremalTable {
    int n = 0;
    uint64_t total_posets = 0;
    std::vector<ExtremalRecord> records; // index m = 0 .. C(n,2)

    const ExtremalRecord& at(int64_t m) const { return records.at(size_t(m)); }
};

// OpenMP sweep over prefix subtrees; max/min reduction is associative, and
// witness ties break on the encoding, so output is thread-count independent.
ExtremalTable extremal_table(int n, int jobs = 0, int cap = enumeration_cap_from_env());

struct ConjectureReport {
    int n = 0;
    int k = 0;
    std::string family;          // "antichain" or "chain"
    int64_t comp_threshold = 0;  // comp of the balanced construction
    BigCount construction_e;
    bool pass = false;
    std::optional<uint64_t> counterexample; // encoded witness when pass is false
    BigCount counterexample_e;
    int64_t counterexample_comp = 0;
};

// Every poset with comp >= comp(A~(n,k)) has e <= e(A~(n,k))?
ConjectureReport check_conjecture_antichain(int n, int k, int jobs = 0,
                                            int cap = enumeration_cap_from_env());
// Every poset with comp <= comp(C~(n,k)) has e >= e(C~(n,k))?
ConjectureReport check_conjecture_chain(int n, int k, int jobs = 0,
                                        int cap = enumeration_cap_from_env());

} // namespace extenso
