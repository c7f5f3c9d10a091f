#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "extenso/logvalue.hpp"
#include "extenso/poset.hpp"

namespace extenso {

using BigCount = mpz_class;

struct CountingCaps {
    int max_n = 20;                       // env EXTENSO_CAP_N may raise
    size_t memory_budget = size_t(1) << 31; // bytes for the downset table
};

CountingCaps counting_caps_from_env();

// Exact number of linear extensions.  DP over downsets of the relation:
// f(D) = sum of f(D \ {x}) over maximal x of D, walked bottom-up in mask
// order.  Counts fit 64 bits through n = 20; larger n switches to bignum.
BigCount count_extensions(const Poset& p, const CountingCaps& caps = counting_caps_from_env());

// Test oracle: walk all n! permutations and keep the conflict-free ones.
BigCount count_extensions_bruteforce(const Poset& p);

// Per-point sizes of principal downsets.
struct HookVector {
    std::vector<int> lambda;
};

HookVector hook_lengths(const Poset& p);

// log2( n! / prod lambda_t ), a lower bound for log2 e(P).
LogValue hook_lower_bound(const Poset& p);

// True iff the bound above is tight: every point has at most one upper
// cover, i.e. each component is a tree hanging below a unique maximum.
bool hook_equality_holds(const Poset& p);

// One acyclic orientation of the comparability graph, with the number of
// linear orders consistent with it.
struct OrientationCount {
    uint64_t orientation_bits; // bit i set: edge i directed high->low vs. edge list
    BigCount extensions;
    bool is_poset_orientation; // matches the orientation induced by P itself
};

// All acyclic orientations of the comparability graph with their counts.
// Requires comp(P) <= 14.
std::vector<OrientationCount> orientation_profile(const Poset& p);

// Raw mask DP over n <= 20 points given per-point strict-downset masks.
// Shared with the extremal sweep, where Poset construction would dominate.
uint64_t count_extensions_dense_u64(const std::vector<uint64_t>& below, int n);

} // namespace extenso
