#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "extenso/errors.hpp"

namespace extenso {

// Ordered list of disjoint antichains; level i+1 sits above level i.
struct LevelPartition {
    std::vector<std::vector<int>> levels;
};

// Nondecreasing positive parts summing to n.
struct Partition {
    std::vector<int> parts;

    int total() const;
    int count() const { return static_cast<int>(parts.size()); }
};

// Finite strict partial order on points 0..n-1.  The relation is kept
// transitively closed, so less() is a single bit probe.  Immutable after
// construction.
class Poset {
public:
    // Transitive closure of the given pairs.  Pairs need not be covers.
    Poset(int n, const std::vector<std::pair<int, int>>& relations);

    int size() const { return n_; }

    // a strictly below b.
    bool less(int a, int b) const {
        return (below_[b][a >> 6] >> (a & 63)) & 1u;
    }
    bool comparable(int a, int b) const { return less(a, b) || less(b, a); }

    // Strict downset of b, as bit words.
    const std::vector<uint64_t>& below_words(int b) const { return below_[b]; }

    int comp_count() const;
    int height() const;
    int width() const;
    LevelPartition level_partition() const;

    std::vector<int> minimal_points() const;
    std::vector<int> maximal_points() const;

    // All (a, b) with a strictly below b.
    std::vector<std::pair<int, int>> relation_pairs() const;
    // Unordered comparable pairs {a, b}, a < b.
    std::vector<std::pair<int, int>> comparability_edges() const;

private:
    int n_;
    int words_;
    std::vector<std::vector<uint64_t>> below_; // below_[b] = strict downset of b
    std::vector<std::vector<uint64_t>> above_; // above_[a] = strict upset of a
};

Partition balanced_parts(int n, int k);

// Disjoint chains of the given sizes, no cross relations.
Poset chain_example(const Partition& parts);
// Stacked antichains A_1 < A_2 < ... < A_k, elementwise.
Poset antichain_example(const Partition& parts);

// C(t, n-t) and A(t, n-t), two blocks of sizes t and n-t.
Poset two_block_chain(int n, int t);
Poset two_block_antichain(int n, int t);

// Subsets of [t] under strict inclusion, n = 2^t points.
Poset boolean_lattice(int t, int max_t = 4);

// Test oracle: maximum antichain by subset enumeration, n <= 20.
int width_bruteforce(const Poset& p);
int height_bruteforce(const Poset& p);

} // namespace extenso
