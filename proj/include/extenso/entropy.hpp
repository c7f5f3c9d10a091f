#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "extenso/extension_count.hpp"
#include "extenso/poset.hpp"

namespace extenso {

struct UndirectedGraph {
    int n = 0;
    std::vector<uint32_t> adj; // adjacency bitmasks, no loops; n <= 16 for polytope work

    bool has_edge(int a, int b) const { return (adj[a] >> b) & 1u; }
    int edge_count() const;
    UndirectedGraph complement() const;
};

UndirectedGraph comparability_graph(const Poset& p);

// Inclusion-maximal cliques, Bron-Kerbosch with pivoting.  n <= 16.
std::vector<uint32_t> maximal_cliques(const UndirectedGraph& g, size_t limit = 1u << 20);

// Cliques of the comparability graph are chains; of its complement, antichains.
std::vector<std::vector<int>> maximal_chains(const Poset& p);
std::vector<std::vector<int>> maximal_antichains(const Poset& p);

struct EntropyResult {
    double H = 0.0;            // bits
    std::vector<double> x;     // feasible minimizer
    double gap = 0.0;          // certified duality gap, bits
    int iterations = 0;
};

// min -(1/n) sum log2 x_v over the clique polytope of g, by pairwise
// Frank-Wolfe.  The linear oracle maximizes a positive weighting over the
// polytope, which for a perfect graph is attained at a maximal independent
// set; the Frank-Wolfe gap certifies the returned tolerance.
EntropyResult graph_entropy(const UndirectedGraph& g, double tol = 1e-6,
                            int max_iterations = 2000000);

struct EntropySandwich {
    double H_G = 0.0;
    double H_Gbar = 0.0;
    double log2_e = 0.0;
    double entropy_lower_log2 = 0.0;       // log2(n!) - n*H(G)
    double entropy_upper_log2 = 0.0;       // n*H(Gbar)
    double half_entropy_lower_log2 = 0.0; // n*H(Gbar)/2
    double tol = 0.0;
    bool ok = true; // all three inequalities hold with slack 2^{n*tol}
};

EntropySandwich entropy_sandwich(const Poset& p, double tol = 1e-6,
                                 const CountingCaps& caps = counting_caps_from_env());

struct VolumeEstimate {
    double estimate = 0.0; // n! * vol(C(G)) by hit rate
    double stderr_ = 0.0;  // binomial standard error, same scale
    int64_t hits = 0;
    int64_t samples = 0;
};

// Uniform sampling in [0,1]^n against the maximal-clique constraints.
// Deterministic given (seed, samples), independent of thread count.
VolumeEstimate chain_volume_mc(const Poset& p, int64_t samples, uint64_t seed);

} // namespace extenso
