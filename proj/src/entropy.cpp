#include "extenso/entropy.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include <omp.h>

#include "extenso/rng.hpp"

namespace extenso {

int UndirectedGraph::edge_count() const {
    int total = 0;
    for (uint32_t m : adj) total += std::popcount(m);
    return total / 2;
}

UndirectedGraph UndirectedGraph::complement() const {
    UndirectedGraph c;
    c.n = n;
    c.adj.resize(n);
    uint32_t full = (n == 32) ? ~uint32_t(0) : (uint32_t(1) << n) - 1;
    for (int v = 0; v < n; ++v) c.adj[v] = full & ~adj[v] & ~(uint32_t(1) << v);
    return c;
}

UndirectedGraph comparability_graph(const Poset& p) {
    if (p.size() > 32) throw CapacityError("comparability_graph: n > 32");
    UndirectedGraph g;
    g.n = p.size();
    g.adj.assign(g.n, 0);
    for (int a = 0; a < g.n; ++a)
        for (int b = a + 1; b < g.n; ++b)
            if (p.comparable(a, b)) {
                g.adj[a] |= uint32_t(1) << b;
                g.adj[b] |= uint32_t(1) << a;
            }
    return g;
}

namespace {

void bron_kerbosch(const UndirectedGraph& g, uint32_t r, uint32_t p, uint32_t x,
                   std::vector<uint32_t>& out, size_t limit) {
    if (p == 0 && x == 0) {
        if (out.size() >= limit) throw CapacityError("maximal_cliques: clique count limit exceeded");
        out.push_back(r);
        return;
    }
    uint32_t px = p | x;
    int pivot = std::countr_zero(px);
    int best = -1;
    for (uint32_t t = px; t; t &= t - 1) {
        int u = std::countr_zero(t);
        int deg = std::popcount(p & g.adj[u]);
        if (deg > best) { best = deg; pivot = u; }
    }
    for (uint32_t cand = p & ~g.adj[pivot]; cand; cand &= cand - 1) {
        int v = std::countr_zero(cand);
        uint32_t vb = uint32_t(1) << v;
        bron_kerbosch(g, r | vb, p & g.adj[v], x & g.adj[v], out, limit);
        p &= ~vb;
        x |= vb;
    }
}

std::vector<std::vector<int>> masks_to_sets(const std::vector<uint32_t>& masks) {
    std::vector<std::vector<int>> out;
    out.reserve(masks.size());
    for (uint32_t m : masks) {
        std::vector<int> s;
        for (uint32_t t = m; t; t &= t - 1) s.push_back(std::countr_zero(t));
        out.push_back(std::move(s));
    }
    return out;
}

} // namespace

std::vector<uint32_t> maximal_cliques(const UndirectedGraph& g, size_t limit) {
    if (g.n > 16) throw CapacityError("maximal_cliques: n > 16");
    std::vector<uint32_t> out;
    uint32_t full = (uint32_t(1) << g.n) - 1;
    bron_kerbosch(g, 0, full, 0, out, limit);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<int>> maximal_chains(const Poset& p) {
    if (p.size() > 16) throw CapacityError("maximal_chains: n > 16");
    return masks_to_sets(maximal_cliques(comparability_graph(p)));
}

std::vector<std::vector<int>> maximal_antichains(const Poset& p) {
    if (p.size() > 16) throw CapacityError("maximal_antichains: n > 16");
    return masks_to_sets(maximal_cliques(comparability_graph(p).complement()));
}

namespace {

constexpr double kLn2 = 0.6931471805599453;

double objective_bits(const std::vector<double>& x) {
    double s = 0.0;
    for (double v : x) s -= std::log2(v);
    return s / double(x.size());
}

} // namespace

EntropyResult graph_entropy(const UndirectedGraph& g, double tol, int max_iterations) {
    if (g.n > 16) throw CapacityError("graph_entropy: n > 16");
    if (tol <= 0) throw RangeError("graph_entropy: tol must be positive");
    int n = g.n;

    // Vertices of the polytope reachable by a positive-weight oracle:
    // maximal independent sets, i.e. maximal cliques of the complement.
    std::vector<uint32_t> vertices = maximal_cliques(g.complement());

    // Atoms of the current convex combination.  Atom 0 is the uniform
    // interior start (always feasible: every clique has <= n vertices).
    std::vector<std::vector<double>> atom_vec;
    std::vector<double> atom_weight;
    std::vector<int> atom_vertex; // index into vertices, -1 for the start atom
    atom_vec.push_back(std::vector<double>(n, 1.0 / n));
    atom_weight.push_back(1.0);
    atom_vertex.push_back(-1);
    std::vector<double> x = atom_vec[0];

    std::vector<double> minus_grad(n);
    EntropyResult res;
    for (int it = 0; it < max_iterations; ++it) {
        for (int v = 0; v < n; ++v) minus_grad[v] = 1.0 / (double(n) * kLn2 * x[v]);

        // Frank-Wolfe vertex: max-weight independent set.
        int best_vi = 0;
        double best_score = -1.0;
        for (size_t i = 0; i < vertices.size(); ++i) {
            double s = 0.0;
            for (uint32_t t = vertices[i]; t; t &= t - 1) s += minus_grad[std::countr_zero(t)];
            if (s > best_score) { best_score = s; best_vi = int(i); }
        }
        double x_score = 0.0;
        for (int v = 0; v < n; ++v) x_score += minus_grad[v] * x[v];
        double gap = best_score - x_score;
        res.gap = gap;
        res.iterations = it;
        if (gap <= tol) break;

        // Away atom: active atom with the worst score.
        int away = -1;
        double away_score = 1e300;
        for (size_t a = 0; a < atom_vec.size(); ++a) {
            if (atom_vertex[a] == best_vi && atom_vec.size() > 1) continue;
            double s = 0.0;
            for (int v = 0; v < n; ++v) s += minus_grad[v] * atom_vec[a][v];
            if (s < away_score) { away_score = s; away = int(a); }
        }
        if (away < 0) break;

        // Pairwise direction: mass moves from the away atom to the FW vertex.
        std::vector<double> dir(n);
        for (int v = 0; v < n; ++v) dir[v] = -atom_vec[away][v];
        for (uint32_t t = vertices[best_vi]; t; t &= t - 1) dir[std::countr_zero(t)] += 1.0;

        double gamma_max = atom_weight[away];
        for (int v = 0; v < n; ++v)
            if (dir[v] < 0.0) gamma_max = std::min(gamma_max, 0.999999 * x[v] / -dir[v]);
        if (gamma_max <= 0.0) break;

        // 1D convex line search on the derivative by bisection.
        auto dphi = [&](double gamma) {
            double s = 0.0;
            for (int v = 0; v < n; ++v)
                if (dir[v] != 0.0) s -= dir[v] / (x[v] + gamma * dir[v]);
            return s / (double(n) * kLn2);
        };
        double lo = 0.0, hi = gamma_max;
        double gamma = (dphi(hi) <= 0.0) ? hi : [&] {
            for (int b = 0; b < 60; ++b) {
                double mid = 0.5 * (lo + hi);
                (dphi(mid) <= 0.0 ? lo : hi) = mid;
            }
            return lo;
        }();
        if (gamma <= 0.0) break;

        for (int v = 0; v < n; ++v) x[v] += gamma * dir[v];
        atom_weight[away] -= gamma;
        int fw_atom = -1;
        for (size_t a = 0; a < atom_vec.size(); ++a)
            if (atom_vertex[a] == best_vi) { fw_atom = int(a); break; }
        if (fw_atom < 0) {
            std::vector<double> vv(n, 0.0);
            for (uint32_t t = vertices[best_vi]; t; t &= t - 1) vv[std::countr_zero(t)] = 1.0;
            atom_vec.push_back(std::move(vv));
            atom_weight.push_back(gamma);
            atom_vertex.push_back(best_vi);
        } else {
            atom_weight[fw_atom] += gamma;
        }
        if (atom_weight[away] < 1e-15 && int(atom_vec.size()) > 1) {
            atom_vec.erase(atom_vec.begin() + away);
            atom_weight.erase(atom_weight.begin() + away);
            atom_vertex.erase(atom_vertex.begin() + away);
        }
    }
    if (res.gap > tol)
        throw ConvergenceError("graph_entropy: duality gap " + std::to_string(res.gap) +
                               " above tolerance after iteration budget");
    res.H = objective_bits(x);
    res.x = std::move(x);
    return res;
}

EntropySandwich entropy_sandwich(const Poset& p, double tol, const CountingCaps& caps) {
    UndirectedGraph g = comparability_graph(p);
    EntropyResult hg = graph_entropy(g, tol);
    EntropyResult hgbar = graph_entropy(g.complement(), tol);
    BigCount e = count_extensions(p, caps);
    signed long exp;
    double d = mpz_get_d_2exp(&exp, e.get_mpz_t());
    double log2_e = std::log2(d) + double(exp);

    EntropySandwich s;
    s.H_G = hg.H;
    s.H_Gbar = hgbar.H;
    s.log2_e = log2_e;
    double n = double(p.size());
    s.entropy_lower_log2 = log2_factorial(p.size()) - n * hg.H;
    s.entropy_upper_log2 = n * hgbar.H;
    s.half_entropy_lower_log2 = 0.5 * n * hgbar.H;
    s.tol = tol;
    double slack = n * tol;
    s.ok = s.entropy_lower_log2 <= log2_e + slack && log2_e <= s.entropy_upper_log2 + slack &&
           s.half_entropy_lower_log2 <= log2_e + slack;
    return s;
}

VolumeEstimate chain_volume_mc(const Poset& p, int64_t samples, uint64_t seed) {
    if (samples < 10000) throw RangeError("chain_volume_mc: need at least 10^4 samples");
    int n = p.size();
    std::vector<uint32_t> cliques = maximal_cliques(comparability_graph(p));
    Rng base(seed);

    int64_t hits = 0;
#pragma omp parallel for reduction(+ : hits) schedule(static)
    for (int64_t k = 0; k < samples; ++k) {
        Rng rng = base.derive(uint64_t(k));
        double x[32];
        for (int v = 0; v < n; ++v) x[v] = rng.uniform();
        bool inside = true;
        for (uint32_t c : cliques) {
            double s = 0.0;
            for (uint32_t t = c; t; t &= t - 1) s += x[std::countr_zero(t)];
            if (s > 1.0) { inside = false; break; }
        }
        if (inside) ++hits;
    }

    double nfact = std::exp2(log2_factorial(n));
    double prob = double(hits) / double(samples);
    VolumeEstimate est;
    est.hits = hits;
    est.samples = samples;
    est.estimate = nfact * prob;
    est.stderr_ = nfact * std::sqrt(std::max(prob * (1.0 - prob), 1e-300) / double(samples));
    return est;
}

} // namespace extenso
