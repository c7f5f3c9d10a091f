#include "extenso/extremal_search.hpp"

#include <algorithm>
#include <cstdlib>

#include <omp.h>

#include "extenso/logvalue.hpp"

namespace extenso {

Poset SmallPoset::to_poset() const {
    std::vector<std::pair<int, int>> rel;
    for (int v = 0; v < n; ++v)
        for (uint16_t t = below[v]; t; t &= t - 1) rel.emplace_back(std::countr_zero(t), v);
    return Poset(n, rel);
}

Poset decode_small_poset(int n, uint64_t enc) {
    std::vector<std::pair<int, int>> rel;
    for (int v = 0; v < n; ++v) {
        uint16_t b = uint16_t((enc >> (8 * v)) & 0xff);
        for (uint16_t t = b; t; t &= t - 1) rel.emplace_back(std::countr_zero(t), v);
    }
    return Poset(n, rel);
}

int enumeration_cap_from_env() {
    int cap = 6;
    if (const char* s = std::getenv("EXTENSO_CAP_N")) {
        int v = std::atoi(s);
        if (v > cap) cap = v;
    }
    return std::min(cap, 8);
}

std::vector<SmallPoset> enumeration_prefixes(int n, int prefix) {
    int depth = std::min(n - 1, prefix);
    std::vector<SmallPoset> out;
    if (depth < 1) {
        out.push_back(SmallPoset{});
        return out;
    }
    SmallPoset p;
    auto collect = [&](const SmallPoset& q) { out.push_back(q); };
    detail::extend_posets(depth, 0, p, collect);
    return out;
}

namespace {

int resolve_jobs(int jobs) { return jobs > 0 ? jobs : omp_get_max_threads(); }

// Per-thread sweep accumulator: extremal extension count per exact comp
// value, with the encoding-minimal witness.
struct SweepTable {
    std::vector<uint64_t> max_e, min_e;
    std::vector<uint64_t> max_wit, min_wit;
    uint64_t total = 0;

    explicit SweepTable(int64_t m) {
        max_e.assign(m + 1, 0);
        min_e.assign(m + 1, UINT64_MAX);
        max_wit.assign(m + 1, 0);
        min_wit.assign(m + 1, 0);
    }

    void add(const SmallPoset& p) {
        ++total;
        int c = p.comp();
        uint64_t e = p.extensions();
        uint64_t enc = p.encode();
        if (e > max_e[c]) {
            max_e[c] = e;
            max_wit[c] = enc;
        } else if (e == max_e[c]) {
            max_wit[c] = std::min(max_wit[c], enc);
        }
        if (e < min_e[c]) {
            min_e[c] = e;
            min_wit[c] = enc;
        } else if (e == min_e[c]) {
            min_wit[c] = std::min(min_wit[c], enc);
        }
    }

    void merge(const SweepTable& o) {
        total += o.total;
        for (size_t c = 0; c < max_e.size(); ++c) {
            if (o.max_e[c] > max_e[c]) {
                max_e[c] = o.max_e[c];
                max_wit[c] = o.max_wit[c];
            } else if (o.max_e[c] == max_e[c] && o.max_e[c] > 0) {
                max_wit[c] = std::min(max_wit[c], o.max_wit[c]);
            }
            if (o.min_e[c] < min_e[c]) {
                min_e[c] = o.min_e[c];
                min_wit[c] = o.min_wit[c];
            } else if (o.min_e[c] == min_e[c] && o.min_e[c] != UINT64_MAX) {
                min_wit[c] = std::min(min_wit[c], o.min_wit[c]);
            }
        }
    }
};

SweepTable parallel_sweep(int n, int jobs, int cap) {
    if (n < 1 || n > 8) throw RangeError("extremal sweep: n must be in [1, 8]");
    if (n > cap)
        throw RangeError("extremal sweep: n exceeds cap " + std::to_string(cap) +
                         " (set EXTENSO_CAP_N to raise)");
    int64_t m = choose2(n);
    std::vector<SmallPoset> prefixes = enumeration_prefixes(n);
    int threads = resolve_jobs(jobs);
    std::vector<SweepTable> locals;
    locals.reserve(prefixes.size());
    for (size_t i = 0; i < prefixes.size(); ++i) locals.emplace_back(m);

#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (size_t i = 0; i < prefixes.size(); ++i) {
        SmallPoset p = prefixes[i];
        auto visit = [&](const SmallPoset& q) { locals[i].add(q); };
        detail::extend_posets(n, p.n, p, visit);
    }

    SweepTable result(m);
    for (auto& t : locals) result.merge(t);
    return result;
}

} // namespace

uint64_t count_labeled_posets(int n, int jobs, int cap) {
    return parallel_sweep(n, jobs, cap).total;
}

ExtremalTable extremal_table(int n, int jobs, int cap) {
    SweepTable sweep = parallel_sweep(n, jobs, cap);
    int64_t m = choose2(n);
    ExtremalTable table;
    table.n = n;
    table.total_posets = sweep.total;
    table.records.resize(m + 1);

    // f_plus_at_least_m: suffix max; equal values keep the smaller encoding
    uint64_t cur_e = 0, cur_w = 0;
    for (int64_t c = m; c >= 0; --c) {
        if (sweep.max_e[c] > cur_e) {
            cur_e = sweep.max_e[c];
            cur_w = sweep.max_wit[c];
        } else if (sweep.max_e[c] == cur_e && sweep.max_e[c] > 0) {
            cur_w = std::min(cur_w, sweep.max_wit[c]);
        }
        table.records[c].m = c;
        table.records[c].f_plus_at_least_m = BigCount(cur_e);
        table.records[c].plus_witness = cur_w;
    }
    // f_minus_at_most_m: prefix min
    cur_e = UINT64_MAX;
    cur_w = 0;
    for (int64_t c = 0; c <= m; ++c) {
        if (sweep.min_e[c] < cur_e) {
            cur_e = sweep.min_e[c];
            cur_w = sweep.min_wit[c];
        } else if (sweep.min_e[c] == cur_e && sweep.min_e[c] != UINT64_MAX) {
            cur_w = std::min(cur_w, sweep.min_wit[c]);
        }
        table.records[c].f_minus_at_most_m = BigCount(cur_e);
        table.records[c].minus_witness = cur_w;
    }
    return table;
}

namespace {

ConjectureReport check_conjecture(int n, int k, bool antichain_side, int jobs, int cap) {
    if (k < 2 || k > n) throw RangeError("conjecture check: need 2 <= k <= n");
    ConjectureReport rep;
    rep.n = n;
    rep.k = k;
    rep.family = antichain_side ? "antichain" : "chain";

    Partition parts = balanced_parts(n, k);
    int64_t chain_comp = 0;
    uint64_t chain_e = 1; // multinomial n! / prod n_i!
    {
        uint64_t nfact = 1;
        for (int i = 2; i <= n; ++i) nfact *= uint64_t(i);
        uint64_t denom = 1;
        for (int sz : parts.parts) {
            chain_comp += choose2(sz);
            for (int i = 2; i <= sz; ++i) denom *= uint64_t(i);
        }
        chain_e = nfact / denom;
        if (antichain_side) {
            rep.comp_threshold = choose2(n) - chain_comp;
            rep.construction_e = BigCount(denom); // prod n_i!
        } else {
            rep.comp_threshold = chain_comp;
            rep.construction_e = BigCount(chain_e);
        }
    }

    ExtremalTable table = extremal_table(n, jobs, cap);
    if (antichain_side) {
        const ExtremalRecord& rec = table.at(rep.comp_threshold);
        rep.pass = rec.f_plus_at_least_m <= rep.construction_e;
        if (!rep.pass) {
            rep.counterexample = rec.plus_witness;
            rep.counterexample_e = rec.f_plus_at_least_m;
            rep.counterexample_comp = decode_small_poset(n, rec.plus_witness).comp_count();
        }
    } else {
        const ExtremalRecord& rec = table.at(rep.comp_threshold);
        rep.pass = rec.f_minus_at_most_m >= rep.construction_e;
        if (!rep.pass) {
            rep.counterexample = rec.minus_witness;
            rep.counterexample_e = rec.f_minus_at_most_m;
            rep.counterexample_comp = decode_small_poset(n, rec.minus_witness).comp_count();
        }
    }
    return rep;
}

} // namespace

ConjectureReport check_conjecture_antichain(int n, int k, int jobs, int cap) {
    return check_conjecture(n, k, true, jobs, cap);
}

ConjectureReport check_conjecture_chain(int n, int k, int jobs, int cap) {
    return check_conjecture(n, k, false, jobs, cap);
}

} // namespace extenso
