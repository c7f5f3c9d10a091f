#include "extenso/bounds.hpp"

#include <cmath>

namespace extenso {

namespace {

constexpr double kLog2E = 1.4426950408889634; // log2(e)
constexpr double kMartingaleC = kLog2E / 32.0;

double mpz_log2(const BigCount& v) {
    signed long exp;
    double d = mpz_get_d_2exp(&exp, v.get_mpz_t());
    return std::log2(d) + double(exp);
}

} // namespace

LogValue bound_martingale_upper(int64_t n, const Density& delta) {
    if (n < 1) throw RangeError("bound_martingale_upper: n < 1");
    double d = delta.as_double();
    return LogValue{log2_factorial(n) - kMartingaleC * d * d * double(n)};
}

LogValue bound_incomp_upper(int64_t n, const Density& delta) {
    if (n < 1) throw RangeError("bound_incomp_upper: n < 1");
    if (delta.num() == delta.den()) throw RangeError("bound_incomp_upper: needs delta < 1");
    double d = delta.as_double();
    return LogValue{log2_factorial(n) + (2.0 / (1.0 - d)) * kLog2E +
                    double(n) * std::log2(M_E * (1.0 - d) / 2.0)};
}

BigCount fplus_dense_exact(int64_t n, const Density& delta) {
    if (n < 1) throw RangeError("fplus_dense_exact: n < 1");
    int64_t m = choose2(n);
    // (1-delta)*C(n,2) <= n/2  <=>  2*(den-num)*C(n,2) <= n*den
    if ((__int128)2 * (delta.den() - delta.num()) * m > (__int128)n * delta.den())
        throw PreconditionError("fplus_dense_exact: (1-delta)*C(n,2) > n/2, formula is only an upper bound");
    int64_t incomp = m - delta.times_ceil(m); // floor((1-delta)*C(n,2))
    BigCount r = 1;
    mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), incomp);
    return r;
}

LogValue bound_half_lower(int64_t n, const Density& delta) {
    if (n < 1) throw RangeError("bound_half_lower: n < 1");
    if (delta.num() == delta.den()) throw RangeError("bound_half_lower: needs delta < 1");
    return LogValue{(1.0 - delta.as_double()) * double(n) / 2.0};
}

HookFormulaBound bound_hook_lower(int64_t n, const Density& delta) {
    if (n < 1) throw RangeError("bound_hook_lower: n < 1");
    double d = delta.as_double();
    double strong = log2_factorial(n) + double(n) * std::log2(2.0 / (d * double(n - 1) + 2.0));
    double simple = (1.0 - 2.0 / d) * kLog2E + double(n) * std::log2(2.0 / (M_E * d));
    return {LogValue{strong}, LogValue{simple}};
}

LogValue bound_orientation_lower(const Poset& p) {
    return LogValue{log2_factorial(p.size()) - double(p.comp_count())};
}

LogValue fminus_sparse_exact(int64_t n, const Density& delta) {
    if (n < 1) throw RangeError("fminus_sparse_exact: n < 1");
    if (delta.num() * (n - 1) > delta.den())
        throw PreconditionError("fminus_sparse_exact: delta*(n-1) > 1, exact sparse formula inapplicable");
    return LogValue{log2_factorial(n) - double(delta.times_ceil(choose2(n)))};
}

BigCount fminus_sparse_exact_count(int64_t n, const Density& delta) {
    if (n < 1) throw RangeError("fminus_sparse_exact_count: n < 1");
    if (delta.num() * (n - 1) > delta.den())
        throw PreconditionError("fminus_sparse_exact_count: delta*(n-1) > 1, exact sparse formula inapplicable");
    int64_t m = delta.times_ceil(choose2(n));
    BigCount f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    mpz_tdiv_q_2exp(f.get_mpz_t(), f.get_mpz_t(), m);
    return f;
}

CConstants c_constants(const Density& delta) {
    if (delta.num() == delta.den()) throw RangeError("c_constants: needs 0 < delta < 1");
    double d = delta.as_double();
    double c1 = (1.0 - d) / (2.0 - d);
    if (d <= 0.5) c1 = std::max(c1, std::pow(2.0 * d / M_E, 2.0 * d));
    double c2 = std::min(std::exp2(-kMartingaleC * d * d), 2.0 * (1.0 - d));
    double c3 = std::max(std::exp2(0.5 * (1.0 - d)), 1.0 / (2.0 * d));
    double c4 = double((delta.den() + delta.num() - 1) / delta.num()); // ceil(1/delta)
    if (d >= 0.5) c4 = std::min(c4, std::pow(M_E / (2.0 * (1.0 - d)), 2.0 * (1.0 - d)));
    return {c1, c2, c3, c4, 6.0 / (1.0 - d), 1.0 / (1.0 - d)};
}

namespace {

// comp of a disjoint-chains poset with balanced parts: sum of C(n_i, 2).
int64_t balanced_chain_comp(int64_t n, int64_t k) {
    int64_t q = n / k, r = n % k;
    return (k - r) * choose2(q) + r * choose2(q + 1);
}

double balanced_log2_prod_factorials(int64_t n, int64_t k) {
    int64_t q = n / k, r = n % k;
    return double(k - r) * log2_factorial(q) + double(r) * log2_factorial(q + 1);
}

} // namespace

std::vector<ConstructionCheck> construction_bounds_check(int64_t n, const Density& delta) {
    if (n < 2) throw RangeError("construction_bounds_check: n < 2");
    if (delta.num() == delta.den()) throw RangeError("construction_bounds_check: needs 0 < delta < 1");
    int64_t m = choose2(n);
    int64_t threshold = delta.times_ceil(m);
    double d = delta.as_double();
    double log2_nfact = log2_factorial(n);
    auto tol = [&](double x) { return 1e-6 * std::max(1.0, std::fabs(x)); };
    std::vector<ConstructionCheck> out;

    {
        // A~(n,k), k = ceil(1/(1-delta)): comp >= delta*C(n,2) and
        // (e/n!)^{1/n} >= (1-delta)/(2-delta)
        int64_t k = (delta.den() + (delta.den() - delta.num()) - 1) / (delta.den() - delta.num());
        k = std::min(k, n);
        int64_t comp = m - balanced_chain_comp(n, k);
        double log2_e = balanced_log2_prod_factorials(n, k);
        double bound = log2_nfact + double(n) * std::log2((1.0 - d) / (2.0 - d));
        out.push_back({"balanced_antichain", "k=" + std::to_string(k), comp, threshold, true,
                       comp >= threshold, log2_e, bound, true, log2_e >= bound - tol(log2_e)});
    }
    if (2 * delta.num() <= delta.den()) {
        // A(t, n-t), t = ceil(delta*n): comp >= delta*C(n,2) and
        // (e/n!)^{1/n} >= (tau/e)^tau
        int64_t t = delta.times_ceil(n);
        double tau = double(t) / double(n);
        int64_t comp = t * (n - t);
        double log2_e = log2_factorial(t) + log2_factorial(n - t);
        double bound = log2_nfact + tau * double(n) * std::log2(tau / M_E);
        out.push_back({"two_block_antichain", "t=" + std::to_string(t), comp, threshold, true,
                       comp >= threshold, log2_e, bound, true, log2_e >= bound - tol(log2_e)});
    }
    {
        // C~(n,k), k = ceil(1/delta): comp <= delta*C(n,2) and e <= k^n
        int64_t k = (delta.den() + delta.num() - 1) / delta.num();
        k = std::min(k, n);
        int64_t comp = balanced_chain_comp(n, k);
        double log2_e = log2_nfact - balanced_log2_prod_factorials(n, k);
        double bound = double(n) * std::log2(double(k));
        int64_t floor_threshold = delta.times_floor(m);
        out.push_back({"balanced_chain", "k=" + std::to_string(k), comp, floor_threshold, false,
                       delta.times_geq(m, comp), log2_e, bound, false, log2_e <= bound + tol(log2_e)});
    }
    if (2 * delta.num() >= delta.den()) {
        // C(t, n-t), t = ceil((1-delta)*n): comp <= delta*C(n,2) and
        // e = C(n,t) <= (e/tau)^{tau n}
        Density rem = delta.complement();
        int64_t t = rem.times_ceil(n);
        if (2 * t <= n + 1) {
            double tau = double(t) / double(n);
            int64_t comp = m - t * (n - t);
            double log2_e = log2_binomial(n, t);
            double bound = tau * double(n) * std::log2(M_E / tau);
            int64_t floor_threshold = delta.times_floor(m);
            out.push_back({"two_block_chain", "t=" + std::to_string(t), comp, floor_threshold, false,
                           delta.times_geq(m, comp), log2_e, bound, false,
                           log2_e <= bound + tol(log2_e)});
        }
    }
    return out;
}

BoundsReport bounds_report(const Poset& p, const CountingCaps& caps) {
    BoundsReport r;
    r.n = p.size();
    r.comp = p.comp_count();
    r.height = p.height();
    r.width = p.width();

    int64_t n = r.n;
    int64_t m = choose2(n);

    r.log2_lower_orientation = bound_orientation_lower(p).log2;
    r.log2_lower_hook_lengths = hook_lower_bound(p).log2;
    r.log2_lower_height_cap = log2_factorial(n) - double(n) * std::log2(double(r.height));
    r.log2_upper_width_cap = double(n) * std::log2(double(r.width));
    r.log2_upper_incomp = double(m - r.comp); // e <= 2^{incomparable pairs}

    if (m > 0 && r.comp > 0) {
        Density delta(r.comp, m);
        r.delta = delta.str();
        r.log2_upper_martingale = bound_martingale_upper(n, delta).log2;
        r.log2_lower_hook_formula = bound_hook_lower(n, delta).strong.log2;
        if (delta.num() < delta.den()) {
            r.log2_upper_backdegree = bound_incomp_upper(n, delta).log2;
            r.log2_lower_half = bound_half_lower(n, delta).log2;
        }
    }

    if (n <= caps.max_n) {
        BigCount e = count_extensions(p, caps);
        r.e_decimal = e.get_str();
        r.log2_e = mpz_log2(e);
        const double eps = 1e-9;
        auto check_lower = [&](const std::optional<double>& b) {
            if (b && *b > *r.log2_e + eps) r.sandwich_ok = false;
        };
        auto check_upper = [&](const std::optional<double>& b) {
            if (b && *b < *r.log2_e - eps) r.sandwich_ok = false;
        };
        check_lower(r.log2_lower_orientation);
        check_lower(r.log2_lower_half);
        check_lower(r.log2_lower_hook_formula);
        check_lower(r.log2_lower_hook_lengths);
        check_lower(r.log2_lower_height_cap);
        check_upper(r.log2_upper_martingale);
        check_upper(r.log2_upper_backdegree);
        check_upper(r.log2_upper_incomp);
        check_upper(r.log2_upper_width_cap);
    }
    return r;
}

} // namespace extenso
