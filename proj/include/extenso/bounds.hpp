#pragma once

#include <optional>
#include <string>
#include <vector>

#include "extenso/extension_count.hpp"
#include "extenso/logvalue.hpp"
#include "extenso/poset.hpp"

namespace extenso {

// Upper bounds on log2 e for a poset with comp >= delta*C(n,2).

// log2(n!) - c*delta^2*n with c = log2(e)/32.
LogValue bound_martingale_upper(int64_t n, const Density& delta);

// log2( n! * e^{2/(1-delta)} * (e(1-delta)/2)^n ); needs delta < 1.
LogValue bound_incomp_upper(int64_t n, const Density& delta);

// Exact maximum in the very dense regime: 2^floor((1-delta)*C(n,2)),
// valid when (1-delta)*C(n,2) <= n/2 (checked in integer arithmetic).
BigCount fplus_dense_exact(int64_t n, const Density& delta);

// Lower bounds on log2 e for a poset with comp <= delta*C(n,2).

// (1-delta)*n/2; needs delta < 1.
LogValue bound_half_lower(int64_t n, const Density& delta);

struct HookFormulaBound {
    LogValue strong;     // log2( n! * (2/(delta(n-1)+2))^n )
    LogValue simplified; // log2( e^{1-2/delta} * (2/(e delta))^n )
};
HookFormulaBound bound_hook_lower(int64_t n, const Density& delta);

// log2(n!) - comp(P), from the acyclic-orientation argument.
LogValue bound_orientation_lower(const Poset& p);

// Exact minimum in the very sparse regime: log2(n!) - ceil(delta*C(n,2)),
// valid when delta*(n-1) <= 1 (checked in integer arithmetic).
LogValue fminus_sparse_exact(int64_t n, const Density& delta);
// Same quantity as an exact integer, n! / 2^m with m = ceil(delta*C(n,2)).
BigCount fminus_sparse_exact_count(int64_t n, const Density& delta);

struct CConstants {
    double c1, c2, c3, c4;
    double n0_c2;    // c2 applies for n >= 6/(1-delta)
    double n_min_c4; // c4 applies for n >= 1/(1-delta)
};
CConstants c_constants(const Density& delta);

// One witness family from the f+/f- constructions, evaluated in log space.
struct ConstructionCheck {
    std::string family;
    std::string params;
    int64_t comp;
    int64_t comp_threshold; // ceil(delta*C(n,2))
    bool comp_is_lower;     // family promises comp >= threshold (else <=)
    bool comp_ok;
    double log2_e;          // exact, via log2 factorials
    double log2_bound;
    bool bound_is_lower;    // family promises log2_e >= bound (else <=)
    bool bound_ok;
};

std::vector<ConstructionCheck> construction_bounds_check(int64_t n, const Density& delta);

// Every formula bound applicable to P, evaluated at its exact density.
struct BoundsReport {
    int n = 0;
    int64_t comp = 0;
    std::string delta; // "p/q", empty when C(n,2) = 0 or comp = 0
    int height = 0;
    int width = 0;

    std::optional<double> log2_e; // exact count, when within caps
    std::string e_decimal;        // exact count as decimal string

    std::optional<double> log2_lower_orientation;
    std::optional<double> log2_lower_half;
    std::optional<double> log2_lower_hook_formula;
    std::optional<double> log2_lower_hook_lengths;
    std::optional<double> log2_lower_height_cap;
    std::optional<double> log2_upper_martingale;
    std::optional<double> log2_upper_backdegree;
    std::optional<double> log2_upper_incomp;
    std::optional<double> log2_upper_width_cap;

    bool sandwich_ok = true; // every bound brackets log2_e, when exact e known
};

BoundsReport bounds_report(const Poset& p, const CountingCaps& caps = counting_caps_from_env());

} // namespace extenso
