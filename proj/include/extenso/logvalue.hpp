#pragma once

#include <cstdint>
#include <string>

#include "extenso/errors.hpp"

namespace extenso {

// log2 of a positive quantity.  Quantities like n! 2^{-c n} overflow
// doubles long before n gets interesting, so everything downstream
// compares in log space.
struct LogValue {
    double log2 = 0.0;

    double value() const; // only meaningful while it fits a double
};

// Exact rational density 0 < num/den <= 1.  Guards like delta*(n-1) <= 1
// are integer comparisons, never float.
class Density {
public:
    Density(int64_t num, int64_t den);

    int64_t num() const { return num_; }
    int64_t den() const { return den_; }
    double as_double() const { return double(num_) / double(den_); }

    // delta * x <=> y, exactly
    bool times_leq(int64_t x, int64_t y) const;  // num*x <= y*den
    bool times_geq(int64_t x, int64_t y) const;  // num*x >= y*den

    // ceil(delta * x) and floor(delta * x)
    int64_t times_ceil(int64_t x) const;
    int64_t times_floor(int64_t x) const;

    // (1 - delta) as a Density; requires num < den
    Density complement() const;

    static Density parse(const std::string& s); // "p/q" or "p"

    std::string str() const;

private:
    int64_t num_, den_;
};

// Sum of log2 for n <= 1e4, Stirling series above; abs error < 1e-9.
double log2_factorial(int64_t n);
double log2_binomial(int64_t n, int64_t k);

int64_t choose2(int64_t n);

} // namespace extenso
