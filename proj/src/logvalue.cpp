#include "extenso/logvalue.hpp"

#include <cmath>
#include <numeric>

namespace extenso {

double LogValue::value() const { return std::exp2(log2); }

Density::Density(int64_t num, int64_t den) {
    if (num <= 0 || den <= 0 || num > den)
        throw RangeError("density must satisfy 0 < num/den <= 1");
    int64_t g = std::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
}

bool Density::times_leq(int64_t x, int64_t y) const {
    return (__int128)num_ * x <= (__int128)y * den_;
}

bool Density::times_geq(int64_t x, int64_t y) const {
    return (__int128)num_ * x >= (__int128)y * den_;
}

int64_t Density::times_floor(int64_t x) const {
    return int64_t(((__int128)num_ * x) / den_);
}

int64_t Density::times_ceil(int64_t x) const {
    __int128 p = (__int128)num_ * x;
    return int64_t((p + den_ - 1) / den_);
}

Density Density::complement() const {
    if (num_ == den_) throw RangeError("complement of density 1 is not a density");
    return Density(den_ - num_, den_);
}

Density Density::parse(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Density(std::stoll(s), 1);
        return Density(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    } catch (const std::logic_error&) {
        throw RangeError("cannot parse density '" + s + "' (want p/q)");
    }
}

std::string Density::str() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
}

double log2_factorial(int64_t n) {
    if (n < 0) throw RangeError("log2_factorial of negative argument");
    if (n <= 10000) {
        double s = 0.0;
        for (int64_t i = 2; i <= n; ++i) s += std::log2(double(i));
        return s;
    }
    // Stirling series for ln n!, remainder < 1/(1680 n^7)
    double x = double(n);
    double ln = x * std::log(x) - x + 0.5 * std::log(2.0 * M_PI * x) +
                1.0 / (12.0 * x) - 1.0 / (360.0 * x * x * x) +
                1.0 / (1260.0 * x * x * x * x * x);
    return ln / M_LN2;
}

double log2_binomial(int64_t n, int64_t k) {
    if (k < 0 || k > n) throw RangeError("log2_binomial: k out of range");
    return log2_factorial(n) - log2_factorial(k) - log2_factorial(n - k);
}

int64_t choose2(int64_t n) { return n * (n - 1) / 2; }

} // namespace extenso
