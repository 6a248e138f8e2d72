#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace gnorm {

struct ChernoffBounds {
    double lower;  // P[X <= (1-delta) mu] bound
    double upper;  // P[X >= (1+delta) mu] bound
};

inline ChernoffBounds chernoff_bounds(double mu, double delta) {
    if (!(mu >= 0.0)) throw std::domain_error("chernoff_bounds: mu must be nonnegative");
    if (!(delta > 0.0 && delta < 1.0)) throw std::domain_error("chernoff_bounds: delta outside (0,1)");
    return {std::exp(-mu * delta * delta / 2.0), std::exp(-mu * delta * delta / 3.0)};
}

inline double markov_bound(double mean, double a) {
    if (!(mean >= 0.0)) throw std::domain_error("markov_bound: mean must be nonnegative");
    if (!(a > 0.0)) throw std::domain_error("markov_bound: a must be positive");
    return mean / a;
}

struct Interval {
    double lo;
    double hi;
};

// Wilson score interval at 95% for a binomial frequency.
inline Interval wilson95(std::int64_t hits, std::int64_t trials) {
    if (trials < 1) throw std::domain_error("wilson95: trials must be positive");
    if (hits < 0 || hits > trials) throw std::domain_error("wilson95: hits outside [0, trials]");
    constexpr double z = 1.959963984540054;
    const double nt = static_cast<double>(trials);
    const double phat = static_cast<double>(hits) / nt;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / nt;
    const double center = phat + z2 / (2.0 * nt);
    const double half = z * std::sqrt(phat * (1.0 - phat) / nt + z2 / (4.0 * nt * nt));
    double lo = (center - half) / denom;
    double hi = (center + half) / denom;
    if (lo < 0.0) lo = 0.0;
    if (hi > 1.0) hi = 1.0;
    return {lo, hi};
}

}  // namespace gnorm
