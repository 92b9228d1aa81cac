#pragma once

// Independent reference routes used only by the tests. Everything here is
// deliberately naive: extended precision, term-by-term series, direct
// sampling. None of it shares code with the library implementations it
// checks.

#include <cmath>
#include <complex>
#include <cstdint>

#include "scw/field.hpp"
#include "scw/rng.hpp"

namespace oracle {

// J_k(x) by the ascending power series
//   sum_j (-1)^j (x/2)^{k+2j} / (j! (k+j)!)
// in long double, summed until the term drops below 1e-20.
inline long double besselj_series(int k, long double x) {
    long double sign = 1.0L;
    if (k < 0) {
        k = -k;
        if (k % 2 != 0) sign = -sign;
    }
    if (x < 0.0L) {
        x = -x;
        if (k % 2 != 0) sign = -sign;
    }
    if (x == 0.0L) return k == 0 ? sign : 0.0L;

    const long double half = 0.5L * x;
    long double term = 1.0L;
    for (int j = 1; j <= k; ++j) term *= half / j;  // (x/2)^k / k!
    long double sum = term;
    for (int j = 1; j <= 400; ++j) {
        term *= -(half * half) / (static_cast<long double>(j) * (k + j));
        sum += term;
        if (std::fabs(static_cast<double>(term)) < 1e-20) break;
    }
    return sign * sum;
}

inline double besselj(int k, double x) {
    return static_cast<double>(besselj_series(k, static_cast<long double>(x)));
}

// Smallest positive root of J_0(x) = target via bisection on the series.
inline double bisect_j0(double target) {
    double lo = 0.0, hi = 2.404825557695773;
    for (int i = 0; i < 200 && hi - lo > 1e-16; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (besselj(0, mid) > target)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

// Mean of |envelope|^2 over one tone period by direct uniform sampling.
inline double mean_power_over_period(const scw::MultimodeField& f, int n_samples = 256) {
    const double period = 2.0 * M_PI / f.tone_freq();
    double acc = 0.0;
    for (int i = 0; i < n_samples; ++i)
        acc += std::norm(scw::evaluate_envelope(f, period * i / n_samples));
    return acc / n_samples;
}

// Deterministic test-case generator built on the library's counter rng
// (the values drawn are arbitrary; only reproducibility matters here).
struct Draw {
    std::uint64_t seed;
    std::uint64_t counter = 0;
    double in(double lo, double hi) {
        return lo + (hi - lo) * scw::uniform01(seed, 0xABCD, counter++);
    }
};

} // namespace oracle
