#include "scw/bessel.hpp"

#include <cmath>
#include <stdexcept>

namespace scw {

namespace {

constexpr double kDomainMax = 50.0;
constexpr double kFirstJ0Zero = 2.404825557695773;

// Ascending power series, k >= 0, 0 < x <= 8. The leading term
// (x/2)^k / k! is built by repeated multiplication so no factorial
// overflows; successive terms follow from
// term_{j+1} = -term_j * (x/2)^2 / ((j+1)(k+j+1)).
double series(int k, double x) {
    const double q = 0.25 * x * x;
    double term = 1.0;
    for (int j = 1; j <= k; ++j) term *= 0.5 * x / j;
    double sum = term;
    for (int j = 1; j <= 256; ++j) {
        term *= -q / (static_cast<double>(j) * (k + j));
        sum += term;
        if (std::abs(term) < 1e-17 * std::abs(sum) + 1e-300) break;
    }
    return sum;
}

// Miller's algorithm, k >= 0, x > 8: seed the three-term recurrence far
// above max(k, x), run it downward, and normalize with
// J_0(x) + 2 * sum_{n>=1} J_{2n}(x) = 1. Intermediate values are rescaled
// whenever they grow past 1e100.
double miller(int k, double x) {
    const int top = std::max(k, static_cast<int>(std::ceil(x)));
    const int start = top + 16 + static_cast<int>(std::ceil(std::sqrt(40.0 * top)));

    double j_np1 = 0.0;   // J_{n+1}
    double j_n = 1e-30;   // J_n, arbitrary seed at n = start
    double wanted = (k == start) ? j_n : 0.0;
    double even_sum = (start >= 2 && start % 2 == 0) ? j_n : 0.0;

    for (int n = start; n >= 1; --n) {
        const double j_nm1 = (2.0 * n / x) * j_n - j_np1;
        j_np1 = j_n;
        j_n = j_nm1;
        const int order = n - 1;
        if (order == k) wanted = j_n;
        if (order >= 2 && order % 2 == 0) even_sum += j_n;
        if (std::abs(j_n) > 1e100) {
            j_n *= 1e-100;
            j_np1 *= 1e-100;
            wanted *= 1e-100;
            even_sum *= 1e-100;
        }
    }
    const double norm = j_n + 2.0 * even_sum;  // j_n now holds J_0
    return wanted / norm;
}

} // namespace

double besselj(int k, double x) {
    if (!(std::abs(x) <= kDomainMax))
        throw std::invalid_argument("besselj: |x| must be <= 50");

    double sign = 1.0;
    if (k < 0) {
        k = -k;
        if (k % 2 != 0) sign = -sign;
    }
    if (x < 0.0) {
        x = -x;
        if (k % 2 != 0) sign = -sign;
    }
    if (x == 0.0) return (k == 0) ? sign : 0.0;
    return sign * (x <= 8.0 ? series(k, x) : miller(k, x));
}

double solve_j0_equals(double target) {
    if (!(target > 0.0 && target < 1.0))
        throw std::invalid_argument("solve_j0_equals: target must lie in (0, 1)");

    double lo = 0.0;               // J_0(lo) > target
    double hi = kFirstJ0Zero;      // J_0(hi) = 0 < target
    for (int i = 0; i < 128 && (hi - lo) > 1e-16 * hi; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (besselj(0, mid) > target)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace scw
