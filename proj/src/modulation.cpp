#include "scw/modulation.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "scw/bessel.hpp"
#include "scw/errors.hpp"

namespace scw {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_phase(double phi) {
    phi = std::fmod(phi, kTwoPi);
    return phi < 0.0 ? phi + kTwoPi : phi;
}

Complex unit_i_pow(int n) {
    // i^n for n >= 0
    switch (n & 3) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
    }
}

bool same_frequency(double a, double b) {
    return std::abs(a - b) <= 1e-9 * std::max(std::abs(a), std::abs(b));
}

} // namespace

ModulationTone::ModulationTone(double index_, double phase_, double tone_freq_)
    : index(index_), phase(wrap_phase(phase_)), tone_freq(tone_freq_) {
    if (!(index >= 0.0))
        throw std::invalid_argument("ModulationTone: modulation index must be >= 0");
}

CombinedTone combine_tones(const ModulationTone& a, const ModulationTone& b) {
    if (!same_frequency(a.tone_freq, b.tone_freq))
        throw IncompatibleGridError("combine_tones: tone frequencies differ");
    const Complex sum = a.index * std::exp(Complex(0.0, a.phase)) +
                        b.index * std::exp(Complex(0.0, b.phase));
    const double m = std::abs(sum);
    return {m, m == 0.0 ? 0.0 : wrap_phase(std::arg(sum))};
}

MultimodeField phase_modulate(const MultimodeField& f, const ModulationTone& tone) {
    const bool bare = f.carrier_only();
    if (!bare && !same_frequency(f.tone_freq(), tone.tone_freq))
        throw IncompatibleGridError("phase_modulate: tone frequency does not match the field grid");
    const double grid_freq = bare ? tone.tone_freq : f.tone_freq();

    if (tone.index == 0.0)
        return MultimodeField(f.carrier_freq(), grid_freq, f.coeffs());

    const int k_in = f.truncation();
    // Modulation budget already spent on the input, inferred from the K rule.
    const int budget_in = std::max(0, k_in - 12);
    const int k_out = std::max(k_in, default_truncation(budget_in + tone.index));
    const int k_ker = default_truncation(tone.index);

    Eigen::VectorXcd kernel(2 * k_ker + 1);
    for (int j = -k_ker; j <= k_ker; ++j) {
        kernel(j + k_ker) = unit_i_pow(std::abs(j)) * besselj(std::abs(j), tone.index) *
                            std::exp(Complex(0.0, j * tone.phase));
    }

    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(2 * k_out + 1);
    for (int k = -k_out; k <= k_out; ++k) {
        const int j_lo = std::max(-k_ker, k - k_in);
        const int j_hi = std::min(k_ker, k + k_in);
        Complex acc(0.0, 0.0);
        for (int j = j_lo; j <= j_hi; ++j)
            acc += kernel(j + k_ker) * f.coeff(k - j);
        out(k + k_out) = acc;
    }
    return MultimodeField(f.carrier_freq(), grid_freq, std::move(out));
}

} // namespace scw
