#pragma once

#include "scw/field.hpp"

namespace scw {

/// Microwave drive applied by a traveling-wave electro-optic phase
/// modulator: phase shift m * cos(Omega t + phi) on the optical field.
struct ModulationTone {
    double index = 0.0;      // m >= 0, dimensionless
    double phase = 0.0;      // phi, normalized to [0, 2pi)
    double tone_freq = 0.0;  // Omega, rad/s

    ModulationTone(double index, double phase, double tone_freq);
};

/// Single tone equivalent to driving two modulators in series:
/// m e^{i phi} = m_a e^{i phi_a} + m_b e^{i phi_b}.
struct CombinedTone {
    double index = 0.0;
    double phase = 0.0;  // 0 by convention when index == 0
};

/// Phasor sum of two drives at the same frequency, so that
/// m = sqrt(m_a^2 + m_b^2 + 2 m_a m_b cos(phi_a - phi_b)).
/// Throws IncompatibleGridError on a frequency mismatch.
CombinedTone combine_tones(const ModulationTone& a, const ModulationTone& b);

/// Applies e^{i m cos(Omega t + phi)} to the field: discrete convolution
/// of the harmonic coefficients with the kernel i^{|k|} J_{|k|}(m) e^{i k phi}
/// (equal to i^k J_k(m) e^{i k phi} by the reflection identity). A
/// carrier-only input adopts the tone frequency; otherwise the tone must
/// match the field grid (IncompatibleGridError). The output truncation is
/// re-derived from the default K rule so the unitarity defect stays
/// bounded.
MultimodeField phase_modulate(const MultimodeField& f, const ModulationTone& tone);

} // namespace scw
