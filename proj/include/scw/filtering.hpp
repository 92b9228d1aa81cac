#pragma once

#include <map>

#include "scw/field.hpp"

namespace scw {

/// Per-harmonic amplitude transmittance of a lossless two-port spectral
/// filter. The transmitted arm gets t_k * E_k, the reflected arm
/// sqrt(1 - t_k^2) * E_k, so the per-harmonic power split is exact.
/// Harmonics without an explicit entry fall back to defaults that may
/// differ between k < 0 and k > 0.
class FilterProfile {
public:
    /// Fully transparent filter.
    FilterProfile() = default;

    /// Uniform defaults for the negative- and positive-index halves
    /// (k = 0 follows the positive default unless set explicitly).
    FilterProfile(double default_neg, double default_pos);

    static FilterProfile from_map(std::map<int, double> amp_transmittance);

    /// Overrides the transmittance at one harmonic; t must be in [0, 1].
    FilterProfile& set(int k, double t);

    double amp_transmittance(int k) const;

private:
    std::map<int, double> overrides_;
    double default_neg_ = 1.0;
    double default_pos_ = 1.0;
};

/// Narrow notch that removes the carrier from the transmitted arm:
/// t_0 = 0, t_k = 1 elsewhere. A nonzero extinction ratio eps replaces
/// 0 by sqrt(eps) and 1 by sqrt(1 - eps) for sensitivity studies.
FilterProfile carrier_separator(double extinction = 0.0);

/// Asymmetric bandpass for heterodyne mixing: t_0 = sqrt(0.5) (half the
/// carrier intensity each way), upper sidebands fully transmitted, lower
/// sidebands fully reflected; eps as above on the 0/1 plateaus.
FilterProfile heterodyne_profile(double extinction = 0.0);

struct SplitField {
    MultimodeField transmitted;
    MultimodeField reflected;
};

/// Splits the field into the two filter arms, conserving per-harmonic
/// power exactly. No extra phase is applied on reflection; only arm
/// intensities enter the detection formulas, so the choice is
/// unobservable and kept fixed for deterministic tests.
SplitField split(const MultimodeField& f, const FilterProfile& p);

} // namespace scw
