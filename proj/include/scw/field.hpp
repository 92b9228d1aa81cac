#pragma once

#include <complex>

#include <Eigen/Dense>

namespace scw {

using Complex = std::complex<double>;

/// Carrier wave before modulation. Amplitudes are calibrated so that
/// optical power equals |E|^2 (amplitude unit: sqrt(watt)); the medium
/// impedance / beam-area factor is folded into this unit and reappears
/// only as DetectorParams::calibration.
struct CarrierSpec {
    double amplitude = 0.0;     // E0 >= 0, sqrt(watt)
    double carrier_freq = 0.0;  // omega, rad/s
};

/// Multimode optical field: truncated harmonic comb around a carrier.
/// coeff(k) is the complex amplitude at frequency omega + k*Omega for
/// |k| <= truncation(); indices outside the stored range read as zero.
/// The carrier phasor e^{i omega t} is factored out everywhere.
///
/// Immutable after construction; all operations on fields are free
/// functions returning new values, safe to share across threads.
class MultimodeField {
public:
    /// All-zero field with 2*truncation + 1 coefficient slots.
    MultimodeField(double carrier_freq, double tone_freq, int truncation);

    /// Wraps an existing coefficient vector of odd size 2K + 1, laid out
    /// as index k + K for k in [-K, K].
    MultimodeField(double carrier_freq, double tone_freq, Eigen::VectorXcd coeffs);

    double carrier_freq() const { return carrier_freq_; }
    double tone_freq() const { return tone_freq_; }
    int truncation() const { return trunc_; }

    Complex coeff(int k) const {
        return (k < -trunc_ || k > trunc_) ? Complex(0.0, 0.0) : coeffs_(k + trunc_);
    }
    const Eigen::VectorXcd& coeffs() const { return coeffs_; }

    /// True when every sideband coefficient (k != 0) is exactly zero.
    bool carrier_only() const;

private:
    double carrier_freq_ = 0.0;
    double tone_freq_ = 0.0;
    int trunc_ = 0;
    Eigen::VectorXcd coeffs_;
};

/// Default truncation rule: K = ceil(m_total) + 12, where m_total bounds
/// the combined modulation index seen so far. J_k(m) decays
/// super-exponentially past k = m, keeping the unitarity defect below
/// 1e-12 for m <= 2 under this rule.
int default_truncation(double total_mod_index);

/// Field holding the bare carrier: coeff(0) = E0, sidebands zero.
MultimodeField from_carrier(const CarrierSpec& spec, double tone_freq, int truncation);

/// Complex envelope sum_k coeff(k) e^{i k Omega t}. Periodic in t with
/// period 2 pi / Omega.
Complex evaluate_envelope(const MultimodeField& f, double t);

/// Total optical power sum_k |coeff(k)|^2 (watt).
double total_power(const MultimodeField& f);

/// Power carried by the sidebands alone, sum_{k != 0} |coeff(k)|^2.
double sideband_power(const MultimodeField& f);

/// n uniform samples over one tone period: t_i = i * (2 pi / Omega) / n.
Eigen::VectorXd period_grid(double tone_freq, int n_samples = 256);

} // namespace scw
