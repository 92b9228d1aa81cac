#include "scw/detection.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "scw/bessel.hpp"
#include "scw/errors.hpp"
#include "scw/rng.hpp"

namespace scw {

namespace {

double combined_index(double m_a, double m_b, double delta_phi) {
    const double m2 = m_a * m_a + m_b * m_b + 2.0 * m_a * m_b * std::cos(delta_phi);
    return std::sqrt(std::max(0.0, m2));
}

// Noiseless DC output of the carrier-vs-sidebands receiver at a given
// optical power |E|^2 reaching the detector pair.
double homodyne_dc(double m_a, double phi_a, double m_b, double phi_b,
                   double power, const DetectorParams& d) {
    const double m = combined_index(m_a, m_b, phi_a - phi_b);
    const double j0 = besselj(0, m);
    return d.responsivity * d.gain * d.calibration * power * (1.0 - 2.0 * j0 * j0);
}

double noise_draw(const DetectorParams& d, std::uint64_t stream, std::uint64_t counter) {
    return d.noise_std > 0.0 ? d.noise_std * gaussian(d.seed, stream, counter) : 0.0;
}

} // namespace

void DetectorParams::validate() const {
    if (!(responsivity > 0.0))
        throw std::invalid_argument("DetectorParams: responsivity must be > 0");
    if (!(gain > 0.0))
        throw std::invalid_argument("DetectorParams: gain must be > 0");
    if (!(noise_std >= 0.0))
        throw std::invalid_argument("DetectorParams: noise_std must be >= 0");
}

Eigen::VectorXd balanced_current_timedomain(const MultimodeField& arm1,
                                            const MultimodeField& arm2,
                                            const DetectorParams& d,
                                            const Eigen::VectorXd& t_grid,
                                            std::uint64_t noise_stream_id) {
    d.validate();
    if (t_grid.size() == 0)
        throw std::invalid_argument("balanced_current_timedomain: empty time grid");
    if (!arm1.carrier_only() && !arm2.carrier_only() &&
        std::abs(arm1.tone_freq() - arm2.tone_freq()) >
            1e-9 * std::max(std::abs(arm1.tone_freq()), std::abs(arm2.tone_freq())))
        throw IncompatibleGridError("balanced_current_timedomain: arms sit on different tone grids");

    const double scale = d.responsivity * d.gain * d.calibration;
    Eigen::VectorXd out(t_grid.size());
    for (Eigen::Index i = 0; i < t_grid.size(); ++i) {
        const double p1 = std::norm(evaluate_envelope(arm1, t_grid(i)));
        const double p2 = std::norm(evaluate_envelope(arm2, t_grid(i)));
        out(i) = scale * (p2 - p1) + noise_draw(d, noise_stream_id, static_cast<std::uint64_t>(i));
    }
    return out;
}

double homodyne_output(double m_a, double phi_a, double m_b, double phi_b,
                       double carrier_amplitude, const DetectorParams& d,
                       std::uint64_t noise_counter, std::uint64_t noise_stream_id) {
    d.validate();
    if (m_a < 0.0 || m_b < 0.0)
        throw std::invalid_argument("homodyne_output: modulation indices must be >= 0");
    const double power = carrier_amplitude * carrier_amplitude;
    return homodyne_dc(m_a, phi_a, m_b, phi_b, power, d) +
           noise_draw(d, noise_stream_id, noise_counter);
}

double homodyne_normalized(double m_a, double m_b, double delta_phi) {
    if (!(m_a > 0.0))
        throw std::domain_error("homodyne_normalized: m_a must be > 0 (normalization divides by the classical swing)");
    const double j0a = besselj(0, m_a);
    const double swing = 2.0 * j0a * std::sqrt(std::max(0.0, 1.0 - j0a * j0a));
    const double j0 = besselj(0, combined_index(m_a, m_b, delta_phi));
    return (1.0 - 2.0 * j0 * j0) / swing;
}

IQSample phase_diversity_measure(double m_a, double phi_a, double m_b_i, double m_b_q,
                                 double carrier_amplitude, const DetectorParams& d,
                                 std::uint64_t noise_counter) {
    d.validate();
    if (m_a < 0.0 || m_b_i < 0.0 || m_b_q < 0.0)
        throw std::invalid_argument("phase_diversity_measure: modulation indices must be >= 0");
    // Y splitter: each branch sees half the optical power (3 dB).
    const double half_power = 0.5 * carrier_amplitude * carrier_amplitude;
    IQSample s;
    s.i_val = homodyne_dc(m_a, phi_a, m_b_i, 0.0, half_power, d) +
              noise_draw(d, noise_stream::diversity_i, noise_counter);
    s.q_val = homodyne_dc(m_a, phi_a, m_b_q, 0.5 * std::numbers::pi, half_power, d) +
              noise_draw(d, noise_stream::diversity_q, noise_counter);
    return s;
}

Eigen::VectorXd heterodyne_output_timeseries(double m_a, double phi_a,
                                             double carrier_amplitude, double tone_freq,
                                             const DetectorParams& d,
                                             const Eigen::VectorXd& t_grid,
                                             std::uint64_t noise_stream_id) {
    d.validate();
    if (m_a < 0.0)
        throw std::invalid_argument("heterodyne_output_timeseries: modulation index must be >= 0");
    if (t_grid.size() == 0)
        throw std::invalid_argument("heterodyne_output_timeseries: empty time grid");
    if (d.bandwidth_hz < tone_freq / (2.0 * std::numbers::pi))
        throw BandwidthViolationError(
            "heterodyne_output_timeseries: detector bandwidth below the beat frequency");

    const double power = carrier_amplitude * carrier_amplitude;
    const double amplitude = d.responsivity * d.gain * d.calibration * 2.0 * std::numbers::sqrt2 *
                             power * besselj(0, m_a) * besselj(1, m_a);
    Eigen::VectorXd out(t_grid.size());
    for (Eigen::Index i = 0; i < t_grid.size(); ++i)
        out(i) = amplitude * std::sin(tone_freq * t_grid(i) + phi_a) +
                 noise_draw(d, noise_stream_id, static_cast<std::uint64_t>(i));
    return out;
}

double classical_homodyne(double p_signal, double p_lo, double delta_phi,
                          const DetectorParams& d, std::uint64_t noise_counter) {
    d.validate();
    if (p_signal < 0.0 || p_lo < 0.0)
        throw std::invalid_argument("classical_homodyne: powers must be >= 0");
    return 2.0 * d.responsivity * d.gain * std::sqrt(p_signal * p_lo) * std::cos(delta_phi) +
           noise_draw(d, noise_stream::balanced, noise_counter);
}

Eigen::VectorXd classical_heterodyne(double p_signal, double p_lo, double omega_minus,
                                     double delta_phi, const DetectorParams& d,
                                     const Eigen::VectorXd& t_grid,
                                     std::uint64_t noise_stream_id) {
    d.validate();
    if (p_signal < 0.0 || p_lo < 0.0)
        throw std::invalid_argument("classical_heterodyne: powers must be >= 0");
    if (t_grid.size() == 0)
        throw std::invalid_argument("classical_heterodyne: empty time grid");
    const double amplitude = 2.0 * d.responsivity * d.gain * std::sqrt(p_signal * p_lo);
    Eigen::VectorXd out(t_grid.size());
    for (Eigen::Index i = 0; i < t_grid.size(); ++i)
        out(i) = amplitude * std::cos(omega_minus * t_grid(i) + delta_phi) +
                 noise_draw(d, noise_stream_id, static_cast<std::uint64_t>(i));
    return out;
}

} // namespace scw
