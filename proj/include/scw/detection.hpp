#pragma once

#include <cstdint>

#include "scw/field.hpp"

namespace scw {

/// Balanced-detector electrical parameters. Voltage noise is a single
/// additive Gaussian on the balanced output, drawn from a counter-based
/// generator: a draw is a pure function of (seed, stream, counter), so
/// parallel sweeps with the same seed reproduce bit-identical results in
/// any evaluation order.
struct DetectorParams {
    double responsivity = 0.6;    // R, A/W
    double gain = 4.0e3;          // G, dimensionless V/A lump
    double calibration = 1.0;     // field^2 -> watt factor (1 under the sqrt-watt convention)
    double bandwidth_hz = 100e6;  // decides whether Omega-oscillating output is observable
    double noise_std = 0.0;       // volts
    std::uint64_t seed = 0;

    void validate() const;  // responsivity > 0, gain > 0, noise_std >= 0
};

/// Simultaneously measured quadrature pair (volts).
struct IQSample {
    double i_val = 0.0;
    double q_val = 0.0;
};

/// Difference of the two photodiode responses, sample by sample:
/// R * G * cal * (|env_2(t)|^2 - |env_1(t)|^2), plus noise when
/// configured (one draw per sample, counter = sample index). This is the
/// brute-force ground truth every closed-form output below is checked
/// against. Arms must share the tone frequency; the grid must be
/// non-empty.
Eigen::VectorXd balanced_current_timedomain(const MultimodeField& arm1,
                                            const MultimodeField& arm2,
                                            const DetectorParams& d,
                                            const Eigen::VectorXd& t_grid,
                                            std::uint64_t noise_stream = 0);

/// Time-averaged balanced output of the carrier-vs-sidebands receiver:
/// a carrier E0 modulated by (m_a, phi_a) then (m_b, phi_b), split at the
/// carrier notch, detected, averaged over one tone period. Closed form
/// R * G * E0^2 * (1 - 2 J_0^2(m)) with m the combined index. The sign
/// convention puts the maximum at phi_a = phi_b.
double homodyne_output(double m_a, double phi_a, double m_b, double phi_b,
                       double carrier_amplitude, const DetectorParams& d,
                       std::uint64_t noise_counter = 0, std::uint64_t noise_stream = 0);

/// Output normalized by the classical swing 2 J_0(m_a) sqrt(1 - J_0^2(m_a)):
/// (1 - 2 J_0^2(m)) over that, with m combined from (m_a, m_b, delta_phi).
/// Throws std::domain_error at m_a = 0 (zero swing).
double homodyne_normalized(double m_a, double m_b, double delta_phi);

/// Phase-diversity receiver: a Y splitter halves the power into two
/// carrier-vs-sidebands detectors whose local drives sit at phi_b = 0 (I)
/// and phi_b = pi/2 (Q). Each output is homodyne_output at E0^2 / 2, with
/// independent noise streams for the two detectors.
IQSample phase_diversity_measure(double m_a, double phi_a, double m_b_i, double m_b_q,
                                 double carrier_amplitude, const DetectorParams& d,
                                 std::uint64_t noise_counter = 0);

/// First-order heterodyne beat after the asymmetric filter:
/// I(t) = R * G * 2 sqrt(2) * E0^2 * J_0(m_a) J_1(m_a) * sin(Omega t + phi_a)
/// sampled on t_grid (noise per sample as in the time-domain oracle).
/// Requires bandwidth_hz >= tone_freq / 2 pi (BandwidthViolationError
/// otherwise); the amplitude matches the all-orders oracle to a relative
/// error below 5 * m_a^2 for m_a <= 0.3.
Eigen::VectorXd heterodyne_output_timeseries(double m_a, double phi_a,
                                             double carrier_amplitude, double tone_freq,
                                             const DetectorParams& d,
                                             const Eigen::VectorXd& t_grid,
                                             std::uint64_t noise_stream = 0);

/// Textbook balanced homodyne: 2 R G sqrt(P_s P_LO) cos(delta_phi).
double classical_homodyne(double p_signal, double p_lo, double delta_phi,
                          const DetectorParams& d, std::uint64_t noise_counter = 0);

/// Textbook heterodyne beat at the difference frequency:
/// 2 R G sqrt(P_s P_LO) cos(omega_minus t + delta_phi) on t_grid.
Eigen::VectorXd classical_heterodyne(double p_signal, double p_lo, double omega_minus,
                                     double delta_phi, const DetectorParams& d,
                                     const Eigen::VectorXd& t_grid,
                                     std::uint64_t noise_stream = 0);

namespace noise_stream {
// Stream ids keep independent noise sources from colliding in the
// counter-based generator.
inline constexpr std::uint64_t balanced = 0;
inline constexpr std::uint64_t diversity_i = 1;
inline constexpr std::uint64_t diversity_q = 2;
inline constexpr std::uint64_t symbols = 3;
} // namespace noise_stream

} // namespace scw
