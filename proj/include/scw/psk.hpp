#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "scw/detection.hpp"

namespace scw {

/// One transmitted symbol with its measured quadratures and the decision.
struct SymbolDecision {
    int sent = 0;     // 0..3, phases {0, pi/2, pi, 3pi/2}
    IQSample iq;
    int decided = 0;  // 0..3
};

struct TrialResult {
    double ser = 0.0;                     // fraction of wrong decisions
    std::vector<IQSample> constellation;  // measured IQ per symbol slot
    std::vector<SymbolDecision> log;
};

/// Drive phase for a 4-PSK symbol: phi_a = symbol * pi / 2.
/// Throws std::invalid_argument outside 0..3.
double encode(int symbol);

/// Noiseless phase-diversity outputs for the four symbols at the given
/// link settings (both local drives at index m_b). These are the fixed
/// decision centroids; no training pass is involved.
std::array<IQSample, 4> ideal_centroids(double m_a, double m_b, double carrier_amplitude,
                                        const DetectorParams& d);

/// Nearest-centroid decision, Euclidean metric, ties broken toward the
/// lowest symbol index. Centroids must be pairwise distinct.
int decide(const IQSample& iq, const std::array<IQSample, 4>& centroids);

/// Phase read-back: atan2 of the sample relative to the centroid mean
/// (the constellation center is offset from the origin because the
/// balanced output is not zero-mean over delta-phi). Returns [0, 2pi).
double recover_phase(const IQSample& iq, const std::array<IQSample, 4>& centroids);

/// Smallest nonzero gap between the noiseless single-quadrature output
/// levels of the four symbol phases (two of the four coincide, so three
/// distinct levels remain). Measures how distinguishable the levels are
/// at a given sideband power.
double four_level_separation(double m_a, double m_b, double carrier_amplitude,
                             const DetectorParams& d);

/// End-to-end 4-PSK run: symbols cycle deterministically through
/// 0,1,2,3,... (one measurement per symbol), the phase-diversity receiver
/// measures IQ with noise drawn from `seed` (the seed in `d` is
/// replaced), and decisions go through the analytic centroids. Trials are
/// independent by construction: per-symbol draws use the symbol slot as
/// the counter, so the result does not depend on evaluation order.
TrialResult run_trial(int n_symbols, double m_a, double m_b, double carrier_amplitude,
                      DetectorParams d, std::uint64_t seed);

} // namespace scw
