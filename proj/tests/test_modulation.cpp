#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "scw/errors.hpp"
#include "scw/modulation.hpp"
#include "oracles.hpp"

using namespace scw;

namespace {
constexpr double kOmega = 2.0 * M_PI * 4.8e9;

double max_coeff_delta(const MultimodeField& a, const MultimodeField& b) {
    const int k_max = std::max(a.truncation(), b.truncation());
    double worst = 0.0;
    for (int k = -k_max; k <= k_max; ++k)
        worst = std::max(worst, std::abs(a.coeff(k) - b.coeff(k)));
    return worst;
}
} // namespace

TEST_CASE("tone construction") {
    CHECK_THROWS_AS(ModulationTone(-0.1, 0.0, kOmega), std::invalid_argument);
    CHECK(ModulationTone(0.1, -M_PI_2, kOmega).phase == doctest::Approx(1.5 * M_PI));
    CHECK(ModulationTone(0.1, 2.0 * M_PI, kOmega).phase == doctest::Approx(0.0).scale(1.0));
}

TEST_CASE("zero-index modulation is the identity") {
    const MultimodeField f = phase_modulate(from_carrier({1.0, 0.0}, kOmega, 3),
                                            ModulationTone(0.4, 0.7, kOmega));
    const MultimodeField g = phase_modulate(f, ModulationTone(0.0, 1.0, kOmega));
    CHECK(g.truncation() == f.truncation());
    CHECK(max_coeff_delta(f, g) == 0.0);
}

TEST_CASE("carrier modulation reproduces the Bessel comb with the i^|k| sign rule") {
    const double m = 0.09;
    const MultimodeField f = phase_modulate(from_carrier({1.0, 0.0}, kOmega, 1),
                                            ModulationTone(m, 0.0, kOmega));
    const Complex i_unit(0.0, 1.0);

    CHECK(std::abs(f.coeff(0) - Complex(oracle::besselj(0, m), 0.0)) <= 1e-14);
    // first-order pair: both +1 and -1 carry i * J_1(m)
    CHECK(std::abs(f.coeff(1) - i_unit * oracle::besselj(1, m)) <= 1e-14);
    CHECK(std::abs(f.coeff(-1) - i_unit * oracle::besselj(1, m)) <= 1e-14);
    // second order flips sign: i^2 = -1
    CHECK(std::abs(f.coeff(2) + oracle::besselj(2, m)) <= 1e-16);
    CHECK(std::abs(f.coeff(-2) + oracle::besselj(2, m)) <= 1e-16);
}

TEST_CASE("drive phase enters as e^{ik phi}") {
    const double m = 0.3, phi = 1.1;
    const MultimodeField f = phase_modulate(from_carrier({1.0, 0.0}, kOmega, 1),
                                            ModulationTone(m, phi, kOmega));
    for (int k : {-2, -1, 1, 2}) {
        const Complex expected = std::pow(Complex(0.0, 1.0), std::abs(k)) *
                                 oracle::besselj(std::abs(k), m) *
                                 std::exp(Complex(0.0, k * phi));
        CHECK(std::abs(f.coeff(k) - expected) <= 1e-13);
    }
}

TEST_CASE("opposite drives cancel") {
    const MultimodeField carrier = from_carrier({1.0, 0.0}, kOmega, 1);
    const MultimodeField once = phase_modulate(carrier, ModulationTone(0.09, 0.0, kOmega));
    const MultimodeField back = phase_modulate(once, ModulationTone(0.09, M_PI, kOmega));
    CHECK(max_coeff_delta(back, carrier) <= 1e-12);
}

TEST_CASE("grid compatibility") {
    const MultimodeField carrier = from_carrier({1.0, 0.0}, kOmega, 1);
    // carrier-only fields adopt the tone frequency
    const MultimodeField f = phase_modulate(carrier, ModulationTone(0.1, 0.0, 2.0 * kOmega));
    CHECK(f.tone_freq() == 2.0 * kOmega);
    // a modulated field does not
    CHECK_THROWS_AS(phase_modulate(f, ModulationTone(0.1, 0.0, kOmega)), IncompatibleGridError);
    CHECK_THROWS_AS(
        combine_tones(ModulationTone(0.1, 0.0, kOmega), ModulationTone(0.1, 0.0, 2.0 * kOmega)),
        IncompatibleGridError);
}

TEST_CASE("combine_tones phasor arithmetic") {
    const ModulationTone a(0.09, 0.0, kOmega);

    CHECK(combine_tones(a, ModulationTone(0.09, 0.0, kOmega)).index ==
          doctest::Approx(0.18).epsilon(1e-15));
    CHECK(combine_tones(a, ModulationTone(0.09, M_PI, kOmega)).index ==
          doctest::Approx(0.0).scale(1.0).epsilon(1e-15));
    CHECK(combine_tones(a, ModulationTone(0.09, M_PI_2, kOmega)).index ==
          doctest::Approx(0.09 * std::sqrt(2.0)).epsilon(1e-14));

    // degenerate sum keeps the conventional phase 0
    const CombinedTone zero =
        combine_tones(ModulationTone(0.2, 0.0, kOmega), ModulationTone(0.2, M_PI, kOmega));
    CHECK(zero.index <= 1e-15);

    const CombinedTone c =
        combine_tones(ModulationTone(0.1, 0.4, kOmega), ModulationTone(0.25, 2.9, kOmega));
    const Complex sum = 0.1 * std::exp(Complex(0.0, 0.4)) + 0.25 * std::exp(Complex(0.0, 2.9));
    CHECK(c.index == doctest::Approx(std::abs(sum)).epsilon(1e-14));
    CHECK(c.phase == doctest::Approx(std::arg(sum)).epsilon(1e-14));
}

TEST_CASE("two modulators equal one combined drive (composition law)") {
    const MultimodeField carrier = from_carrier({1.0, 0.0}, kOmega, 1);
    oracle::Draw draw{99};
    for (int trial = 0; trial < 100; ++trial) {
        const ModulationTone a(draw.in(0.0, 0.5), draw.in(0.0, 2.0 * M_PI), kOmega);
        const ModulationTone b(draw.in(0.0, 0.5), draw.in(0.0, 2.0 * M_PI), kOmega);

        const MultimodeField two_step = phase_modulate(phase_modulate(carrier, a), b);
        const CombinedTone c = combine_tones(a, b);
        const MultimodeField one_step =
            c.index == 0.0 ? carrier
                           : phase_modulate(carrier, ModulationTone(c.index, c.phase, kOmega));

        CHECK(max_coeff_delta(two_step, one_step) <= 1e-10);
    }
}

TEST_CASE("modulation order does not matter") {
    const MultimodeField carrier = from_carrier({1.0, 0.0}, kOmega, 1);
    const ModulationTone a(0.33, 0.2, kOmega);
    const ModulationTone b(0.18, 4.4, kOmega);
    const MultimodeField ab = phase_modulate(phase_modulate(carrier, a), b);
    const MultimodeField ba = phase_modulate(phase_modulate(carrier, b), a);
    CHECK(max_coeff_delta(ab, ba) <= 1e-12);
}

TEST_CASE("modulation conserves power") {
    oracle::Draw draw{7};
    for (int trial = 0; trial < 20; ++trial) {
        const double e0 = draw.in(0.1, 3.0);
        const MultimodeField f =
            phase_modulate(from_carrier({e0, 0.0}, kOmega, 1),
                           ModulationTone(draw.in(0.0, 1.5), draw.in(0.0, 2.0 * M_PI), kOmega));
        CHECK(total_power(f) == doctest::Approx(e0 * e0).epsilon(1e-12));
    }
}
