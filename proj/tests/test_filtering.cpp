#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "scw/filtering.hpp"
#include "scw/modulation.hpp"
#include "oracles.hpp"

using namespace scw;

namespace {
constexpr double kOmega = 2.0 * M_PI * 4.8e9;

MultimodeField modulated(double m, double phi = 0.0, double e0 = 1.0) {
    return phase_modulate(from_carrier({e0, 0.0}, kOmega, 1), ModulationTone(m, phi, kOmega));
}
} // namespace

TEST_CASE("transparent filter passes everything") {
    const MultimodeField f = modulated(0.3);
    const SplitField arms = split(f, FilterProfile());
    for (int k = -f.truncation(); k <= f.truncation(); ++k) {
        CHECK(arms.transmitted.coeff(k) == f.coeff(k));
        CHECK(arms.reflected.coeff(k) == Complex(0.0, 0.0));
    }
}

TEST_CASE("opaque filter reflects everything") {
    const MultimodeField f = modulated(0.3);
    const SplitField arms = split(f, FilterProfile(0.0, 0.0));
    CHECK(total_power(arms.transmitted) == 0.0);
    CHECK(total_power(arms.reflected) == doctest::Approx(total_power(f)).epsilon(1e-15));
}

TEST_CASE("carrier separator isolates the carrier in the reflected arm") {
    const double m = 0.4;
    const MultimodeField f = modulated(m);
    const SplitField arms = split(f, carrier_separator());

    CHECK(arms.transmitted.coeff(0) == Complex(0.0, 0.0));
    CHECK(arms.reflected.coeff(0).real() == doctest::Approx(oracle::besselj(0, m)).epsilon(1e-13));
    CHECK(arms.reflected.carrier_only());
    for (int k = -f.truncation(); k <= f.truncation(); ++k)
        if (k != 0) CHECK(arms.transmitted.coeff(k) == f.coeff(k));
}

TEST_CASE("heterodyne profile transmittances") {
    const FilterProfile p = heterodyne_profile();
    CHECK(p.amp_transmittance(0) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
    CHECK(p.amp_transmittance(-1) == 0.0);
    CHECK(p.amp_transmittance(-7) == 0.0);
    CHECK(p.amp_transmittance(1) == 1.0);
    CHECK(p.amp_transmittance(5) == 1.0);
    CHECK(carrier_separator().amp_transmittance(0) == 0.0);
    CHECK(carrier_separator().amp_transmittance(3) == 1.0);
}

TEST_CASE("heterodyne split matches the first-order arm structure") {
    const double m = 0.09;
    const MultimodeField f = modulated(m);
    const SplitField arms = split(f, heterodyne_profile());
    const Complex i_unit(0.0, 1.0);
    const double half_carrier = std::sqrt(0.5) * oracle::besselj(0, m);

    // transmitted: half carrier + upper sidebands
    CHECK(std::abs(arms.transmitted.coeff(0) - Complex(half_carrier, 0.0)) <= 1e-14);
    CHECK(std::abs(arms.transmitted.coeff(1) - i_unit * oracle::besselj(1, m)) <= 1e-14);
    CHECK(arms.transmitted.coeff(-1) == Complex(0.0, 0.0));
    // reflected: half carrier + lower sidebands
    CHECK(std::abs(arms.reflected.coeff(0) - Complex(half_carrier, 0.0)) <= 1e-14);
    CHECK(std::abs(arms.reflected.coeff(-1) - i_unit * oracle::besselj(1, m)) <= 1e-14);
    CHECK(arms.reflected.coeff(1) == Complex(0.0, 0.0));
}

TEST_CASE("split conserves power per harmonic and in total") {
    oracle::Draw draw{41};
    for (int trial = 0; trial < 25; ++trial) {
        const MultimodeField f = modulated(draw.in(0.0, 1.2), draw.in(0.0, 2.0 * M_PI),
                                           draw.in(0.2, 2.0));
        FilterProfile p(draw.in(0.0, 1.0), draw.in(0.0, 1.0));
        for (int k = -3; k <= 3; ++k) p.set(k, draw.in(0.0, 1.0));

        const SplitField arms = split(f, p);
        for (int k = -f.truncation(); k <= f.truncation(); ++k) {
            const double in_p = std::norm(f.coeff(k));
            const double out_p =
                std::norm(arms.transmitted.coeff(k)) + std::norm(arms.reflected.coeff(k));
            CHECK(out_p == doctest::Approx(in_p).epsilon(1e-12).scale(1e-30));
        }
        CHECK(total_power(arms.transmitted) + total_power(arms.reflected) ==
              doctest::Approx(total_power(f)).epsilon(1e-12));
    }
}

TEST_CASE("extinction ratio softens the ideal plateaus") {
    const double eps = 0.01;
    const FilterProfile sep = carrier_separator(eps);
    CHECK(sep.amp_transmittance(0) == doctest::Approx(std::sqrt(eps)).epsilon(1e-15));
    CHECK(sep.amp_transmittance(2) == doctest::Approx(std::sqrt(1.0 - eps)).epsilon(1e-15));

    const FilterProfile het = heterodyne_profile(eps);
    CHECK(het.amp_transmittance(-2) == doctest::Approx(std::sqrt(eps)).epsilon(1e-15));
    CHECK(het.amp_transmittance(2) == doctest::Approx(std::sqrt(1.0 - eps)).epsilon(1e-15));
    CHECK(het.amp_transmittance(0) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));

    // still lossless
    const MultimodeField f = modulated(0.5);
    const SplitField arms = split(f, sep);
    CHECK(total_power(arms.transmitted) + total_power(arms.reflected) ==
          doctest::Approx(total_power(f)).epsilon(1e-12));
}

TEST_CASE("transmittance bounds are enforced") {
    CHECK_THROWS_AS(FilterProfile(1.2, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(FilterProfile().set(0, -0.1), std::invalid_argument);
    CHECK_THROWS_AS(FilterProfile::from_map({{0, 1.01}}), std::invalid_argument);
    CHECK_THROWS_AS(carrier_separator(-0.5), std::invalid_argument);
    CHECK_THROWS_AS(heterodyne_profile(1.5), std::invalid_argument);
}
