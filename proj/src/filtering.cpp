#include "scw/filtering.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace scw {

namespace {

void check_transmittance(double t) {
    if (!(t >= 0.0 && t <= 1.0))
        throw std::invalid_argument("FilterProfile: amplitude transmittance must be in [0, 1]");
}

} // namespace

FilterProfile::FilterProfile(double default_neg, double default_pos)
    : default_neg_(default_neg), default_pos_(default_pos) {
    check_transmittance(default_neg);
    check_transmittance(default_pos);
}

FilterProfile FilterProfile::from_map(std::map<int, double> amp_transmittance) {
    FilterProfile p;
    for (const auto& [k, t] : amp_transmittance) check_transmittance(t);
    p.overrides_ = std::move(amp_transmittance);
    return p;
}

FilterProfile& FilterProfile::set(int k, double t) {
    check_transmittance(t);
    overrides_[k] = t;
    return *this;
}

double FilterProfile::amp_transmittance(int k) const {
    if (auto it = overrides_.find(k); it != overrides_.end()) return it->second;
    return k < 0 ? default_neg_ : default_pos_;
}

FilterProfile carrier_separator(double extinction) {
    if (!(extinction >= 0.0 && extinction <= 1.0))
        throw std::invalid_argument("carrier_separator: extinction must be in [0, 1]");
    FilterProfile p(std::sqrt(1.0 - extinction), std::sqrt(1.0 - extinction));
    p.set(0, std::sqrt(extinction));
    return p;
}

FilterProfile heterodyne_profile(double extinction) {
    if (!(extinction >= 0.0 && extinction <= 1.0))
        throw std::invalid_argument("heterodyne_profile: extinction must be in [0, 1]");
    FilterProfile p(std::sqrt(extinction), std::sqrt(1.0 - extinction));
    p.set(0, std::sqrt(0.5));
    return p;
}

SplitField split(const MultimodeField& f, const FilterProfile& p) {
    const int k_max = f.truncation();
    Eigen::VectorXcd trans(2 * k_max + 1);
    Eigen::VectorXcd refl(2 * k_max + 1);
    for (int k = -k_max; k <= k_max; ++k) {
        const double t = p.amp_transmittance(k);
        const double r = std::sqrt(std::max(0.0, 1.0 - t * t));
        trans(k + k_max) = t * f.coeff(k);
        refl(k + k_max) = r * f.coeff(k);
    }
    return {MultimodeField(f.carrier_freq(), f.tone_freq(), std::move(trans)),
            MultimodeField(f.carrier_freq(), f.tone_freq(), std::move(refl))};
}

} // namespace scw
