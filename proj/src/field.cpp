#include "scw/field.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace scw {

MultimodeField::MultimodeField(double carrier_freq, double tone_freq, int truncation)
    : carrier_freq_(carrier_freq), tone_freq_(tone_freq), trunc_(truncation) {
    if (truncation < 1)
        throw std::invalid_argument("MultimodeField: truncation must be >= 1");
    coeffs_ = Eigen::VectorXcd::Zero(2 * truncation + 1);
}

MultimodeField::MultimodeField(double carrier_freq, double tone_freq, Eigen::VectorXcd coeffs)
    : carrier_freq_(carrier_freq), tone_freq_(tone_freq), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() < 3 || coeffs_.size() % 2 == 0)
        throw std::invalid_argument("MultimodeField: coefficient vector must have odd size >= 3");
    trunc_ = static_cast<int>((coeffs_.size() - 1) / 2);
}

bool MultimodeField::carrier_only() const {
    for (int k = -trunc_; k <= trunc_; ++k)
        if (k != 0 && coeff(k) != Complex(0.0, 0.0)) return false;
    return true;
}

int default_truncation(double total_mod_index) {
    return static_cast<int>(std::ceil(std::max(0.0, total_mod_index))) + 12;
}

MultimodeField from_carrier(const CarrierSpec& spec, double tone_freq, int truncation) {
    if (truncation < 1)
        throw std::invalid_argument("from_carrier: truncation must be >= 1");
    if (spec.amplitude < 0.0)
        throw std::invalid_argument("from_carrier: carrier amplitude must be >= 0");
    Eigen::VectorXcd c = Eigen::VectorXcd::Zero(2 * truncation + 1);
    c(truncation) = Complex(spec.amplitude, 0.0);
    return MultimodeField(spec.carrier_freq, tone_freq, std::move(c));
}

Complex evaluate_envelope(const MultimodeField& f, double t) {
    const Complex z = std::exp(Complex(0.0, f.tone_freq() * t));
    const Complex zc = std::conj(z);
    Complex pos(0.0, 0.0);
    Complex neg(0.0, 0.0);
    for (int k = f.truncation(); k >= 1; --k) {
        pos = (pos + f.coeff(k)) * z;
        neg = (neg + f.coeff(-k)) * zc;
    }
    return pos + neg + f.coeff(0);
}

double total_power(const MultimodeField& f) {
    return f.coeffs().squaredNorm();
}

double sideband_power(const MultimodeField& f) {
    return f.coeffs().squaredNorm() - std::norm(f.coeff(0));
}

Eigen::VectorXd period_grid(double tone_freq, int n_samples) {
    if (n_samples < 1)
        throw std::invalid_argument("period_grid: need at least one sample");
    if (tone_freq <= 0.0)
        throw std::invalid_argument("period_grid: tone frequency must be positive");
    const double period = 2.0 * std::numbers::pi / tone_freq;
    Eigen::VectorXd t(n_samples);
    for (int i = 0; i < n_samples; ++i) t(i) = period * i / n_samples;
    return t;
}

} // namespace scw
