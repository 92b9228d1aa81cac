#pragma once

#include <stdexcept>

namespace scw {

/// Two spectral combs (field/field or field/tone) disagree on the sideband spacing.
struct IncompatibleGridError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// The detector bandwidth cannot resolve the requested oscillating output.
struct BandwidthViolationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

} // namespace scw
