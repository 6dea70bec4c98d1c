#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rotexp {

inline constexpr double kPi = std::numbers::pi;

/// Raised when an input falls on a special case that the called routine does not
/// cover (zero angle, half turn, non-simple rotation, ...). Callers route to the
/// dedicated branch instead.
class branch_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// sin(x) / x, with the removable singularity filled in.
[[nodiscard]] inline double sinc(double x) {
    if (std::abs(x) < 1e-4) {
        const double x2 = x * x;
        return 1.0 - x2 / 6.0 * (1.0 - x2 / 20.0);
    }
    return std::sin(x) / x;
}

/// (1 - cos x) / x^2, evaluated as 1/2 * sinc(x/2)^2.
[[nodiscard]] inline double cosc(double x) {
    const double s = sinc(0.5 * x);
    return 0.5 * s * s;
}

/// x / sin(x) for x in [0, pi). Unbounded as x approaches pi.
[[nodiscard]] inline double inv_sinc(double x) {
    return 1.0 / sinc(x);
}

[[nodiscard]] inline double clamp_unit(double y) {
    return std::clamp(y, -1.0, 1.0);
}

} // namespace rotexp
