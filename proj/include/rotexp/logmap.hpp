#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string_view>
#include <variant>

#include "decomp.hpp"
#include "expmap.hpp"
#include "scalar.hpp"
#include "smallmat.hpp"
#include "so3.hpp"
#include "wedge.hpp"

namespace rotexp {

/// Cosines and angles of the two rotation planes of a 4x4 / 5x5 rotation.
/// y_plus >= y_minus, so theta_plus <= theta_minus (the reverse of SpectralSplit's order).
struct Angles45 {
    double delta       = 0.0; // (y_plus - y_minus)^2
    double y_plus      = 1.0;
    double y_minus     = 1.0;
    double theta_plus  = 0.0;
    double theta_minus = 0.0;
};

/// sqrt(delta) at or below this is treated as equal plane angles.
inline constexpr double kDeltaTol = 1e-8;
/// A rotation counts as simple when its smaller plane angle is below this.
inline constexpr double kSimpleTol = 1e-6;

// ---------------------------------------------------------------------------
// Outcomes
// ---------------------------------------------------------------------------

struct LogIdentity {};

template<std::size_t N>
struct LogGeneric {
    Mat<N> f;
    Mat<N> f_plus;  // smaller angle theta_plus
    Mat<N> f_minus; // larger angle theta_minus
};

template<std::size_t N>
struct LogIsoclinic {
    Mat<N> f;
};

template<std::size_t N>
struct LogSimple {
    Mat<N> f;
    double theta = 0.0;
};

/// Half turn in one plane; proj2 = (I - R) / 2.
template<std::size_t N>
struct LogSimplePi {
    Mat<N> proj2;
};

/// -1 on a four-plane; proj4 = (I - R) / 2 (the identity when N = 4).
template<std::size_t N>
struct LogFourPlanePi {
    Mat<N> proj4;
};

/// R = exp(f_plus) - 2 proj_minus: an ordinary plane plus a half-turn plane.
template<std::size_t N>
struct LogMixedPi {
    Mat<N> f_plus;
    Mat<N> proj_minus;
};

template<std::size_t N>
using LogOutcome = std::variant<LogIdentity, LogGeneric<N>, LogIsoclinic<N>, LogSimple<N>, LogSimplePi<N>,
                                LogFourPlanePi<N>, LogMixedPi<N>>;

template<std::size_t N>
[[nodiscard]] constexpr std::string_view branch_name(const LogOutcome<N>& o) {
    constexpr std::array<std::string_view, 7> names{"Identity", "Generic",     "Isoclinic", "Simple",
                                                    "SimplePi", "FourPlanePi", "MixedPi"};
    return names[o.index()];
}

namespace detail {

template<std::size_t N>
struct Spectral45 {
    Angles45 angles;
    Mat<N>   skew;        // (R - R^t) / 2 = sin(t+) w+ + sin(t-) w-
    Mat<N>   sin_plus{};  // sin(t+) w+, only when sqrt(delta) > kDeltaTol
    Mat<N>   sin_minus{}; // sin(t-) w-
    double   iso_sin   = 0.0; // common sine when the planes are not separable
    bool     separable = false;
};

/// theta / sin(theta) * m, where sin(theta) = s; tends to m as both vanish.
template<std::size_t N>
[[nodiscard]] Mat<N> rescale_by_angle(const Mat<N>& m, double theta, double s) {
    return s > 0.0 ? (theta / s) * m : m;
}

template<std::size_t N>
    requires QuarticDim<N>
[[nodiscard]] Spectral45<N> spectral45(const Mat<N>& r) {
    constexpr double n = static_cast<double>(N);

    Spectral45<N> out;
    out.skew = skew_part(r);

    // (R + R^t)/2 - I has eigenvalues y+ - 1, y- - 1 (each twice) and n - 4 zeros.
    const Mat<N> sym_shift = 0.5 * (r + transpose(r)) - Mat<N>::identity();
    const double delta     = std::max(0.0, pair_gap_sq(sym_shift));
    const double root      = std::sqrt(delta);
    const double mid       = 0.25 * (trace(r) - n + 4.0);

    Angles45& a = out.angles;
    a.delta     = delta;
    a.y_plus    = clamp_unit(mid + 0.5 * root);
    a.y_minus   = clamp_unit(mid - 0.5 * root);

    if (root > kDeltaTol) {
        // (R^2 - R^2t)/2 = sin(2t+) w+ + sin(2t-) w-; separate the planes with the pair of cosines.
        const Mat<N> skew2 = skew_part(Mat<N>(r * r));
        const double inv   = 1.0 / root;
        out.sin_plus       = (a.y_minus * out.skew - 0.5 * skew2) * (-inv);
        out.sin_minus      = (a.y_plus * out.skew - 0.5 * skew2) * inv;
        out.separable      = true;
        a.theta_plus       = std::atan2(half_trace_norm(out.sin_plus), a.y_plus);
        a.theta_minus      = std::atan2(half_trace_norm(out.sin_minus), a.y_minus);
    } else {
        // Both planes share one angle; |skew| = sqrt(2) sin(theta).
        out.iso_sin  = half_trace_norm(out.skew) / std::sqrt(2.0);
        a.theta_plus = a.theta_minus = std::atan2(out.iso_sin, mid);
    }
    return out;
}

template<std::size_t N>
[[nodiscard]] LogSimple<N> log_simple_unchecked(const Mat<N>& r) {
    constexpr double n     = static_cast<double>(N);
    const Mat<N>     skew  = skew_part(r);
    const double     s     = half_trace_norm(skew);
    const double     theta = std::atan2(s, 0.5 * (trace(r) - n + 2.0));
    if (theta <= kZeroAngle || theta >= kPi - kPiAngle) {
        throw branch_error("log_simple: angle at 0 or pi, use special branch");
    }
    return LogSimple<N>{(theta / s) * skew, theta};
}

} // namespace detail

// ---------------------------------------------------------------------------
// Operations
// ---------------------------------------------------------------------------

/// Plane cosines y_pm = (tr R - n + 4)/4 +- sqrt(delta)/2 and angles in [0, pi].
template<std::size_t N>
    requires QuarticDim<N>
[[nodiscard]] Angles45 spectral_angles(const Mat<N>& r, double tol = kInputTol) {
    require_rotation(r, "spectral_angles", tol);
    return detail::spectral45(r).angles;
}

/// Logarithm of a simple rotation: theta = arccos((tr R - n + 2)/2), f = theta/(2 sin theta) (R - R^t).
template<std::size_t N>
[[nodiscard]] LogSimple<N> log_simple(const Mat<N>& r, double tol = kInputTol) {
    require_rotation(r, "log_simple", tol);
    if constexpr (N != 3) {
        if (detail::spectral45(r).angles.theta_plus > kSimpleTol) {
            throw branch_error("log_simple: rotation is not simple");
        }
    }
    return detail::log_simple_unchecked(r);
}

template<std::size_t N>
    requires QuarticDim<N>
[[nodiscard]] LogOutcome<N> log45(const Mat<N>& r, double tol = kInputTol) {
    require_rotation(r, "log45", tol);
    const detail::Spectral45<N> sp = detail::spectral45(r);
    const Angles45&             a  = sp.angles;

    const bool small_zero = a.theta_plus <= kZeroAngle;
    const bool large_zero = a.theta_minus <= kZeroAngle;
    const bool small_pi   = a.theta_plus >= kPi - kPiAngle;
    const bool large_pi   = a.theta_minus >= kPi - kPiAngle;
    const auto half_gap   = [&] { return 0.5 * (Mat<N>::identity() - r); };

    if (small_zero && large_zero) return LogIdentity{};

    if (!sp.separable) {
        if (small_pi) {
            if constexpr (N == 4) return LogFourPlanePi<N>{Mat<N>::identity()};
            else return LogFourPlanePi<N>{half_gap()};
        }
        return LogIsoclinic<N>{detail::rescale_by_angle(sp.skew, a.theta_plus, sp.iso_sin)};
    }

    if (small_zero) {
        if (large_pi) return LogSimplePi<N>{half_gap()};
        return detail::log_simple_unchecked(r);
    }

    const Mat<N> f_plus = detail::rescale_by_angle(sp.sin_plus, a.theta_plus, half_trace_norm(sp.sin_plus));
    if (large_pi) {
        return LogMixedPi<N>{f_plus, 0.5 * (exp_son(f_plus) - r)};
    }
    if (small_pi) {
        // Ruled out: theta_minus >= theta_plus near pi forces delta ~ 0.
        throw std::logic_error("log45: separable planes with both angles at pi");
    }
    const Mat<N> f_minus = detail::rescale_by_angle(sp.sin_minus, a.theta_minus, half_trace_norm(sp.sin_minus));
    return LogGeneric<N>{f_plus + f_minus, f_plus, f_minus};
}

/// A concrete antisymmetric logarithm. Where only a half-turn plane is known, an orthonormal
/// basis of it is extracted deterministically and pi times its wedge is used.
template<std::size_t N>
    requires QuarticDim<N>
[[nodiscard]] Mat<N> materialize(const LogOutcome<N>& outcome) {
    struct Visitor {
        Mat<N> operator()(const LogIdentity&) const { return Mat<N>::zero(); }
        Mat<N> operator()(const LogGeneric<N>& g) const { return g.f; }
        Mat<N> operator()(const LogIsoclinic<N>& g) const { return g.f; }
        Mat<N> operator()(const LogSimple<N>& g) const { return g.f; }
        Mat<N> operator()(const LogSimplePi<N>& g) const {
            const auto b = detail::projection_basis<2>(g.proj2);
            return kPi * wedge(b[0], b[1]);
        }
        Mat<N> operator()(const LogFourPlanePi<N>& g) const {
            const auto b = detail::projection_basis<4>(g.proj4);
            return kPi * (wedge(b[0], b[1]) + wedge(b[2], b[3]));
        }
        Mat<N> operator()(const LogMixedPi<N>& g) const {
            const auto b = detail::projection_basis<2>(g.proj_minus);
            return g.f_plus + kPi * wedge(b[0], b[1]);
        }
    };
    return std::visit(Visitor{}, outcome);
}

} // namespace rotexp
