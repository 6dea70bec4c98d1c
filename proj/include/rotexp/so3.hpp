#pragma once

#include <cmath>
#include <stdexcept>
#include <variant>

#include "scalar.hpp"
#include "smallmat.hpp"
#include "wedge.hpp"

namespace rotexp {

// Angles below kZeroAngle count as the identity; angles within kPiAngle of pi take the half-turn branch.
inline constexpr double kZeroAngle = 1e-8;
inline constexpr double kPiAngle   = 1e-7;

/// Rotation angle in [0, pi] with a unit axis.
struct AxisAngle {
    double theta = 0.0;
    Vec<3> axis{};
};

// ---------------------------------------------------------------------------
// Construction
// ---------------------------------------------------------------------------

namespace detail {
inline void require_unit_axis(const Vec<3>& u, const char* who) {
    if (!(std::abs(norm(u) - 1.0) <= 1e-9)) {
        throw std::invalid_argument(std::string(who) + ": rotation axis is not a unit vector");
    }
}

/// (a_21, a_02, a_10): the vector w with Lambda_w equal to the antisymmetric part of `a`.
[[nodiscard]] constexpr Vec<3> vee(const Mat<3>& a) {
    return Vec<3>{{0.5 * (a(2, 1) - a(1, 2)), 0.5 * (a(0, 2) - a(2, 0)), 0.5 * (a(1, 0) - a(0, 1))}};
}
} // namespace detail

/// Rodrigues: cos(t) v + (1 - cos(t)) (u . v) u + sin(t) u x v.
[[nodiscard]] inline Vec<3> rodrigues_apply(double theta, const Vec<3>& u, const Vec<3>& v) {
    detail::require_unit_axis(u, "rodrigues_apply");
    const double c = std::cos(theta);
    return c * v + ((1.0 - c) * dot(u, v)) * u + std::sin(theta) * cross(u, v);
}

/// cos(t) I + (1 - cos(t)) u (x) u + sin(t) Lambda_u: counterclockwise rotation by t about u.
[[nodiscard]] inline Mat<3> rotation3(double theta, const Vec<3>& u) {
    detail::require_unit_axis(u, "rotation3");
    const double c = std::cos(theta);
    return c * Mat<3>::identity() + (1.0 - c) * outer(u, u) + std::sin(theta) * lambda_map(u);
}

/// Closed-form exponential of a 3x3 antisymmetric matrix.
[[nodiscard]] inline Mat<3> exp_so3(const Mat<3>& a) {
    const Mat<3> f     = require_antisymmetric(a, "exp_so3");
    const Vec<3> w     = detail::vee(f);
    const double theta = norm(w);
    if (theta <= kZeroAngle) {
        // Second-order Taylor; the cubic term is below 1e-24.
        return Mat<3>::identity() + f + 0.5 * (f * f);
    }
    return rotation3(theta, w / theta);
}

// ---------------------------------------------------------------------------
// Angle / axis extraction
// ---------------------------------------------------------------------------

/// arccos((tr R - 1) / 2), always in [0, pi].
[[nodiscard]] inline double angle_of(const Mat<3>& r) {
    require_rotation(r, "angle_of");
    return std::acos(clamp_unit(0.5 * (trace(r) - 1.0)));
}

/// Unit axis read off R - R^t = 2 sin(theta) Lambda_u. Only defined away from theta = 0 and pi.
[[nodiscard]] inline Vec<3> axis_of(const Mat<3>& r, double theta) {
    if (theta <= kZeroAngle || theta >= kPi - kPiAngle) {
        throw branch_error("axis_of: angle at 0 or pi, use special branch");
    }
    const Vec<3> w = detail::vee(r);
    const double s = norm(w);
    if (!(s > 0.0)) throw branch_error("axis_of: rotation has no antisymmetric part, use special branch");
    return w / s;
}

// ---------------------------------------------------------------------------
// Logarithm
// ---------------------------------------------------------------------------

struct Log3Identity {};

struct Log3Generic {
    AxisAngle axis_angle;
    Mat<3>    f; // theta * Lambda_u
};

/// Half turn: R = 2 proj - I with proj = (I + R) / 2; the axis is only known up to sign.
struct Log3Pi {
    Mat<3> proj;
    Vec<3> axis_up_to_sign; // largest-magnitude component made positive
};

using Log3Outcome = std::variant<Log3Identity, Log3Generic, Log3Pi>;

namespace detail {
/// Normalized column of largest norm, with its largest-magnitude component made positive.
template<std::size_t N>
[[nodiscard]] Vec<N> dominant_direction(const Mat<N>& p) {
    std::size_t best = 0;
    double      best_norm = -1.0;
    for (std::size_t j = 0; j < N; ++j) {
        const double nj = norm(p.column(j));
        if (nj > best_norm) {
            best_norm = nj;
            best      = j;
        }
    }
    Vec<N>      v = p.column(best) / best_norm;
    std::size_t k = 0;
    for (std::size_t i = 1; i < N; ++i)
        if (std::abs(v[i]) > std::abs(v[k])) k = i;
    if (v[k] < 0.0) v = -v;
    return v;
}
} // namespace detail

[[nodiscard]] inline Log3Outcome log_so3(const Mat<3>& r, double tol = kInputTol) {
    require_rotation(r, "log_so3", tol);
    const Vec<3> w     = detail::vee(r); // sin(theta) u
    const double s     = norm(w);
    const double c     = 0.5 * (trace(r) - 1.0);
    const double theta = std::atan2(s, c);

    if (theta <= kZeroAngle) return Log3Identity{};
    if (theta >= kPi - kPiAngle) {
        const Mat<3> proj = 0.5 * (Mat<3>::identity() + r);
        return Log3Pi{proj, detail::dominant_direction(proj)};
    }
    const Vec<3> u = w / s;
    return Log3Generic{AxisAngle{theta, u}, (theta / s) * skew_part(r)};
}

/// A concrete antisymmetric logarithm for any outcome; half turns use pi * Lambda_axis.
[[nodiscard]] inline Mat<3> materialize(const Log3Outcome& outcome) {
    struct Visitor {
        Mat<3> operator()(const Log3Identity&) const { return Mat<3>::zero(); }
        Mat<3> operator()(const Log3Generic& g) const { return g.f; }
        Mat<3> operator()(const Log3Pi& p) const { return kPi * lambda_map(p.axis_up_to_sign); }
    };
    return std::visit(Visitor{}, outcome);
}

} // namespace rotexp
