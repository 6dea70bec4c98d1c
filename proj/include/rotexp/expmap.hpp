#pragma once

#include <cmath>
#include <stdexcept>

#include "decomp.hpp"
#include "scalar.hpp"
#include "smallmat.hpp"
#include "so3.hpp"

namespace rotexp {

/// Scalars of exp(f) = I + (A f + B f^2 + C f^3 + D f^4) / sqrt(Delta).
struct Exp45Coefficients {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    double d = 0.0;
};

/// A = t+^2 sinc(t-) - t-^2 sinc(t+),  B = t+^2 cosc(t-) - t-^2 cosc(t+),
/// C = sinc(t-) - sinc(t+),            D = cosc(t-) - cosc(t+),
/// with sinc(t) = sin(t)/t and cosc(t) = (1 - cos(t))/t^2.
[[nodiscard]] inline Exp45Coefficients exp45_coefficients(const Invariants45& inv) {
    const double tp = std::sqrt(inv.theta_plus_sq);
    const double tm = std::sqrt(inv.theta_minus_sq);
    return Exp45Coefficients{
        inv.theta_plus_sq * sinc(tm) - inv.theta_minus_sq * sinc(tp),
        inv.theta_plus_sq * cosc(tm) - inv.theta_minus_sq * cosc(tp),
        sinc(tm) - sinc(tp),
        cosc(tm) - cosc(tp),
    };
}

namespace detail {

/// I + sinc(t) f + cosc(t) f^2; exact for any f with f^3 = -t^2 f.
template<std::size_t N>
[[nodiscard]] Mat<N> exp_cubic(const Mat<N>& f, double theta) {
    return Mat<N>::identity() + sinc(theta) * f + cosc(theta) * (f * f);
}

/// max |f^3 + t^2 f| relative to t^3.
template<std::size_t N>
[[nodiscard]] double cube_residual(const Mat<N>& f, double theta) {
    return max_abs(f * f * f + (theta * theta) * f) / std::max(1.0, theta * theta * theta);
}

template<std::size_t N>
[[nodiscard]] Mat<N> exp45_generic_unchecked(const Mat<N>& f, const Invariants45& inv) {
    const Exp45Coefficients k  = exp45_coefficients(inv);
    const Mat<N>            f2 = f * f;
    const Mat<N>            f3 = f2 * f;
    const Mat<N>            f4 = f2 * f2;
    return Mat<N>::identity() + (k.a * f + k.b * f2 + k.c * f3 + k.d * f4) * (1.0 / std::sqrt(inv.delta));
}

} // namespace detail

/// exp(t u^v) = I - (1 - cos t) proj_uv + sin t u^v for a rank <= 2 generator, written in f and f^2.
template<std::size_t N>
[[nodiscard]] Mat<N> exp_simple(const Mat<N>& input) {
    const Mat<N> f     = require_antisymmetric(input, "exp_simple");
    const double theta = half_trace_norm(f);
    if (detail::cube_residual(f, theta) > 1e-8) {
        throw branch_error("exp_simple: not a simple generator");
    }
    return detail::exp_cubic(f, theta);
}

/// Two-plane exponential for distinct nonzero plane angles.
template<std::size_t N>
    requires QuarticDim<N>
[[nodiscard]] Mat<N> exp45_generic(const Mat<N>& input, const Invariants45& inv) {
    const Mat<N> f = require_antisymmetric(input, "exp45_generic");
    if (classify(inv, half_trace_norm(f)) != SplitClass::Generic) {
        throw branch_error("exp45_generic: generator is not in the Generic class");
    }
    return detail::exp45_generic_unchecked(f, inv);
}

/// Equal plane angles theta: f^3 = -theta^2 f and exp(f) = I + sinc(theta) f + cosc(theta) f^2.
template<std::size_t N>
    requires QuarticDim<N>
[[nodiscard]] Mat<N> exp45_isoclinic(const Mat<N>& input, double theta) {
    const Mat<N> f = require_antisymmetric(input, "exp45_isoclinic");
    if (detail::cube_residual(f, theta) > 1e-6) {
        throw branch_error("exp45_isoclinic: f^3 != -theta^2 f, generator is not isoclinic with this angle");
    }
    return detail::exp_cubic(f, theta);
}

/// Closed-form exponential of an antisymmetric matrix for N = 3, 4, 5.
template<std::size_t N>
[[nodiscard]] Mat<N> exp_son(const Mat<N>& input, double tol = kInputTol) {
    if constexpr (N == 3) {
        return exp_so3(require_antisymmetric(input, "exp_son", tol));
    } else {
        const Mat<N>       f      = require_antisymmetric(input, "exp_son", tol);
        const Invariants45 inv    = detail::invariants_skew(f);
        const double       f_norm = half_trace_norm(f);
        switch (classify(inv, f_norm)) {
        case SplitClass::Zero: return Mat<N>::identity() + f;
        case SplitClass::Simple: return detail::exp_cubic(f, f_norm);
        case SplitClass::Isoclinic: return detail::exp_cubic(f, std::sqrt(0.5 * (inv.theta_plus_sq + inv.theta_minus_sq)));
        case SplitClass::Generic: return detail::exp45_generic_unchecked(f, inv);
        }
        throw std::logic_error("exp_son: unhandled split class");
    }
}

} // namespace rotexp
