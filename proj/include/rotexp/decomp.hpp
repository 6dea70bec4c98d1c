#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string_view>

#include "smallmat.hpp"
#include "wedge.hpp"

namespace rotexp {

/// Degeneracy class of a 4x4 / 5x5 antisymmetric generator.
enum class SplitClass { Zero, Simple, Isoclinic, Generic };

[[nodiscard]] constexpr std::string_view to_string(SplitClass k) {
    switch (k) {
    case SplitClass::Zero: return "Zero";
    case SplitClass::Simple: return "Simple";
    case SplitClass::Isoclinic: return "Isoclinic";
    case SplitClass::Generic: return "Generic";
    }
    return "?";
}

/// Delta = tr(f^4) - tr(f^2)^2 / 4 and the two squared plane angles
/// theta_pm^2 = -tr(f^2)/4 +- sqrt(Delta)/2, ordered theta_plus_sq >= theta_minus_sq.
struct Invariants45 {
    double delta          = 0.0;
    double theta_plus_sq  = 0.0;
    double theta_minus_sq = 0.0;
};

/// Orthogonal decomposition f = f_plus + f_minus into wedges with f_plus f_minus = 0.
/// Only Generic and Simple splits carry the parts; an isoclinic split is not unique.
template<std::size_t N>
struct SpectralSplit {
    double                delta       = 0.0;
    double                theta_plus  = 0.0;
    double                theta_minus = 0.0;
    std::optional<Mat<N>> f_plus;
    std::optional<Mat<N>> f_minus;
    SplitClass            klass = SplitClass::Zero;
};

inline constexpr double kSplitZeroTol = 1e-10;
inline constexpr double kSplitIsoTol  = 1e-8;

namespace detail {

/// For a symmetric T whose nonzero eigenvalues form two double pairs t1, t2 (plus zeros),
/// returns (t1 - t2)^2 evaluated as 4 |T^2 - (tr T / 4) T|_F^2 / tr(T^2).
template<std::size_t N>
[[nodiscard]] double pair_gap_sq(const Mat<N>& t) {
    const Mat<N> t2  = t * t;
    const double tt2 = frobenius_sq(t);
    if (!(tt2 > 0.0)) return 0.0;
    const Mat<N> spread = t2 - (0.25 * trace(t)) * t;
    return 4.0 * frobenius_sq(spread) / tt2;
}

/// Pfaffian of the principal 4x4 block on rows/columns idx.
template<std::size_t N>
[[nodiscard]] constexpr double pfaffian4(const Mat<N>& f, const std::array<std::size_t, 4>& idx) {
    const auto a = [&](std::size_t i, std::size_t j) { return f(idx[i], idx[j]); };
    return a(0, 1) * a(2, 3) - a(0, 2) * a(1, 3) + a(0, 3) * a(1, 2);
}

/// theta_plus^2 * theta_minus^2, the sum of squared principal 4x4 Pfaffians.
template<std::size_t N>
    requires QuarticDim<N>
[[nodiscard]] double angle_product_sq(const Mat<N>& f) {
    if constexpr (N == 4) {
        const double pf = pfaffian4(f, {0, 1, 2, 3});
        return pf * pf;
    } else {
        double s = 0.0;
        for (std::size_t skip = 0; skip < 5; ++skip) {
            std::array<std::size_t, 4> idx{};
            std::size_t                k = 0;
            for (std::size_t i = 0; i < 5; ++i)
                if (i != skip) idx[k++] = i;
            const double pf = pfaffian4(f, idx);
            s += pf * pf;
        }
        return s;
    }
}

/// Same as invariants_of, on an already skew-symmetrized f.
template<std::size_t N>
    requires QuarticDim<N>
[[nodiscard]] Invariants45 invariants_skew(const Mat<N>& f) {
    const double sum   = 0.5 * frobenius_sq(f); // -tr(f^2)/2 = theta_plus^2 + theta_minus^2
    const double delta = std::max(0.0, pair_gap_sq(Mat<N>(f * f)));
    const double root  = std::sqrt(delta);

    Invariants45 inv;
    inv.delta         = delta;
    inv.theta_plus_sq = std::max(0.0, 0.5 * (sum + root));
    // Smaller root from the product of roots.
    inv.theta_minus_sq =
        inv.theta_plus_sq > 0.0 ? std::clamp(angle_product_sq(f) / inv.theta_plus_sq, 0.0, inv.theta_plus_sq) : 0.0;
    return inv;
}

} // namespace detail

template<std::size_t N>
    requires QuarticDim<N>
[[nodiscard]] Invariants45 invariants_of(const Mat<N>& f) {
    return detail::invariants_skew(require_antisymmetric(f, "invariants_of"));
}

/// Threshold policy around the exact cases f = 0, theta_minus = 0 and Delta = 0.
[[nodiscard]] inline SplitClass classify(const Invariants45& inv, double f_norm) {
    if (f_norm <= kSplitZeroTol) return SplitClass::Zero;
    if (std::sqrt(inv.theta_minus_sq) <= kSplitZeroTol * std::max(1.0, f_norm)) return SplitClass::Simple;
    if (std::sqrt(inv.delta) <= kSplitIsoTol * std::max(1.0, f_norm * f_norm)) return SplitClass::Isoclinic;
    return SplitClass::Generic;
}

template<std::size_t N>
    requires QuarticDim<N>
[[nodiscard]] SpectralSplit<N> orthogonal_decompose(const Mat<N>& input) {
    const Mat<N>       f      = require_antisymmetric(input, "orthogonal_decompose");
    const Invariants45 inv    = detail::invariants_skew(f);
    const double       f_norm = half_trace_norm(f);

    SpectralSplit<N> out;
    out.delta       = inv.delta;
    out.theta_plus  = std::sqrt(inv.theta_plus_sq);
    out.theta_minus = std::sqrt(inv.theta_minus_sq);
    out.klass       = classify(inv, f_norm);

    switch (out.klass) {
    case SplitClass::Zero:
        out.theta_plus = out.theta_minus = 0.0;
        break;
    case SplitClass::Simple:
        out.theta_plus  = f_norm;
        out.theta_minus = 0.0;
        out.f_plus      = f;
        out.f_minus     = Mat<N>::zero();
        break;
    case SplitClass::Isoclinic:
        break;
    case SplitClass::Generic: {
        // Closed-form f_plus fixes the plane; f is then compressed onto span{b0, f b0}.
        const Mat<N> f_plus0 = (inv.theta_minus_sq * f + f * f * f) * (-1.0 / std::sqrt(inv.delta));
        Vec<N>       b0      = f * detail::projection_basis<1>(Mat<N>(f_plus0 * f_plus0))[0];
        b0                   = b0 / norm(b0);
        Vec<N> b1            = f * b0;
        b1 -= dot(b0, b1) * b0;
        b1              = b1 / norm(b1);
        const Mat<N> p  = outer(b0, b0) + outer(b1, b1);
        out.f_plus      = p * f * p;
        out.f_minus     = f - *out.f_plus;
        break;
    }
    }
    return out;
}

} // namespace rotexp
