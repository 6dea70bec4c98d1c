#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "scalar.hpp"
#include "smallmat.hpp"

namespace rotexp {

/// Outer product u (x) v: the rank-one map w -> (v . w) u, entry (i, j) = u_i v_j.
template<std::size_t N>
[[nodiscard]] constexpr Mat<N> outer(const Vec<N>& u, const Vec<N>& v) {
    Mat<N> m{};
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) m(i, j) = u[i] * v[j];
    return m;
}

/// Wedge product u ^ v = u (x) v - v (x) u. Antisymmetric, rank two when u and v span a plane.
template<std::size_t N>
[[nodiscard]] constexpr Mat<N> wedge(const Vec<N>& u, const Vec<N>& v) {
    Mat<N> m{};
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) m(i, j) = u[i] * v[j] - v[i] * u[j];
    return m;
}

/// |u ^ v| = sqrt(|u|^2 |v|^2 - (u . v)^2), the area of the parallelogram spanned by u and v.
/// A radicand made negative by rounding is clamped to zero.
template<std::size_t N>
[[nodiscard]] inline double wedge_norm(const Vec<N>& u, const Vec<N>& v) {
    const double uv = dot(u, v);
    return std::sqrt(std::max(0.0, dot(u, u) * dot(v, v) - uv * uv));
}

/// Matrix of w -> u x w.
[[nodiscard]] constexpr Mat<3> lambda_map(const Vec<3>& u) {
    return Mat<3>{{0.0, -u[2], u[1]}, {u[2], 0.0, -u[0]}, {-u[1], u[0], 0.0}};
}

/// Degeneracy threshold for plane construction; scales with |u| |v|.
template<std::size_t N>
[[nodiscard]] inline double plane_tolerance(const Vec<N>& u, const Vec<N>& v) {
    return 1e-10 * std::max(1.0, norm(u) * norm(v));
}

/// Orthogonal projection onto span{u, v}, computed as -(u^v)^2 / |u^v|^2.
template<std::size_t N>
[[nodiscard]] Mat<N> plane_projection(const Vec<N>& u, const Vec<N>& v) {
    const double w = wedge_norm(u, v);
    if (!(w > plane_tolerance(u, v))) {
        throw branch_error("plane_projection: vectors do not span a two-plane");
    }
    const Mat<N> uv = wedge(u, v);
    return (uv * uv) * (-1.0 / (w * w));
}

namespace detail {

/// r orthonormal vectors spanning the range of the projection p.
/// Column-pivoted modified Gram-Schmidt; each vector's largest-magnitude component is made positive.
template<std::size_t R, std::size_t N>
[[nodiscard]] std::array<Vec<N>, R> projection_basis(const Mat<N>& p) {
    std::array<Vec<N>, N> cols{};
    for (std::size_t j = 0; j < N; ++j) cols[j] = p.column(j);

    std::array<Vec<N>, R> basis{};
    std::array<bool, N>   used{};
    for (std::size_t k = 0; k < R; ++k) {
        std::size_t best = N;
        double      best_norm = -1.0;
        for (std::size_t j = 0; j < N; ++j) {
            if (used[j]) continue;
            const double nj = norm(cols[j]);
            if (nj > best_norm) {
                best_norm = nj;
                best      = j;
            }
        }
        if (!(best_norm > 0.0)) throw branch_error("projection_basis: projection rank too small");
        used[best] = true;
        Vec<N> q   = cols[best] / best_norm;
        for (std::size_t j = 0; j < N; ++j)
            if (!used[j]) cols[j] -= dot(q, cols[j]) * q;

        std::size_t m = 0;
        for (std::size_t i = 1; i < N; ++i)
            if (std::abs(q[i]) > std::abs(q[m])) m = i;
        if (q[m] < 0.0) q = -q;
        basis[k] = q;
    }
    return basis;
}

} // namespace detail

} // namespace rotexp
