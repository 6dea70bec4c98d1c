#pragma once

#include <gtest/gtest.h>

#include <cstdint>

#include "rotexp/rotexp.hpp"

namespace rotexp::testing {

using oracle::Rng;

template<std::size_t N>
::testing::AssertionResult MatNear(const Mat<N>& a, const Mat<N>& b, double tol) {
    const double d = max_abs_diff(a, b);
    if (d <= tol) return ::testing::AssertionSuccess();
    return ::testing::AssertionFailure() << "max-abs difference " << d << " exceeds " << tol;
}

template<std::size_t N>
Mat<N> random_matrix(Rng& rng, double scale = 1.0) {
    Mat<N> m{};
    for (auto& x : m.data) x = rng.uniform(-scale, scale);
    return m;
}

template<std::size_t N>
Vec<N> random_vec(Rng& rng, double scale = 1.0) {
    Vec<N> v{};
    for (auto& x : v.data) x = rng.uniform(-scale, scale);
    return v;
}

/// Antisymmetric matrix with half-trace norm uniform in [0, max_norm].
template<std::size_t N>
Mat<N> random_generator(Rng& rng, double max_norm) {
    Mat<N>       f = oracle::random_antisym<N>(1.0, rng);
    const double t = rng.uniform(0.0, max_norm);
    return f * (t / half_trace_norm(f));
}

/// Block rotation generator a e1^e2 + b e3^e4.
template<std::size_t N>
Mat<N> block_generator(double a, double b) {
    return a * wedge(basis_vector<N>(1), basis_vector<N>(2)) + b * wedge(basis_vector<N>(3), basis_vector<N>(4));
}

/// Rotation of angle t in the (i, j) coordinate plane, built entrywise.
template<std::size_t N>
Mat<N> plane_rotation(std::size_t i, std::size_t j, double t) {
    Mat<N> r  = Mat<N>::identity();
    r(i, i)   = std::cos(t);
    r(j, j)   = std::cos(t);
    r(i, j)   = std::sin(t);
    r(j, i)   = -std::sin(t);
    return r;
}

} // namespace rotexp::testing
