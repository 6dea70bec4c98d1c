#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <utility>

#include "scalar.hpp"
#include "smallmat.hpp"
#include "wedge.hpp"

// Reference implementations and seeded generators used to check the closed forms.
// Nothing in here shares code with the exp/log maps beyond the matrix kernel.

namespace rotexp::oracle {

/// SplitMix64 (Steele, Lea, Flood 2014). Fixed constants and a fixed draw order give
/// bit-identical streams on every platform.
class Rng {
public:
    explicit constexpr Rng(std::uint64_t seed) : state_(seed) {}

    constexpr std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z               = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z               = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1) from the top 53 bits.
    constexpr double unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    constexpr double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

private:
    std::uint64_t state_;
};

/// exp(A) by scaling and squaring: scale by 2^-s until the max-abs row sum is <= 1/2,
/// sum 20 Taylor terms, square s times.
template<std::size_t N>
[[nodiscard]] Mat<N> series_exp(const Mat<N>& a) {
    double row_norm = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < N; ++j) s += std::abs(a(i, j));
        row_norm = std::max(row_norm, s);
    }
    int    squarings = 0;
    double scale     = 1.0;
    while (row_norm * scale > 0.5) {
        scale *= 0.5;
        ++squarings;
    }
    const Mat<N> b = scale * a;

    Mat<N> term = Mat<N>::identity();
    Mat<N> sum  = term;
    for (int k = 1; k <= 20; ++k) {
        term = (term * b) * (1.0 / k);
        sum += term;
    }
    for (int k = 0; k < squarings; ++k) sum = sum * sum;
    return sum;
}

/// Antisymmetric matrix with the strict upper triangle uniform in [-scale, scale],
/// drawn row by row.
template<std::size_t N>
[[nodiscard]] Mat<N> random_antisym(double scale, Rng& rng) {
    Mat<N> m{};
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = i + 1; j < N; ++j) {
            const double x = rng.uniform(-scale, scale);
            m(i, j)        = x;
            m(j, i)        = -x;
        }
    }
    return m;
}

template<std::size_t N>
[[nodiscard]] Mat<N> random_antisym(double scale, std::uint64_t seed) {
    Rng rng(seed);
    return random_antisym<N>(scale, rng);
}

template<std::size_t N>
[[nodiscard]] Mat<N> random_rotation(Rng& rng) {
    return series_exp(random_antisym<N>(kPi, rng));
}

template<std::size_t N>
[[nodiscard]] Mat<N> random_rotation(std::uint64_t seed) {
    Rng rng(seed);
    return random_rotation<N>(rng);
}

/// Vector with components distributed as a sum of four uniforms on [-1, 1].
template<std::size_t N>
[[nodiscard]] Vec<N> random_vector(Rng& rng) {
    Vec<N> v{};
    for (std::size_t i = 0; i < N; ++i) {
        double s = 0.0;
        for (int k = 0; k < 4; ++k) s += rng.uniform(-1.0, 1.0);
        v[i] = s;
    }
    return v;
}

template<std::size_t N>
[[nodiscard]] Vec<N> random_unit_vector(Rng& rng) {
    for (;;) {
        const Vec<N> v = random_vector<N>(rng);
        const double n = norm(v);
        if (n > 1e-3) return v / n;
    }
}

/// Random orthogonal matrix: modified Gram-Schmidt over the columns of a random matrix, left to right,
/// with a second projection pass per column.
template<std::size_t N>
[[nodiscard]] Mat<N> random_orthogonal(Rng& rng) {
    for (;;) {
        std::array<Vec<N>, N> q{};
        bool                  ok = true;
        for (std::size_t j = 0; j < N && ok; ++j) {
            Vec<N> v = random_vector<N>(rng);
            for (int pass = 0; pass < 2; ++pass)
                for (std::size_t k = 0; k < j; ++k) v -= dot(q[k], v) * q[k];
            const double n = norm(v);
            ok             = n > 1e-3;
            q[j]           = v / n;
        }
        if (!ok) continue;
        Mat<N> m{};
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j) m(i, j) = q[j][i];
        return m;
    }
}

/// f_plus = a (Q e1)^(Q e2), f_minus = b (Q e3)^(Q e4).
template<std::size_t N>
    requires QuarticDim<N>
[[nodiscard]] std::pair<Mat<N>, Mat<N>> orthogonal_wedge_pair(double a, double b, const Mat<N>& q) {
    return {a * wedge(q.column(0), q.column(1)), b * wedge(q.column(2), q.column(3))};
}

/// orthogonal_wedge_pair with a random orthogonal Q.
template<std::size_t N>
    requires QuarticDim<N>
[[nodiscard]] std::pair<Mat<N>, Mat<N>> random_orthogonal_wedge_pair(double a, double b, Rng& rng) {
    return orthogonal_wedge_pair(a, b, random_orthogonal<N>(rng));
}

template<std::size_t N>
    requires QuarticDim<N>
[[nodiscard]] std::pair<Mat<N>, Mat<N>> random_orthogonal_wedge_pair(double a, double b, std::uint64_t seed) {
    Rng rng(seed);
    return random_orthogonal_wedge_pair<N>(a, b, rng);
}

} // namespace rotexp::oracle
