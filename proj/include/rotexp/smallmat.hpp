#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>

namespace rotexp {

/// Dimensions with closed-form exponential and logarithm maps.
template<std::size_t N>
concept SupportedDim = (N >= 3 && N <= 5);

template<std::size_t N>
concept QuarticDim = (N == 4 || N == 5);

// ============================================================================
// Vec: dense real N-vector
// ============================================================================
template<std::size_t N>
    requires SupportedDim<N>
struct Vec {
    std::array<double, N> data{};

    static constexpr std::size_t size() { return N; }

    constexpr double&       operator[](std::size_t i) { return data[i]; }
    constexpr const double& operator[](std::size_t i) const { return data[i]; }

    [[nodiscard]] static constexpr Vec zero() { return Vec{}; }

    constexpr Vec& operator+=(const Vec& o) {
        for (std::size_t i = 0; i < N; ++i) data[i] += o.data[i];
        return *this;
    }
    constexpr Vec& operator-=(const Vec& o) {
        for (std::size_t i = 0; i < N; ++i) data[i] -= o.data[i];
        return *this;
    }
    constexpr Vec& operator*=(double s) {
        for (auto& x : data) x *= s;
        return *this;
    }

    friend constexpr Vec operator+(Vec a, const Vec& b) { return a += b; }
    friend constexpr Vec operator-(Vec a, const Vec& b) { return a -= b; }
    friend constexpr Vec operator-(Vec a) { return a *= -1.0; }
    friend constexpr Vec operator*(double s, Vec a) { return a *= s; }
    friend constexpr Vec operator*(Vec a, double s) { return a *= s; }
    friend constexpr Vec operator/(Vec a, double s) { return a *= (1.0 / s); }

    friend constexpr bool operator==(const Vec&, const Vec&) = default;
};

template<std::size_t N>
[[nodiscard]] constexpr double dot(const Vec<N>& a, const Vec<N>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < N; ++i) s += a[i] * b[i];
    return s;
}

template<std::size_t N>
[[nodiscard]] inline double norm(const Vec<N>& a) {
    return std::sqrt(dot(a, a));
}

[[nodiscard]] constexpr Vec<3> cross(const Vec<3>& a, const Vec<3>& b) {
    return Vec<3>{{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]}};
}

/// The unit vector e_j. Indices count from 1, matching the usual e_1 ... e_N labels.
template<std::size_t N>
[[nodiscard]] Vec<N> basis_vector(std::size_t j) {
    if (j < 1 || j > N) {
        throw std::out_of_range("basis_vector: index " + std::to_string(j) + " outside [1, " + std::to_string(N) + "]");
    }
    Vec<N> e{};
    e[j - 1] = 1.0;
    return e;
}

// ============================================================================
// Mat: dense real N x N matrix, row-major
// ============================================================================
template<std::size_t N>
    requires SupportedDim<N>
struct Mat {
    std::array<double, N * N> data{};

    static constexpr std::size_t dim() { return N; }

    constexpr Mat() = default;

    // Row-major initializer, e.g. Mat<3>{{0, -1, 0}, {1, 0, 0}, {0, 0, 1}}.
    constexpr Mat(std::initializer_list<std::initializer_list<double>> rows) {
        if (rows.size() != N) throw std::invalid_argument("Mat: wrong number of rows");
        std::size_t i = 0;
        for (const auto& r : rows) {
            if (r.size() != N) throw std::invalid_argument("Mat: wrong number of columns");
            std::size_t j = 0;
            for (double x : r) (*this)(i, j++) = x;
            ++i;
        }
    }

    constexpr double&       operator()(std::size_t i, std::size_t j) { return data[i * N + j]; }
    constexpr const double& operator()(std::size_t i, std::size_t j) const { return data[i * N + j]; }

    [[nodiscard]] static constexpr Mat zero() { return Mat{}; }

    [[nodiscard]] static constexpr Mat identity() {
        Mat m{};
        for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
        return m;
    }

    [[nodiscard]] static constexpr Mat diagonal(const Vec<N>& d) {
        Mat m{};
        for (std::size_t i = 0; i < N; ++i) m(i, i) = d[i];
        return m;
    }

    [[nodiscard]] constexpr Vec<N> column(std::size_t j) const {
        Vec<N> c{};
        for (std::size_t i = 0; i < N; ++i) c[i] = (*this)(i, j);
        return c;
    }

    constexpr Mat& operator+=(const Mat& o) {
        for (std::size_t k = 0; k < N * N; ++k) data[k] += o.data[k];
        return *this;
    }
    constexpr Mat& operator-=(const Mat& o) {
        for (std::size_t k = 0; k < N * N; ++k) data[k] -= o.data[k];
        return *this;
    }
    constexpr Mat& operator*=(double s) {
        for (auto& x : data) x *= s;
        return *this;
    }

    friend constexpr Mat operator+(Mat a, const Mat& b) { return a += b; }
    friend constexpr Mat operator-(Mat a, const Mat& b) { return a -= b; }
    friend constexpr Mat operator-(Mat a) { return a *= -1.0; }
    friend constexpr Mat operator*(double s, Mat a) { return a *= s; }
    friend constexpr Mat operator*(Mat a, double s) { return a *= s; }
    friend constexpr Mat operator/(Mat a, double s) { return a *= (1.0 / s); }

    friend constexpr Mat operator*(const Mat& a, const Mat& b) {
        Mat c{};
        for (std::size_t i = 0; i < N; ++i) {
            for (std::size_t k = 0; k < N; ++k) {
                const double aik = a(i, k);
                for (std::size_t j = 0; j < N; ++j) c(i, j) += aik * b(k, j);
            }
        }
        return c;
    }

    friend constexpr Vec<N> operator*(const Mat& a, const Vec<N>& v) {
        Vec<N> r{};
        for (std::size_t i = 0; i < N; ++i) {
            double s = 0.0;
            for (std::size_t j = 0; j < N; ++j) s += a(i, j) * v[j];
            r[i] = s;
        }
        return r;
    }

    friend constexpr bool operator==(const Mat&, const Mat&) = default;
};

template<std::size_t N>
[[nodiscard]] constexpr Mat<N> multiply(const Mat<N>& a, const Mat<N>& b) {
    return a * b;
}

template<std::size_t N>
[[nodiscard]] constexpr Mat<N> transpose(const Mat<N>& a) {
    Mat<N> t{};
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) t(j, i) = a(i, j);
    return t;
}

template<std::size_t N>
[[nodiscard]] constexpr double trace(const Mat<N>& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < N; ++i) s += a(i, i);
    return s;
}

/// Sum of squares of all entries, i.e. tr(A A^t).
template<std::size_t N>
[[nodiscard]] constexpr double frobenius_sq(const Mat<N>& a) {
    double s = 0.0;
    for (double x : a.data) s += x * x;
    return s;
}

/// sqrt(tr(A A^t) / 2). For a wedge u^v this is |u^v|; for theta * Lambda_u it is |theta|.
template<std::size_t N>
[[nodiscard]] inline double half_trace_norm(const Mat<N>& a) {
    return std::sqrt(0.5 * frobenius_sq(a));
}

template<std::size_t N>
[[nodiscard]] inline double max_abs(const Mat<N>& a) {
    double m = 0.0;
    for (double x : a.data) m = std::max(m, std::abs(x));
    return m;
}

/// Chebyshev distance between two matrices.
template<std::size_t N>
[[nodiscard]] inline double max_abs_diff(const Mat<N>& a, const Mat<N>& b) {
    double m = 0.0;
    for (std::size_t k = 0; k < N * N; ++k) m = std::max(m, std::abs(a.data[k] - b.data[k]));
    return m;
}

template<std::size_t N>
[[nodiscard]] inline bool approx_eq(const Mat<N>& a, const Mat<N>& b, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("approx_eq: tolerance must be positive");
    return max_abs_diff(a, b) <= tol;
}

template<std::size_t N>
[[nodiscard]] inline bool all_finite(const Mat<N>& a) {
    return std::all_of(a.data.begin(), a.data.end(), [](double x) { return std::isfinite(x); });
}

/// Determinant by Gaussian elimination with partial pivoting.
template<std::size_t N>
[[nodiscard]] inline double determinant(Mat<N> a) {
    double det = 1.0;
    for (std::size_t c = 0; c < N; ++c) {
        std::size_t p = c;
        for (std::size_t r = c + 1; r < N; ++r)
            if (std::abs(a(r, c)) > std::abs(a(p, c))) p = r;
        if (a(p, c) == 0.0) return 0.0;
        if (p != c) {
            for (std::size_t j = 0; j < N; ++j) std::swap(a(p, j), a(c, j));
            det = -det;
        }
        det *= a(c, c);
        for (std::size_t r = c + 1; r < N; ++r) {
            const double l = a(r, c) / a(c, c);
            for (std::size_t j = c; j < N; ++j) a(r, j) -= l * a(c, j);
        }
    }
    return det;
}

// ----------------------------------------------------------------------------
// Validity checks shared by the exp/log layers
// ----------------------------------------------------------------------------

/// Default tolerance for accepting caller-supplied rotations and generators.
inline constexpr double kInputTol = 1e-9;

/// max |A + A^t|, zero for an antisymmetric matrix.
template<std::size_t N>
[[nodiscard]] inline double antisymmetry_residual(const Mat<N>& a) {
    return max_abs(a + transpose(a));
}

/// max |R^t R - I|, zero for an orthogonal matrix.
template<std::size_t N>
[[nodiscard]] inline double orthogonality_residual(const Mat<N>& r) {
    return max_abs_diff(transpose(r) * r, Mat<N>::identity());
}

/// (A - A^t) / 2
template<std::size_t N>
[[nodiscard]] constexpr Mat<N> skew_part(const Mat<N>& a) {
    return 0.5 * (a - transpose(a));
}

template<std::size_t N>
[[nodiscard]] inline bool is_antisymmetric(const Mat<N>& a, double tol = kInputTol) {
    return all_finite(a) && antisymmetry_residual(a) <= tol * std::max(1.0, max_abs(a));
}

template<std::size_t N>
[[nodiscard]] inline bool is_rotation(const Mat<N>& r, double tol = kInputTol) {
    return all_finite(r) && orthogonality_residual(r) <= tol && std::abs(determinant(r) - 1.0) <= tol;
}

/// Skew-symmetrized copy of `a`; throws if `a` is not antisymmetric within `tol` (relative to its size).
template<std::size_t N>
[[nodiscard]] Mat<N> require_antisymmetric(const Mat<N>& a, const char* who, double tol = kInputTol) {
    if (!is_antisymmetric(a, tol)) {
        throw std::invalid_argument(std::string(who) + ": input is not antisymmetric");
    }
    return skew_part(a);
}

template<std::size_t N>
void require_rotation(const Mat<N>& r, const char* who, double tol = kInputTol) {
    if (!is_rotation(r, tol)) {
        throw std::invalid_argument(std::string(who) + ": input is not a rotation");
    }
}

} // namespace rotexp
