// Dense kernels for the 2x2 real and 4x4 complex Hermitian matrices the rest
// of the library is built on. Everything is either closed form or a short
// cyclic Jacobi sweep on a real symmetric embedding; no external solver.
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>

#include "gaussot/errors.hpp"

namespace gaussot {

// Absolute tolerance for symmetry / Hermiticity checks. Inputs are
// analytically symmetric; only rounding can violate this.
inline constexpr double kSymTol = 1e-12;

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    double norm_sq() const { return x * x + y * y; }
};

inline Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }

// Row-major 2x2 real matrix.
struct Mat2 {
    double m00 = 0.0, m01 = 0.0, m10 = 0.0, m11 = 0.0;

    static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static Mat2 zero() { return {}; }
    static Mat2 diag(double a, double b) { return {a, 0.0, 0.0, b}; }

    double trace() const { return m00 + m11; }
    double det() const { return m00 * m11 - m01 * m10; }
    Mat2 transpose() const { return {m00, m10, m01, m11}; }

    double max_abs() const {
        return std::max(std::max(std::abs(m00), std::abs(m01)),
                        std::max(std::abs(m10), std::abs(m11)));
    }

    bool is_symmetric(double tol = kSymTol) const {
        return std::abs(m01 - m10) <= tol * std::max(1.0, max_abs());
    }

    // Pre: det() != 0.
    Mat2 inverse() const {
        const double d = det();
        return {m11 / d, -m01 / d, -m10 / d, m00 / d};
    }
};

inline Mat2 operator+(const Mat2& a, const Mat2& b) {
    return {a.m00 + b.m00, a.m01 + b.m01, a.m10 + b.m10, a.m11 + b.m11};
}
inline Mat2 operator-(const Mat2& a, const Mat2& b) {
    return {a.m00 - b.m00, a.m01 - b.m01, a.m10 - b.m10, a.m11 - b.m11};
}
inline Mat2 operator*(const Mat2& a, const Mat2& b) {
    return {a.m00 * b.m00 + a.m01 * b.m10, a.m00 * b.m01 + a.m01 * b.m11,
            a.m10 * b.m00 + a.m11 * b.m10, a.m10 * b.m01 + a.m11 * b.m11};
}
inline Mat2 operator*(double s, const Mat2& a) {
    return {s * a.m00, s * a.m01, s * a.m10, s * a.m11};
}
inline Mat2 operator*(const Mat2& a, double s) { return s * a; }
inline Vec2 operator*(const Mat2& a, const Vec2& v) {
    return {a.m00 * v.x + a.m01 * v.y, a.m10 * v.x + a.m11 * v.y};
}

/// Rotation by theta: [[cos, -sin], [sin, cos]].
inline Mat2 rotation(double theta) {
    const double c = std::cos(theta), s = std::sin(theta);
    return {c, -s, s, c};
}

// Row-major 4x4 real matrix; only what the coupling / purification
// covariances need.
struct Mat4 {
    std::array<std::array<double, 4>, 4> m{};

    /// Assemble [[A, B], [C, D]] from 2x2 blocks.
    static Mat4 from_blocks(const Mat2& a, const Mat2& b, const Mat2& c, const Mat2& d) {
        Mat4 r;
        r.m = {{{a.m00, a.m01, b.m00, b.m01},
                {a.m10, a.m11, b.m10, b.m11},
                {c.m00, c.m01, d.m00, d.m01},
                {c.m10, c.m11, d.m10, d.m11}}};
        return r;
    }

    double trace() const { return m[0][0] + m[1][1] + m[2][2] + m[3][3]; }

    double max_abs() const {
        double v = 0.0;
        for (const auto& row : m)
            for (double e : row) v = std::max(v, std::abs(e));
        return v;
    }

    double det() const;
};

// 4x4 complex Hermitian matrix.
struct Herm4 {
    std::array<std::array<std::complex<double>, 4>, 4> m{};

    /// re + i*im. Hermiticity requires re symmetric and im skew-symmetric.
    static Herm4 from_parts(const Mat4& re, const Mat4& im) {
        Herm4 h;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) h.m[i][j] = {re.m[i][j], im.m[i][j]};
        return h;
    }

    static Herm4 identity() {
        Herm4 h;
        for (int i = 0; i < 4; ++i) h.m[i][i] = 1.0;
        return h;
    }

    double max_abs() const {
        double v = 0.0;
        for (const auto& row : m)
            for (const auto& e : row) v = std::max(v, std::abs(e));
        return v;
    }

    /// max_ij |m[i][j] - conj(m[j][i])|
    double hermiticity_defect() const {
        double v = 0.0;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) v = std::max(v, std::abs(m[i][j] - std::conj(m[j][i])));
        return v;
    }
};

namespace detail {

// Eigenvalues of a real symmetric NxN matrix by cyclic Jacobi rotations,
// returned in ascending order. Quadratic convergence; a handful of sweeps
// suffices at these sizes.
template <std::size_t N>
std::array<double, N> sym_eigenvalues(std::array<std::array<double, N>, N> a) {
    double fro2 = 0.0;
    for (std::size_t r = 0; r < N; ++r)
        for (std::size_t c = 0; c < N; ++c) fro2 += a[r][c] * a[r][c];
    const double stop = 1e-30 * std::max(fro2, 1e-300);

    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p + 1 < N; ++p)
            for (std::size_t q = p + 1; q < N; ++q) off += a[p][q] * a[p][q];
        if (off <= stop) break;

        for (std::size_t p = 0; p + 1 < N; ++p) {
            for (std::size_t q = p + 1; q < N; ++q) {
                const double apq = a[p][q];
                if (apq == 0.0) continue;
                const double theta = (a[q][q] - a[p][p]) / (2.0 * apq);
                const double t =
                    (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < N; ++k) {  // columns
                    const double akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < N; ++k) {  // rows
                    const double apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }

    std::array<double, N> eig{};
    for (std::size_t i = 0; i < N; ++i) eig[i] = a[i][i];
    std::sort(eig.begin(), eig.end());
    return eig;
}

}  // namespace detail

/// Square root of a symmetric positive-definite 2x2 matrix, by the closed
/// form R = (M + sqrt(det M) I) / sqrt(tr M + 2 sqrt(det M)).
/// Throws NonPositiveDefinite when det M <= 0 or tr M <= 0.
Mat2 sqrt_spd2(const Mat2& m);

/// Smallest eigenvalue of a 4x4 Hermitian matrix H = S + iK, computed from
/// the real symmetric 8x8 embedding [[S, -K], [K, S]], whose spectrum is the
/// doubled spectrum of H. Throws NotHermitian beyond kSymTol.
double min_eig_herm4(const Herm4& h);

/// Smallest eigenvalue of the 2x2 Hermitian matrix S + iK (S symmetric,
/// K skew-symmetric), via the analogous 4x4 embedding.
double min_eig_herm2(const Mat2& s, const Mat2& k);

/// min_eig_herm4(h) >= -tol.
bool is_psd(const Herm4& h, double tol);

}  // namespace gaussot
