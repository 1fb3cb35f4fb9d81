#include "gaussot/linalg.hpp"

namespace gaussot {

double Mat4::det() const {
    // Laplace expansion along the first row via 3x3 cofactors.
    auto det3 = [&](int r0, int r1, int r2, int c0, int c1, int c2) {
        return m[r0][c0] * (m[r1][c1] * m[r2][c2] - m[r1][c2] * m[r2][c1]) -
               m[r0][c1] * (m[r1][c0] * m[r2][c2] - m[r1][c2] * m[r2][c0]) +
               m[r0][c2] * (m[r1][c0] * m[r2][c1] - m[r1][c1] * m[r2][c0]);
    };
    return m[0][0] * det3(1, 2, 3, 1, 2, 3) - m[0][1] * det3(1, 2, 3, 0, 2, 3) +
           m[0][2] * det3(1, 2, 3, 0, 1, 3) - m[0][3] * det3(1, 2, 3, 0, 1, 2);
}

Mat2 sqrt_spd2(const Mat2& m) {
    const double d = m.det();
    const double t = m.trace();
    if (!(d > 0.0) || !(t > 0.0))
        throw NonPositiveDefinite("sqrt_spd2: matrix is not positive-definite (det=" +
                                  std::to_string(d) + ", tr=" + std::to_string(t) + ")");
    const double s = std::sqrt(d);
    const double denom = std::sqrt(t + 2.0 * s);
    return {(m.m00 + s) / denom, m.m01 / denom, m.m10 / denom, (m.m11 + s) / denom};
}

double min_eig_herm4(const Herm4& h) {
    if (h.hermiticity_defect() > kSymTol * std::max(1.0, h.max_abs()))
        throw NotHermitian("min_eig_herm4: matrix is not Hermitian within tolerance");

    // H = S + iK  ->  E = [[S, -K], [K, S]], real symmetric, doubled spectrum.
    std::array<std::array<double, 8>, 8> e{};
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            const double re = 0.5 * (h.m[i][j].real() + h.m[j][i].real());
            const double im = 0.5 * (h.m[i][j].imag() - h.m[j][i].imag());
            e[i][j] = re;
            e[i + 4][j + 4] = re;
            e[i][j + 4] = -im;
            e[i + 4][j] = im;
        }
    }
    return detail::sym_eigenvalues<8>(e)[0];
}

double min_eig_herm2(const Mat2& s, const Mat2& k) {
    const double scale = std::max(1.0, std::max(s.max_abs(), k.max_abs()));
    if (!s.is_symmetric(kSymTol) || std::abs(k.m00) > kSymTol * scale ||
        std::abs(k.m11) > kSymTol * scale || std::abs(k.m01 + k.m10) > kSymTol * scale)
        throw NotHermitian("min_eig_herm2: S + iK is not Hermitian within tolerance");

    const std::array<std::array<double, 4>, 4> e = {{{s.m00, s.m01, -k.m00, -k.m01},
                                                     {s.m10, s.m11, -k.m10, -k.m11},
                                                     {k.m00, k.m01, s.m00, s.m01},
                                                     {k.m10, k.m11, s.m10, s.m11}}};
    return detail::sym_eigenvalues<4>(e)[0];
}

bool is_psd(const Herm4& h, double tol) { return min_eig_herm4(h) >= -tol; }

}  // namespace gaussot
