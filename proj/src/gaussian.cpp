#include "gaussot/gaussian.hpp"

namespace gaussot {

GaussianState build_state(const StateSpec& spec) {
    GaussianState st;
    switch (spec.kind) {
        case StateKind::Thermal:
            st.cov = spec.nu * Mat2::identity();
            break;
        case StateKind::SqueezedThermal: {
            const Mat2 rot = rotation(spec.phi);
            const Mat2 sq = Mat2::diag(std::exp(-2.0 * spec.r), std::exp(2.0 * spec.r));
            st.cov = spec.nu * (rot * sq * rot.transpose());
            break;
        }
        case StateKind::Explicit:
            st.d = spec.displacement;
            st.cov = spec.cov;
            break;
    }
    if (!st.cov.is_symmetric())
        throw UnphysicalState("build_state: unphysical covariance (not symmetric)");
    if (!check_physical(st.cov))
        throw UnphysicalState("build_state: unphysical covariance (uncertainty principle violated)");
    return st;
}

bool check_physical(const Mat2& gamma, double hbar, double tol) {
    const bool eig_ok = min_eig_herm2(gamma, (hbar / 2.0) * symplectic_form()) >= -tol;
    const bool det_ok = gamma.det() >= hbar * hbar / 4.0 - tol && gamma.trace() > 0.0;
    return eig_ok && det_ok;
}

bool lemma_positive_definite(const Mat2& s, const Mat2& k) {
    if (s.det() == 0.0 || k.det() == 0.0)
        throw SingularInput("lemma_positive_definite: S and K must be invertible");
    // 2x2 symmetric M > 0  <=>  tr M > 0 and det M > 0.
    if (!(s.trace() > 0.0 && s.det() > 0.0)) return false;
    const Mat2 t = s + k * s.inverse() * k;  // symmetric since K^T = -K
    return t.trace() > 0.0 && t.det() > 0.0;
}

Williamson1 williamson1(const Mat2& gamma) {
    if (!gamma.is_symmetric() || !check_physical(gamma))
        throw UnphysicalState("williamson1: covariance is not a physical state");
    Williamson1 w;
    w.nu = std::sqrt(gamma.det());
    w.s = (1.0 / std::sqrt(w.nu)) * sqrt_spd2(gamma);
    return w;
}

Mat2 purification_F(const Mat2& b) {
    if (!b.is_symmetric() || !check_physical(b))
        throw UnphysicalState("purification_F: covariance is not a physical state");
    const double nu = std::sqrt(b.det());
    const double f = std::sqrt(std::max(0.0, nu * nu - 0.25)) / nu;
    return f * b;
}

Mat4 purification_cov(const Mat2& b) {
    const Mat2 f = purification_F(b);
    return Mat4::from_blocks(b, f, f.transpose(), b);
}

}  // namespace gaussot
