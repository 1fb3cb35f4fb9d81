#include "gaussot/wasserstein.hpp"

namespace gaussot {

namespace {

// Coefficients of the form (2 nu - hbar) vanish exactly at the pure
// boundary but pick up rounding of either sign from det evaluations; snap
// the sub-1e-12 band to zero so the pure reduction is exact.
double boundary_clamp(double v) { return v < 1e-12 ? 0.0 : v; }

void require_physical(const Mat2& cov, double hbar, const char* who) {
    if (!cov.is_symmetric() || !check_physical(cov, hbar))
        throw UnphysicalState(std::string(who) + ": covariance is not a physical state");
}

}  // namespace

const char* to_string(Branch b) {
    switch (b) {
        case Branch::nuA_ge_nuB: return "nuA_ge_nuB";
        case Branch::nuA_le_nuB: return "nuA_le_nuB";
        case Branch::pure_shortcut: return "pure_shortcut";
        case Branch::unitary: return "unitary";
    }
    return "?";
}

Herm4 CouplingCovariance::constraint(int sign, double hbar) const {
    const Mat2 om = (sign * hbar / 2.0) * symplectic_form();
    const Mat4 im = Mat4::from_blocks(om, Mat2::zero(), Mat2::zero(), -1.0 * om);
    return Herm4::from_parts(assemble(), im);
}

double channel_margin(const ChannelPair& ch, double hbar) {
    // U Omega U^T = det(U) Omega, so the imaginary part is a multiple of Omega.
    const Mat2 k = (hbar / 2.0) * (1.0 - ch.u.det()) * symplectic_form();
    return std::min(min_eig_herm2(ch.v, k), min_eig_herm2(ch.v, -1.0 * k));
}

double thermal_wasserstein2(double nu_a, double nu_b) {
    if (nu_a < 0.5 - kPhysTol || nu_b < 0.5 - kPhysTol)
        throw UnphysicalState("thermal_wasserstein2: symplectic values must be >= 1/2");
    const double hi = std::max(nu_a, nu_b);
    const double lo = std::min(nu_a, nu_b);
    const double t = std::sqrt(hi + 0.5) - std::sqrt(boundary_clamp(lo - 0.5));
    return t * t;
}

Mat2 optimal_W(double nu_a, double nu_b) {
    if (nu_a < 0.5 - kPhysTol || nu_b < 0.5 - kPhysTol)
        throw UnphysicalState("optimal_W: symplectic values must be >= 1/2");
    const double w = nu_a >= nu_b
                         ? std::sqrt((2.0 + 1.0 / nu_a) / (2.0 + 1.0 / nu_b))
                         : std::sqrt(boundary_clamp(2.0 - 1.0 / nu_a) / (2.0 - 1.0 / nu_b));
    return w * Mat2::identity();
}

Mat2 optimal_X(const Mat2& a, const Mat2& b, double hbar) {
    require_physical(a, hbar, "optimal_X");
    require_physical(b, hbar, "optimal_X");
    const double nu_a = std::sqrt(a.det());
    const double nu_b = std::sqrt(b.det());
    if (nu_b <= hbar / 2.0 + kPhysTol) return Mat2::zero();  // F = 0 forces X = 0

    double c = nu_a >= nu_b
                   ? std::sqrt(boundary_clamp(2.0 * nu_b - hbar)) * std::sqrt(2.0 * nu_a + hbar)
                   : std::sqrt(2.0 * nu_b + hbar) * std::sqrt(boundary_clamp(2.0 * nu_a - hbar));
    c /= 2.0 * std::sqrt(nu_a * nu_b);

    const Mat2 sb = sqrt_spd2(b);
    const Mat2 n = sqrt_spd2(sb * a * sb);
    return c * (sb.inverse() * n * sb);
}

ChannelPair optimal_channel(const Mat2& a, const Mat2& b, double hbar) {
    require_physical(a, hbar, "optimal_channel");
    require_physical(b, hbar, "optimal_channel");
    const double nu_a = std::sqrt(a.det());
    const double nu_b = std::sqrt(b.det());
    const bool degenerate = nu_b <= hbar / 2.0 + kPhysTol;

    // At the degenerate boundary nu_a >= nu_b holds up to tolerance, so the
    // upper branch stays well defined (pure-pure pairs give the connecting
    // symplectic unitary).
    const double w = (nu_a >= nu_b || degenerate)
                         ? std::sqrt((2.0 + hbar / nu_a) / (2.0 + hbar / nu_b))
                         : std::sqrt(boundary_clamp(2.0 - hbar / nu_a) / (2.0 - hbar / nu_b));

    const Mat2 sb = sqrt_spd2(b);
    const Mat2 sbi = sb.inverse();
    const Mat2 n = sqrt_spd2(sb * a * sb);
    const Mat2 ut = sbi * (w * n) * sbi;
    const Mat2 u = ut.transpose();

    Mat2 v = a - u * b * ut;
    v = 0.5 * (v + v.transpose());
    if (v.max_abs() <= 1e-12 * std::max(1.0, a.max_abs())) v = Mat2::zero();  // unitary case
    return {u, v, degenerate};
}

WassersteinResult wasserstein2(const GaussianState& a, const GaussianState& b, double hbar) {
    require_physical(a.cov, hbar, "wasserstein2");
    require_physical(b.cov, hbar, "wasserstein2");

    const double nu_a = a.nu();
    const double nu_b = b.nu();
    const Mat2 sb = sqrt_spd2(b.cov);
    const Mat2 n = sqrt_spd2(sb * a.cov * sb);

    const double coef2 =
        nu_a >= nu_b
            ? boundary_clamp(2.0 * nu_b - hbar) * (2.0 * nu_a + hbar) / (nu_a * nu_b)
            : (2.0 * nu_b + hbar) * boundary_clamp(2.0 * nu_a - hbar) / (nu_a * nu_b);

    WassersteinResult res;
    res.d_squared = 0.5 * (a.cov + b.cov).trace() - 0.5 * std::sqrt(coef2) * n.trace() +
                    0.5 * (a.d - b.d).norm_sq();
    res.coupling = {a.cov, b.cov, optimal_X(a.cov, b.cov, hbar)};

    const double nu_scale = std::max(1.0, std::max(nu_a, nu_b));
    if (std::min(nu_a, nu_b) <= hbar / 2.0 + kPhysTol) {
        res.branch = Branch::pure_shortcut;  // coefficient vanished above
    } else {
        res.branch = std::abs(nu_a - nu_b) <= 1e-12 * nu_scale
                         ? Branch::unitary
                         : (nu_a >= nu_b ? Branch::nuA_ge_nuB : Branch::nuA_le_nuB);
        res.channel = optimal_channel(a.cov, b.cov, hbar);
    }
    return res;
}

double unitary_related_distance(const Mat2& b, const Mat2& u) {
    if (std::abs(u.det() - 1.0) > 1e-10)
        throw NotSymplectic("unitary_related_distance: det U must equal 1");
    const Mat2 f = purification_F(b);
    return 0.5 * (u * b * u.transpose() + b - 2.0 * (u * f)).trace();
}

double self_distance(const GaussianState& s) { return wasserstein2(s, s).d_squared; }

bool nonclassical(const GaussianState& s) { return self_distance(s) > 1.0; }

double classical_wasserstein2(const Mat2& sigma1, const Mat2& sigma2) {
    if (!sigma1.is_symmetric() || !sigma2.is_symmetric())
        throw NonPositiveDefinite("classical_wasserstein2: inputs must be symmetric");
    const Mat2 s1 = sqrt_spd2(sigma1);
    sqrt_spd2(sigma2);  // validates positivity of the second argument
    const double v =
        0.5 * (sigma1 + sigma2 - 2.0 * sqrt_spd2(s1 * sigma2 * s1)).trace();
    return (v < 0.0 && v > -1e-12) ? 0.0 : v;
}

double shifted_distance(const GaussianState& a, const GaussianState& b, double hbar) {
    const double dab = wasserstein2(a, b, hbar).d_squared;
    const double daa = wasserstein2(a, a, hbar).d_squared;
    const double dbb = wasserstein2(b, b, hbar).d_squared;
    return dab - 0.5 * daa - 0.5 * dbb;
}

}  // namespace gaussot
