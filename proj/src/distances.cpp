#include "gaussot/distances.hpp"

namespace gaussot {

namespace {

void require_centered_physical(const Mat2& cov, const char* who) {
    if (!cov.is_symmetric() || !check_physical(cov))
        throw UnphysicalState(std::string(who) + ": covariance is not a physical state");
}

double zero_snap(double v) { return (v < 0.0 && v > -1e-12) ? 0.0 : v; }

}  // namespace

double fidelity(const Mat2& a, const Mat2& b) {
    require_centered_physical(a, "fidelity");
    require_centered_physical(b, "fidelity");
    // (det - 1/4) factors vanish at the pure boundary; rounding can push the
    // product below zero.
    const double g = std::max(0.0, 4.0 * (a.det() - 0.25) * (b.det() - 0.25));
    const double f = 1.0 / (std::sqrt((a + b).det() + g) - std::sqrt(g));
    return std::min(f, 1.0);
}

double bures(const Mat2& a, const Mat2& b) {
    return std::sqrt(std::max(0.0, 2.0 - 2.0 * std::sqrt(fidelity(a, b))));
}

double overlap(const Mat2& a, const Mat2& b) {
    require_centered_physical(a, "overlap");
    require_centered_physical(b, "overlap");
    return 1.0 / std::sqrt((a + b).det());
}

double hilbert_schmidt(const Mat2& a, const Mat2& b) {
    require_centered_physical(a, "hilbert_schmidt");
    require_centered_physical(b, "hilbert_schmidt");
    const double v = 1.0 / (2.0 * std::sqrt(a.det())) - 2.0 / std::sqrt((a + b).det()) +
                     1.0 / (2.0 * std::sqrt(b.det()));
    return std::sqrt(std::max(0.0, v));
}

double relative_entropy(const Mat2& a, const Mat2& b) {
    require_centered_physical(a, "relative_entropy");
    require_centered_physical(b, "relative_entropy");
    const double nu_a = std::sqrt(a.det());
    const double nu_b = std::sqrt(b.det());

    if (nu_b <= 0.5 + kPhysTol) {
        if ((a - b).max_abs() <= 1e-12 * std::max(1.0, a.max_abs())) return 0.0;
        throw DivergentEntropy("relative_entropy: second argument is pure and differs from the first");
    }

    // S with S B S^T = nu_B I: the inverse of the Williamson factor of B.
    const Mat2 s = williamson1(b).s.inverse();
    const Mat2 at = s.transpose() * a * s;

    const double t1 = (nu_a + 0.5) * std::log((nu_b + 0.5) / (nu_a + 0.5));
    const double am = std::max(0.0, nu_a - 0.5);
    const double t2 = am == 0.0 ? 0.0 : am * std::log(am / (nu_b - 0.5));  // -> 0 at the pure limit
    const double t3 = 0.5 * (at.trace() - 2.0 * nu_a) * std::log((nu_b + 0.5) / (nu_b - 0.5));
    return zero_snap(t1 + t2 + t3);
}

std::pair<double, double> trace_distance_bounds(const Mat2& a, const Mat2& b) {
    const double f = fidelity(a, b);
    return {1.0 - f, std::sqrt(std::max(0.0, 1.0 - f * f))};
}

std::pair<double, double> bures_wasserstein_gap(const GaussianState& a, const GaussianState& b) {
    if (a.d.norm_sq() > 0.0 || b.d.norm_sq() > 0.0)
        throw DisplacedStateUnsupported("bures_wasserstein_gap: centered states only");
    const double db = bures(a.cov, b.cov);
    const double lhs = 0.5 * (a.nu() + b.nu()) * db * db;
    return {lhs, wasserstein2(a, b).d_squared};
}

DistanceReport distance_report(const GaussianState& a, const GaussianState& b, double hbar) {
    if (a.d.norm_sq() > 0.0 || b.d.norm_sq() > 0.0)
        throw DisplacedStateUnsupported("distance_report: centered states only");
    DistanceReport r;
    r.wasserstein2 = wasserstein2(a, b, hbar).d_squared;
    r.shifted_wasserstein2 = shifted_distance(a, b, hbar);
    r.fidelity = fidelity(a.cov, b.cov);
    r.bures = bures(a.cov, b.cov);
    r.overlap = overlap(a.cov, b.cov);
    r.hilbert_schmidt = hilbert_schmidt(a.cov, b.cov);
    r.relative_entropy_ab = relative_entropy(a.cov, b.cov);
    r.relative_entropy_ba = relative_entropy(b.cov, a.cov);
    std::tie(r.trace_lower, r.trace_upper) = trace_distance_bounds(a.cov, b.cov);
    return r;
}

}  // namespace gaussot
