// Closed-form comparison distances between centered one-mode Gaussian
// states: fidelity, Bures, overlap, Hilbert-Schmidt, relative entropy,
// fidelity-based trace-distance bounds, and the bundled report.
#pragma once

#include <utility>

#include "gaussot/wasserstein.hpp"

namespace gaussot {

struct DistanceReport {
    double wasserstein2 = 0.0;
    double shifted_wasserstein2 = 0.0;
    double fidelity = 1.0;
    double bures = 0.0;
    double overlap = 1.0;
    double hilbert_schmidt = 0.0;
    double relative_entropy_ab = 0.0;
    double relative_entropy_ba = 0.0;
    double trace_lower = 0.0;
    double trace_upper = 0.0;
};

/// Uhlmann fidelity of the centered states with covariances A, B:
/// 1 / (sqrt(det(A+B) + g) - sqrt(g)), g = 4 (det A - 1/4)(det B - 1/4).
double fidelity(const Mat2& a, const Mat2& b);

/// sqrt(2 - 2 sqrt(fidelity)).
double bures(const Mat2& a, const Mat2& b);

/// tr[rho_A rho_B] = 1 / sqrt(det(A+B)).
double overlap(const Mat2& a, const Mat2& b);

/// sqrt(1/(2 sqrt(det A)) - 2/sqrt(det(A+B)) + 1/(2 sqrt(det B))), i.e.
/// sqrt(tr rho_A^2 - 2 tr rho_A rho_B + tr rho_B^2) with the Gaussian purity
/// tr rho^2 = 1/(2 sqrt(det gamma)).
double hilbert_schmidt(const Mat2& a, const Mat2& b);

/// S(rho_A || rho_B) in nats. B must be strictly mixed unless A = B, where
/// the value is 0 by the continuity limit; otherwise DivergentEntropy.
double relative_entropy(const Mat2& a, const Mat2& b);

/// (1 - F, sqrt(1 - F^2)): fidelity bounds on the trace distance.
std::pair<double, double> trace_distance_bounds(const Mat2& a, const Mat2& b);

/// lhs = (nu_A + nu_B)/2 * bures^2, rhs = D^2. The inequality lhs <= rhs is
/// a theorem for thermal pairs and only empirical otherwise; this returns
/// both sides without asserting.
std::pair<double, double> bures_wasserstein_gap(const GaussianState& a, const GaussianState& b);

/// All of the above plus wasserstein2 and the shifted distance. Centered
/// states only; throws DisplacedStateUnsupported otherwise. hbar enters the
/// Wasserstein values only; the comparison distances are hbar = 1 forms.
DistanceReport distance_report(const GaussianState& a, const GaussianState& b, double hbar = 1.0);

}  // namespace gaussot
