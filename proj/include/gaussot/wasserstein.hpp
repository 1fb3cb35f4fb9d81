// Closed-form Wasserstein-2 distance between one-mode Gaussian states, the
// optimal coupling block X*, the reconstructed Gaussian channel (U, V), the
// hbar-parameterized variant with its classical limit, and the shifted
// distance that vanishes on the diagonal.
#pragma once

#include <optional>

#include "gaussot/gaussian.hpp"

namespace gaussot {

enum class Branch { nuA_ge_nuB, nuA_le_nuB, pure_shortcut, unitary };

const char* to_string(Branch b);

// Candidate transport plan: joint covariance [[A, X], [X^T, B]] of a
// Gaussian coupling with marginals A and B.
struct CouplingCovariance {
    Mat2 a, b, x;

    Mat4 assemble() const { return Mat4::from_blocks(a, x, x.transpose(), b); }

    /// assemble() + sign * (i hbar/2) diag(Omega, -Omega); the coupling is
    /// physical iff this is PSD for both signs. The minus on the second
    /// block reflects the conjugated commutators of the second factor.
    Herm4 constraint(int sign, double hbar = 1.0) const;
};

// Gaussian CP map acting as gamma -> U gamma U^T + V.
struct ChannelPair {
    Mat2 u, v;
    // nu_B at the pure boundary: the purification has F = 0, so X = U F = 0
    // carries no information about U and any admissible U reproduces the
    // product coupling.
    bool degenerate = false;
};

/// Worst min-eigenvalue over both signs of the CP condition
/// V +- (i hbar/2)(Omega - U Omega U^T); >= 0 means a valid channel.
double channel_margin(const ChannelPair& ch, double hbar = 1.0);

struct WassersteinResult {
    double d_squared = 0.0;
    Branch branch = Branch::nuA_ge_nuB;
    CouplingCovariance coupling;
    std::optional<ChannelPair> channel;  // absent when branch == pure_shortcut
};

/// Squared Wasserstein-2 distance
///   D^2 = 1/2 tr[A+B] - 1/2 sqrt((2 nu_B -+ hbar)(2 nu_A +- hbar)/(nu_A nu_B))
///         * tr[sqrt(sqrt(B) A sqrt(B))] + 1/2 |d_A - d_B|^2,
/// upper signs for nu_A >= nu_B. When min(nu_A, nu_B) = hbar/2 the
/// coefficient vanishes and the result reduces to 1/2 tr[A+B] plus the
/// displacement term (pure shortcut; same code path).
WassersteinResult wasserstein2(const GaussianState& a, const GaussianState& b,
                               double hbar = 1.0);

/// Thermal closed form (sqrt(nu_max + 1/2) - sqrt(nu_min - 1/2))^2.
double thermal_wasserstein2(double nu_a, double nu_b);

/// Scalar maximizer of the constrained trace problem:
/// sqrt((2 + 1/nu_A)/(2 + 1/nu_B)) * I when nu_A >= nu_B, and the
/// (2 - 1/nu)-variant otherwise. Satisfies W^T W <= I and
/// W^T (I +- i/(2 nu_B) Omega) W <= I +- i/(2 nu_A) Omega with equality in
/// the binding sign.
Mat2 optimal_W(double nu_a, double nu_b);

/// X* = c sqrt(B^-1) sqrt(sqrt(B) A sqrt(B)) sqrt(B) with
/// c = sqrt(2 nu_B -+ hbar) sqrt(2 nu_A +- hbar) / (2 sqrt(nu_A nu_B)),
/// upper signs for nu_A >= nu_B. Vanishes when either marginal is pure.
Mat2 optimal_X(const Mat2& a, const Mat2& b, double hbar = 1.0);

/// Channel reconstruction U^T = sqrt(B^-1) W N sqrt(B^-1) with
/// N = sqrt(sqrt(B) A sqrt(B)), V = A - U B U^T. For nu_B at the pure
/// boundary the result is flagged degenerate (see ChannelPair). V is
/// snapped to exact zero when A = U B U^T within rounding (unitary case).
ChannelPair optimal_channel(const Mat2& a, const Mat2& b, double hbar = 1.0);

/// D^2 between U-related states: 1/2 tr[U B U^T + B - 2 U F] with F the
/// purification block of B. Throws NotSymplectic unless det U = 1 within
/// 1e-10.
double unitary_related_distance(const Mat2& b, const Mat2& u);

/// D^2(s, s); equals twice the skew-information nonclassicality quantifier.
double self_distance(const GaussianState& s);

/// self_distance(s) > 1.
bool nonclassical(const GaussianState& s);

/// Classical Gaussian transport cost
/// 1/2 tr(S1 + S2 - 2 sqrt(sqrt(S1) S2 sqrt(S1))); the hbar -> 0 limit of
/// wasserstein2 (note the 1/2 prefactor).
double classical_wasserstein2(const Mat2& sigma1, const Mat2& sigma2);

/// D^2(a,b) - D^2(a,a)/2 - D^2(b,b)/2; zero when a = b.
double shifted_distance(const GaussianState& a, const GaussianState& b,
                        double hbar = 1.0);

}  // namespace gaussot
