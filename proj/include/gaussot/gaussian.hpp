// One-mode Gaussian states: construction from parameter specs, physicality
// checks against the uncertainty principle, the Williamson normal form, and
// the two-mode purification covariance.
#pragma once

#include "gaussot/linalg.hpp"

namespace gaussot {

// Tolerance on det(gamma) - (hbar/2)^2. Pure states sit exactly on the
// boundary; rounding must not reject them.
inline constexpr double kPhysTol = 1e-9;

/// The one-mode symplectic form Omega = [[0, 1], [-1, 0]].
inline Mat2 symplectic_form() { return {0.0, 1.0, -1.0, 0.0}; }

// Displacement vector plus covariance matrix, hbar = 1 units (vacuum = I/2).
struct GaussianState {
    Vec2 d{};
    Mat2 cov = Mat2::identity();

    /// Symplectic value sqrt(det cov); physical states have nu >= hbar/2.
    double nu() const { return std::sqrt(cov.det()); }
};

// gamma = nu * s * s^T with s symplectic (det s = 1). The symmetric
// positive-definite representative sqrt(gamma)/sqrt(nu) is returned; the
// decomposition is gauge-ambiguous but everything derived from it
// (s * s^T) is not.
struct Williamson1 {
    double nu = 0.5;
    Mat2 s = Mat2::identity();
};

enum class StateKind { Explicit, Thermal, SqueezedThermal };

struct StateSpec {
    StateKind kind = StateKind::Thermal;
    double nu = 0.5;       // thermal, squeezed_thermal
    double r = 0.0;        // squeezing parameter
    double phi = 0.0;      // pre-rotation angle, radians
    Vec2 displacement{};   // explicit only
    Mat2 cov = 0.5 * Mat2::identity();  // explicit only

    static StateSpec thermal(double nu) {
        StateSpec s;
        s.kind = StateKind::Thermal;
        s.nu = nu;
        return s;
    }
    static StateSpec squeezed_thermal(double nu, double r, double phi = 0.0) {
        StateSpec s;
        s.kind = StateKind::SqueezedThermal;
        s.nu = nu;
        s.r = r;
        s.phi = phi;
        return s;
    }
    static StateSpec explicit_state(const Vec2& d, const Mat2& cov) {
        StateSpec s;
        s.kind = StateKind::Explicit;
        s.displacement = d;
        s.cov = cov;
        return s;
    }
};

/// thermal        -> gamma = nu * I
/// squeezed_thermal -> gamma = nu * R(phi) diag(e^-2r, e^2r) R(phi)^T
/// explicit       -> validated pass-through.
/// Throws UnphysicalState when the result violates the uncertainty principle
/// at hbar = 1.
GaussianState build_state(const StateSpec& spec);

/// Uncertainty principle gamma + (i hbar/2) Omega >= -tol, evaluated both as
/// a Hermitian eigenvalue test and as the equivalent scalar test
/// det gamma >= hbar^2/4 - tol with tr gamma > 0; both must hold.
bool check_physical(const Mat2& gamma, double hbar = 1.0, double tol = kPhysTol);

/// Positivity criterion for the Hermitian matrix M = S + iK (S symmetric,
/// K skew-symmetric, both invertible): M > 0 iff S > 0 and S + K S^-1 K > 0.
/// Throws SingularInput when det S = 0 or det K = 0.
bool lemma_positive_definite(const Mat2& s, const Mat2& k);

/// nu = sqrt(det gamma), s = sqrt_spd2(gamma)/sqrt(nu).
Williamson1 williamson1(const Mat2& gamma);

/// Off-diagonal block of the purification covariance:
/// F = sqrt(nu^2 - 1/4) * s * s^T = (sqrt(nu^2 - 1/4)/nu) * B.
Mat2 purification_F(const Mat2& b);

/// Two-mode covariance [[B, F], [F^T, B]] of the canonical purification;
/// a pure state, so it saturates the coupling uncertainty relation.
Mat4 purification_cov(const Mat2& b);

}  // namespace gaussot
