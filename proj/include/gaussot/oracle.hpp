// Brute-force verification of the closed forms: direct minimization of the
// coupling cost over the off-diagonal block X subject to the 4x4 uncertainty
// constraint, the diagonal-restriction check for thermal marginals, and the
// constrained trace maximizer K* with its grid validator.
#pragma once

#include <cstdint>

#include "gaussot/wasserstein.hpp"

namespace gaussot {

struct OracleOptions {
    int starts = 8;           // multi-start count (>= 1)
    int max_iters = 600;      // Nelder-Mead iterations per penalty phase
    double feas_tol = 1e-9;
    double conv_tol = 1e-8;
    std::uint64_t seed = 1;
};

struct OracleResult {
    Mat2 x_opt;
    double cost = 0.0;
    double feasibility_margin = 0.0;  // min constraint eigenvalue at x_opt
    long iterations = 0;              // total objective evaluations
};

/// min over both signs of the smallest eigenvalue of
/// [[A, X], [X^T, B]] +- (i hbar/2) diag(Omega, -Omega); >= 0 means the
/// coupling is physical.
double coupling_margin(const Mat2& a, const Mat2& b, const Mat2& x, double hbar = 1.0);

/// Minimize 1/2 tr[A + B - 2X] over the four entries of X subject to
/// coupling_margin >= 0, by multi-start Nelder-Mead with an exact quadratic
/// penalty (lambda in {1e2, 1e4, 1e6}), projection back to the feasible set
/// along the ray to X = 0 (the margin is concave along rays, so bisection is
/// exact), and a deterministic boundary polish. The feasible set is convex
/// and the objective linear, so any local feasible optimum is global.
/// Starts: X = 0, the closed-form X* (exact and perturbed), seeded random
/// points. Identical seeds give bit-identical results.
OracleResult minimize_cost(const Mat2& a, const Mat2& b, const OracleOptions& opts = {});

/// True iff replacing a feasible X by (tr X / 2) I keeps the coupling
/// physical within 1e-9. Always true when A and B are both proportional to
/// the identity; no claim otherwise. Throws InfeasibleInput when X itself is
/// not feasible.
bool diagonal_restriction_check(const Mat2& a, const Mat2& b, const Mat2& x, double hbar = 1.0);

/// Closed-form solution of  max tr K  s.t.  0 <= K  and
/// K (I - i a0/2 Omega) K <= I - i b0/2 Omega:
/// sqrt((2+b0)/(2+a0)) I when a0 >= b0, else sqrt((2-b0)/(2-a0)) I.
/// Throws OutOfRange for |a0| > 2, |b0| > 2, or a vanishing denominator.
Mat2 optimal_K(double a0, double b0);

/// Independent grid + polish maximizer for the same problem; agrees with
/// optimal_K within 1e-3 in trace.
Mat2 optimal_K_brute(double a0, double b0);

}  // namespace gaussot
