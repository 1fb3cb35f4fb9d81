// Seeded randomness shared by the oracle, the verify command, and the tests.
// Generator: std::mt19937_64 (Mersenne Twister, 64-bit). Uniform doubles take
// the top 53 bits, (x >> 11) * 2^-53, so streams are bit-identical across
// platforms and standard libraries.
#pragma once

#include <cstdint>
#include <random>

#include "gaussot/gaussian.hpp"

namespace gaussot {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }
    double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

private:
    std::mt19937_64 gen_;
};

/// Random centered squeezed-thermal covariance
/// nu R(phi) diag(e^-2r, e^2r) R(phi)^T with nu in [nu_lo, nu_hi],
/// r in [0, r_max], phi in [0, 2 pi).
inline Mat2 random_physical_cov(Rng& rng, double nu_lo = 0.5, double nu_hi = 3.0,
                                double r_max = 1.5) {
    const double nu = rng.uniform(nu_lo, nu_hi);
    const double r = rng.uniform(0.0, r_max);
    const double phi = rng.uniform(0.0, 2.0 * 3.14159265358979323846);
    const Mat2 rot = rotation(phi);
    return nu * (rot * Mat2::diag(std::exp(-2.0 * r), std::exp(2.0 * r)) * rot.transpose());
}

/// Random symmetric positive-definite matrix with eigenvalue scale
/// 10^[exp_lo, exp_hi] and condition number at most 10^cond_exp_max.
inline Mat2 random_spd(Rng& rng, double exp_lo = -2.0, double exp_hi = 2.0,
                       double cond_exp_max = 6.0) {
    const double l1 = std::pow(10.0, rng.uniform(exp_lo, exp_hi));
    const double l2 = l1 / std::pow(10.0, rng.uniform(0.0, cond_exp_max));
    const Mat2 rot = rotation(rng.uniform(0.0, 2.0 * 3.14159265358979323846));
    return rot * Mat2::diag(l1, l2) * rot.transpose();
}

}  // namespace gaussot
