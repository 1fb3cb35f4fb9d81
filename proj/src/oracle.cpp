#include "gaussot/oracle.hpp"

#include <algorithm>
#include <vector>

#include "gaussot/random.hpp"

namespace gaussot {

namespace {

template <std::size_t N>
using VecN = std::array<double, N>;

// Standard Nelder-Mead (reflection 1, expansion 2, contraction 1/2,
// shrink 1/2). Deterministic for a given start; returns the best vertex.
template <std::size_t N, typename F>
VecN<N> nelder_mead(F&& f, const VecN<N>& x0, double step, int max_iters, double ftol) {
    struct Vertex {
        VecN<N> x;
        double fx;
    };
    std::array<Vertex, N + 1> s;
    s[0] = {x0, f(x0)};
    for (std::size_t i = 0; i < N; ++i) {
        VecN<N> x = x0;
        x[i] += step;
        s[i + 1] = {x, f(x)};
    }
    auto by_f = [](const Vertex& a, const Vertex& b) { return a.fx < b.fx; };

    for (int it = 0; it < max_iters; ++it) {
        std::sort(s.begin(), s.end(), by_f);
        if (s[N].fx - s[0].fx <= ftol * (std::abs(s[0].fx) + ftol)) break;

        VecN<N> c{};  // centroid of all but the worst
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t k = 0; k < N; ++k) c[k] += s[i].x[k] / static_cast<double>(N);

        auto along = [&](double t) {
            VecN<N> x;
            for (std::size_t k = 0; k < N; ++k) x[k] = c[k] + t * (c[k] - s[N].x[k]);
            return x;
        };

        const VecN<N> xr = along(1.0);
        const double fr = f(xr);
        if (fr < s[0].fx) {
            const VecN<N> xe = along(2.0);
            const double fe = f(xe);
            s[N] = fe < fr ? Vertex{xe, fe} : Vertex{xr, fr};
        } else if (fr < s[N - 1].fx) {
            s[N] = {xr, fr};
        } else {
            const bool outside = fr < s[N].fx;
            const VecN<N> xc = along(outside ? 0.5 : -0.5);
            const double fc = f(xc);
            if (fc < std::min(fr, s[N].fx)) {
                s[N] = {xc, fc};
            } else {
                for (std::size_t i = 1; i <= N; ++i) {  // shrink toward the best
                    for (std::size_t k = 0; k < N; ++k)
                        s[i].x[k] = s[0].x[k] + 0.5 * (s[i].x[k] - s[0].x[k]);
                    s[i].fx = f(s[i].x);
                }
            }
        }
    }
    std::sort(s.begin(), s.end(), by_f);
    return s[0].x;
}

Mat2 as_mat(const VecN<4>& x) { return {x[0], x[1], x[2], x[3]}; }

// One constraint sign suffices: the two signed matrices are entrywise
// complex conjugates, hence share their (real) spectrum.
double fast_margin(const Mat2& a, const Mat2& b, const Mat2& x, long& evals) {
    ++evals;
    return min_eig_herm4(CouplingCovariance{a, b, x}.constraint(+1));
}

void require_physical(const Mat2& cov, const char* who) {
    if (!cov.is_symmetric() || !check_physical(cov))
        throw UnphysicalState(std::string(who) + ": covariance is not a physical state");
}

}  // namespace

double coupling_margin(const Mat2& a, const Mat2& b, const Mat2& x, double hbar) {
    const CouplingCovariance c{a, b, x};
    return std::min(min_eig_herm4(c.constraint(+1, hbar)), min_eig_herm4(c.constraint(-1, hbar)));
}

OracleResult minimize_cost(const Mat2& a, const Mat2& b, const OracleOptions& opts) {
    require_physical(a, "minimize_cost");
    require_physical(b, "minimize_cost");
    if (opts.starts < 1 || opts.max_iters < 1 || !(opts.feas_tol > 0.0) || !(opts.conv_tol > 0.0))
        throw OutOfRange("minimize_cost: invalid OracleOptions");

    const double base = 0.5 * (a + b).trace();
    long evals = 0;
    auto margin = [&](const VecN<4>& x) { return fast_margin(a, b, as_mat(x), evals); };
    auto cost = [&](const VecN<4>& x) { return base - x[0] - x[3]; };

    // Largest t in [0, 1] with margin(t x) >= target; margin is concave along
    // the ray and X = 0 is feasible, so bisection is exact.
    auto project = [&](VecN<4> x, double target) {
        if (margin(x) >= target) return x;
        double lo = 0.0, hi = 1.0;
        for (int i = 0; i < 60; ++i) {
            const double mid = 0.5 * (lo + hi);
            VecN<4> xm;
            for (int k = 0; k < 4; ++k) xm[k] = mid * x[k];
            (margin(xm) >= target ? lo : hi) = mid;
        }
        for (int k = 0; k < 4; ++k) x[k] *= lo;
        return x;
    };

    // Largest feasible stretch along d (cost decreases in the diagonal
    // directions, margin is concave along the ray).
    auto stretch = [&](VecN<4> x, const VecN<4>& d, double target) {
        auto at = [&](double t) {
            VecN<4> xt;
            for (int k = 0; k < 4; ++k) xt[k] = x[k] + t * d[k];
            return xt;
        };
        double hi = 1e-4;
        if (margin(at(hi)) < target) {
            double lo = 0.0;
            for (int i = 0; i < 50; ++i) {
                const double mid = 0.5 * (lo + hi);
                (margin(at(mid)) >= target ? lo : hi) = mid;
            }
            return at(lo);
        }
        while (hi < 64.0 && margin(at(2.0 * hi)) >= target) hi *= 2.0;
        double lo = hi;
        hi *= 2.0;
        for (int i = 0; i < 50; ++i) {
            const double mid = 0.5 * (lo + hi);
            (margin(at(mid)) >= target ? lo : hi) = mid;
        }
        return at(lo);
    };

    const Mat2 xstar = optimal_X(a, b);
    const double scale =
        std::sqrt((std::sqrt(a.det()) + 0.5) * (std::sqrt(b.det()) + 0.5));

    Rng rng(opts.seed);
    std::vector<VecN<4>> starts;
    starts.push_back({0.0, 0.0, 0.0, 0.0});
    starts.push_back({xstar.m00, xstar.m01, xstar.m10, xstar.m11});
    while (static_cast<int>(starts.size()) < opts.starts) {
        VecN<4> x;
        if (starts.size() == 2) {
            for (int k = 0; k < 4; ++k) x[k] = rng.uniform(-0.05, 0.05) * scale;
            x[0] += xstar.m00, x[1] += xstar.m01, x[2] += xstar.m10, x[3] += xstar.m11;
        } else {
            for (int k = 0; k < 4; ++k) x[k] = rng.uniform(-scale, scale);
        }
        starts.push_back(x);
    }

    // Project and polish against margin >= 0 exactly: near pure marginals the
    // boundary is quadratic in X, so any negative tolerance target would let
    // the polish buy O(sqrt(tol)) of spurious trace inside the band.
    const double target = 0.0;
    bool have_best = false;
    OracleResult best;
    for (const VecN<4>& x0 : starts) {
        VecN<4> x = x0;
        for (const double lambda : {1e2, 1e4, 1e6}) {
            auto penalized = [&](const VecN<4>& z) {
                const double v = std::max(0.0, -margin(z));
                return cost(z) + lambda * v * v;
            };
            x = nelder_mead<4>(penalized, x, 0.1 * scale, opts.max_iters, opts.conv_tol * 1e-6);
        }
        x = project(x, target);
        for (int round = 0; round < 3; ++round) {
            x = stretch(x, {1.0, 0.0, 0.0, 1.0}, target);
            x = stretch(x, {1.0, 0.0, 0.0, 0.0}, target);
            x = stretch(x, {0.0, 0.0, 0.0, 1.0}, target);
        }

        OracleResult r;
        r.x_opt = as_mat(x);
        r.cost = cost(x);
        r.feasibility_margin = coupling_margin(a, b, r.x_opt);
        const auto tie = [](const OracleResult& p) {
            return std::array<double, 6>{p.cost, -p.feasibility_margin, p.x_opt.m00,
                                         p.x_opt.m01, p.x_opt.m10, p.x_opt.m11};
        };
        if (!have_best || tie(r) < tie(best)) {
            best = r;
            have_best = true;
        }
    }

    best.iterations = evals;
    if (best.feasibility_margin < -opts.feas_tol)
        throw NoFeasiblePoint("minimize_cost: no feasible point found (X = 0 should be feasible)");
    return best;
}

bool diagonal_restriction_check(const Mat2& a, const Mat2& b, const Mat2& x, double hbar) {
    if (coupling_margin(a, b, x, hbar) < -kPhysTol)
        throw InfeasibleInput("diagonal_restriction_check: X is not a feasible coupling block");
    const Mat2 xp = (x.trace() / 2.0) * Mat2::identity();
    return coupling_margin(a, b, xp, hbar) >= -kPhysTol;
}

Mat2 optimal_K(double a0, double b0) {
    if (std::abs(a0) > 2.0 || std::abs(b0) > 2.0)
        throw OutOfRange("optimal_K: require |a0| <= 2 and |b0| <= 2");
    double k;
    if (a0 >= b0) {
        if (2.0 + a0 == 0.0) throw OutOfRange("optimal_K: denominator 2 + a0 vanishes");
        k = std::sqrt((2.0 + b0) / (2.0 + a0));
    } else {
        if (2.0 - a0 == 0.0) throw OutOfRange("optimal_K: denominator 2 - a0 vanishes");
        k = std::sqrt((2.0 - b0) / (2.0 - a0));
    }
    return k * Mat2::identity();
}

namespace {

// Constraint margin for the K problem; scalar closed forms, no eigensolve.
// M = (I - K^2) + (i/2)(a0 det K - b0) Omega must be PSD together with K.
double k_feasibility(const VecN<3>& k, double a0, double b0) {
    const Mat2 K{k[0], k[1], k[1], k[2]};
    const double psd_k = std::min(0.5 * K.trace() - std::sqrt(0.25 * (K.m00 - K.m11) * (K.m00 - K.m11) + K.m01 * K.m01),
                                  K.det());
    const Mat2 r = Mat2::identity() - K * K;
    const double kk = 0.5 * (a0 * K.det() - b0);
    const double m_min =
        0.5 * r.trace() - std::sqrt(0.25 * (r.m00 - r.m11) * (r.m00 - r.m11) + r.m01 * r.m01 + kk * kk);
    return std::min(psd_k, m_min);
}

}  // namespace

Mat2 optimal_K_brute(double a0, double b0) {
    optimal_K(a0, b0);  // validates the domain

    VecN<3> best{0.0, 0.0, 0.0};
    double best_tr = 0.0;  // K = 0 is always feasible
    for (double ka = 0.0; ka <= 3.0; ka += 0.02) {
        for (double kd = 0.0; kd <= 3.0; kd += 0.02) {
            for (double kb = -1.0; kb <= 1.0; kb += 0.02) {
                const VecN<3> k{ka, kb, kd};
                if (ka + kd > best_tr && k_feasibility(k, a0, b0) >= -1e-12) {
                    best = k;
                    best_tr = ka + kd;
                }
            }
        }
    }
    for (const double lambda : {1e4, 1e6, 1e8}) {
        auto penalized = [&](const VecN<3>& k) {
            const double v = std::max(0.0, -k_feasibility(k, a0, b0));
            return -(k[0] + k[2]) + lambda * v * v;
        };
        best = nelder_mead<3>(penalized, best, 0.02, 800, 1e-15);
    }
    // final stretch along I to the constraint boundary
    double lo = 0.0, hi = 1.0;
    while (hi < 64.0 &&
           k_feasibility({best[0] + hi, best[1], best[2] + hi}, a0, b0) >= 0.0)
        hi *= 2.0;
    for (int i = 0; i < 60; ++i) {
        const double mid = 0.5 * (lo + hi);
        (k_feasibility({best[0] + mid, best[1], best[2] + mid}, a0, b0) >= 0.0 ? lo : hi) = mid;
    }
    return {best[0] + lo, best[1], best[1], best[2] + lo};
}

}  // namespace gaussot
