// Acceptance suite: runs each numbered criterion at its stated tolerance and
// prints one PASS/FAIL line per criterion (plus indented detail notes).
// Usage: acceptance [N] — run criterion N only, or all eleven when omitted.
// Exit code: number of failed criteria.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include "gaussot/distances.hpp"
#include "gaussot/oracle.hpp"
#include "gaussot/random.hpp"
#include "gaussot/sweep.hpp"

using namespace gaussot;

namespace {

struct Check {
    bool ok = true;
    std::vector<std::string> notes;

    void expect(bool cond, const std::string& msg) {
        if (!cond) {
            ok = false;
            notes.push_back(msg);
        }
    }
    void note(const std::string& msg) { notes.push_back(msg); }
};

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, a, b, c);
    return buf;
}

GaussianState centered(const Mat2& cov) { return {{}, cov}; }
GaussianState thermal(double nu) { return centered(nu * Mat2::identity()); }

Mat2 squeezed_cov(double nu, double r) {
    return nu * Mat2::diag(std::exp(-2.0 * r), std::exp(2.0 * r));
}

// 1. Oracle equivalence on 100 seeded random centered pairs.
Check criterion1() {
    Check c;
    Rng rng(2024);
    const auto t0 = std::chrono::steady_clock::now();
    double max_delta = 0.0, max_beat = 0.0, max_overcut = 0.0;
    int viol_delta = 0, viol_beat = 0;
    for (int t = 0; t < 100; ++t) {
        const Mat2 a = random_physical_cov(rng);  // nu in [0.5,3], r in [0,1.5], phi in [0,2pi)
        const Mat2 b = random_physical_cov(rng);
        OracleOptions opts;
        opts.seed = rng.next_u64();
        const double closed = wasserstein2(centered(a), centered(b)).d_squared;
        const OracleResult r = minimize_cost(a, b, opts);
        const double delta = std::abs(closed - r.cost);
        const double beat = closed - r.cost;  // > 0 when the oracle undercuts
        if (delta > 1e-4) ++viol_delta;
        if (beat > 1e-6) ++viol_beat;
        max_delta = std::max(max_delta, delta);
        max_beat = std::max(max_beat, beat);
        max_overcut = std::max(max_overcut, -beat);
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    c.expect(viol_delta == 0,
             fmt("|closed - oracle| <= 1e-4 violated %g/100 times, max delta %.6g", viol_delta,
                 max_delta));
    c.expect(viol_beat == 0,
             fmt("oracle >= closed - 1e-6 violated %g/100 times, max undercut %.6g", viol_beat,
                 max_beat));
    c.expect(secs <= 60.0, fmt("runtime %.1f s exceeds 60 s", secs));
    c.note(fmt("max|closed - oracle| = %.6g, max undercut = %.6g, runtime %.1f s", max_delta,
               max_beat, secs));
    // the closed-form X* seeds one multi-start, so the oracle can never end
    // up materially above the closed form; any gap is the formula sitting
    // above the true minimum
    c.note(fmt("max overcut (oracle above closed form) = %.3g", max_overcut));
    if (!c.ok)
        c.note("the closed form is exact for thermal pairs but only an upper bound for "
               "squeezed pairs: the brute-force minimizer finds strictly cheaper physical "
               "couplings (e.g. A=1.5I, B=diag(e-1,e): closed 0.787829 vs minimum 0.764951, "
               "certified by an independent SDP solve)");
    return c;
}

// 2. Thermal closed form.
Check criterion2() {
    Check c;
    c.expect(std::abs(thermal_wasserstein2(1.5, 1.0) - 0.5) <= 1e-12,
             "thermal_wasserstein2(1.5, 1) != 0.5");
    for (double nu : {0.5, 0.75, 1.0, 2.0, 5.0}) {
        const double expect = std::pow(std::sqrt(nu + 0.5) - std::sqrt(nu - 0.5), 2);
        c.expect(std::abs(thermal_wasserstein2(nu, nu) - expect) <= 1e-12,
                 fmt("(nu,nu) pair at nu=%g off the closed form", nu));
    }
    for (double na : {0.5, 0.75, 1.0, 2.0, 5.0})
        for (double nb : {0.5, 0.75, 1.0, 2.0, 5.0})
            c.expect(std::abs(wasserstein2(thermal(na), thermal(nb)).d_squared -
                              thermal_wasserstein2(na, nb)) <= 1e-12,
                     fmt("general formula vs thermal closed form at (%g, %g)", na, nb));
    return c;
}

// 3. Self-distance = 2N closed forms.
Check criterion3() {
    Check c;
    for (double q : {0.0, 0.25, 0.5, 0.75}) {
        const double nu = 0.5 * (1.0 + q) / (1.0 - q);
        const double base = (1.0 - std::sqrt(q)) / (1.0 + std::sqrt(q));
        c.expect(std::abs(self_distance(thermal(nu)) - base) <= 1e-12,
                 fmt("thermal self-distance at q=%g", q));
        for (double r : {0.0, 0.5, 1.0})
            c.expect(std::abs(self_distance(centered(squeezed_cov(nu, r))) -
                              base * std::cosh(2.0 * r)) <= 1e-12,
                     fmt("squeezed-thermal self-distance at q=%g, r=%g", q, r));
    }
    return c;
}

// 4. Pure-state reduction.
Check criterion4() {
    Check c;
    c.expect(wasserstein2(thermal(0.5), thermal(0.5)).d_squared == 1.0, "vacuum-vacuum != 1");
    Rng rng(4);
    for (int t = 0; t < 200; ++t) {
        const Mat2 a = random_physical_cov(rng);
        const Mat2 b = squeezed_cov(0.5, rng.uniform(0.0, 1.2));
        const WassersteinResult r = wasserstein2(centered(a), centered(b));
        c.expect(r.d_squared == 0.5 * (a + b).trace(),
                 "pure nu_B: d_squared != tr[A+B]/2 exactly");
    }
    return c;
}

// 5. Classical limit at hbar = 1e-6.
Check criterion5() {
    Check c;
    Rng rng(5);
    double worst = 0.0;
    for (int t = 0; t < 20; ++t) {
        const Mat2 s1 = random_spd(rng, -0.5, 1.0, 1.5);
        const Mat2 s2 = random_spd(rng, -0.5, 1.0, 1.5);
        const double q = wasserstein2(centered(s1), centered(s2), 1e-6).d_squared;
        const double cl = classical_wasserstein2(s1, s2);
        const double rel = std::abs(q - cl) / std::max(q, 1e-30);
        worst = std::max(worst, rel);
        c.expect(rel <= 1e-4, fmt("relative gap %.3g at trial %g", rel, t));
    }
    c.note(fmt("worst relative gap %.3g", worst));
    return c;
}

// 6. Coupling and channel physicality.
Check criterion6() {
    Check c;
    Rng rng(6);
    double worst_coupling = 0.0, worst_channel = 0.0;
    for (int t = 0; t < 1000; ++t) {
        const Mat2 a = random_physical_cov(rng);
        const Mat2 b = random_physical_cov(rng);
        const double mc = coupling_margin(a, b, optimal_X(a, b));
        worst_coupling = std::min(worst_coupling, mc);
        if (std::sqrt(b.det()) > 0.5 + kPhysTol) {
            const double ch = channel_margin(optimal_channel(a, b));
            worst_channel = std::min(worst_channel, ch);
        }
    }
    c.expect(worst_coupling >= -1e-9, fmt("X* coupling margin %.3g < -1e-9", worst_coupling));
    c.expect(worst_channel >= -1e-9, fmt("channel margin %.3g < -1e-9", worst_channel));

    const ChannelPair th = optimal_channel(1.5 * Mat2::identity(), Mat2::identity());
    c.expect((th.u - std::sqrt(4.0 / 3.0) * Mat2::identity()).max_abs() <= 1e-12,
             "thermal channel U != sqrt(4/3) I");
    c.expect((th.v - (1.0 / 6.0) * Mat2::identity()).max_abs() <= 1e-12,
             "thermal channel V != I/6");
    c.expect(std::abs(channel_margin(th)) <= 1e-9, "thermal channel constraint not saturated");
    c.note(fmt("worst coupling margin %.3g, worst channel margin %.3g", worst_coupling,
               worst_channel));
    return c;
}

// 7. Symmetry / rotation invariance / branch continuity / joint convexity.
Check criterion7() {
    Check c;
    Rng rng(7);
    int sym = 0, rot = 0, tie = 0, conv = 0;
    double worst_conv = 0.0;
    for (int t = 0; t < 1000; ++t) {
        const GaussianState a = centered(random_physical_cov(rng));
        const GaussianState b = centered(random_physical_cov(rng));
        if (std::abs(wasserstein2(a, b).d_squared - wasserstein2(b, a).d_squared) > 1e-12) ++sym;

        const Mat2 rm = rotation(rng.uniform(0.0, 6.283185307179586));
        const GaussianState ar = centered(rm * a.cov * rm.transpose());
        const GaussianState br = centered(rm * b.cov * rm.transpose());
        if (std::abs(wasserstein2(a, b).d_squared - wasserstein2(ar, br).d_squared) > 1e-10)
            ++rot;
    }
    for (int t = 0; t < 1000; ++t) {
        const Mat2 a = random_physical_cov(rng, 0.6);
        Mat2 b = random_physical_cov(rng, 0.6);
        b = (std::sqrt(a.det()) / std::sqrt(b.det())) * b;  // nu_A = nu_B tie
        const double nu = std::sqrt(a.det());
        const Mat2 sb = sqrt_spd2(b);
        const double trn = sqrt_spd2(sb * a * sb).trace();
        const double up = std::sqrt((2 * nu - 1) * (2 * nu + 1)) / nu;
        const double dn = std::sqrt((2 * nu + 1) * (2 * nu - 1)) / nu;
        if (std::abs(0.5 * trn * (up - dn)) > 1e-12) ++tie;
    }
    for (int t = 0; t < 1000; ++t) {
        const Mat2 a1 = random_physical_cov(rng), a2 = random_physical_cov(rng);
        const Mat2 b1 = random_physical_cov(rng), b2 = random_physical_cov(rng);
        const double d11 = wasserstein2(centered(a1), centered(b1)).d_squared;
        const double d22 = wasserstein2(centered(a2), centered(b2)).d_squared;
        for (double eta : {0.25, 0.5, 0.75}) {
            const Mat2 am = eta * a1 + (1.0 - eta) * a2;
            const Mat2 bm = eta * b1 + (1.0 - eta) * b2;
            const double mixed = wasserstein2(centered(am), centered(bm)).d_squared;
            const double v = mixed - (eta * d11 + (1.0 - eta) * d22);
            if (v > 1e-10) {
                ++conv;
                worst_conv = std::max(worst_conv, v);
            }
        }
    }
    c.expect(sym == 0, fmt("symmetry violations: %g/1000", sym));
    c.expect(rot == 0, fmt("rotation-invariance violations: %g/1000", rot));
    c.expect(tie == 0, fmt("branch-tie violations: %g/1000", tie));
    c.expect(conv == 0, fmt("joint-convexity violations: %g/3000, worst %.6g", conv, worst_conv));
    if (conv > 0)
        c.note("the implemented closed form is not jointly convex because it is not the true "
               "coupling minimum for squeezed pairs (the true minimum would be convex); see "
               "criterion 1");
    return c;
}

// 8. Diagonal restriction for thermal pairs.
Check criterion8() {
    Check c;
    Rng rng(8);
    int ok_count = 0;
    for (int t = 0; t < 100; ++t) {
        const Mat2 a = rng.uniform(0.5, 3.0) * Mat2::identity();
        const Mat2 b = rng.uniform(0.5, 3.0) * Mat2::identity();
        Mat2 x;
        for (int attempt = 0;; ++attempt) {
            const double u = rng.uniform(0.0, 1.0);
            x = u * optimal_X(a, b) + Mat2{rng.uniform(-0.2, 0.2), rng.uniform(-0.2, 0.2),
                                           rng.uniform(-0.2, 0.2), rng.uniform(-0.2, 0.2)};
            if (coupling_margin(a, b, x) >= 0.0) break;
            if (attempt > 200) {
                x = 0.5 * optimal_X(a, b);  // strictly interior fallback
                break;
            }
        }
        if (diagonal_restriction_check(a, b, x)) ++ok_count;
    }
    c.expect(ok_count == 100, fmt("diagonalized replacement feasible in %g/100 cases", ok_count));
    return c;
}

// 9. Trace maximizer K* against brute force; positivity criterion.
Check criterion9() {
    Check c;
    for (double a0 : {-1.5, 0.0, 1.5}) {
        for (double b0 : {-1.5, 0.0, 1.5}) {
            const double closed = optimal_K(a0, b0).trace();
            const double brute = optimal_K_brute(a0, b0).trace();
            c.expect(std::abs(closed - brute) <= 1e-3,
                     fmt("K* trace mismatch %.4g at (a0,b0)=(%g,%g)", closed - brute, a0, b0));
        }
    }
    Rng rng(9);
    int disagree = 0, tested = 0;
    while (tested < 1000) {
        const double a = rng.uniform(-3.0, 3.0), d = rng.uniform(-3.0, 3.0),
                     b = rng.uniform(-3.0, 3.0), k = rng.uniform(-2.0, 2.0);
        const Mat2 s{a, b, b, d};
        const Mat2 kk{0.0, k, -k, 0.0};
        if (std::abs(s.det()) < 1e-6 || std::abs(k) < 1e-3) continue;
        ++tested;
        if (lemma_positive_definite(s, kk) != (min_eig_herm2(s, kk) > 0.0)) ++disagree;
    }
    c.expect(disagree == 0, fmt("positivity-criterion disagreements: %g/1000", disagree));
    return c;
}

// 10. Distance-suite identities and the Bures-Wasserstein inequality.
Check criterion10() {
    Check c;
    const Mat2 i2 = Mat2::identity();
    c.expect(std::abs(fidelity(1.5 * i2, i2) - 0.95192) <= 5e-6, "fidelity != 0.95192 (5 sig)");
    c.expect(std::abs(overlap(1.5 * i2, i2) - 0.4) <= 5e-6, "overlap != 0.4");
    c.expect(std::abs(hilbert_schmidt(2.0 * i2, i2) - 0.28868) <= 5e-6,
             "HS at theta=1 != 0.28868");
    c.expect(std::abs(relative_entropy(1.5 * i2, i2) - 0.11778) <= 5e-6,
             "relative entropy != 0.11778 nats");

    auto scan = [&](SweepFamily fam, double lo, double hi, double step, const char* name) {
        SweepSpec s;
        s.family = fam;
        s.nu = 1.0;
        s.r = 0.2;
        s.theta = 0.3;
        s.dr = 0.1;
        s.lo = lo;
        s.hi = hi;
        s.step = step;
        for (const SweepRow& row : compute_sweep(s))
            c.expect(row.weighted_bures <= row.report.wasserstein2 + 1e-10,
                     std::string(name) + fmt(" grid violation at sweep_var %.3g", row.sweep_var));
    };
    scan(SweepFamily::thermal_theta, 0.0, 2.0, 0.1, " (theta)");
    scan(SweepFamily::squeezed_dr, 0.0, 1.0, 0.05, " (dr)");
    scan(SweepFamily::squeezed_r, 0.0, 1.0, 0.05, " (r)");

    Rng rng(10);
    int viol = 0;
    double worst = 0.0;
    for (int t = 0; t < 1000; ++t) {
        const GaussianState a = centered(random_physical_cov(rng));
        const GaussianState b = centered(random_physical_cov(rng));
        const auto [lhs, rhs] = bures_wasserstein_gap(a, b);
        if (lhs > rhs + 1e-10) {
            ++viol;
            worst = std::max(worst, lhs - rhs);
        }
    }
    c.expect(viol == 0,
             fmt("Bures-Wasserstein violations on random pairs: %g/1000, worst %.6g", viol,
                 worst));
    if (viol > 0)
        c.note("the inequality is a theorem for thermal pairs only; random squeezed pairs "
               "violate it even with the closed form (an upper bound) on the right-hand side");
    return c;
}

// 11. Figure-style sweep: qualitative features.
Check criterion11() {
    Check c;
    SweepSpec s;
    s.family = SweepFamily::thermal_theta;
    s.nu = 1.0;
    s.r = 0.0;
    s.dr = 0.0;
    s.lo = 0.0;
    s.hi = 2.0;
    s.step = 0.1;
    const std::vector<SweepRow> rows = compute_sweep(s);
    c.expect(rows.size() == 21, fmt("expected 21 rows, got %g", double(rows.size())));

    const DistanceReport& first = rows.front().report;
    c.expect(first.bures == 0.0, "bures != 0 at theta=0");
    c.expect(first.hilbert_schmidt == 0.0, "HS != 0 at theta=0");
    c.expect(first.relative_entropy_ab == 0.0, "relative entropy != 0 at theta=0");
    c.expect(first.trace_lower == 0.0 && first.trace_upper <= 1e-7,
             "trace bounds != 0 at theta=0");
    c.expect(std::abs(first.wasserstein2 - (2.0 - std::sqrt(3.0))) <= 1e-9,
             "D^2 at theta=0 is not the self-distance 2N");
    c.expect(first.shifted_wasserstein2 == 0.0, "D_Delta != 0 at theta=0");

    for (std::size_t i = 1; i < rows.size(); ++i) {
        c.expect(rows[i].report.wasserstein2 > rows[i - 1].report.wasserstein2 - 1e-12,
                 "D^2 not monotone in theta");
        c.expect(rows[i].report.bures > rows[i - 1].report.bures - 1e-12,
                 "Bures not monotone in theta");
        c.expect(rows[i].report.hilbert_schmidt > rows[i - 1].report.hilbert_schmidt - 1e-12,
                 "HS not monotone in theta");
    }
    return c;
}

struct Criterion {
    int id;
    const char* name;
    std::function<Check()> run;
};

}  // namespace

int main(int argc, char** argv) {
    const std::vector<Criterion> criteria = {
        {1, "oracle equivalence on 100 random pairs", criterion1},
        {2, "thermal closed form", criterion2},
        {3, "self-distance = 2N closed forms", criterion3},
        {4, "pure-state reduction", criterion4},
        {5, "classical limit at hbar = 1e-6", criterion5},
        {6, "coupling and channel physicality", criterion6},
        {7, "symmetry / rotation / branch tie / joint convexity", criterion7},
        {8, "diagonal restriction for thermal pairs", criterion8},
        {9, "trace maximizer K* and positivity criterion", criterion9},
        {10, "distance suite and Bures-Wasserstein inequality", criterion10},
        {11, "sweep qualitative features", criterion11},
    };

    const int only = argc > 1 ? std::atoi(argv[1]) : 0;
    int failures = 0;
    for (const Criterion& cr : criteria) {
        if (only != 0 && cr.id != only) continue;
        Check c;
        try {
            c = cr.run();
        } catch (const std::exception& e) {
            c.ok = false;
            c.notes.push_back(std::string("exception: ") + e.what());
        }
        std::printf("%s criterion %2d: %s\n", c.ok ? "PASS" : "FAIL", cr.id, cr.name);
        for (const std::string& n : c.notes) std::printf("       - %s\n", n.c_str());
        if (!c.ok) ++failures;
    }
    return failures;
}
