// gaussot command line.
//
// Exit codes (stable contract): 0 success, 1 verification failure,
// 2 input error, 3 unphysical state, 4 output I/O error.
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "gaussot/json_io.hpp"
#include "gaussot/oracle.hpp"
#include "gaussot/random.hpp"
#include "gaussot/sweep.hpp"

namespace {

using namespace gaussot;

int cmd_compute(const std::string& a_path, const std::string& b_path, double hbar, bool all) {
    const GaussianState a = build_state(state_spec_from_file(a_path));
    const GaussianState b = build_state(state_spec_from_file(b_path));
    if (all)
        std::cout << to_json(distance_report(a, b, hbar)) << "\n";
    else
        std::cout << to_json(wasserstein2(a, b, hbar)) << "\n";
    return 0;
}

int cmd_sweep(const std::string& spec_path, const std::string& out_path) {
    const SweepSpec spec = sweep_spec_from_file(spec_path);
    const std::vector<SweepRow> rows = compute_sweep(spec);
    std::ofstream out(out_path);
    if (!out) {
        std::cerr << "gaussot: cannot open output file: " << out_path << "\n";
        return 4;
    }
    write_csv(out, rows);
    out.flush();
    if (!out) {
        std::cerr << "gaussot: write failed: " << out_path << "\n";
        return 4;
    }
    return 0;
}

// Seed 0 is reserved for thermal-only sampling (r = 0), where the closed
// form provably equals the true minimum; other seeds draw general
// squeezed-thermal pairs and measure the closed form against the
// constrained minimizer.
int cmd_verify(int trials, std::uint64_t seed, double tol) {
    Rng rng(seed);
    const bool thermal_only = seed == 0;
    double max_delta = 0.0;
    for (int t = 0; t < trials; ++t) {
        Mat2 a, b;
        if (thermal_only) {
            a = rng.uniform(0.5, 3.0) * Mat2::identity();
            b = rng.uniform(0.5, 3.0) * Mat2::identity();
        } else {
            a = random_physical_cov(rng);
            b = random_physical_cov(rng);
        }
        OracleOptions opts;
        opts.seed = rng.next_u64();
        const double closed = wasserstein2({{}, a}, {{}, b}).d_squared;
        const OracleResult r = minimize_cost(a, b, opts);
        max_delta = std::max(max_delta, std::abs(closed - r.cost));
    }
    const bool ok = max_delta <= tol;
    std::cout << "verify: trials=" << trials << " seed=" << seed
              << " max_delta=" << format_sig12(max_delta) << " tol=" << format_sig12(tol)
              << (ok ? " PASS" : " FAIL") << "\n";
    return ok ? 0 : 1;
}

int cmd_table(double nu, double theta) {
    if (nu < 0.5 - kPhysTol || nu + theta < 0.5 - kPhysTol)
        throw UnphysicalState("table: require nu >= 1/2 and nu + theta >= 1/2");

    const Mat2 a = (nu + theta) * Mat2::identity();
    const Mat2 b = nu * Mat2::identity();
    const GaussianState sa{{}, a}, sb{{}, b};

    struct Row {
        std::string name, thermal, general;
        double delta = 0.0;
        bool numeric = true;
    };
    auto num_row = [](const std::string& name, double th, double gen) {
        return Row{name, format_sig12(th), format_sig12(gen), std::abs(th - gen), true};
    };

    const double disc = std::max(0.0, (4.0 * nu * nu - 1.0) *
                                          (4.0 * (nu + theta) * (nu + theta) - 1.0));
    const double f_th = 2.0 / (4.0 * (nu * nu + nu * theta) + 1.0 - std::sqrt(disc));

    std::vector<Row> rows;
    rows.push_back(num_row("wasserstein2_sq", thermal_wasserstein2(nu + theta, nu),
                           wasserstein2(sa, sb).d_squared));
    rows.push_back(num_row("fidelity", f_th, fidelity(a, b)));
    rows.push_back(num_row("bures", std::sqrt(std::max(0.0, 2.0 - 2.0 * std::sqrt(f_th))),
                           bures(a, b)));
    rows.push_back(num_row("overlap", 1.0 / (2.0 * nu + theta), overlap(a, b)));
    rows.push_back(num_row("hilbert_schmidt",
                           std::abs(theta) / std::sqrt(2.0 * nu * (nu + theta) * (2.0 * nu + theta)),
                           hilbert_schmidt(a, b)));
    if (nu <= 0.5 + kPhysTol) {
        // pure B: the relative entropy exists only on the diagonal
        if (std::abs(theta) <= kPhysTol)
            rows.push_back(Row{"rel_entropy_ab", "0 (limit)", "0 (limit)", 0.0, false});
        else
            rows.push_back(Row{"rel_entropy_ab", "divergent", "divergent", 0.0, false});
    } else {
        const double am = std::max(0.0, nu + theta - 0.5);
        const double s_th = (nu + theta + 0.5) * std::log((nu + 0.5) / (nu + theta + 0.5)) +
                            (am == 0.0 ? 0.0 : am * std::log(am / (nu - 0.5)));
        rows.push_back(num_row("rel_entropy_ab", s_th, relative_entropy(a, b)));
    }

    std::printf("%-18s %-22s %-22s %s\n", "quantity", "thermal_column", "general", "delta");
    bool ok = true;
    for (const Row& r : rows) {
        std::printf("%-18s %-22s %-22s %s\n", r.name.c_str(), r.thermal.c_str(),
                    r.general.c_str(), r.numeric ? format_sig12(r.delta).c_str() : "-");
        if (r.numeric && r.delta > 1e-10) ok = false;
    }
    if (!ok) {
        std::cerr << "gaussot: thermal-column and general values disagree beyond 1e-10\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Wasserstein-2 distance between one-mode Gaussian states"};
    app.require_subcommand(1);

    std::string a_path, b_path;
    double hbar = 1.0;
    bool all = false;
    CLI::App* compute = app.add_subcommand("compute", "Distance between two states given as JSON specs");
    compute->add_option("--state-a", a_path, "state A spec file (JSON)")->required();
    compute->add_option("--state-b", b_path, "state B spec file (JSON)")->required();
    compute->add_option("--hbar", hbar, "Planck constant (default 1)");
    compute->add_flag("--all", all, "emit the full distance report");

    std::string spec_path, out_path;
    CLI::App* sweep = app.add_subcommand("sweep", "Parameter-grid sweep to CSV");
    sweep->add_option("--spec", spec_path, "sweep spec file (JSON)")->required();
    sweep->add_option("--out", out_path, "output CSV path")->required();

    int trials = 100;
    std::uint64_t seed = 42;
    double tol = 1e-4;
    CLI::App* verify = app.add_subcommand("verify", "Closed form vs brute-force minimizer");
    verify->add_option("--trials", trials, "number of random pairs")->check(CLI::PositiveNumber);
    verify->add_option("--seed", seed, "RNG seed (0: thermal pairs only)");
    verify->add_option("--tol", tol, "max allowed |closed - oracle|");

    double nu = 1.0, theta = 0.5;
    CLI::App* table = app.add_subcommand("table", "Thermal-column identities for A=(nu+theta)I, B=nu*I");
    table->add_option("--nu", nu, "symplectic value of B")->required();
    table->add_option("--theta", theta, "temperature offset of A")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (compute->parsed()) return cmd_compute(a_path, b_path, hbar, all);
        if (sweep->parsed()) return cmd_sweep(spec_path, out_path);
        if (verify->parsed()) return cmd_verify(trials, seed, tol);
        if (table->parsed()) return cmd_table(nu, theta);
    } catch (const UnphysicalState& e) {
        std::cerr << "gaussot: " << e.what() << "\n";
        return 3;
    } catch (const DivergentEntropy& e) {
        std::cerr << "gaussot: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "gaussot: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
