#include "gaussot/sweep.hpp"

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "json.hpp"

#include "gaussot/json_io.hpp"

namespace gaussot {

namespace {

SweepFamily family_from_string(const std::string& s) {
    if (s == "thermal_theta") return SweepFamily::thermal_theta;
    if (s == "squeezed_dr") return SweepFamily::squeezed_dr;
    if (s == "squeezed_r") return SweepFamily::squeezed_r;
    throw Error("sweep spec: unknown family \"" + s + "\"");
}

double canonical(double v) { return std::strtod(format_sig12(v).c_str(), nullptr); }

Mat2 squeezed_cov(double scale, double r) {
    return scale * Mat2::diag(std::exp(-2.0 * r), std::exp(2.0 * r));
}

}  // namespace

SweepSpec sweep_spec_from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
        SweepSpec s;
        s.family = family_from_string(j.at("family").get<std::string>());
        s.nu = j.at("nu").get<double>();
        s.r = j.value("r", 0.0);
        s.theta = j.value("theta", 0.0);
        s.dr = j.value("dr", 0.0);
        s.lo = j.at("lo").get<double>();
        s.hi = j.at("hi").get<double>();
        s.step = j.at("step").get<double>();
        s.hbar = j.value("hbar", 1.0);
        if (!(s.lo < s.hi)) throw Error("sweep spec: require lo < hi");
        if (!(s.step > 0.0)) throw Error("sweep spec: require step > 0");
        if (!(s.hbar > 0.0)) throw Error("sweep spec: require hbar > 0");
        return s;
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("sweep spec: ") + e.what());
    }
}

SweepSpec sweep_spec_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open sweep spec: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return sweep_spec_from_json_text(ss.str());
}

std::vector<SweepRow> compute_sweep(const SweepSpec& spec) {
    std::vector<SweepRow> rows;
    for (int i = 0;; ++i) {
        const double v = spec.lo + i * spec.step;
        if (v > spec.hi + 1e-9 * spec.step) break;

        double theta = spec.theta, r = spec.r, dr = spec.dr;
        const double sv = canonical(v);
        switch (spec.family) {
            case SweepFamily::thermal_theta: theta = sv; break;
            case SweepFamily::squeezed_dr: dr = sv; break;
            case SweepFamily::squeezed_r: r = sv; break;
        }

        const GaussianState a{{}, squeezed_cov(spec.nu + theta, r)};
        const GaussianState b{{}, squeezed_cov(spec.nu, r + dr)};

        SweepRow row;
        row.sweep_var = sv;
        row.report = distance_report(a, b, spec.hbar);
        row.weighted_bures = 0.5 * (a.nu() + b.nu()) * row.report.bures * row.report.bures;
        rows.push_back(row);
    }
    return rows;
}

std::string csv_header() {
    return "sweep_var,d_squared,d_delta_squared,bures,weighted_bures,fidelity,overlap,"
           "hilbert_schmidt,rel_entropy_ab,rel_entropy_ba,trace_lower,trace_upper";
}

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
    out << csv_header() << '\n';
    for (const SweepRow& row : rows) {
        const DistanceReport& r = row.report;
        out << format_sig12(row.sweep_var) << ',' << format_sig12(r.wasserstein2) << ','
            << format_sig12(r.shifted_wasserstein2) << ',' << format_sig12(r.bures) << ','
            << format_sig12(row.weighted_bures) << ',' << format_sig12(r.fidelity) << ','
            << format_sig12(r.overlap) << ',' << format_sig12(r.hilbert_schmidt) << ','
            << format_sig12(r.relative_entropy_ab) << ',' << format_sig12(r.relative_entropy_ba)
            << ',' << format_sig12(r.trace_lower) << ',' << format_sig12(r.trace_upper) << '\n';
    }
}

std::vector<SweepRow> read_csv(std::istream& in) {
    std::vector<SweepRow> rows;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (first) {  // header
            first = false;
            continue;
        }
        if (line.empty()) continue;
        std::array<double, 12> v{};
        std::stringstream ss(line);
        std::string cell;
        for (double& x : v) {
            if (!std::getline(ss, cell, ',')) throw Error("csv: short row");
            x = std::strtod(cell.c_str(), nullptr);
        }
        SweepRow row;
        row.sweep_var = v[0];
        row.report.wasserstein2 = v[1];
        row.report.shifted_wasserstein2 = v[2];
        row.report.bures = v[3];
        row.weighted_bures = v[4];
        row.report.fidelity = v[5];
        row.report.overlap = v[6];
        row.report.hilbert_schmidt = v[7];
        row.report.relative_entropy_ab = v[8];
        row.report.relative_entropy_ba = v[9];
        row.report.trace_lower = v[10];
        row.report.trace_upper = v[11];
        rows.push_back(row);
    }
    return rows;
}

}  // namespace gaussot
