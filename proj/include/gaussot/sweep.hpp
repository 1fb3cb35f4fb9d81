// Parameter-grid sweeps over squeezed-thermal pairs
//   A = (nu + theta) diag(e^-2r, e^2r),  B = nu diag(e^-2(r+dr), e^2(r+dr)),
// one distance report per grid point, emitted as CSV.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "gaussot/distances.hpp"

namespace gaussot {

enum class SweepFamily { thermal_theta, squeezed_dr, squeezed_r };

struct SweepSpec {
    SweepFamily family = SweepFamily::thermal_theta;
    double nu = 1.0;
    double r = 0.0;
    double theta = 0.0;
    double dr = 0.0;
    double lo = 0.0;
    double hi = 1.0;
    double step = 0.1;
    double hbar = 1.0;
};

/// {"family":"thermal_theta","nu":1.0,"r":0.0,"dr":0.0,"lo":0.0,"hi":2.0,
///  "step":0.1,"hbar":1.0}; the swept parameter's fixed field is ignored.
/// Throws Error unless lo < hi and step > 0.
SweepSpec sweep_spec_from_json_text(const std::string& text);
SweepSpec sweep_spec_from_file(const std::string& path);

struct SweepRow {
    double sweep_var = 0.0;
    DistanceReport report;
    double weighted_bures = 0.0;  // (nu_A + nu_B)/2 * bures^2
};

/// One row per grid point lo, lo+step, ..., <= hi. Each grid value is
/// canonicalized through format_sig12 before use, so recomputing a parsed
/// CSV reproduces it byte for byte.
std::vector<SweepRow> compute_sweep(const SweepSpec& spec);

std::string csv_header();
void write_csv(std::ostream& out, const std::vector<SweepRow>& rows);
std::vector<SweepRow> read_csv(std::istream& in);

}  // namespace gaussot
