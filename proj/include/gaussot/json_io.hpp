// JSON surfaces: state-spec ingestion and fixed 12-significant-digit
// emission of computed results.
#pragma once

#include <string>

#include "gaussot/distances.hpp"

namespace gaussot {

/// printf "%.12g" — the one formatter used for every emitted number, so
/// emitted files are reproducible byte for byte.
std::string format_sig12(double v);

/// {"kind":"thermal","nu":1.0} | {"kind":"squeezed_thermal","nu":..,"r":..,"phi":..}
/// | {"kind":"explicit","displacement":[x,y],"cov":[[..],[..]]}.
/// Throws Error on malformed input.
StateSpec state_spec_from_json_text(const std::string& text);
StateSpec state_spec_from_file(const std::string& path);

std::string to_json(const WassersteinResult& r);
std::string to_json(const DistanceReport& r);

}  // namespace gaussot
