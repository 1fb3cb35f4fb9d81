#include "gaussot/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace gaussot {

namespace {

using nlohmann::json;

Mat2 mat2_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_array() || j[0].size() != 2 ||
        !j[1].is_array() || j[1].size() != 2)
        throw Error("state spec: \"cov\" must be a 2x2 array");
    return {j[0][0].get<double>(), j[0][1].get<double>(), j[1][0].get<double>(),
            j[1][1].get<double>()};
}

std::string mat2_to_json(const Mat2& m) {
    return "[[" + format_sig12(m.m00) + "," + format_sig12(m.m01) + "],[" +
           format_sig12(m.m10) + "," + format_sig12(m.m11) + "]]";
}

StateSpec state_spec_from_json(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "thermal") return StateSpec::thermal(j.at("nu").get<double>());
    if (kind == "squeezed_thermal")
        return StateSpec::squeezed_thermal(j.at("nu").get<double>(), j.at("r").get<double>(),
                                           j.value("phi", 0.0));
    if (kind == "explicit") {
        Vec2 d{};
        if (j.contains("displacement")) {
            const auto& jd = j.at("displacement");
            if (!jd.is_array() || jd.size() != 2)
                throw Error("state spec: \"displacement\" must be a 2-vector");
            d = {jd[0].get<double>(), jd[1].get<double>()};
        }
        return StateSpec::explicit_state(d, mat2_from_json(j.at("cov")));
    }
    throw Error("state spec: unknown kind \"" + kind + "\"");
}

}  // namespace

std::string format_sig12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

StateSpec state_spec_from_json_text(const std::string& text) {
    try {
        return state_spec_from_json(json::parse(text));
    } catch (const json::exception& e) {
        throw Error(std::string("state spec: ") + e.what());
    }
}

StateSpec state_spec_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open state file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return state_spec_from_json_text(ss.str());
}

std::string to_json(const WassersteinResult& r) {
    std::string out = "{\"d_squared\":" + format_sig12(r.d_squared) + ",\"branch\":\"" +
                      to_string(r.branch) + "\",\"x_star\":" + mat2_to_json(r.coupling.x);
    if (r.channel) {
        out += ",\"channel\":{\"u\":" + mat2_to_json(r.channel->u) +
               ",\"v\":" + mat2_to_json(r.channel->v) +
               ",\"degenerate\":" + (r.channel->degenerate ? "true" : "false") + "}";
    } else {
        out += ",\"channel\":null";
    }
    return out + "}";
}

std::string to_json(const DistanceReport& r) {
    return "{\"wasserstein2\":" + format_sig12(r.wasserstein2) +
           ",\"shifted_wasserstein2\":" + format_sig12(r.shifted_wasserstein2) +
           ",\"fidelity\":" + format_sig12(r.fidelity) + ",\"bures\":" + format_sig12(r.bures) +
           ",\"overlap\":" + format_sig12(r.overlap) +
           ",\"hilbert_schmidt\":" + format_sig12(r.hilbert_schmidt) +
           ",\"relative_entropy_ab\":" + format_sig12(r.relative_entropy_ab) +
           ",\"relative_entropy_ba\":" + format_sig12(r.relative_entropy_ba) +
           ",\"trace_lower\":" + format_sig12(r.trace_lower) +
           ",\"trace_upper\":" + format_sig12(r.trace_upper) + "}";
}

}  // namespace gaussot
