#include "sram9t/analog/device.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "sram9t/error.hpp"

namespace sram9t::analog {

void DeviceParams::validate() const {
    if (!(vdd > 0.0)) throw protocol_error("params: vdd must be positive");
    if (!(std::fabs(vt_n) < vdd) || !(std::fabs(vt_p) < vdd))
        throw protocol_error("params: threshold magnitudes must stay below vdd");
    if (!(k_n > 0.0) || !(k_p > 0.0)) throw protocol_error("params: k must be positive");
    for (double w : width)
        if (!(w > 0.0)) throw protocol_error("params: widths must be positive");
    for (double c : {c_vx, c_vy, c_n, c_mid})
        if (!(c > 0.0)) throw protocol_error("params: capacitances must be positive");
    if (sigma_vt < 0.0) throw protocol_error("params: sigma_vt must be non-negative");
}

double square_law_current(double vgs, double vds, double k, double vt, double lambda) {
    if (vds < 0.0) {
        // Conduction is symmetric; reference the true source terminal.
        return -square_law_current(vgs - vds, -vds, k, vt, lambda);
    }
    const double vov = vgs - vt;
    if (vov <= 0.0) return 0.0;
    const double scale = 1.0 + lambda * vds;
    if (vds < vov) return k * (vov * vds - 0.5 * vds * vds) * scale;
    return 0.5 * k * vov * vov * scale;
}

double mosfet_current(double vgs, double vds, const DeviceParams& params, Channel kind) {
    if (!std::isfinite(vgs) || !std::isfinite(vds))
        throw protocol_error("mosfet_current: voltages must be finite");
    if (kind == Channel::Nmos)
        return square_law_current(vgs, vds, params.k_n, params.vt_n, params.lambda_n);
    // PMOS mirrors the NMOS equations with both polarities reversed.
    return -square_law_current(-vgs, -vds, params.k_p, params.vt_p, params.lambda_p);
}

namespace {

const std::map<std::string, double DeviceParams::*>& scalar_keys() {
    static const std::map<std::string, double DeviceParams::*> keys = {
        {"vdd", &DeviceParams::vdd},       {"vt_n", &DeviceParams::vt_n},
        {"vt_p", &DeviceParams::vt_p},     {"k_n", &DeviceParams::k_n},
        {"k_p", &DeviceParams::k_p},       {"lambda_n", &DeviceParams::lambda_n},
        {"lambda_p", &DeviceParams::lambda_p}, {"c_vx", &DeviceParams::c_vx},
        {"c_vy", &DeviceParams::c_vy},     {"c_n", &DeviceParams::c_n},
        {"c_mid", &DeviceParams::c_mid},   {"sigma_vt", &DeviceParams::sigma_vt},
    };
    return keys;
}

} // namespace

DeviceParams parse_params(const std::string& text) {
    DeviceParams params;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::string token;
        if (!(fields >> token)) continue;
        const auto eq = token.find('=');
        std::string key, value;
        if (eq != std::string::npos) {
            key = token.substr(0, eq);
            value = token.substr(eq + 1);
        } else {
            key = token;
            std::string rest;
            if (fields >> rest && rest.size() > 1 && rest[0] == '=')
                value = rest.substr(1);
            else if (rest == "=" && fields >> rest)
                value = rest;
        }
        if (key.empty() || value.empty())
            throw parse_error("params line " + std::to_string(line_no) + ": expected key=value");
        double parsed = 0.0;
        try {
            std::size_t used = 0;
            parsed = std::stod(value, &used);
            if (used != value.size()) throw std::invalid_argument(value);
        } catch (const std::exception&) {
            throw parse_error("params line " + std::to_string(line_no) + ": bad number '" +
                              value + "'");
        }
        if (auto it = scalar_keys().find(key); it != scalar_keys().end()) {
            params.*(it->second) = parsed;
        } else if (key.size() == 2 && key[0] == 'm' && key[1] >= '1' && key[1] <= '9') {
            params.width[static_cast<std::size_t>(key[1] - '1')] = parsed;
        } else {
            throw parse_error("params line " + std::to_string(line_no) + ": unknown key '" +
                              key + "'");
        }
    }
    params.validate();
    return params;
}

DeviceParams load_params(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open parameter file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_params(buf.str());
}

std::string format_params(const DeviceParams& params) {
    std::string out;
    char line[96];
    for (const auto& [key, member] : scalar_keys()) {
        std::snprintf(line, sizeof(line), "%s=%.9g\n", key.c_str(), params.*member);
        out += line;
    }
    for (std::size_t i = 0; i < params.width.size(); ++i) {
        std::snprintf(line, sizeof(line), "m%zu=%.9g\n", i + 1, params.width[i]);
        out += line;
    }
    return out;
}

void save_params(const DeviceParams& params, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw parse_error("cannot open parameter file '" + path + "' for writing");
    out << format_params(params);
}

} // namespace sram9t::analog
