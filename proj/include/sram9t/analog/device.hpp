#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace sram9t::analog {

enum class Channel : std::uint8_t { Nmos, Pmos };

// Square-law device and cell parameters. Transconductances are per unit
// width; the nine width multipliers index the cell transistors M1..M9:
//   M1 BL access (WL1), M2 sampling access N-Vy (WL1), M3/M4 pull-downs of
//   Vx/Vy, M5/M6 pull-ups of Vx/Vy, M7 BLR-path device gated by node N,
//   M8 BLR-path device gated by DL, M9 BLB access to N (WL2).
// The 6T baseline reuses M1..M6 with M2 as the direct BLB-Vy access.
// vt_shift carries per-device threshold perturbations for Monte Carlo runs.
struct DeviceParams {
    double vdd = 0.8;
    double vt_n = 0.3;
    double vt_p = 0.3;   // magnitude
    double k_n = 2e-4;   // A/V^2 per unit width
    double k_p = 1e-4;
    double lambda_n = 0.0;  // channel-length modulation, off by default
    double lambda_p = 0.0;
    // The core is drawn near minimum size so the 2x BLR-path pair can
    // overpower it during the conditional phases.
    std::array<double, 9> width{0.2, 0.2, 0.1, 0.6, 0.1, 0.1, 2.0, 2.0, 2.0};
    double c_vx = 1e-15;
    double c_vy = 1e-15;
    double c_n = 1e-15;
    double c_mid = 1e-15;  // internal node between M7 and M8
    double sigma_vt = 0.025;
    std::array<double, 9> vt_shift{};

    void validate() const;  // throws protocol_error on out-of-range values
};

// Drain current of a unit-width device with explicit parameters, NMOS
// convention: cutoff below threshold, triode k((vgs-vt)vds - vds^2/2),
// saturation (k/2)(vgs-vt)^2, continuous across both boundaries. Negative
// vds is handled by source/drain symmetry. lambda scales both on-regions by
// (1 + lambda*vds) so the boundary stays continuous.
double square_law_current(double vgs, double vds, double k, double vt, double lambda);

// Same with parameters picked from DeviceParams by channel type; PMOS by
// symmetry. Returns per-unit-width current, width scaling is the caller's.
double mosfet_current(double vgs, double vds, const DeviceParams& params, Channel kind);

// Flat key=value parameter files. Unknown keys are rejected; omitted keys
// keep their defaults. '#' starts a comment.
DeviceParams parse_params(const std::string& text);
DeviceParams load_params(const std::string& path);
std::string format_params(const DeviceParams& params);
void save_params(const DeviceParams& params, const std::string& path);

} // namespace sram9t::analog
