#pragma once

#include <vector>

#include "sram9t/analog/netlist.hpp"

namespace sram9t::analog {

enum class StorageNode : std::uint8_t { Vx, Vy };
enum class BiasMode : std::uint8_t { Hold, Read };

struct VtcPoint {
    double vin;
    double vout;
};

struct VtcCurve {
    StorageNode input;
    BiasMode mode;
    std::vector<VtcPoint> points;
};

// DC output of the inverter driven by `input` forced to vin, with the
// complementary storage node solved by bracketed bisection to a net node
// current below 1e-12 A. Auxiliary internal nodes (N, then the BLR-path
// midpoint) are resolved first; they are acyclic in the solve order because
// node N only gates M7.
double solve_inverter_output(CellTopology topology, const DeviceParams& params,
                             StorageNode input, double vin, BiasMode mode);

// Sweeps the input node over [v_lo, v_hi] on `grid` points (at least 100).
VtcCurve solve_vtc(CellTopology topology, const DeviceParams& params, StorageNode input,
                   double v_lo, double v_hi, int grid, BiasMode mode);

// KCL residual at the solved output point; exposed for consistency checks.
double output_residual(CellTopology topology, const DeviceParams& params,
                       StorageNode input, double vin, double vout, BiasMode mode);

// Input voltage where the transfer curve crosses vout == vin, located by
// bisection on the solved output. The crossing of a monotone non-increasing
// inverter VTC is unique.
double vtc_crossing(CellTopology topology, const DeviceParams& params, StorageNode input,
                    BiasMode mode);

} // namespace sram9t::analog
