#pragma once

#include <utility>
#include <vector>

#include "sram9t/analog/dc.hpp"

namespace sram9t::analog {

enum class SnmMode : std::uint8_t { Hold, Read };

struct XyPoint {
    double x;
    double y;
};

// Both butterfly branches in the (Vx, Vy) plane: branch one is the inverter
// driven by Vx, branch two the inverter driven by Vy with its axes swapped.
struct Butterfly {
    std::vector<XyPoint> branch1;
    std::vector<XyPoint> branch2;
};

Butterfly butterfly_curves(CellTopology topology, const DeviceParams& params, SnmMode mode,
                           int grid = 401);

// Side of the largest axis-aligned square between the two lobes, found in
// the 45-degree rotated frame: along each branch the rotated ordinate
// v=(y-x)/sqrt(2) is strictly monotone, so each branch is a single-valued
// u(v) and the square side is the peak |u1-u2| separation per lobe divided
// by sqrt(2). The reported margin is the smaller lobe's square.
double snm_from_curves(const Butterfly& curves);

double compute_snm(CellTopology topology, const DeviceParams& params, SnmMode mode,
                   int grid = 401);

// Write margin by bitline sweep: with both word lines high and BLB held at
// vdd, the swept bitline is lowered until the cell storing a one flips. The
// returned value is that trip voltage; the sweep starts at vdd, so the
// margin reads as the swing available below the supply. Throws numeric_error
// when no bitline level flips the cell.
double compute_wnm(CellTopology topology, const DeviceParams& params);

} // namespace sram9t::analog
