#pragma once

#include <cstdint>
#include <span>

#include "sram9t/analog/device.hpp"

namespace sram9t::analog {

enum class CellTopology : std::uint8_t { Cell6T, Cell9T };

// Internal (capacitive) nodes of the cell. Mid is the series point between
// the two BLR-path devices; it is absent from the 6T cell and simply idle
// there.
enum class Node : std::uint8_t { Vx, Vy, N, Mid };

// Any terminal a cell device can touch.
enum class Terminal : std::uint8_t { Vx, Vy, N, Mid, Vdd, Gnd, Wl1, Wl2, Dl, Blr, Bl, Blb };

struct NodeVoltages {
    double vx = 0.0;
    double vy = 0.0;
    double n = 0.0;
    double mid = 0.0;

    double get(Node node) const;
    void set(Node node, double v);
};

// Voltages driven onto the shared lines during a phase. Bitlines are modeled
// as ideal sources; a precharged line is simply held at vdd, which draws no
// current whenever its access device is off.
struct LineBias {
    double wl1 = 0.0;
    double wl2 = 0.0;
    double dl = 0.0;
    double blr = 0.0;
    double bl = 0.0;
    double blb = 0.0;

    static LineBias hold(const DeviceParams& p);
    static LineBias read(const DeviceParams& p);
    static LineBias write(const DeviceParams& p, double bl_v, double blb_v);
    static LineBias xor_step1(const DeviceParams& p, double blr_v, bool dl_high);
    static LineBias xor_step2(const DeviceParams& p, bool dl_high);
};

struct CellDevice {
    int index;  // 0-based position in DeviceParams::width / vt_shift
    Channel type;
    Terminal gate;
    Terminal a;
    Terminal b;
};

// The two hard-coded topologies. The 9T cell is the 6T core with the direct
// BLB access replaced by the series sampling path (M9 then M2 through node
// N) plus the BLR pair M7/M8 hanging off Vx.
std::span<const CellDevice> devices_of(CellTopology topology);
int device_count(CellTopology topology);

double terminal_voltage(Terminal t, const NodeVoltages& nv, const LineBias& bias,
                        const DeviceParams& params);

// Channel current flowing from terminal a to terminal b of one device,
// width-scaled, with the device's Monte Carlo threshold shift applied.
double device_current_ab(const CellDevice& dev, const NodeVoltages& nv,
                         const LineBias& bias, const DeviceParams& params);

// Sum of device currents flowing into an internal node.
double current_into(CellTopology topology, Node node, const NodeVoltages& nv,
                    const LineBias& bias, const DeviceParams& params);

// Equilibrium voltage of one internal node with every other voltage held
// fixed. current_into is monotone non-increasing in the node voltage, so a
// bracketed bisection always lands on a KCL-consistent point.
double solve_internal_node(CellTopology topology, Node node, const NodeVoltages& nv,
                           const LineBias& bias, const DeviceParams& params);

} // namespace sram9t::analog
