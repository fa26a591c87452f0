#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sram9t/analog/netlist.hpp"
#include "sram9t/logic.hpp"

namespace sram9t::analog {

struct NodeState {
    double vx = 0.0;
    double vy = 0.0;
    double n = 0.0;
    double mid = 0.0;
};

// Which Vx excursion counts as a flip: a falling flip must cross vdd/2
// downward and settle below 0.1*vdd, a rising flip crosses upward and
// settles above 0.9*vdd. Crossing times are linearly interpolated between
// integration samples.
enum class FlipSense : std::uint8_t { FallingVx, RisingVx, None };

struct TransientResult {
    std::vector<double> time;
    std::vector<double> vx;
    std::vector<double> vy;
    std::vector<double> n;
    std::vector<double> mid;
    bool flip_detected = false;
    std::optional<double> flip_time;
    NodeState final_state;
};

// Fixed-step RK4 over the cell's nodal ODEs with the lines held at the phase
// values. Throws numeric_error if the state leaves the physical window
// (integration blow-up; retry with a smaller dt).
TransientResult integrate_cell(CellTopology topology, const DeviceParams& params,
                               NodeState init, const LineBias& bias, double duration,
                               double dt, FlipSense sense, bool record = true);

// Node voltages for a settled cell storing `a`, dynamic node tracking vy.
NodeState rail_state(const DeviceParams& params, Logic a);

// Logical post-step-1 state at the rails for operands (a, b): Vx reset on
// b=1 columns, N holding NOT a.
NodeState post_step1_logic_state(const DeviceParams& params, Logic a, Logic b);

// Step 1 of the two-step sequence: word lines low, DL at the operand level,
// BLR driven at blr_voltage (<= 0). Initial state is the settled cell with
// node N freshly sampled.
TransientResult simulate_step1_transient(const DeviceParams& params, Logic a,
                                         double blr_voltage, Logic dl,
                                         double duration = 2.0e-8, double dt = 1.0e-12);

// Step 2 from a supplied post-step-1 state: DL and BLR both at vdd when the
// operand is one, both grounded otherwise.
TransientResult simulate_step2_transient(const DeviceParams& params, NodeState post_step1,
                                         Logic dl, double duration = 2.0e-8,
                                         double dt = 1.0e-12);

// CSV with header time_s,vx_v,vy_v,n_v.
std::string transient_csv(const TransientResult& result);

} // namespace sram9t::analog
