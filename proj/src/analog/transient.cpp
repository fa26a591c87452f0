#include "sram9t/analog/transient.hpp"

#include <cmath>
#include <cstdio>

#include "sram9t/error.hpp"

namespace sram9t::analog {

namespace {

struct Deriv {
    double vx, vy, n, mid;
};

Deriv node_derivatives(CellTopology topology, const DeviceParams& params,
                       const NodeState& s, const LineBias& bias) {
    NodeVoltages nv{s.vx, s.vy, s.n, s.mid};
    Deriv d;
    d.vx = current_into(topology, Node::Vx, nv, bias, params) / params.c_vx;
    d.vy = current_into(topology, Node::Vy, nv, bias, params) / params.c_vy;
    d.n = current_into(topology, Node::N, nv, bias, params) / params.c_n;
    d.mid = current_into(topology, Node::Mid, nv, bias, params) / params.c_mid;
    return d;
}

NodeState advance(const NodeState& s, const Deriv& d, double h) {
    return NodeState{s.vx + h * d.vx, s.vy + h * d.vy, s.n + h * d.n, s.mid + h * d.mid};
}

bool in_window(const NodeState& s, double lo, double hi) {
    for (double v : {s.vx, s.vy, s.n, s.mid})
        if (!std::isfinite(v) || v < lo || v > hi) return false;
    return true;
}

} // namespace

TransientResult integrate_cell(CellTopology topology, const DeviceParams& params,
                               NodeState init, const LineBias& bias, double duration,
                               double dt, FlipSense sense, bool record) {
    params.validate();
    if (!(dt > 0.0)) throw protocol_error("transient: dt must be positive");
    if (!(duration >= dt)) throw protocol_error("transient: duration shorter than one step");

    // Blow-up window: the supply rails and pulse level, stretched to admit
    // initial conditions handed over from a previous phase.
    double window_lo = std::min(0.0, bias.blr);
    double window_hi = params.vdd;
    for (double v : {init.vx, init.vy, init.n, init.mid}) {
        window_lo = std::min(window_lo, v);
        window_hi = std::max(window_hi, v);
    }
    window_lo -= 0.5;
    window_hi += 0.5;
    const double half = 0.5 * params.vdd;

    TransientResult result;
    const auto steps = static_cast<std::size_t>(std::llround(duration / dt));
    if (record) {
        result.time.reserve(steps + 1);
        result.vx.reserve(steps + 1);
        result.vy.reserve(steps + 1);
        result.n.reserve(steps + 1);
        result.mid.reserve(steps + 1);
    }

    NodeState s = init;
    double crossing = -1.0;
    auto push = [&](double t, const NodeState& v) {
        if (!record) return;
        result.time.push_back(t);
        result.vx.push_back(v.vx);
        result.vy.push_back(v.vy);
        result.n.push_back(v.n);
        result.mid.push_back(v.mid);
    };
    push(0.0, s);

    for (std::size_t i = 0; i < steps; ++i) {
        const double t = static_cast<double>(i) * dt;
        const Deriv k1 = node_derivatives(topology, params, s, bias);
        const Deriv k2 = node_derivatives(topology, params, advance(s, k1, 0.5 * dt), bias);
        const Deriv k3 = node_derivatives(topology, params, advance(s, k2, 0.5 * dt), bias);
        const Deriv k4 = node_derivatives(topology, params, advance(s, k3, dt), bias);
        NodeState next;
        next.vx = s.vx + dt / 6.0 * (k1.vx + 2.0 * k2.vx + 2.0 * k3.vx + k4.vx);
        next.vy = s.vy + dt / 6.0 * (k1.vy + 2.0 * k2.vy + 2.0 * k3.vy + k4.vy);
        next.n = s.n + dt / 6.0 * (k1.n + 2.0 * k2.n + 2.0 * k3.n + k4.n);
        next.mid = s.mid + dt / 6.0 * (k1.mid + 2.0 * k2.mid + 2.0 * k3.mid + k4.mid);

        if (!in_window(next, window_lo, window_hi))
            throw numeric_error("transient integration left the physical window; reduce dt");

        if (crossing < 0.0) {
            if (sense == FlipSense::FallingVx && s.vx > half && next.vx <= half)
                crossing = t + dt * (s.vx - half) / (s.vx - next.vx);
            else if (sense == FlipSense::RisingVx && s.vx < half && next.vx >= half)
                crossing = t + dt * (half - s.vx) / (next.vx - s.vx);
        }
        s = next;
        push(t + dt, s);
    }

    result.final_state = s;
    if (sense == FlipSense::FallingVx)
        result.flip_detected = crossing >= 0.0 && s.vx < 0.1 * params.vdd;
    else if (sense == FlipSense::RisingVx)
        result.flip_detected = crossing >= 0.0 && s.vx > 0.9 * params.vdd;
    if (result.flip_detected) result.flip_time = crossing;
    return result;
}

NodeState rail_state(const DeviceParams& params, Logic a) {
    if (!is_bit(a)) throw protocol_error("rail_state: operand must be 0 or 1");
    NodeState s;
    s.vx = a == Logic::L1 ? params.vdd : 0.0;
    s.vy = params.vdd - s.vx;
    s.n = s.vy;
    s.mid = 0.0;
    return s;
}

NodeState post_step1_logic_state(const DeviceParams& params, Logic a, Logic b) {
    if (!is_bit(a) || !is_bit(b)) throw protocol_error("operands must be 0 or 1");
    NodeState s;
    const bool vx_high = b == Logic::L0 && a == Logic::L1;
    s.vx = vx_high ? params.vdd : 0.0;
    s.vy = params.vdd - s.vx;
    s.n = a == Logic::L1 ? 0.0 : params.vdd;
    s.mid = 0.0;
    return s;
}

TransientResult simulate_step1_transient(const DeviceParams& params, Logic a,
                                         double blr_voltage, Logic dl, double duration,
                                         double dt) {
    if (!is_bit(a) || !is_bit(dl)) throw protocol_error("operands must be 0 or 1");
    if (blr_voltage > 0.0)
        throw protocol_error("step 1 drives BLR at a non-positive voltage");
    const LineBias bias = LineBias::xor_step1(params, blr_voltage, dl == Logic::L1);
    const NodeState init = rail_state(params, a);
    // Only the stored-one case is asked to flip; detection still runs for
    // the others so no-flip cases report flip_detected = false.
    return integrate_cell(CellTopology::Cell9T, params, init, bias, duration, dt,
                          FlipSense::FallingVx, true);
}

TransientResult simulate_step2_transient(const DeviceParams& params, NodeState post_step1,
                                         Logic dl, double duration, double dt) {
    if (!is_bit(dl)) throw protocol_error("operands must be 0 or 1");
    const LineBias bias = LineBias::xor_step2(params, dl == Logic::L1);
    return integrate_cell(CellTopology::Cell9T, params, post_step1, bias, duration, dt,
                          FlipSense::RisingVx, true);
}

std::string transient_csv(const TransientResult& result) {
    std::string out = "time_s,vx_v,vy_v,n_v\n";
    char line[128];
    for (std::size_t i = 0; i < result.time.size(); ++i) {
        std::snprintf(line, sizeof(line), "%.9e,%.9e,%.9e,%.9e\n", result.time[i],
                      result.vx[i], result.vy[i], result.n[i]);
        out += line;
    }
    return out;
}

} // namespace sram9t::analog
