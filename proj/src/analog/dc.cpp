#include "sram9t/analog/dc.hpp"

#include <cmath>

#include "sram9t/error.hpp"

namespace sram9t::analog {

namespace {

LineBias bias_for(const DeviceParams& params, BiasMode mode) {
    return mode == BiasMode::Hold ? LineBias::hold(params) : LineBias::read(params);
}

Node output_node(StorageNode input) {
    return input == StorageNode::Vx ? Node::Vy : Node::Vx;
}

// Fills the auxiliary internal nodes consistent with the current storage
// node voltages. N depends on Vy (through M2) and the bitline; Mid depends
// on Vx and N.
void settle_aux(CellTopology topology, NodeVoltages& nv, const LineBias& bias,
                const DeviceParams& params) {
    if (topology != CellTopology::Cell9T) return;
    nv.n = solve_internal_node(topology, Node::N, nv, bias, params);
    nv.mid = solve_internal_node(topology, Node::Mid, nv, bias, params);
}

} // namespace

double solve_inverter_output(CellTopology topology, const DeviceParams& params,
                             StorageNode input, double vin, BiasMode mode) {
    params.validate();
    const LineBias bias = bias_for(params, mode);
    const Node out = output_node(input);

    NodeVoltages nv;
    nv.set(input == StorageNode::Vx ? Node::Vx : Node::Vy, vin);

    auto net = [&](double vout) {
        nv.set(out, vout);
        settle_aux(topology, nv, bias, params);
        return current_into(topology, out, nv, bias, params);
    };

    double lo = std::min(0.0, bias.blr) - 1.0;
    double hi = params.vdd + 1.0;
    if (net(lo) < 0.0 || net(hi) > 0.0)
        throw numeric_error("inverter output solve: no bracket for KCL root");
    for (int i = 0; i < 200 && hi - lo > 1e-14; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (net(mid) >= 0.0)
            lo = mid;
        else
            hi = mid;
    }
    const double vout = 0.5 * (lo + hi);
    if (std::fabs(net(vout)) > 1e-12)
        throw numeric_error("inverter output solve did not reach 1e-12 A");
    return vout;
}

VtcCurve solve_vtc(CellTopology topology, const DeviceParams& params, StorageNode input,
                   double v_lo, double v_hi, int grid, BiasMode mode) {
    if (grid < 100) throw protocol_error("VTC sweep needs at least 100 grid points");
    if (!(v_hi > v_lo)) throw protocol_error("VTC sweep range is empty");
    VtcCurve curve;
    curve.input = input;
    curve.mode = mode;
    curve.points.reserve(static_cast<std::size_t>(grid));
    for (int i = 0; i < grid; ++i) {
        const double vin = v_lo + (v_hi - v_lo) * static_cast<double>(i) /
                                      static_cast<double>(grid - 1);
        curve.points.push_back({vin, solve_inverter_output(topology, params, input, vin, mode)});
    }
    return curve;
}

double output_residual(CellTopology topology, const DeviceParams& params,
                       StorageNode input, double vin, double vout, BiasMode mode) {
    const LineBias bias = bias_for(params, mode);
    NodeVoltages nv;
    nv.set(input == StorageNode::Vx ? Node::Vx : Node::Vy, vin);
    nv.set(output_node(input), vout);
    settle_aux(topology, nv, bias, params);
    return current_into(topology, output_node(input), nv, bias, params);
}

double vtc_crossing(CellTopology topology, const DeviceParams& params, StorageNode input,
                    BiasMode mode) {
    auto excess = [&](double vin) {
        return solve_inverter_output(topology, params, input, vin, mode) - vin;
    };
    double lo = 0.0, hi = params.vdd;
    if (excess(lo) <= 0.0 || excess(hi) >= 0.0)
        throw numeric_error("VTC crossing: curve does not bracket vout == vin");
    for (int i = 0; i < 100 && hi - lo > 1e-12; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (excess(mid) > 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace sram9t::analog
