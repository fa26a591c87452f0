#include "sram9t/analog/netlist.hpp"

#include <algorithm>
#include <cmath>

#include "sram9t/error.hpp"

namespace sram9t::analog {

double NodeVoltages::get(Node node) const {
    switch (node) {
        case Node::Vx: return vx;
        case Node::Vy: return vy;
        case Node::N: return n;
        case Node::Mid: return mid;
    }
    return 0.0;
}

void NodeVoltages::set(Node node, double v) {
    switch (node) {
        case Node::Vx: vx = v; return;
        case Node::Vy: vy = v; return;
        case Node::N: n = v; return;
        case Node::Mid: mid = v; return;
    }
}

LineBias LineBias::hold(const DeviceParams& p) {
    return LineBias{0.0, 0.0, 0.0, 0.0, p.vdd, p.vdd};
}

LineBias LineBias::read(const DeviceParams& p) {
    return LineBias{p.vdd, p.vdd, 0.0, 0.0, p.vdd, p.vdd};
}

LineBias LineBias::write(const DeviceParams& p, double bl_v, double blb_v) {
    return LineBias{p.vdd, p.vdd, 0.0, 0.0, bl_v, blb_v};
}

LineBias LineBias::xor_step1(const DeviceParams& p, double blr_v, bool dl_high) {
    return LineBias{0.0, 0.0, dl_high ? p.vdd : 0.0, blr_v, p.vdd, p.vdd};
}

LineBias LineBias::xor_step2(const DeviceParams& p, bool dl_high) {
    const double level = dl_high ? p.vdd : 0.0;
    return LineBias{0.0, 0.0, level, level, p.vdd, p.vdd};
}

namespace {

constexpr CellDevice k9tDevices[] = {
    {0, Channel::Nmos, Terminal::Wl1, Terminal::Bl, Terminal::Vx},    // M1
    {1, Channel::Nmos, Terminal::Wl1, Terminal::N, Terminal::Vy},     // M2
    {2, Channel::Nmos, Terminal::Vy, Terminal::Vx, Terminal::Gnd},    // M3
    {3, Channel::Nmos, Terminal::Vx, Terminal::Vy, Terminal::Gnd},    // M4
    {4, Channel::Pmos, Terminal::Vy, Terminal::Vdd, Terminal::Vx},    // M5
    {5, Channel::Pmos, Terminal::Vx, Terminal::Vdd, Terminal::Vy},    // M6
    {6, Channel::Nmos, Terminal::N, Terminal::Vx, Terminal::Mid},     // M7
    {7, Channel::Nmos, Terminal::Dl, Terminal::Mid, Terminal::Blr},   // M8
    {8, Channel::Nmos, Terminal::Wl2, Terminal::Blb, Terminal::N},    // M9
};

constexpr CellDevice k6tDevices[] = {
    {0, Channel::Nmos, Terminal::Wl1, Terminal::Bl, Terminal::Vx},    // M1
    {1, Channel::Nmos, Terminal::Wl1, Terminal::Blb, Terminal::Vy},   // M2
    {2, Channel::Nmos, Terminal::Vy, Terminal::Vx, Terminal::Gnd},    // M3
    {3, Channel::Nmos, Terminal::Vx, Terminal::Vy, Terminal::Gnd},    // M4
    {4, Channel::Pmos, Terminal::Vy, Terminal::Vdd, Terminal::Vx},    // M5
    {5, Channel::Pmos, Terminal::Vx, Terminal::Vdd, Terminal::Vy},    // M6
};

bool touches(Terminal t, Node node) {
    switch (node) {
        case Node::Vx: return t == Terminal::Vx;
        case Node::Vy: return t == Terminal::Vy;
        case Node::N: return t == Terminal::N;
        case Node::Mid: return t == Terminal::Mid;
    }
    return false;
}

} // namespace

std::span<const CellDevice> devices_of(CellTopology topology) {
    if (topology == CellTopology::Cell9T) return k9tDevices;
    return k6tDevices;
}

int device_count(CellTopology topology) {
    return topology == CellTopology::Cell9T ? 9 : 6;
}

double terminal_voltage(Terminal t, const NodeVoltages& nv, const LineBias& bias,
                        const DeviceParams& params) {
    switch (t) {
        case Terminal::Vx: return nv.vx;
        case Terminal::Vy: return nv.vy;
        case Terminal::N: return nv.n;
        case Terminal::Mid: return nv.mid;
        case Terminal::Vdd: return params.vdd;
        case Terminal::Gnd: return 0.0;
        case Terminal::Wl1: return bias.wl1;
        case Terminal::Wl2: return bias.wl2;
        case Terminal::Dl: return bias.dl;
        case Terminal::Blr: return bias.blr;
        case Terminal::Bl: return bias.bl;
        case Terminal::Blb: return bias.blb;
    }
    return 0.0;
}

double device_current_ab(const CellDevice& dev, const NodeVoltages& nv,
                         const LineBias& bias, const DeviceParams& params) {
    const double vg = terminal_voltage(dev.gate, nv, bias, params);
    const double va = terminal_voltage(dev.a, nv, bias, params);
    const double vb = terminal_voltage(dev.b, nv, bias, params);
    const double w = params.width[static_cast<std::size_t>(dev.index)];
    const double shift = params.vt_shift[static_cast<std::size_t>(dev.index)];
    if (dev.type == Channel::Nmos)
        return w * square_law_current(vg - vb, va - vb, params.k_n, params.vt_n + shift,
                                      params.lambda_n);
    // PMOS: same primitive with both polarities mirrored; conduction needs
    // the gate below the higher terminal by at least |vt_p|.
    return w * square_law_current(va - vg, va - vb, params.k_p, params.vt_p + shift,
                                  params.lambda_p);
}

double current_into(CellTopology topology, Node node, const NodeVoltages& nv,
                    const LineBias& bias, const DeviceParams& params) {
    double total = 0.0;
    for (const CellDevice& dev : devices_of(topology)) {
        if (touches(dev.b, node))
            total += device_current_ab(dev, nv, bias, params);
        else if (touches(dev.a, node))
            total -= device_current_ab(dev, nv, bias, params);
    }
    return total;
}

double solve_internal_node(CellTopology topology, Node node, const NodeVoltages& nv,
                           const LineBias& bias, const DeviceParams& params) {
    const double lo0 = std::min(0.0, bias.blr) - 1.0;
    const double hi0 = params.vdd + 1.0;
    NodeVoltages probe = nv;

    auto net = [&](double v) {
        probe.set(node, v);
        return current_into(topology, node, probe, bias, params);
    };

    double lo = lo0, hi = hi0;
    double f_lo = net(lo), f_hi = net(hi);
    if (std::fabs(f_lo) < 1e-18 && std::fabs(f_hi) < 1e-18 &&
        std::fabs(net(0.5 * (lo + hi))) < 1e-18) {
        // Node is floating (every attached device cut off); its DC value is
        // undefined and unused, return the existing value.
        return nv.get(node);
    }
    if (f_lo < 0.0) return lo;  // net current decreasing: root below bracket
    if (f_hi > 0.0) return hi;
    for (int i = 0; i < 200 && hi - lo > 1e-14; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (net(mid) >= 0.0)
            lo = mid;
        else
            hi = mid;
    }
    const double v = 0.5 * (lo + hi);
    if (std::fabs(net(v)) > 1e-12)
        throw numeric_error("internal node solve did not reach KCL tolerance");
    return v;
}

} // namespace sram9t::analog
