#include "sram9t/analog/margins.hpp"

#include <algorithm>
#include <cmath>

#include "sram9t/analog/transient.hpp"
#include "sram9t/error.hpp"

namespace sram9t::analog {

namespace {

BiasMode bias_of(SnmMode mode) {
    return mode == SnmMode::Hold ? BiasMode::Hold : BiasMode::Read;
}

// Piecewise-linear interpolation over points sorted by ascending key.
double interp(const std::vector<XyPoint>& pts, double key) {
    auto it = std::lower_bound(pts.begin(), pts.end(), key,
                               [](const XyPoint& p, double k) { return p.x < k; });
    if (it == pts.begin()) return pts.front().y;
    if (it == pts.end()) return pts.back().y;
    const XyPoint& b = *it;
    const XyPoint& a = *(it - 1);
    const double span = b.x - a.x;
    if (span <= 0.0) return a.y;
    return a.y + (b.y - a.y) * (key - a.x) / span;
}

} // namespace

Butterfly butterfly_curves(CellTopology topology, const DeviceParams& params, SnmMode mode,
                           int grid) {
    const VtcCurve c1 =
        solve_vtc(topology, params, StorageNode::Vx, 0.0, params.vdd, grid, bias_of(mode));
    const VtcCurve c2 =
        solve_vtc(topology, params, StorageNode::Vy, 0.0, params.vdd, grid, bias_of(mode));
    Butterfly out;
    out.branch1.reserve(c1.points.size());
    out.branch2.reserve(c2.points.size());
    for (const VtcPoint& p : c1.points) out.branch1.push_back({p.vin, p.vout});
    for (const VtcPoint& p : c2.points) out.branch2.push_back({p.vout, p.vin});
    return out;
}

double snm_from_curves(const Butterfly& curves) {
    constexpr double kInvSqrt2 = 0.70710678118654752440;
    // (v, u) samples per branch; v is strictly monotone along each branch.
    auto rotated = [](const std::vector<XyPoint>& pts) {
        std::vector<XyPoint> vu;
        vu.reserve(pts.size());
        for (const XyPoint& p : pts)
            vu.push_back({(p.y - p.x) * kInvSqrt2, (p.x + p.y) * kInvSqrt2});
        std::sort(vu.begin(), vu.end(), [](const XyPoint& a, const XyPoint& b) { return a.x < b.x; });
        return vu;
    };
    const std::vector<XyPoint> r1 = rotated(curves.branch1);
    const std::vector<XyPoint> r2 = rotated(curves.branch2);

    const double v_lo = std::max(r1.front().x, r2.front().x);
    const double v_hi = std::min(r1.back().x, r2.back().x);
    if (!(v_hi > v_lo)) throw numeric_error("butterfly branches do not overlap");

    const int samples = 4001;
    double sep_pos = 0.0, sep_neg = 0.0;
    for (int i = 0; i < samples; ++i) {
        const double v = v_lo + (v_hi - v_lo) * static_cast<double>(i) /
                                    static_cast<double>(samples - 1);
        const double d = interp(r1, v) - interp(r2, v);
        sep_pos = std::max(sep_pos, d);
        sep_neg = std::max(sep_neg, -d);
    }
    return std::min(sep_pos, sep_neg) * kInvSqrt2;
}

double compute_snm(CellTopology topology, const DeviceParams& params, SnmMode mode,
                   int grid) {
    return snm_from_curves(butterfly_curves(topology, params, mode, grid));
}

double compute_wnm(CellTopology topology, const DeviceParams& params) {
    params.validate();
    // Start from the cell storing a one and lower BL with BLB at vdd; the
    // settle at each candidate runs the transient to steady state.
    auto flips_at = [&](double bl_v) {
        NodeState init = rail_state(params, Logic::L1);
        const LineBias bias = LineBias::write(params, bl_v, params.vdd);
        const TransientResult r = integrate_cell(topology, params, init, bias, 2.0e-8,
                                                 1.0e-12, FlipSense::None, false);
        return r.final_state.vx < 0.5 * params.vdd;
    };

    if (!flips_at(0.0))
        throw numeric_error("write sweep found no flipping bitline voltage");
    if (flips_at(params.vdd)) return params.vdd;

    double lo = 0.0, hi = params.vdd;  // flips at lo, holds at hi
    while (hi - lo > 5e-4) {
        const double mid = 0.5 * (lo + hi);
        if (flips_at(mid))
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace sram9t::analog
