#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "sram9t/analog/netlist.hpp"

namespace sram9t::analog {

struct McTrial {
    bool success;
    double value;  // flip time or margin, depending on the operation
};

struct McSummary {
    int trials = 0;
    int successes = 0;
    double success_rate = 0.0;
    // Quantiles over successful trials; zero when no trial succeeded.
    double value_min = 0.0;
    double value_median = 0.0;
    double value_p90 = 0.0;
    double value_max = 0.0;
    std::vector<McTrial> samples;
};

using TrialOp = std::function<McTrial(const DeviceParams&)>;

// Runs `op` against per-trial parameter sets whose device thresholds are
// perturbed i.i.d. Normal(0, sigma_vt). Each trial's random stream derives
// from (seed, trial index), so results are bit-identical for a given seed
// however the trials are scheduled.
McSummary monte_carlo(CellTopology topology, const DeviceParams& base, int trials,
                      double sigma_vt, std::uint64_t seed, const TrialOp& op);

// Step-1 flip experiment at the given BLR level, operands both one.
McSummary monte_carlo_step1(const DeviceParams& base, double blr_voltage, int trials,
                            double sigma_vt, std::uint64_t seed);

// Step-2 flip experiment, operand A zero and B one.
McSummary monte_carlo_step2(const DeviceParams& base, int trials, double sigma_vt,
                            std::uint64_t seed);

// CSV with header trial,success,value
std::string mc_csv(const McSummary& summary);

} // namespace sram9t::analog
