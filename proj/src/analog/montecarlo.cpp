#include "sram9t/analog/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "sram9t/analog/transient.hpp"
#include "sram9t/error.hpp"
#include "sram9t/rng.hpp"

namespace sram9t::analog {

namespace {

double quantile(const std::vector<double>& sorted, double q) {
    if (sorted.empty()) return 0.0;
    const double pos = q * static_cast<double>(sorted.size() - 1);
    const auto idx = static_cast<std::size_t>(std::llround(pos));
    return sorted[std::min(idx, sorted.size() - 1)];
}

} // namespace

McSummary monte_carlo(CellTopology topology, const DeviceParams& base, int trials,
                      double sigma_vt, std::uint64_t seed, const TrialOp& op) {
    if (trials < 1) throw protocol_error("Monte Carlo needs at least one trial");
    base.validate();
    McSummary summary;
    summary.trials = trials;
    summary.samples.reserve(static_cast<std::size_t>(trials));

    const int ndev = device_count(topology);
    std::vector<double> successes_values;
    for (int trial = 0; trial < trials; ++trial) {
        DeviceParams p = base;
        DetRng rng(mix_seed(seed, static_cast<std::uint64_t>(trial)));
        for (int d = 0; d < ndev; ++d)
            p.vt_shift[static_cast<std::size_t>(d)] = sigma_vt * rng.gaussian();
        const McTrial outcome = op(p);
        summary.samples.push_back(outcome);
        if (outcome.success) {
            ++summary.successes;
            successes_values.push_back(outcome.value);
        }
    }
    summary.success_rate =
        static_cast<double>(summary.successes) / static_cast<double>(trials);
    std::sort(successes_values.begin(), successes_values.end());
    summary.value_min = quantile(successes_values, 0.0);
    summary.value_median = quantile(successes_values, 0.5);
    summary.value_p90 = quantile(successes_values, 0.9);
    summary.value_max = quantile(successes_values, 1.0);
    return summary;
}

McSummary monte_carlo_step1(const DeviceParams& base, double blr_voltage, int trials,
                            double sigma_vt, std::uint64_t seed) {
    return monte_carlo(CellTopology::Cell9T, base, trials, sigma_vt, seed,
                       [blr_voltage](const DeviceParams& p) {
                           const TransientResult r = simulate_step1_transient(
                               p, Logic::L1, blr_voltage, Logic::L1);
                           return McTrial{r.flip_detected, r.flip_time.value_or(0.0)};
                       });
}

McSummary monte_carlo_step2(const DeviceParams& base, int trials, double sigma_vt,
                            std::uint64_t seed) {
    return monte_carlo(CellTopology::Cell9T, base, trials, sigma_vt, seed,
                       [](const DeviceParams& p) {
                           const NodeState init =
                               post_step1_logic_state(p, Logic::L0, Logic::L1);
                           const TransientResult r =
                               simulate_step2_transient(p, init, Logic::L1);
                           return McTrial{r.flip_detected, r.flip_time.value_or(0.0)};
                       });
}

std::string mc_csv(const McSummary& summary) {
    std::string out = "trial,success,value\n";
    char line[96];
    for (std::size_t i = 0; i < summary.samples.size(); ++i) {
        std::snprintf(line, sizeof(line), "%zu,%d,%.9e\n", i,
                      summary.samples[i].success ? 1 : 0, summary.samples[i].value);
        out += line;
    }
    return out;
}

} // namespace sram9t::analog
