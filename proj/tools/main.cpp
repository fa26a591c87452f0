#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sram9t/aging.hpp"
#include "sram9t/analog/margins.hpp"
#include "sram9t/analog/montecarlo.hpp"
#include "sram9t/analog/transient.hpp"
#include "sram9t/array.hpp"
#include "sram9t/error.hpp"
#include "sram9t/rng.hpp"
#include "sram9t/trace.hpp"
#include "sram9t/workloads.hpp"

namespace {

using namespace sram9t;
using namespace sram9t::analog;

constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitProtocol = 3;
constexpr int kExitNumeric = 4;

void write_file(const std::string& path, const std::string& body) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw parse_error("cannot open '" + path + "' for writing");
    out << body;
}

DeviceParams params_from(const std::string& params_path) {
    if (!params_path.empty()) return load_params(params_path);
    if (const char* env = std::getenv("SRAM9T_PARAMS"); env && *env)
        return load_params(env);
    return DeviceParams{};
}

CellTopology topology_from(const std::string& cell) {
    if (cell == "6t") return CellTopology::Cell6T;
    if (cell == "9t") return CellTopology::Cell9T;
    throw parse_error("unknown cell '" + cell + "' (expected 6t or 9t)");
}

std::vector<Logic> random_bits(DetRng& rng, std::size_t n) {
    std::vector<Logic> bits(n);
    for (Logic& b : bits) b = rng.logic_bit();
    return bits;
}

std::string bits_string(const std::vector<Logic>& bits) {
    std::string s;
    for (Logic b : bits) s += logic_to_char(b);
    return s;
}

// ---- subcommand bodies ----------------------------------------------------

int cmd_run(const std::string& path) {
    trace::run_trace_file(path, std::cout);
    return 0;
}

int cmd_xor_demo(std::size_t rows, std::size_t cols, std::uint64_t seed) {
    std::printf("two-step XOR walkthrough (single cell)\n");
    std::printf("%-5s %-3s %-3s | %-6s | %-10s | %-10s | %s\n", "case", "A", "B", "node N",
                "initial", "after rst", "after flip");
    int case_no = 1;
    for (Logic a : {Logic::L0, Logic::L1})
        for (Logic b : {Logic::L0, Logic::L1}) {
            CellState s = init_cell(a);
            s = phase_sample_n(s);
            const char n_char = logic_to_char(s.n.read());
            CellState after_reset = phase_conditional_reset(s, b);
            CellState after_flip = phase_conditional_flip(after_reset, b);
            std::printf("%-5d %-3c %-3c | %-6c | vx=%c vy=%c | vx=%c vy=%c | vx=%c vy=%c\n",
                        case_no++, logic_to_char(a), logic_to_char(b), n_char,
                        logic_to_char(s.vx), logic_to_char(s.vy),
                        logic_to_char(after_reset.vx), logic_to_char(after_reset.vy),
                        logic_to_char(after_flip.vx), logic_to_char(after_flip.vy));
        }

    DetRng rng(seed);
    Array array(rows, cols);
    std::vector<std::vector<Logic>> a_bits(rows);
    for (std::size_t r = 0; r < rows; ++r) {
        a_bits[r] = random_bits(rng, cols);
        array.write_row(r, a_bits[r]);
    }
    const std::vector<Logic> b_bits = random_bits(rng, cols);
    const std::uint64_t before = array.phase_count();
    array.xor_parallel(RowMask::all(rows), b_bits);
    bool match = true;
    for (std::size_t r = 0; r < rows; ++r) {
        const auto got = array.read_row(r);
        for (std::size_t c = 0; c < cols; ++c)
            if (got[c] != logic_xor(a_bits[r][c], b_bits[c])) match = false;
    }
    std::printf("array %zux%zu whole-array XOR: phases=%llu oracle match: %s\n", rows, cols,
                static_cast<unsigned long long>(array.phase_count() - before),
                match ? "true" : "false");
    return match ? 0 : kExitProtocol;
}

int cmd_bnn_demo(std::size_t rows, std::size_t cols, std::uint64_t seed,
                 const std::string& weights_path, const std::string& activations_path,
                 const std::string& out_path) {
    DetRng rng(seed);
    std::vector<std::vector<Logic>> weights;
    std::vector<Logic> activations;
    if (!weights_path.empty()) {
        const Array image = Array::load_text(weights_path);
        rows = image.rows();
        cols = image.cols();
        for (std::size_t r = 0; r < rows; ++r) weights.push_back(image.read_row(r));
    } else {
        weights.resize(rows);
        for (auto& row : weights) row = random_bits(rng, cols);
    }
    if (!activations_path.empty()) {
        const Array image = Array::load_text(activations_path);
        if (image.rows() != 1 || image.cols() != cols)
            throw parse_error("activations image must be one row of matching width");
        activations = image.read_row(0);
    } else {
        activations = random_bits(rng, cols);
    }

    const BnnLayerResult result = bnn_layer_forward(weights, activations);

    bool match = true;
    std::string csv = "row,pre_activation,output\n";
    char line[64];
    for (std::size_t r = 0; r < rows; ++r) {
        int dot = 0;
        for (std::size_t c = 0; c < cols; ++c) {
            const int w = weights[r][c] == Logic::L1 ? 1 : -1;
            const int a = activations[c] == Logic::L1 ? 1 : -1;
            dot += w * a;
        }
        if (dot != result.pre_activations[r]) match = false;
        std::snprintf(line, sizeof(line), "%zu,%d,%d\n", r, result.pre_activations[r],
                      result.outputs[r]);
        csv += line;
    }
    if (!out_path.empty()) write_file(out_path, csv);
    std::printf("bnn layer %zux%zu: xor phases=%llu oracle match: %s\n", rows, cols,
                static_cast<unsigned long long>(result.xor_phase_count),
                match ? "true" : "false");
    return match ? 0 : kExitProtocol;
}

int cmd_otp_demo(std::size_t bytes, std::size_t cols, std::uint64_t seed,
                 const std::string& out_path) {
    DetRng rng(seed);
    const std::size_t nbits = bytes * 8;
    const std::vector<Logic> message = random_bits(rng, nbits);
    const std::vector<Logic> key = random_bits(rng, nbits);

    const std::vector<Logic> cipher = otp_encrypt(message, key, cols);
    const std::vector<Logic> recovered = otp_decrypt(cipher, key, cols);

    bool oracle = true;
    for (std::size_t i = 0; i < nbits; ++i)
        if (cipher[i] != logic_xor(message[i], key[i])) oracle = false;
    const bool roundtrip = recovered == message;

    if (!out_path.empty()) write_file(out_path, bits_string(cipher) + "\n");
    std::printf("otp %zu bytes: roundtrip: %s oracle match: %s\n", bytes,
                roundtrip ? "true" : "false", oracle ? "true" : "false");
    return (roundtrip && oracle) ? 0 : kExitProtocol;
}

int cmd_snm(const std::string& cell, const std::string& mode, const std::string& params_path,
            int grid, const std::string& out_path) {
    const DeviceParams params = params_from(params_path);
    const std::vector<std::string> cells =
        cell == "both" ? std::vector<std::string>{"6t", "9t"} : std::vector<std::string>{cell};
    const std::vector<std::string> modes =
        mode == "both" ? std::vector<std::string>{"hold", "read"}
                       : std::vector<std::string>{mode};
    std::string csv = "mode,cell,value_v\n";
    char line[64];
    for (const std::string& m : modes)
        for (const std::string& c : cells) {
            const SnmMode snm_mode = m == "hold" ? SnmMode::Hold : SnmMode::Read;
            const double value = compute_snm(topology_from(c), params, snm_mode, grid);
            std::snprintf(line, sizeof(line), "%s,%s,%.9e\n", m.c_str(), c.c_str(), value);
            csv += line;
            std::printf("snm %s %s: %.6f V\n", m.c_str(), c.c_str(), value);
        }
    if (!out_path.empty()) write_file(out_path, csv);
    return 0;
}

int cmd_wnm(const std::string& cell, const std::string& params_path,
            const std::string& out_path) {
    const DeviceParams params = params_from(params_path);
    const std::vector<std::string> cells =
        cell == "both" ? std::vector<std::string>{"6t", "9t"} : std::vector<std::string>{cell};
    std::string csv = "mode,cell,value_v\n";
    char line[64];
    for (const std::string& c : cells) {
        const double value = compute_wnm(topology_from(c), params);
        std::snprintf(line, sizeof(line), "write,%s,%.9e\n", c.c_str(), value);
        csv += line;
        std::printf("wnm %s: %.6f V\n", c.c_str(), value);
    }
    if (!out_path.empty()) write_file(out_path, csv);
    return 0;
}

int cmd_step1(int a, int b, double blr, double duration, double dt,
              const std::string& params_path, const std::string& out_path) {
    const DeviceParams params = params_from(params_path);
    const TransientResult r = simulate_step1_transient(
        params, logic_from_bool(a != 0), blr, logic_from_bool(b != 0), duration, dt);
    if (!out_path.empty()) write_file(out_path, transient_csv(r));
    std::printf("step1 A=%d B=%d blr=%.3f: flip=%s", a, b, blr,
                r.flip_detected ? "true" : "false");
    if (r.flip_time) std::printf(" flip_time=%.6e s", *r.flip_time);
    std::printf(" final vx=%.6f V\n", r.final_state.vx);
    return 0;
}

int cmd_step2(int a, int b, double duration, double dt, const std::string& params_path,
              const std::string& out_path) {
    const DeviceParams params = params_from(params_path);
    const NodeState init =
        post_step1_logic_state(params, logic_from_bool(a != 0), logic_from_bool(b != 0));
    const TransientResult r =
        simulate_step2_transient(params, init, logic_from_bool(b != 0), duration, dt);
    if (!out_path.empty()) write_file(out_path, transient_csv(r));
    std::printf("step2 A=%d B=%d: flip=%s", a, b, r.flip_detected ? "true" : "false");
    if (r.flip_time) std::printf(" flip_time=%.6e s", *r.flip_time);
    std::printf(" final vx=%.6f V\n", r.final_state.vx);
    return 0;
}

int cmd_mc(const std::string& experiment, int trials, double sigma, std::uint64_t seed,
           double blr, const std::string& params_path, const std::string& out_path) {
    const DeviceParams params = params_from(params_path);
    McSummary summary;
    if (experiment == "step1")
        summary = monte_carlo_step1(params, blr, trials, sigma, seed);
    else
        summary = monte_carlo_step2(params, trials, sigma, seed);
    if (!out_path.empty()) write_file(out_path, mc_csv(summary));
    std::printf("mc %s trials=%d sigma=%.4f: success rate %.4f, flip time "
                "min/median/p90/max %.4e/%.4e/%.4e/%.4e s\n",
                experiment.c_str(), trials, sigma, summary.success_rate, summary.value_min,
                summary.value_median, summary.value_p90, summary.value_max);
    return 0;
}

int cmd_aging(std::size_t rows, std::size_t cols, std::uint64_t seed, double total_time,
              double toggle_period, bool no_toggle, const std::string& out_path) {
    DetRng rng(seed);
    Array array(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) array.write_row(r, random_bits(rng, cols));
    std::optional<double> period;
    if (!no_toggle) period = toggle_period;
    const ImprintReport report = run_hold_schedule(array, total_time, period);
    if (!out_path.empty()) write_file(out_path, imprint_report_csv(report));
    char period_str[32];
    if (no_toggle)
        std::snprintf(period_str, sizeof(period_str), "none");
    else
        std::snprintf(period_str, sizeof(period_str), "%.3g", toggle_period);
    std::printf("aging %zux%zu T=%.3g period=%s: toggles=%llu max asymmetry %.6f mean %.6f\n",
                rows, cols, total_time, period_str,
                static_cast<unsigned long long>(report.toggle_count), report.max_asymmetry,
                report.mean_asymmetry);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"9T XOR-SRAM behavioral and compact-analog simulator"};
    app.require_subcommand(1);

    // run
    std::string trace_path;
    auto* run = app.add_subcommand("run", "execute a trace file against an array");
    run->add_option("trace", trace_path, "trace file")->required();

    // demos
    std::size_t rows = 64, cols = 64;
    std::uint64_t seed = 1;
    auto* xordemo = app.add_subcommand("xor-demo", "two-step XOR walkthrough and array check");
    xordemo->add_option("--rows", rows);
    xordemo->add_option("--cols", cols);
    xordemo->add_option("--seed", seed);

    std::size_t bnn_rows = 64, bnn_cols = 64;
    std::uint64_t bnn_seed = 1;
    std::string bnn_out, bnn_weights, bnn_activations;
    auto* bnn = app.add_subcommand("bnn-demo", "binarized layer through the array");
    bnn->add_option("--rows", bnn_rows);
    bnn->add_option("--cols", bnn_cols);
    bnn->add_option("--seed", bnn_seed);
    bnn->add_option("--weights", bnn_weights, "weight matrix as an array text image");
    bnn->add_option("--activations", bnn_activations, "activation row as a text image");
    bnn->add_option("--out", bnn_out, "pre-activation CSV");

    std::size_t otp_bytes = 1024, otp_cols = 64;
    std::uint64_t otp_seed = 1;
    std::string otp_out;
    auto* otp = app.add_subcommand("otp-demo", "one-time pad encrypt/decrypt");
    otp->add_option("--bytes", otp_bytes);
    otp->add_option("--cols", otp_cols);
    otp->add_option("--seed", otp_seed);
    otp->add_option("--out", otp_out, "ciphertext bits");

    // margins
    std::string snm_cell = "both", snm_mode = "both", snm_params, snm_out;
    int snm_grid = 401;
    auto* snm = app.add_subcommand("snm", "static noise margin from butterfly curves");
    snm->add_option("--cell", snm_cell)->check(CLI::IsMember({"6t", "9t", "both"}));
    snm->add_option("--mode", snm_mode)->check(CLI::IsMember({"hold", "read", "both"}));
    snm->add_option("--params", snm_params, "parameter file");
    snm->add_option("--grid", snm_grid)->check(CLI::Range(100, 100000));
    snm->add_option("--out", snm_out, "margin CSV");

    std::string wnm_cell = "both", wnm_params, wnm_out;
    auto* wnm = app.add_subcommand("wnm", "write margin by bitline sweep");
    wnm->add_option("--cell", wnm_cell)->check(CLI::IsMember({"6t", "9t", "both"}));
    wnm->add_option("--params", wnm_params, "parameter file");
    wnm->add_option("--out", wnm_out, "margin CSV");

    // transients
    int s1_a = 1, s1_b = 1;
    double s1_blr = -0.6, s1_duration = 2e-8, s1_dt = 1e-12;
    std::string s1_params, s1_out;
    auto* step1 = app.add_subcommand("transient-step1", "conditional-reset transient");
    step1->add_option("--a", s1_a)->check(CLI::Range(0, 1));
    step1->add_option("--b", s1_b)->check(CLI::Range(0, 1));
    step1->add_option("--blr", s1_blr, "BLR pulse voltage (<= 0)");
    step1->add_option("--duration", s1_duration);
    step1->add_option("--dt", s1_dt);
    step1->add_option("--params", s1_params, "parameter file");
    step1->add_option("--out", s1_out, "trace CSV");

    int s2_a = 0, s2_b = 1;
    double s2_duration = 2e-8, s2_dt = 1e-12;
    std::string s2_params, s2_out;
    auto* step2 = app.add_subcommand("transient-step2", "conditional-flip transient");
    step2->add_option("--a", s2_a)->check(CLI::Range(0, 1));
    step2->add_option("--b", s2_b)->check(CLI::Range(0, 1));
    step2->add_option("--duration", s2_duration);
    step2->add_option("--dt", s2_dt);
    step2->add_option("--params", s2_params, "parameter file");
    step2->add_option("--out", s2_out, "trace CSV");

    // Monte Carlo
    std::string mc_experiment = "step1", mc_params, mc_out;
    int mc_trials = 1000;
    double mc_sigma = 0.025, mc_blr = -0.6;
    std::uint64_t mc_seed = 7;
    auto* mc = app.add_subcommand("mc", "Monte Carlo threshold-variation runs");
    mc->add_option("--experiment", mc_experiment)->check(CLI::IsMember({"step1", "step2"}));
    mc->add_option("--trials", mc_trials)->check(CLI::Range(1, 10000000));
    mc->add_option("--sigma", mc_sigma);
    mc->add_option("--seed", mc_seed);
    mc->add_option("--blr", mc_blr);
    mc->add_option("--params", mc_params, "parameter file");
    mc->add_option("--out", mc_out, "per-trial CSV");

    // aging
    std::size_t ag_rows = 16, ag_cols = 16;
    std::uint64_t ag_seed = 1;
    double ag_total = 100.0, ag_period = 10.0;
    bool ag_none = false;
    std::string ag_out;
    auto* aging = app.add_subcommand("aging", "imprinting stress under a toggle schedule");
    aging->add_option("--rows", ag_rows);
    aging->add_option("--cols", ag_cols);
    aging->add_option("--seed", ag_seed);
    aging->add_option("--total-time", ag_total);
    aging->add_option("--toggle-period", ag_period);
    aging->add_flag("--no-toggle", ag_none, "hold without toggling");
    aging->add_option("--out", ag_out, "per-cell stress CSV");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (run->parsed()) return cmd_run(trace_path);
        if (xordemo->parsed()) return cmd_xor_demo(rows, cols, seed);
        if (bnn->parsed())
            return cmd_bnn_demo(bnn_rows, bnn_cols, bnn_seed, bnn_weights, bnn_activations, bnn_out);
        if (otp->parsed()) return cmd_otp_demo(otp_bytes, otp_cols, otp_seed, otp_out);
        if (snm->parsed()) return cmd_snm(snm_cell, snm_mode, snm_params, snm_grid, snm_out);
        if (wnm->parsed()) return cmd_wnm(wnm_cell, wnm_params, wnm_out);
        if (step1->parsed())
            return cmd_step1(s1_a, s1_b, s1_blr, s1_duration, s1_dt, s1_params, s1_out);
        if (step2->parsed())
            return cmd_step2(s2_a, s2_b, s2_duration, s2_dt, s2_params, s2_out);
        if (mc->parsed())
            return cmd_mc(mc_experiment, mc_trials, mc_sigma, mc_seed, mc_blr, mc_params, mc_out);
        if (aging->parsed())
            return cmd_aging(ag_rows, ag_cols, ag_seed, ag_total, ag_period, ag_none, ag_out);
    } catch (const parse_error& e) {
        std::fprintf(stderr, "parse error: %s\n", e.what());
        return kExitParse;
    } catch (const protocol_error& e) {
        std::fprintf(stderr, "protocol violation: %s\n", e.what());
        return kExitProtocol;
    } catch (const numeric_error& e) {
        std::fprintf(stderr, "numerical failure: %s\n", e.what());
        return kExitNumeric;
    }
    return kExitUsage;
}
