#include "sram9t/aging.hpp"

#include <cmath>
#include <cstdio>

#include "sram9t/error.hpp"

namespace sram9t {

ImprintReport imprint_report(const Array& array, std::uint64_t toggle_count) {
    ImprintReport report;
    report.toggle_count = toggle_count;
    double sum = 0.0;
    for (std::size_t r = 0; r < array.rows(); ++r)
        for (std::size_t c = 0; c < array.cols(); ++c) {
            const CellState& s = array.cell(r, c);
            const double total = s.stress0 + s.stress1;
            const double asym = total > 0.0 ? std::fabs(s.stress1 - s.stress0) / total : 0.0;
            report.cells.push_back({r, c, s.stress0, s.stress1, asym});
            report.max_asymmetry = std::max(report.max_asymmetry, asym);
            sum += asym;
            report.total_hold_time = std::max(report.total_hold_time, total);
        }
    report.mean_asymmetry = report.cells.empty() ? 0.0 : sum / static_cast<double>(report.cells.size());
    return report;
}

ImprintReport run_hold_schedule(Array& array, double total_time,
                                std::optional<double> toggle_period) {
    if (total_time <= 0.0) throw protocol_error("hold schedule needs a positive total time");
    std::uint64_t toggles = 0;
    if (!toggle_period) {
        array.hold(total_time);
    } else {
        const double period = *toggle_period;
        if (period <= 0.0) throw protocol_error("toggle period must be positive");
        // Boundary times come from multiplication, not accumulation, so a
        // period that divides the window lands exactly on total_time.
        double t = 0.0;
        for (std::uint64_t k = 0;; ++k) {
            const double next = std::min(static_cast<double>(k + 1) * period, total_time);
            array.hold(next - t);
            t = next;
            if (t >= total_time) break;
            array.toggle_all();
            ++toggles;
        }
    }
    return imprint_report(array, toggles);
}

std::vector<Logic> logical_read_row_with_polarity(const Array& array, std::size_t row,
                                                  bool parity) {
    std::vector<Logic> bits = array.read_row(row);
    if (parity)
        for (Logic& b : bits) b = logic_not(b);
    return bits;
}

std::vector<std::vector<Logic>> logical_read_with_polarity(const Array& array) {
    std::vector<std::vector<Logic>> rows;
    rows.reserve(array.rows());
    for (std::size_t r = 0; r < array.rows(); ++r)
        rows.push_back(logical_read_row_with_polarity(array, r, array.toggle_parity()));
    return rows;
}

std::string imprint_report_csv(const ImprintReport& report) {
    std::string out = "row,col,stress0,stress1,asymmetry\n";
    char line[128];
    for (const CellStress& c : report.cells) {
        std::snprintf(line, sizeof(line), "%zu,%zu,%.9g,%.9g,%.9g\n", c.row, c.col,
                      c.stress0, c.stress1, c.asymmetry);
        out += line;
    }
    return out;
}

} // namespace sram9t
