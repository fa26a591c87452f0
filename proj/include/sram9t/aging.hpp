#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sram9t/array.hpp"

namespace sram9t {

struct CellStress {
    std::size_t row;
    std::size_t col;
    double stress0;
    double stress1;
    double asymmetry;  // |stress1 - stress0| / (stress1 + stress0)
};

// Duty-cycle imprinting summary after a hold schedule. A cell that never
// toggled sits at asymmetry 1; perfectly balanced polarity gives 0.
struct ImprintReport {
    std::vector<CellStress> cells;
    double max_asymmetry = 0.0;
    double mean_asymmetry = 0.0;
    std::uint64_t toggle_count = 0;
    double total_hold_time = 0.0;
};

// Advances hold time on the array, inverting all data at every period
// boundary when a toggle period is given. Stress accrues against the level
// each cell actually holds between toggles.
ImprintReport run_hold_schedule(Array& array, double total_time,
                                std::optional<double> toggle_period);

ImprintReport imprint_report(const Array& array, std::uint64_t toggle_count);

// Periphery-side data recovery: raw bits XOR the array's cumulative toggle
// parity, which is always the originally written data.
std::vector<Logic> logical_read_row_with_polarity(const Array& array, std::size_t row,
                                                  bool parity);
std::vector<std::vector<Logic>> logical_read_with_polarity(const Array& array);

// CSV body with header: row,col,stress0,stress1,asymmetry
std::string imprint_report_csv(const ImprintReport& report);

} // namespace sram9t
