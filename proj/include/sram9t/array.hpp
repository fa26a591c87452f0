#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "sram9t/bitcell.hpp"
#include "sram9t/sequencer.hpp"

namespace sram9t {

// Row-selection mask for XOR-family operations.
struct RowMask {
    std::vector<bool> selected;

    static RowMask all(std::size_t rows) { return RowMask{std::vector<bool>(rows, true)}; }
    static RowMask none(std::size_t rows) { return RowMask{std::vector<bool>(rows, false)}; }
    static RowMask single(std::size_t rows, std::size_t row);

    std::size_t count() const;
    bool any() const { return count() > 0; }
};

enum class ArrayMode : std::uint8_t { Normal, Xor };

struct DisturbHazard {
    std::size_t row;
    std::size_t col;

    bool operator==(const DisturbHazard&) const = default;
};

// Unselected-row exposure to driven column lines. The behavioral model keeps
// unselected rows untouched; this report lists where a real array would rely
// on row selectivity that the shared DL/BLR lines do not provide by
// themselves.
struct HazardReport {
    std::vector<DisturbHazard> sites;

    bool empty() const { return sites.empty(); }
};

// R x C grid of bitcells with shared-line topology: WL1/WL2 per row, DL, BLR
// and the bitline pair per column, plus the per-column operand-B registers
// below the array. Phase and cycle counters track executed protocols, one
// increment per array phase regardless of how many rows it touches.
class Array {
public:
    Array(std::size_t rows, std::size_t cols, int node_ttl = kDefaultNodeTtl);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const CellState& cell(std::size_t row, std::size_t col) const;

    void write_row(std::size_t row, const std::vector<Logic>& bits);
    std::vector<Logic> read_row(std::size_t row) const;

    void load_operand_b(const std::vector<Logic>& bits);
    const std::vector<Logic>& operand_b() const { return operand_b_; }

    // Two-step XOR on the selected rows against the per-column operand.
    // Selected cells end at old value XOR b; unselected rows are untouched.
    void xor_parallel(const RowMask& mask, const std::vector<Logic>& b);
    void xor_parallel(const RowMask& mask);

    // Whole-array data inversion (XOR with all-ones) and step-1-only reset.
    void toggle_all();
    void erase_all();

    // Advances hold time on every cell.
    void hold(double dt);

    bool toggle_parity() const { return toggle_parity_; }
    ArrayMode mode() const { return mode_; }

    HazardReport check_disturb_hazards(const RowMask& mask,
                                       const std::vector<Logic>& b) const;

    std::uint64_t phase_count() const { return phase_count_; }
    std::uint64_t cycle_count() const { return cycle_count_; }

    // Runs a protocol against the masked rows with two-buffer semantics:
    // each phase sees the pre-phase state of every cell.
    void execute(const Protocol& protocol, const RowMask& mask);

    // Text image: one row per line, '0'/'1' per column.
    std::string to_text() const;
    static Array from_text(const std::string& text, int node_ttl = kDefaultNodeTtl);
    void save_text(const std::string& path) const;
    static Array load_text(const std::string& path, int node_ttl = kDefaultNodeTtl);

    // Packed binary image: row-major, (cols+7)/8 bytes per row, MSB of each
    // byte is the lowest-numbered column.
    std::vector<std::uint8_t> to_packed() const;
    static Array from_packed(std::size_t rows, std::size_t cols,
                             const std::vector<std::uint8_t>& bytes,
                             int node_ttl = kDefaultNodeTtl);
    void save_packed(const std::string& path) const;
    static Array load_packed(std::size_t rows, std::size_t cols, const std::string& path,
                             int node_ttl = kDefaultNodeTtl);

private:
    CellState& cell_ref(std::size_t row, std::size_t col);
    void check_row(std::size_t row) const;
    void check_bits(const std::vector<Logic>& bits) const;

    std::size_t rows_;
    std::size_t cols_;
    std::vector<CellState> cells_;  // row-major
    std::vector<Logic> operand_b_;
    ArrayMode mode_ = ArrayMode::Normal;
    bool toggle_parity_ = false;
    std::uint64_t phase_count_ = 0;
    std::uint64_t cycle_count_ = 0;
    int node_ttl_;
};

} // namespace sram9t
