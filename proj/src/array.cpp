#include "sram9t/array.hpp"

#include <fstream>
#include <sstream>

#include "sram9t/error.hpp"

namespace sram9t {

RowMask RowMask::single(std::size_t rows, std::size_t row) {
    if (row >= rows) throw protocol_error("row mask index out of range");
    RowMask m = none(rows);
    m.selected[row] = true;
    return m;
}

std::size_t RowMask::count() const {
    std::size_t n = 0;
    for (bool b : selected) n += b ? 1 : 0;
    return n;
}

Array::Array(std::size_t rows, std::size_t cols, int node_ttl)
    : rows_(rows), cols_(cols), node_ttl_(node_ttl) {
    if (rows == 0 || cols == 0) throw protocol_error("array geometry must be nonzero");
    cells_.assign(rows_ * cols_, init_cell(Logic::L0, node_ttl_));
    operand_b_.assign(cols_, Logic::L0);
}

const CellState& Array::cell(std::size_t row, std::size_t col) const {
    check_row(row);
    if (col >= cols_) throw protocol_error("column index out of range");
    return cells_[row * cols_ + col];
}

CellState& Array::cell_ref(std::size_t row, std::size_t col) {
    return cells_[row * cols_ + col];
}

void Array::check_row(std::size_t row) const {
    if (row >= rows_) throw protocol_error("row index out of range");
}

void Array::check_bits(const std::vector<Logic>& bits) const {
    if (bits.size() != cols_)
        throw protocol_error("bit vector length does not match column count");
    for (Logic b : bits)
        if (!is_bit(b)) throw protocol_error("bit vector entries must be 0 or 1");
}

void Array::write_row(std::size_t row, const std::vector<Logic>& bits) {
    check_row(row);
    check_bits(bits);
    for (std::size_t c = 0; c < cols_; ++c)
        cell_ref(row, c) = phase_write(cell_ref(row, c), bits[c]);
    mode_ = ArrayMode::Normal;
    phase_count_ += 1;
    cycle_count_ += 1;
}

std::vector<Logic> Array::read_row(std::size_t row) const {
    check_row(row);
    std::vector<Logic> bits(cols_);
    for (std::size_t c = 0; c < cols_; ++c) bits[c] = phase_read(cell(row, c));
    return bits;
}

void Array::load_operand_b(const std::vector<Logic>& bits) {
    check_bits(bits);
    operand_b_ = bits;
    mode_ = ArrayMode::Xor;
}

void Array::execute(const Protocol& protocol, const RowMask& mask) {
    if (mask.selected.size() != rows_)
        throw protocol_error("row mask length does not match row count");
    if (!mask.any()) throw protocol_error("row mask selects no rows");
    for (const ProtocolPhase& phase : protocol.phases) {
        if (phase.columns.size() != cols_)
            throw protocol_error("protocol column count does not match array");
        // Word lines are row-shared: a phase may not assign two different
        // levels to them across columns.
        for (const PhaseLines& l : phase.columns)
            if (l.wl1 != phase.columns.front().wl1 || l.wl2 != phase.columns.front().wl2)
                throw protocol_error("phase assigns conflicting word-line levels");
        // Every cell transition depends only on its own pre-phase state, so
        // in-place evaluation matches the two-buffer semantics bit for bit.
        for (std::size_t r = 0; r < rows_; ++r) {
            if (!mask.selected[r]) continue;
            for (std::size_t c = 0; c < cols_; ++c)
                cell_ref(r, c) = apply_phase(cell_ref(r, c), phase.kind, phase.columns[c]);
        }
        phase_count_ += 1;
    }
    cycle_count_ += static_cast<std::uint64_t>(protocol.cycle_cost);
}

void Array::xor_parallel(const RowMask& mask, const std::vector<Logic>& b) {
    load_operand_b(b);
    xor_parallel(mask);
}

void Array::xor_parallel(const RowMask& mask) {
    execute(build_xor_protocol(operand_b_), mask);
    mode_ = ArrayMode::Xor;
}

void Array::toggle_all() {
    execute(build_toggle_protocol(cols_), RowMask::all(rows_));
    toggle_parity_ = !toggle_parity_;
    mode_ = ArrayMode::Xor;
}

void Array::erase_all() {
    execute(build_erase_protocol(cols_), RowMask::all(rows_));
    toggle_parity_ = false;
    mode_ = ArrayMode::Xor;
}

void Array::hold(double dt) {
    for (CellState& s : cells_) s = accumulate_stress(s, dt);
}

HazardReport Array::check_disturb_hazards(const RowMask& mask,
                                          const std::vector<Logic>& b) const {
    if (mask.selected.size() != rows_)
        throw protocol_error("row mask length does not match row count");
    check_bits(b);
    HazardReport report;
    for (std::size_t r = 0; r < rows_; ++r) {
        if (mask.selected[r]) continue;
        for (std::size_t c = 0; c < cols_; ++c)
            if (b[c] == Logic::L1) report.sites.push_back({r, c});
    }
    return report;
}

std::string Array::to_text() const {
    std::string out;
    out.reserve(rows_ * (cols_ + 1));
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) out += logic_to_char(cell(r, c).vx);
        out += '\n';
    }
    return out;
}

Array Array::from_text(const std::string& text, int node_ttl) {
    std::vector<std::vector<Logic>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<Logic> bits;
        bits.reserve(line.size());
        for (char ch : line) {
            auto v = logic_from_char(ch);
            if (!v || !is_bit(*v))
                throw parse_error(std::string("array image: invalid character '") + ch + "'");
            bits.push_back(*v);
        }
        if (!rows.empty() && bits.size() != rows.front().size())
            throw parse_error("array image: ragged rows");
        rows.push_back(std::move(bits));
    }
    if (rows.empty()) throw parse_error("array image: empty");
    Array a(rows.size(), rows.front().size(), node_ttl);
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            a.cell_ref(r, c) = init_cell(rows[r][c], node_ttl);
    return a;
}

void Array::save_text(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw parse_error("cannot open '" + path + "' for writing");
    out << to_text();
}

Array Array::load_text(const std::string& path, int node_ttl) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open '" + path + "' for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_text(buf.str(), node_ttl);
}

std::vector<std::uint8_t> Array::to_packed() const {
    const std::size_t bytes_per_row = (cols_ + 7) / 8;
    std::vector<std::uint8_t> bytes(rows_ * bytes_per_row, 0);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (cell(r, c).vx == Logic::L1)
                bytes[r * bytes_per_row + c / 8] |=
                    static_cast<std::uint8_t>(0x80u >> (c % 8));
    return bytes;
}

Array Array::from_packed(std::size_t rows, std::size_t cols,
                         const std::vector<std::uint8_t>& bytes, int node_ttl) {
    const std::size_t bytes_per_row = (cols + 7) / 8;
    if (bytes.size() != rows * bytes_per_row)
        throw parse_error("packed image size does not match geometry");
    Array a(rows, cols, node_ttl);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) {
            const bool set = bytes[r * bytes_per_row + c / 8] & (0x80u >> (c % 8));
            a.cell_ref(r, c) = init_cell(logic_from_bool(set), node_ttl);
        }
    return a;
}

void Array::save_packed(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw parse_error("cannot open '" + path + "' for writing");
    const auto bytes = to_packed();
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
}

Array Array::load_packed(std::size_t rows, std::size_t cols, const std::string& path,
                         int node_ttl) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open '" + path + "' for reading");
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    return from_packed(rows, cols, bytes, node_ttl);
}

} // namespace sram9t
