#pragma once

#include <cstdint>
#include <optional>

namespace sram9t {

// Three-valued logic level. X marks an unknown/expired dynamic value; the
// static storage nodes never hold X once a cell is initialized.
enum class Logic : std::uint8_t { L0 = 0, L1 = 1, X = 2 };

constexpr bool is_bit(Logic v) { return v == Logic::L0 || v == Logic::L1; }

constexpr Logic logic_not(Logic v) {
    if (v == Logic::L0) return Logic::L1;
    if (v == Logic::L1) return Logic::L0;
    return Logic::X;
}

constexpr Logic logic_xor(Logic a, Logic b) {
    if (!is_bit(a) || !is_bit(b)) return Logic::X;
    return a == b ? Logic::L0 : Logic::L1;
}

constexpr Logic logic_from_bool(bool b) { return b ? Logic::L1 : Logic::L0; }

constexpr char logic_to_char(Logic v) {
    if (v == Logic::L0) return '0';
    if (v == Logic::L1) return '1';
    return 'X';
}

constexpr std::optional<Logic> logic_from_char(char c) {
    if (c == '0') return Logic::L0;
    if (c == '1') return Logic::L1;
    if (c == 'X' || c == 'x') return Logic::X;
    return std::nullopt;
}

} // namespace sram9t
