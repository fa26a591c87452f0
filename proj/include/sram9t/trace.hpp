#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "sram9t/logic.hpp"

namespace sram9t::trace {

enum class Op : std::uint8_t {
    Init,     // INIT <rows> <cols>
    LoadRow,  // LOADROW <row> <bits>
    LoadB,    // LOADB <bits>
    Mask,     // MASK <row> [<row> ...]
    Xor,      // XOR
    Toggle,   // TOGGLE
    Erase,    // ERASE
    ReadRow,  // READROW <row>
    Dump,     // DUMP <path>
};

struct Command {
    Op op;
    std::size_t rows = 0;  // Init
    std::size_t cols = 0;  // Init
    std::size_t row = 0;   // LoadRow / ReadRow
    std::vector<Logic> bits;
    std::vector<std::size_t> mask_rows;
    std::string path;

    bool operator==(const Command&) const = default;
};

// One command per line, space-delimited, '#' starts a comment. INIT must
// come first. Serialization and parsing round-trip exactly.
struct Program {
    std::vector<Command> commands;

    static Program parse(const std::string& text);
    std::string serialize() const;

    bool operator==(const Program&) const = default;
};

// Executes a program; READROW output goes to `out`. Throws parse_error on
// malformed input and protocol_error on sequencing violations.
void run(const Program& program, std::ostream& out);

// Loads, parses and runs a trace file.
void run_trace_file(const std::string& path, std::ostream& out);

} // namespace sram9t::trace
