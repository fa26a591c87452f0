#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sram9t/bitcell.hpp"

namespace sram9t {

enum class ProtocolKind : std::uint8_t { Write, Read, XorTwoStep, Toggle, Erase };

// One phase across all columns of an array. Word lines are row-shared, so
// every column entry carries identical wl1/wl2 levels; the per-column fields
// are DL, BLR and the bitline pair.
struct ProtocolPhase {
    PhaseKind kind;
    std::vector<PhaseLines> columns;

    bool operator==(const ProtocolPhase&) const = default;
};

// A named line choreography. cycle_cost counts array cycles: the two-step
// sequence is one cycle of three phases, whatever the number of rows it
// touches.
struct Protocol {
    ProtocolKind kind;
    std::vector<ProtocolPhase> phases;
    int cycle_cost = 1;

    std::size_t phase_count() const { return phases.size(); }

    bool operator==(const Protocol&) const = default;
};

// [SampleN, ConditionalReset, ConditionalFlip]. Columns with B=1 get DL=1
// with the negative pulse in step 1 and VDD in step 2; B=0 columns keep
// DL=0, BLR grounded. Rejects X operands.
Protocol build_xor_protocol(const std::vector<Logic>& operand_b);

// XOR with every column operand forced to 1.
Protocol build_toggle_protocol(std::size_t num_columns);

// Step 1 only, all columns driven: [SampleN, ConditionalReset] with DL=1
// and the negative BLR pulse everywhere.
Protocol build_erase_protocol(std::size_t num_columns);

// Conventional differential write/read phases for completeness.
Protocol build_write_protocol(const std::vector<Logic>& bits);
Protocol build_read_protocol(std::size_t num_columns);

// Serializes XOR-family protocols (XorTwoStep, Toggle, Erase) to trace text.
// Write/Read protocols have no row-addressed trace form and are rejected.
std::string to_trace_text(const Protocol& protocol);

} // namespace sram9t
