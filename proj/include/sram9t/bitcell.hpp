#pragma once

#include "sram9t/logic.hpp"

namespace sram9t {

// Retention budget of the dynamic node, counted in phases since the last
// sampling. One two-step operation consumes two phases, so 4 leaves slack
// for one full sequence plus a repeated conditional phase before expiry.
inline constexpr int kDefaultNodeTtl = 4;

// Capacitive node N. It samples Vy when WL1 opens the sampling path and then
// floats; after ttl phases the stored charge is no longer trusted and reads
// return X.
struct DynNode {
    Logic value = Logic::X;
    int age = 0;
    int ttl = kDefaultNodeTtl;

    Logic read() const { return age > ttl ? Logic::X : value; }
};

// Column/row line levels seen by one cell during one phase.
enum class BlrDrive : std::uint8_t { Gnd, Vdd, Neg };
enum class BitlineDrive : std::uint8_t { Precharged, Drive0, Drive1 };

struct PhaseLines {
    Logic wl1 = Logic::L0;
    Logic wl2 = Logic::L0;
    Logic dl = Logic::L0;
    BlrDrive blr = BlrDrive::Gnd;
    BitlineDrive bl = BitlineDrive::Precharged;
    BitlineDrive blb = BitlineDrive::Precharged;

    bool operator==(const PhaseLines&) const = default;
};

// Throws protocol_error if the combination is electrically illegal:
// a negative BLR pulse requires WL1 low, and driven bitlines require both
// word lines high.
void validate_lines(const PhaseLines& lines);

// Full state of one bitcell. vy mirrors NOT vx at every phase boundary;
// stress counters split total hold time by stored polarity.
struct CellState {
    Logic vx = Logic::L0;
    Logic vy = Logic::L1;
    DynNode n;
    double stress0 = 0.0;
    double stress1 = 0.0;
};

CellState init_cell(Logic bit, int node_ttl = kDefaultNodeTtl);

// WL1 high, WL2 low, bitlines precharged: N settles to Vy. Resets node age.
CellState phase_sample_n(CellState s);

// WL1 low; BLR carries the negative pulse on DL=1 columns. The negative
// source makes the reset unconditional in Vx for DL=1 regardless of the
// sampled node, per the two-step sequence. DL=0 leaves the cell untouched.
// N keeps its sampled value and ages by one phase.
CellState phase_conditional_reset(CellState s, Logic dl);

// WL1 low; BLR at VDD on DL=1 columns. Vx is pulled high only when the
// sampled node is high. N ages by one phase.
CellState phase_conditional_flip(CellState s, Logic dl);

// Differential write through both word lines. The write current disturbs
// the dynamic node, so N is invalidated.
CellState phase_write(CellState s, Logic bit);

// Non-destructive behavioral read.
Logic phase_read(const CellState& s);

// Advance hold time; charges the stress counter matching the stored level.
CellState accumulate_stress(CellState s, double dt);

// Phase vocabulary used by protocols and the array executor.
enum class PhaseKind : std::uint8_t {
    SampleN,
    ConditionalReset,
    ConditionalFlip,
    WriteBit,
    ReadBit,
};

// Dispatches one phase against one cell, cross-checking that the supplied
// line levels are consistent with the phase kind.
CellState apply_phase(CellState s, PhaseKind kind, const PhaseLines& lines);

} // namespace sram9t
