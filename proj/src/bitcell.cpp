#include "sram9t/bitcell.hpp"

#include "sram9t/error.hpp"

namespace sram9t {

void validate_lines(const PhaseLines& lines) {
    if (lines.blr == BlrDrive::Neg && lines.wl1 != Logic::L0)
        throw protocol_error("negative BLR pulse requires WL1 low");
    const bool bl_driven = lines.bl != BitlineDrive::Precharged;
    const bool blb_driven = lines.blb != BitlineDrive::Precharged;
    if ((bl_driven || blb_driven) &&
        (lines.wl1 != Logic::L1 || lines.wl2 != Logic::L1))
        throw protocol_error("driven bitlines require WL1 and WL2 high");
}

CellState init_cell(Logic bit, int node_ttl) {
    if (!is_bit(bit)) throw protocol_error("init_cell: bit must be 0 or 1");
    CellState s;
    s.vx = bit;
    s.vy = logic_not(bit);
    s.n = DynNode{Logic::X, 0, node_ttl};
    return s;
}

CellState phase_sample_n(CellState s) {
    s.n.value = s.vy;
    s.n.age = 0;
    return s;
}

CellState phase_conditional_reset(CellState s, Logic dl) {
    if (!is_bit(dl)) throw protocol_error("conditional reset: DL must be 0 or 1");
    if (dl == Logic::L1) {
        if (s.n.read() == Logic::X)
            throw protocol_error("conditional reset without a fresh sampled node");
        s.vx = Logic::L0;
        s.vy = Logic::L1;
    }
    s.n.age += 1;
    return s;
}

CellState phase_conditional_flip(CellState s, Logic dl) {
    if (!is_bit(dl)) throw protocol_error("conditional flip: DL must be 0 or 1");
    if (dl == Logic::L1) {
        const Logic n = s.n.read();
        if (n == Logic::X)
            throw protocol_error("conditional flip without a fresh sampled node");
        if (n == Logic::L1) {
            s.vx = Logic::L1;
            s.vy = Logic::L0;
        }
    }
    s.n.age += 1;
    return s;
}

CellState phase_write(CellState s, Logic bit) {
    if (!is_bit(bit)) throw protocol_error("write: bit must be 0 or 1");
    s.vx = bit;
    s.vy = logic_not(bit);
    s.n.value = Logic::X;  // write current runs through the sampling path
    s.n.age = 0;
    return s;
}

Logic phase_read(const CellState& s) { return s.vx; }

CellState accumulate_stress(CellState s, double dt) {
    if (dt < 0.0) throw protocol_error("accumulate_stress: negative duration");
    if (s.vx == Logic::L1)
        s.stress1 += dt;
    else
        s.stress0 += dt;
    return s;
}

namespace {

Logic write_bit_from_lines(const PhaseLines& lines) {
    if (lines.bl == BitlineDrive::Drive1 && lines.blb == BitlineDrive::Drive0)
        return Logic::L1;
    if (lines.bl == BitlineDrive::Drive0 && lines.blb == BitlineDrive::Drive1)
        return Logic::L0;
    throw protocol_error("write phase requires differentially driven bitlines");
}

void require_xor_phase_lines(const PhaseLines& lines) {
    if (lines.wl2 != Logic::L0)
        throw protocol_error("WL2 must stay low during XOR phases");
}

} // namespace

CellState apply_phase(CellState s, PhaseKind kind, const PhaseLines& lines) {
    validate_lines(lines);
    switch (kind) {
        case PhaseKind::SampleN:
            require_xor_phase_lines(lines);
            if (lines.wl1 != Logic::L1)
                throw protocol_error("sampling phase requires WL1 high");
            return phase_sample_n(s);
        case PhaseKind::ConditionalReset:
            require_xor_phase_lines(lines);
            if (lines.wl1 != Logic::L0)
                throw protocol_error("conditional reset requires WL1 low");
            if ((lines.dl == Logic::L1) != (lines.blr == BlrDrive::Neg))
                throw protocol_error("reset phase: BLR must be negative exactly on DL=1 columns");
            return phase_conditional_reset(s, lines.dl);
        case PhaseKind::ConditionalFlip:
            require_xor_phase_lines(lines);
            if (lines.wl1 != Logic::L0)
                throw protocol_error("conditional flip requires WL1 low");
            if ((lines.dl == Logic::L1) != (lines.blr == BlrDrive::Vdd))
                throw protocol_error("flip phase: BLR must be at VDD exactly on DL=1 columns");
            return phase_conditional_flip(s, lines.dl);
        case PhaseKind::WriteBit:
            return phase_write(s, write_bit_from_lines(lines));
        case PhaseKind::ReadBit:
            return s;
    }
    throw protocol_error("unknown phase kind");
}

} // namespace sram9t
