#include "sram9t/sequencer.hpp"

#include "sram9t/error.hpp"

namespace sram9t {

namespace {

PhaseLines sample_lines() {
    PhaseLines l;
    l.wl1 = Logic::L1;
    l.wl2 = Logic::L0;
    l.dl = Logic::L0;
    l.blr = BlrDrive::Gnd;
    return l;
}

PhaseLines reset_lines(Logic b) {
    PhaseLines l;
    l.wl1 = Logic::L0;
    l.wl2 = Logic::L0;
    l.dl = b;
    l.blr = b == Logic::L1 ? BlrDrive::Neg : BlrDrive::Gnd;
    return l;
}

PhaseLines flip_lines(Logic b) {
    PhaseLines l;
    l.wl1 = Logic::L0;
    l.wl2 = Logic::L0;
    l.dl = b;
    l.blr = b == Logic::L1 ? BlrDrive::Vdd : BlrDrive::Gnd;
    return l;
}

void check_operands(const std::vector<Logic>& operand_b) {
    if (operand_b.empty())
        throw protocol_error("protocol needs at least one column");
    for (Logic b : operand_b)
        if (!is_bit(b)) throw protocol_error("operand B entries must be 0 or 1");
}

ProtocolPhase phase_for_all(PhaseKind kind, const std::vector<Logic>& operand_b,
                            PhaseLines (*lines_fn)(Logic)) {
    ProtocolPhase phase;
    phase.kind = kind;
    phase.columns.reserve(operand_b.size());
    for (Logic b : operand_b) phase.columns.push_back(lines_fn(b));
    return phase;
}

} // namespace

Protocol build_xor_protocol(const std::vector<Logic>& operand_b) {
    check_operands(operand_b);
    Protocol p;
    p.kind = ProtocolKind::XorTwoStep;
    p.cycle_cost = 1;
    ProtocolPhase sample;
    sample.kind = PhaseKind::SampleN;
    sample.columns.assign(operand_b.size(), sample_lines());
    p.phases.push_back(std::move(sample));
    p.phases.push_back(phase_for_all(PhaseKind::ConditionalReset, operand_b, reset_lines));
    p.phases.push_back(phase_for_all(PhaseKind::ConditionalFlip, operand_b, flip_lines));
    return p;
}

Protocol build_toggle_protocol(std::size_t num_columns) {
    if (num_columns == 0) throw protocol_error("toggle needs at least one column");
    Protocol p = build_xor_protocol(std::vector<Logic>(num_columns, Logic::L1));
    p.kind = ProtocolKind::Toggle;
    return p;
}

Protocol build_erase_protocol(std::size_t num_columns) {
    if (num_columns == 0) throw protocol_error("erase needs at least one column");
    const std::vector<Logic> ones(num_columns, Logic::L1);
    Protocol p;
    p.kind = ProtocolKind::Erase;
    p.cycle_cost = 1;
    ProtocolPhase sample;
    sample.kind = PhaseKind::SampleN;
    sample.columns.assign(num_columns, sample_lines());
    p.phases.push_back(std::move(sample));
    p.phases.push_back(phase_for_all(PhaseKind::ConditionalReset, ones, reset_lines));
    return p;
}

Protocol build_write_protocol(const std::vector<Logic>& bits) {
    check_operands(bits);
    Protocol p;
    p.kind = ProtocolKind::Write;
    p.cycle_cost = 1;
    ProtocolPhase phase;
    phase.kind = PhaseKind::WriteBit;
    phase.columns.reserve(bits.size());
    for (Logic b : bits) {
        PhaseLines l;
        l.wl1 = Logic::L1;
        l.wl2 = Logic::L1;
        l.bl = b == Logic::L1 ? BitlineDrive::Drive1 : BitlineDrive::Drive0;
        l.blb = b == Logic::L1 ? BitlineDrive::Drive0 : BitlineDrive::Drive1;
        phase.columns.push_back(l);
    }
    p.phases.push_back(std::move(phase));
    return p;
}

Protocol build_read_protocol(std::size_t num_columns) {
    if (num_columns == 0) throw protocol_error("read needs at least one column");
    Protocol p;
    p.kind = ProtocolKind::Read;
    p.cycle_cost = 1;
    ProtocolPhase phase;
    phase.kind = PhaseKind::ReadBit;
    PhaseLines l;
    l.wl1 = Logic::L1;
    l.wl2 = Logic::L1;
    phase.columns.assign(num_columns, l);
    p.phases.push_back(std::move(phase));
    return p;
}

std::string to_trace_text(const Protocol& protocol) {
    switch (protocol.kind) {
        case ProtocolKind::Toggle:
            return "TOGGLE\n";
        case ProtocolKind::Erase:
            return "ERASE\n";
        case ProtocolKind::XorTwoStep: {
            if (protocol.phases.size() != 3 || protocol.phases[1].columns.empty())
                throw protocol_error("malformed XOR protocol");
            std::string bits;
            for (const PhaseLines& l : protocol.phases[1].columns)
                bits += logic_to_char(l.dl);
            return "LOADB " + bits + "\nXOR\n";
        }
        case ProtocolKind::Write:
        case ProtocolKind::Read:
            throw protocol_error("write/read protocols have no trace form");
    }
    throw protocol_error("unknown protocol kind");
}

} // namespace sram9t
