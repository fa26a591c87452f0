#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sram9t/error.hpp"
#include "sram9t/sequencer.hpp"
#include "sram9t/trace.hpp"

using namespace sram9t;

TEST_CASE("XOR protocol expands to sample, reset, flip") {
    const Protocol p = build_xor_protocol({Logic::L1});
    REQUIRE(p.phases.size() == 3);
    CHECK(p.kind == ProtocolKind::XorTwoStep);
    CHECK(p.phases[0].kind == PhaseKind::SampleN);
    CHECK(p.phases[1].kind == PhaseKind::ConditionalReset);
    CHECK(p.phases[2].kind == PhaseKind::ConditionalFlip);
    CHECK(p.cycle_cost == 1);
}

TEST_CASE("B=1 columns get the negative pulse then the VDD pulse") {
    const Protocol p = build_xor_protocol({Logic::L1});
    const PhaseLines& step1 = p.phases[1].columns[0];
    CHECK(step1.dl == Logic::L1);
    CHECK(step1.blr == BlrDrive::Neg);
    CHECK(step1.wl1 == Logic::L0);
    const PhaseLines& step2 = p.phases[2].columns[0];
    CHECK(step2.dl == Logic::L1);
    CHECK(step2.blr == BlrDrive::Vdd);
}

TEST_CASE("B=0 columns stay grounded in both steps") {
    const Protocol p = build_xor_protocol({Logic::L0});
    for (std::size_t phase : {1u, 2u}) {
        const PhaseLines& l = p.phases[phase].columns[0];
        CHECK(l.dl == Logic::L0);
        CHECK(l.blr == BlrDrive::Gnd);
    }
}

TEST_CASE("columns are driven independently") {
    const Protocol p = build_xor_protocol({Logic::L1, Logic::L0});
    CHECK(p.phases[1].columns[0].blr == BlrDrive::Neg);
    CHECK(p.phases[1].columns[1].blr == BlrDrive::Gnd);
    CHECK(p.phases[2].columns[0].blr == BlrDrive::Vdd);
    CHECK(p.phases[2].columns[1].blr == BlrDrive::Gnd);
}

TEST_CASE("sampling phase raises WL1 only") {
    const Protocol p = build_xor_protocol({Logic::L1, Logic::L1});
    for (const PhaseLines& l : p.phases[0].columns) {
        CHECK(l.wl1 == Logic::L1);
        CHECK(l.wl2 == Logic::L0);
        CHECK(l.bl == BitlineDrive::Precharged);
        CHECK(l.blb == BitlineDrive::Precharged);
    }
}

TEST_CASE("operand entries must be bits") {
    CHECK_THROWS_AS(build_xor_protocol({Logic::X}), protocol_error);
    CHECK_THROWS_AS(build_xor_protocol({}), protocol_error);
}

TEST_CASE("toggle is XOR with all operands forced high") {
    const Protocol toggle = build_toggle_protocol(4);
    const Protocol xor_ones = build_xor_protocol(std::vector<Logic>(4, Logic::L1));
    CHECK(toggle.kind == ProtocolKind::Toggle);
    CHECK(toggle.phases == xor_ones.phases);
    CHECK(toggle.cycle_cost == xor_ones.cycle_cost);

    const Protocol one_col = build_toggle_protocol(1);
    CHECK(one_col.phases == build_xor_protocol({Logic::L1}).phases);
}

TEST_CASE("erase is step 1 only with every column driven") {
    const Protocol p = build_erase_protocol(3);
    REQUIRE(p.phases.size() == 2);
    CHECK(p.kind == ProtocolKind::Erase);
    CHECK(p.phases[0].kind == PhaseKind::SampleN);
    CHECK(p.phases[1].kind == PhaseKind::ConditionalReset);
    for (const PhaseLines& l : p.phases[1].columns) {
        CHECK(l.dl == Logic::L1);
        CHECK(l.blr == BlrDrive::Neg);
    }
    // structurally the first two phases of toggle
    const Protocol toggle = build_toggle_protocol(3);
    CHECK(p.phases[0] == toggle.phases[0]);
    CHECK(p.phases[1] == toggle.phases[1]);
}

TEST_CASE("cycle cost does not depend on geometry") {
    for (std::size_t cols : {1u, 4u, 64u, 256u}) {
        CHECK(build_xor_protocol(std::vector<Logic>(cols, Logic::L1)).cycle_cost == 1);
        CHECK(build_toggle_protocol(cols).cycle_cost == 1);
        CHECK(build_erase_protocol(cols).cycle_cost == 1);
    }
}

TEST_CASE("protocol expansion is deterministic") {
    const std::vector<Logic> b = {Logic::L1, Logic::L0, Logic::L1};
    CHECK(build_xor_protocol(b) == build_xor_protocol(b));
    CHECK(build_erase_protocol(5) == build_erase_protocol(5));
}

TEST_CASE("every generated phase passes line validation") {
    const std::vector<Logic> b = {Logic::L1, Logic::L0};
    for (const Protocol& p : {build_xor_protocol(b), build_toggle_protocol(2),
                              build_erase_protocol(2), build_write_protocol(b),
                              build_read_protocol(2)})
        for (const ProtocolPhase& phase : p.phases)
            for (const PhaseLines& l : phase.columns) CHECK_NOTHROW(validate_lines(l));
}

TEST_CASE("XOR-family protocols serialize to re-parsable trace text") {
    const Protocol p = build_xor_protocol({Logic::L1, Logic::L0, Logic::L1});
    const std::string text = "INIT 2 3\n" + to_trace_text(p);
    const trace::Program parsed = trace::Program::parse(text);
    REQUIRE(parsed.commands.size() == 3);
    CHECK(parsed.commands[1].op == trace::Op::LoadB);
    CHECK(parsed.commands[1].bits == std::vector<Logic>{Logic::L1, Logic::L0, Logic::L1});
    CHECK(parsed.commands[2].op == trace::Op::Xor);

    CHECK(to_trace_text(build_toggle_protocol(2)) == "TOGGLE\n");
    CHECK(to_trace_text(build_erase_protocol(2)) == "ERASE\n");
    CHECK_THROWS_AS(to_trace_text(build_read_protocol(2)), protocol_error);
}
