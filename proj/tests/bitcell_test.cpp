#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sram9t/bitcell.hpp"
#include "sram9t/error.hpp"

using namespace sram9t;

namespace {

const Logic kBits[] = {Logic::L0, Logic::L1};

CellState run_two_step(Logic a, Logic b) {
    CellState s = init_cell(a);
    s = phase_sample_n(s);
    s = phase_conditional_reset(s, b);
    s = phase_conditional_flip(s, b);
    return s;
}

} // namespace

TEST_CASE("init_cell stores the bit and complements vy") {
    const CellState one = init_cell(Logic::L1);
    CHECK(one.vx == Logic::L1);
    CHECK(one.vy == Logic::L0);
    CHECK(one.n.read() == Logic::X);

    const CellState zero = init_cell(Logic::L0);
    CHECK(zero.vx == Logic::L0);
    CHECK(zero.vy == Logic::L1);
    CHECK(zero.n.read() == Logic::X);

    CHECK_THROWS_AS(init_cell(Logic::X), protocol_error);
}

TEST_CASE("sampling copies vy onto node N") {
    CellState one = phase_sample_n(init_cell(Logic::L1));
    CHECK(one.n.read() == Logic::L0);
    CHECK(one.vx == Logic::L1);
    CHECK(one.vy == Logic::L0);

    CellState zero = phase_sample_n(init_cell(Logic::L0));
    CHECK(zero.n.read() == Logic::L1);

    // fixed point
    CellState twice = phase_sample_n(one);
    CHECK(twice.n.read() == one.n.read());
    CHECK(twice.vx == one.vx);
}

TEST_CASE("conditional reset follows the DL operand") {
    // stored 1, B=1: reset pulls vx low
    CellState s = phase_sample_n(init_cell(Logic::L1));
    s = phase_conditional_reset(s, Logic::L1);
    CHECK(s.vx == Logic::L0);
    CHECK(s.vy == Logic::L1);
    CHECK(s.n.read() == Logic::L0);  // node keeps the sampled value

    // stored 0, B=1: stays reset
    CellState z = phase_sample_n(init_cell(Logic::L0));
    z = phase_conditional_reset(z, Logic::L1);
    CHECK(z.vx == Logic::L0);
    CHECK(z.n.read() == Logic::L1);

    // B=0 leaves the cell alone
    CellState h = phase_sample_n(init_cell(Logic::L1));
    h = phase_conditional_reset(h, Logic::L0);
    CHECK(h.vx == Logic::L1);
    CHECK(h.vy == Logic::L0);
}

TEST_CASE("conditional flip raises vx only on a high sampled node") {
    CellState up = phase_sample_n(init_cell(Logic::L0));  // n = 1
    up = phase_conditional_reset(up, Logic::L1);
    up = phase_conditional_flip(up, Logic::L1);
    CHECK(up.vx == Logic::L1);
    CHECK(up.vy == Logic::L0);

    CellState stay = phase_sample_n(init_cell(Logic::L1));  // n = 0
    stay = phase_conditional_reset(stay, Logic::L1);
    stay = phase_conditional_flip(stay, Logic::L1);
    CHECK(stay.vx == Logic::L0);

    for (Logic a : kBits) {
        CellState idle = phase_sample_n(init_cell(a));
        const CellState after = phase_conditional_flip(idle, Logic::L0);
        CHECK(after.vx == idle.vx);
        CHECK(after.vy == idle.vy);
    }
}

TEST_CASE("reset and flip need a fresh node when driven") {
    CellState stale = init_cell(Logic::L1);  // never sampled
    CHECK_THROWS_AS(phase_conditional_reset(stale, Logic::L1), protocol_error);
    CHECK_THROWS_AS(phase_conditional_flip(stale, Logic::L1), protocol_error);
    // undriven columns do not care
    CHECK_NOTHROW(phase_conditional_reset(stale, Logic::L0));
}

TEST_CASE("node value expires after its ttl") {
    CellState s = phase_sample_n(init_cell(Logic::L0));
    for (int i = 0; i < kDefaultNodeTtl; ++i) s = phase_conditional_flip(s, Logic::L0);
    CHECK(s.n.read() == Logic::L1);  // age == ttl still valid
    s = phase_conditional_flip(s, Logic::L0);
    CHECK(s.n.read() == Logic::X);  // expired
    CHECK_THROWS_AS(phase_conditional_reset(s, Logic::L1), protocol_error);
}

TEST_CASE("write sets the cell and invalidates the node") {
    CellState s = phase_sample_n(init_cell(Logic::L0));
    CHECK(s.n.read() == Logic::L1);
    s = phase_write(s, Logic::L1);
    CHECK(s.vx == Logic::L1);
    CHECK(s.vy == Logic::L0);
    CHECK(s.n.read() == Logic::X);

    const CellState same = phase_write(init_cell(Logic::L0), Logic::L0);
    CHECK(same.vx == Logic::L0);
    CHECK_THROWS_AS(phase_write(s, Logic::X), protocol_error);
}

TEST_CASE("read is non-destructive and round-trips a write") {
    for (Logic b : kBits) {
        const CellState s = phase_write(init_cell(Logic::L0), b);
        CHECK(phase_read(s) == b);
        CHECK(s.vx == b);
    }
}

TEST_CASE("stress accumulates by stored polarity") {
    CellState s = init_cell(Logic::L1);
    s = accumulate_stress(s, 10.0);
    CHECK(s.stress1 == doctest::Approx(10.0));
    CHECK(s.stress0 == doctest::Approx(0.0));

    s = accumulate_stress(s, 0.0);
    CHECK(s.stress1 == doctest::Approx(10.0));

    s = phase_write(s, Logic::L0);
    s = accumulate_stress(s, 5.0);
    CHECK(s.stress0 == doctest::Approx(5.0));
    CHECK(s.stress0 + s.stress1 == doctest::Approx(15.0));
}

TEST_CASE("two-step sequence computes XOR for every operand pair") {
    for (Logic a : kBits)
        for (Logic b : kBits) {
            const CellState s = run_two_step(a, b);
            CHECK(s.vx == logic_xor(a, b));
            CHECK(s.vy == logic_not(s.vx));
        }
}

TEST_CASE("vy complements vx after every phase") {
    for (Logic a : kBits)
        for (Logic b : kBits) {
            CellState s = init_cell(a);
            CHECK(s.vy == logic_not(s.vx));
            s = phase_sample_n(s);
            CHECK(s.vy == logic_not(s.vx));
            s = phase_conditional_reset(s, b);
            CHECK(s.vy == logic_not(s.vx));
            s = phase_conditional_flip(s, b);
            CHECK(s.vy == logic_not(s.vx));
            s = phase_write(s, b);
            CHECK(s.vy == logic_not(s.vx));
        }
}

TEST_CASE("sequence with B=0 is the identity") {
    for (Logic a : kBits) {
        const CellState s = run_two_step(a, Logic::L0);
        CHECK(s.vx == a);
        CHECK(s.vy == logic_not(a));
    }
}

TEST_CASE("running the sequence twice with the same operand restores A") {
    for (Logic a : kBits)
        for (Logic b : kBits) {
            CellState s = run_two_step(a, b);
            s = phase_sample_n(s);
            s = phase_conditional_reset(s, b);
            s = phase_conditional_flip(s, b);
            CHECK(s.vx == a);
        }
}

TEST_CASE("line validation enforces pulse and drive preconditions") {
    PhaseLines neg_with_wl1;
    neg_with_wl1.wl1 = Logic::L1;
    neg_with_wl1.blr = BlrDrive::Neg;
    CHECK_THROWS_AS(validate_lines(neg_with_wl1), protocol_error);

    PhaseLines drive_without_wl;
    drive_without_wl.bl = BitlineDrive::Drive1;
    CHECK_THROWS_AS(validate_lines(drive_without_wl), protocol_error);

    PhaseLines ok_write;
    ok_write.wl1 = Logic::L1;
    ok_write.wl2 = Logic::L1;
    ok_write.bl = BitlineDrive::Drive1;
    ok_write.blb = BitlineDrive::Drive0;
    CHECK_NOTHROW(validate_lines(ok_write));
}

TEST_CASE("apply_phase cross-checks line consistency") {
    const CellState s = phase_sample_n(init_cell(Logic::L1));

    PhaseLines bad_reset;  // DL high but BLR not negative
    bad_reset.dl = Logic::L1;
    bad_reset.blr = BlrDrive::Gnd;
    CHECK_THROWS_AS(apply_phase(s, PhaseKind::ConditionalReset, bad_reset), protocol_error);

    PhaseLines wl2_high;  // WL2 asserted during an XOR phase is forbidden
    wl2_high.wl1 = Logic::L1;
    wl2_high.wl2 = Logic::L1;
    CHECK_THROWS_AS(apply_phase(s, PhaseKind::SampleN, wl2_high), protocol_error);
}
