#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "sram9t/error.hpp"
#include "sram9t/trace.hpp"

using namespace sram9t;

namespace {

std::string run_text(const std::string& text) {
    std::ostringstream out;
    trace::run(trace::Program::parse(text), out);
    return out.str();
}

} // namespace

TEST_CASE("single-cell XOR trace prints the truth-table result") {
    const std::string text =
        "INIT 1 1\nLOADROW 0 1\nLOADB 1\nMASK 0\nXOR\nREADROW 0\n";
    CHECK(run_text(text) == "0\n");
}

TEST_CASE("double toggle restores the written data") {
    const std::string text =
        "INIT 2 4\nLOADROW 0 1010\nLOADROW 1 0110\nTOGGLE\nTOGGLE\nREADROW 0\nREADROW 1\n";
    CHECK(run_text(text) == "1010\n0110\n");
}

TEST_CASE("erase zeroes the array") {
    CHECK(run_text("INIT 1 4\nLOADROW 0 1111\nERASE\nREADROW 0\n") == "0000\n");
}

TEST_CASE("masked XOR only touches selected rows") {
    const std::string text =
        "INIT 3 2\nLOADROW 0 11\nLOADROW 1 11\nLOADROW 2 11\n"
        "LOADB 11\nMASK 0 2\nXOR\nREADROW 0\nREADROW 1\nREADROW 2\n";
    CHECK(run_text(text) == "00\n11\n00\n");
}

TEST_CASE("comments and blank lines are ignored") {
    const std::string text =
        "# demo\nINIT 1 2\n\nLOADROW 0 10   # stored word\nREADROW 0\n";
    CHECK(run_text(text) == "10\n");
}

TEST_CASE("parse errors carry line numbers") {
    try {
        trace::Program::parse("INIT 1 2\nLOADROW 0 10a1\n");
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }

    CHECK_THROWS_AS(trace::Program::parse("LOADROW 0 1\n"), parse_error);   // INIT first
    CHECK_THROWS_AS(trace::Program::parse("INIT 1 1\nINIT 1 1\n"), parse_error);
    CHECK_THROWS_AS(trace::Program::parse("INIT 0 4\n"), parse_error);
    CHECK_THROWS_AS(trace::Program::parse("INIT 1 1\nFROB\n"), parse_error);
    CHECK_THROWS_AS(trace::Program::parse(""), parse_error);
}

TEST_CASE("geometry violations are protocol errors") {
    std::ostringstream out;
    CHECK_THROWS_AS(trace::run(trace::Program::parse("INIT 1 2\nLOADROW 0 101\n"), out),
                    protocol_error);
    CHECK_THROWS_AS(trace::run(trace::Program::parse("INIT 1 2\nMASK 3\n"), out),
                    protocol_error);
    CHECK_THROWS_AS(trace::run(trace::Program::parse("INIT 2 2\nREADROW 5\n"), out),
                    protocol_error);
}

TEST_CASE("serialize then parse is the identity") {
    const std::string text =
        "INIT 4 8\nLOADROW 0 10110010\nLOADB 00001111\nMASK 0 2 3\nXOR\nTOGGLE\nERASE\n"
        "READROW 0\nDUMP image.txt\n";
    const trace::Program program = trace::Program::parse(text);
    CHECK(trace::Program::parse(program.serialize()) == program);
    CHECK(program.serialize() == text);
}
