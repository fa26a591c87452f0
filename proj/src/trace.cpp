#include "sram9t/trace.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "sram9t/array.hpp"
#include "sram9t/error.hpp"

namespace sram9t::trace {

namespace {

[[noreturn]] void fail_line(std::size_t line_no, const std::string& msg) {
    throw parse_error("line " + std::to_string(line_no) + ": " + msg);
}

std::vector<Logic> parse_bits(const std::string& token, std::size_t line_no) {
    std::vector<Logic> bits;
    bits.reserve(token.size());
    for (char ch : token) {
        auto v = logic_from_char(ch);
        if (!v || !is_bit(*v)) fail_line(line_no, "malformed bit string '" + token + "'");
        bits.push_back(*v);
    }
    if (bits.empty()) fail_line(line_no, "empty bit string");
    return bits;
}

std::size_t parse_index(const std::string& token, std::size_t line_no) {
    if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
        fail_line(line_no, "expected a non-negative integer, got '" + token + "'");
    return static_cast<std::size_t>(std::stoull(token));
}

std::string bits_to_string(const std::vector<Logic>& bits) {
    std::string s;
    s.reserve(bits.size());
    for (Logic b : bits) s += logic_to_char(b);
    return s;
}

} // namespace

Program Program::parse(const std::string& text) {
    Program program;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::string word;
        std::vector<std::string> tokens;
        while (fields >> word) tokens.push_back(word);
        if (tokens.empty()) continue;

        Command cmd;
        const std::string& op = tokens[0];
        const std::size_t nargs = tokens.size() - 1;
        if (op == "INIT") {
            if (nargs != 2) fail_line(line_no, "INIT takes <rows> <cols>");
            cmd.op = Op::Init;
            cmd.rows = parse_index(tokens[1], line_no);
            cmd.cols = parse_index(tokens[2], line_no);
            if (cmd.rows == 0 || cmd.cols == 0) fail_line(line_no, "INIT geometry must be nonzero");
        } else if (op == "LOADROW") {
            if (nargs != 2) fail_line(line_no, "LOADROW takes <row> <bits>");
            cmd.op = Op::LoadRow;
            cmd.row = parse_index(tokens[1], line_no);
            cmd.bits = parse_bits(tokens[2], line_no);
        } else if (op == "LOADB") {
            if (nargs != 1) fail_line(line_no, "LOADB takes <bits>");
            cmd.op = Op::LoadB;
            cmd.bits = parse_bits(tokens[1], line_no);
        } else if (op == "MASK") {
            if (nargs == 0) fail_line(line_no, "MASK takes at least one row index");
            cmd.op = Op::Mask;
            for (std::size_t i = 1; i < tokens.size(); ++i)
                cmd.mask_rows.push_back(parse_index(tokens[i], line_no));
        } else if (op == "XOR") {
            if (nargs != 0) fail_line(line_no, "XOR takes no arguments");
            cmd.op = Op::Xor;
        } else if (op == "TOGGLE") {
            if (nargs != 0) fail_line(line_no, "TOGGLE takes no arguments");
            cmd.op = Op::Toggle;
        } else if (op == "ERASE") {
            if (nargs != 0) fail_line(line_no, "ERASE takes no arguments");
            cmd.op = Op::Erase;
        } else if (op == "READROW") {
            if (nargs != 1) fail_line(line_no, "READROW takes <row>");
            cmd.op = Op::ReadRow;
            cmd.row = parse_index(tokens[1], line_no);
        } else if (op == "DUMP") {
            if (nargs != 1) fail_line(line_no, "DUMP takes <path>");
            cmd.op = Op::Dump;
            cmd.path = tokens[1];
        } else {
            fail_line(line_no, "unknown command '" + op + "'");
        }
        if (program.commands.empty() && cmd.op != Op::Init)
            fail_line(line_no, "INIT must precede all other commands");
        if (!program.commands.empty() && cmd.op == Op::Init)
            fail_line(line_no, "duplicate INIT");
        program.commands.push_back(std::move(cmd));
    }
    if (program.commands.empty()) throw parse_error("trace is empty");
    return program;
}

std::string Program::serialize() const {
    std::string out;
    for (const Command& cmd : commands) {
        switch (cmd.op) {
            case Op::Init:
                out += "INIT " + std::to_string(cmd.rows) + " " + std::to_string(cmd.cols);
                break;
            case Op::LoadRow:
                out += "LOADROW " + std::to_string(cmd.row) + " " + bits_to_string(cmd.bits);
                break;
            case Op::LoadB:
                out += "LOADB " + bits_to_string(cmd.bits);
                break;
            case Op::Mask: {
                out += "MASK";
                for (std::size_t r : cmd.mask_rows) out += " " + std::to_string(r);
                break;
            }
            case Op::Xor:
                out += "XOR";
                break;
            case Op::Toggle:
                out += "TOGGLE";
                break;
            case Op::Erase:
                out += "ERASE";
                break;
            case Op::ReadRow:
                out += "READROW " + std::to_string(cmd.row);
                break;
            case Op::Dump:
                out += "DUMP " + cmd.path;
                break;
        }
        out += '\n';
    }
    return out;
}

void run(const Program& program, std::ostream& out) {
    std::optional<Array> array;
    std::optional<RowMask> mask;
    for (const Command& cmd : program.commands) {
        switch (cmd.op) {
            case Op::Init:
                array.emplace(cmd.rows, cmd.cols);
                mask = RowMask::all(cmd.rows);
                break;
            case Op::LoadRow:
                array->write_row(cmd.row, cmd.bits);
                break;
            case Op::LoadB:
                array->load_operand_b(cmd.bits);
                break;
            case Op::Mask: {
                RowMask m = RowMask::none(array->rows());
                for (std::size_t r : cmd.mask_rows) {
                    if (r >= array->rows()) throw protocol_error("MASK row index out of range");
                    m.selected[r] = true;
                }
                mask = m;
                break;
            }
            case Op::Xor:
                array->xor_parallel(*mask);
                break;
            case Op::Toggle:
                array->toggle_all();
                break;
            case Op::Erase:
                array->erase_all();
                break;
            case Op::ReadRow: {
                const auto bits = array->read_row(cmd.row);
                out << bits_to_string(bits) << '\n';
                break;
            }
            case Op::Dump:
                array->save_text(cmd.path);
                break;
        }
    }
}

void run_trace_file(const std::string& path, std::ostream& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open trace file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    run(Program::parse(buf.str()), out);
}

} // namespace sram9t::trace
