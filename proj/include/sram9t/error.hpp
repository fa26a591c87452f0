#pragma once

#include <stdexcept>
#include <string>

namespace sram9t {

// Sequencing/operand violations (stale node, bad mask, inconsistent lines).
class protocol_error : public std::runtime_error {
public:
    explicit protocol_error(const std::string& what) : std::runtime_error(what) {}
};

// Trace / parameter-file syntax problems.
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// Solver failures: no convergence, integration blow-up, no flip found.
class numeric_error : public std::runtime_error {
public:
    explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace sram9t
