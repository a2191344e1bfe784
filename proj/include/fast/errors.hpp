#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fast {

// All simulator-level failures carry a kind so front ends can map them to
// distinct exit codes.
class SimError : public std::runtime_error {
public:
    enum class Kind {
        BadInput,               // malformed flags, geometry, routing, operands
        MalformedTrace,         // unparseable or invalid command trace
        CorruptedRow,           // read or shift of a poisoned row
        CalibrationInfeasible,  // shape fit missed a hard anchor
        ModelDivergence,        // simulator disagrees with the reference model
    };

    SimError(Kind kind, const std::string& msg, std::size_t line = 0)
        : std::runtime_error(msg), kind_(kind), line_(line) {}

    Kind kind() const { return kind_; }
    // 1-based input line for trace/schedule errors, 0 when not applicable.
    std::size_t line() const { return line_; }

private:
    Kind kind_;
    std::size_t line_;
};

}  // namespace fast
