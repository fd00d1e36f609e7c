#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "boxsum/box.hpp"

namespace boxsum {

// One scripted operation: add a constant over a box, or query a box sum.
struct Operation {
    enum class Kind { update, query };

    Kind kind;
    Box box;
    Value constant = 0;  // meaningful for updates only

    friend bool operator==(const Operation&, const Operation&) = default;
};

// A deterministic operation sequence against a d-dimensional side-n array.
// Operations execute strictly in order.
struct OpScript {
    int dim = 0;
    std::int64_t side = 0;
    std::vector<Operation> ops;

    friend bool operator==(const OpScript&, const OpScript&) = default;
};

// Parse or validation failure, with the 1-based script line it occurred on.
class ScriptError : public std::runtime_error {
public:
    ScriptError(std::size_t line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Parses the text script format. One item per line, whitespace separated,
// '#' starts a comment, blank lines ignored. Coordinates are 1-based
// inclusive. Grammar:
//
//   init <d> <n>
//   update <l1> ... <ld> <r1> ... <rd> <c>
//   query  <l1> ... <ld> <r1> ... <rd>
//
// Constants are signed 64-bit decimals; a literal outside int64 range is a
// parse error (arithmetic during execution wraps). Throws ScriptError on
// syntax errors, range violations, and empty boxes.
OpScript parse_script(std::string_view text);

// Inverse of parse_script: emits a canonical script that parses back equal.
std::string format_script(const OpScript& script);

}  // namespace boxsum
