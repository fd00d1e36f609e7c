#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "boxsum/opscript.hpp"
#include "boxsum/structure.hpp"

namespace boxsum {

// Executes the script in order against the structure and returns one value
// per query op. Output is deterministic: identical script and structure kind
// always produce identical results, and all structures agree on any valid
// script.
std::vector<Value> run_script(const OpScript& script, Structure& structure);

// Builds the structure for the script's dimension (throws on an unsupported
// dimension) and runs it.
std::vector<Value> run_script(const OpScript& script, StructureKind kind);

// One result line per query, decimal signed 64-bit, each '\n'-terminated.
std::string format_results(std::span<const Value> results);

// Index of the first position where the sequences differ (length mismatch
// counts at the shorter length), or nullopt when equal.
std::optional<std::size_t> first_divergence(std::span<const Value> a, std::span<const Value> b);

struct VerifyReport {
    bool ok = true;
    std::size_t ops_run = 0;
    // Populated on divergence: 1-based index among all ops, the structure
    // that disagreed with rurq, and both values.
    std::size_t divergent_op = 0;
    std::string structure;
    Value expected = 0;  // rurq's value
    Value actual = 0;
};

// Runs the script on rurq and the dense oracle, plus every baseline that
// supports the script's dimension, comparing each query result against
// rurq's. Stops at the first divergence.
VerifyReport verify_script(const OpScript& script);

}  // namespace boxsum
