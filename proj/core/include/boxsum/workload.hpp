#pragma once

#include <cstdint>

#include "boxsum/opscript.hpp"

namespace boxsum {

// Seeded random workload: a reproducible stream of box updates and box-sum
// queries with boxes uniform over all valid boxes and update constants
// uniform in [constant_min, constant_max].
struct WorkloadConfig {
    int dim = 1;
    std::int64_t side = 1;
    std::uint64_t op_count = 0;
    std::uint64_t seed = 0;
    // Fraction of ops that are updates, with 1/10000 resolution.
    double update_mix = 0.5;
    std::int64_t constant_min = -1'000'000;
    std::int64_t constant_max = 1'000'000;
};

// Deterministic generation from a SplitMix64 stream seeded with cfg.seed.
// Per op, the draw order is fixed: one draw for the op kind
// (update iff next() % 10000 < round(update_mix * 10000)), then per
// dimension two coordinate draws uniform(1, n) whose min/max become lo/hi,
// then for updates one constant draw uniform(constant_min, constant_max).
// Identical configs yield byte-identical scripts under format_script.
// Throws std::invalid_argument on a bad config.
OpScript generate_workload(const WorkloadConfig& cfg);

}  // namespace boxsum
