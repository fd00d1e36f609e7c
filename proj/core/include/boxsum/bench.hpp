#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "boxsum/structure.hpp"
#include "boxsum/workload.hpp"

namespace boxsum {

// One benchmark measurement: a structure driven through a seeded workload.
struct BenchRow {
    std::string structure;
    int dim = 0;
    std::int64_t side = 0;
    std::uint64_t ops = 0;
    std::uint64_t seed = 0;
    double millis = 0.0;         // op execution only, construction excluded
    double ops_per_sec = 0.0;
    std::uint64_t visits = 0;    // 0 unless visit counting was requested
    std::uint64_t cells_allocated = 0;

    friend bool operator==(const BenchRow&, const BenchRow&) = default;
};

struct BenchReport {
    std::vector<BenchRow> rows;
    bool visits_counted = false;
};

struct BenchConfig {
    int dim = 2;
    std::vector<std::int64_t> sides;
    std::uint64_t ops = 0;
    std::uint64_t seed = 0;
    double update_mix = 0.5;
    std::vector<StructureKind> structures;
    bool count_visits = false;
};

// Generates one workload per side length and drives every requested
// structure through the identical op sequence, timing execution with
// construction kept separate (construction times go to `diagnostics` when
// given). Rows come back sorted by (structure, dim, side). Throws
// std::invalid_argument when a structure does not support cfg.dim.
BenchReport run_bench(const BenchConfig& cfg, std::ostream* diagnostics = nullptr);

// CSV with the fixed column order
// structure,d,n,ops,seed,millis,ops_per_sec,visits,cells_allocated.
// Doubles are printed shortest-round-trip, so from_csv(to_csv(r)) == r.
std::string to_csv(const BenchReport& report);
BenchReport report_from_csv(const std::string& text);

// Pivot table of wall millis, one row per side length and one column per
// structure; a second pivot of visit counts follows when they were counted.
std::string to_markdown(const BenchReport& report);

}  // namespace boxsum
