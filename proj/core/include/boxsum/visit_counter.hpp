#pragma once

#include <cstdint>

namespace boxsum {

// Deterministic instrument counting node/cell touches. Monotone
// non-decreasing between resets.
struct VisitCounter {
    std::uint64_t nodes_visited = 0;

    void add(std::uint64_t n = 1) { nodes_visited += n; }
    void reset() { nodes_visited = 0; }
};

}  // namespace boxsum
