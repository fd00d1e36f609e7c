#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "boxsum/box.hpp"

namespace boxsum {

// Cumulative cell-touch counters for one FenwickNd. `max_cells_per_traversal`
// is the largest number of cells any single point_update / prefix_query /
// point_query touched since the last reset.
struct TraversalStats {
    std::uint64_t cells_touched = 0;
    std::uint64_t update_traversals = 0;
    std::uint64_t query_traversals = 0;
    std::uint64_t max_cells_per_traversal = 0;
};

// d-dimensional Binary Indexed Tree over a cubic [1..n]^d index space, stored
// as one flat row-major buffer of n^d 64-bit cells with a precomputed stride
// table. Supports two readings that share the same storage:
//
//   * point-update / prefix-query:  point_update + prefix_query
//   * range-update / point-query:   range_update + point_query
//
// Do not mix the two readings on one instance; the stored coefficients mean
// different things.
//
// All arithmetic wraps modulo 2^64. A single traversal touches at most
// (floor(log2 n) + 1)^d cells.
//
// Not internally synchronized: many concurrent readers or one writer, with
// writes serialized against reads by the caller. Query traversals bump the
// visit counters through a mutable field, so counter values are reliable only
// when access is fully serialized; query results stay correct regardless.
class FenwickNd {
public:
    // Default capacity: enough for one 2D side-4000 tree or one 3D side-200
    // tree with room to spare, while keeping a single structure under ~1 GiB.
    static constexpr std::uint64_t kDefaultCellCap = std::uint64_t{1} << 27;

    // Throws std::invalid_argument for dim/side of 0 or dim > kMaxDim, and
    // std::length_error when side^dim exceeds cell_cap.
    FenwickNd(int dim, std::int64_t side, std::uint64_t cell_cap = kDefaultCellCap);

    int dim() const { return dim_; }
    std::int64_t side() const { return side_; }
    std::size_t cell_count() const { return cells_.size(); }

    // Adds v at position p: every prefix_query(q) with q >= p componentwise
    // grows by v.
    void point_update(std::span<const std::int64_t> p, Value v);

    // Sum of all point_update contributions at positions <= p componentwise.
    Value prefix_query(std::span<const std::int64_t> p) const;

    // Adds v to every position inside b, for the point_query reading.
    // Decomposes into up to 2^d signed corner point-updates; corners that
    // fall outside [1..n]^d affect nothing and are skipped.
    void range_update(const Box& b, Value v);

    // Current value at position p under the range_update reading. Traversal
    // identical to prefix_query.
    Value point_query(std::span<const std::int64_t> p) const;

    const TraversalStats& stats() const { return stats_; }
    void reset_stats() { stats_ = TraversalStats{}; }

private:
    void add_recursive(int k, std::size_t offset, std::span<const std::int64_t> p,
                       std::uint64_t w, std::uint64_t& touched);
    std::uint64_t sum_recursive(int k, std::size_t offset, std::span<const std::int64_t> p,
                                std::uint64_t& touched) const;

    int dim_;
    std::int64_t side_;
    std::vector<std::size_t> strides_;
    std::vector<std::uint64_t> cells_;
    mutable TraversalStats stats_;
};

}  // namespace boxsum
