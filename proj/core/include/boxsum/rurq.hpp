#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "boxsum/box.hpp"
#include "boxsum/fenwick.hpp"

namespace boxsum {

// Simultaneous range-update range-query structure over a d-dimensional
// [1..n]^d array, built from exactly 2^d coefficient FenwickNd trees.
//
// After a series of box updates, the change to any prefix sum is a
// multilinear polynomial in the query coordinates. Tree index S (a bitmask
// over the d dimensions) stores the coefficient of the monomial
// prod_{i in S} x_i, so
//
//   prefix(x) = sum_S prefix_query(trees[S], x) * prod_{i in S} x_i.
//
// A box update [lo, hi] += c decomposes into up to 2^d signed suffix updates
// at the box corners; a suffix update of weight w at corner q contributes
// w * prod_i (x_i - q_i + 1) to every prefix(x) with x >= q, which expands in
// the multilinear basis as a point update of w * prod_{i not in S} (1 - q_i)
// at q in trees[S]. Corners with any component > n affect nothing and are
// skipped.
//
// One update issues at most 2^d * 2^d point-updates and one range_sum at most
// 2^d * 2^d prefix-queries, each traversal touching <= (floor(log2 n) + 1)^d
// cells.
//
// Concurrency matches FenwickNd: readers or one writer, caller-serialized;
// visit counters are only reliable under fully serialized access.
class RurqTree {
public:
    // Highest dimension accepted; keeps the 2^d tree fan-out sane.
    static constexpr int kMaxRurqDim = 16;

    // Throws std::invalid_argument for bad dim/side and std::length_error
    // when the total 2^d * n^d cell count exceeds cell_cap.
    RurqTree(int dim, std::int64_t side, std::uint64_t cell_cap = FenwickNd::kDefaultCellCap);

    int dim() const { return dim_; }
    std::int64_t side() const { return side_; }
    std::size_t tree_count() const { return trees_.size(); }

    // Total cells across all coefficient trees: exactly 2^d * n^d.
    std::uint64_t allocated_cells() const;

    // Adds c to every element of b.
    void update(const Box& b, Value c);

    // Sum of all elements in [1..1 : p], i.e. the prefix box ending at p.
    Value prefix(std::span<const std::int64_t> p) const;

    // Sum of all elements in b, by inclusion-exclusion over prefix() values;
    // prefix terms with any coordinate 0 contribute 0 without traversal.
    Value range_sum(const Box& b) const;

    // Counters aggregated across the coefficient trees.
    std::uint64_t cells_touched() const;
    std::uint64_t point_updates_performed() const;
    std::uint64_t prefix_queries_performed() const;
    std::uint64_t max_cells_per_traversal() const;
    void reset_stats();

private:
    int dim_;
    std::int64_t side_;
    std::vector<FenwickNd> trees_;
};

}  // namespace boxsum
