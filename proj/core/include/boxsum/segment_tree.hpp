#pragma once

#include <cstdint>
#include <vector>

#include "boxsum/box.hpp"
#include "boxsum/visit_counter.hpp"

namespace boxsum {

// 1D range-add range-sum segment tree with lazy propagation, over an
// implicit binary tree padded to the next power of two. Padding cells are
// never updated and contribute nothing.
//
// A visit is one descent into a node during an update or query; pending-tag
// writes into children during a push are part of the parent's work and are
// not counted separately. Any single op visits at most
// 4 * (floor(log2 n_pad) + 1) nodes.
//
// Single-threaded per structure (queries push tags down).
class LazySegTree1D {
public:
    explicit LazySegTree1D(std::int64_t side);

    std::int64_t side() const { return side_; }
    std::int64_t padded_side() const { return padded_; }

    // Number of 64-bit words held by the tree (sums plus tags).
    std::uint64_t allocated_cells() const { return sums_.size() + tags_.size(); }

    void update(const Box& b, Value c);
    Value query(const Box& b);

    const VisitCounter& visits() const { return visits_; }
    void reset_visits() { visits_.reset(); }

private:
    void apply(std::size_t node, std::uint64_t add, std::int64_t len);
    void push(std::size_t node, std::int64_t len);
    void update_rec(std::size_t node, std::int64_t nl, std::int64_t nr,
                    std::int64_t l, std::int64_t r, std::uint64_t add);
    std::uint64_t query_rec(std::size_t node, std::int64_t nl, std::int64_t nr,
                            std::int64_t l, std::int64_t r);

    std::int64_t side_;
    std::int64_t padded_;
    std::vector<std::uint64_t> sums_;
    std::vector<std::uint64_t> tags_;
    VisitCounter visits_;
};

}  // namespace boxsum
