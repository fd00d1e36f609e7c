#pragma once

#include <cstdint>
#include <vector>

#include "boxsum/box.hpp"
#include "boxsum/visit_counter.hpp"

namespace boxsum {

// Lazy quadtree (dim 2) / octree (dim 3) over [1..n]^d, padded up to the next
// power of two. Nodes are allocated on demand in a pool; each internal node
// splits its cube into 2^d half-side children. A range update tags the
// maximal fully-covered nodes; tags are pushed to children when an update or
// query descends past a tagged node.
//
// Tags are only ever placed on nodes fully inside some update box, and update
// and query boxes live in [1..n]^d, so padding cells never acquire value and
// never contribute to a sum.
//
// A visit is a node descent or a pending-tag application to a child during a
// push. Single-threaded per structure (queries push tags down).
class RegionTree {
public:
    // dim must be 2 (quadtree) or 3 (octree).
    RegionTree(int dim, std::int64_t side);

    int dim() const { return dim_; }
    std::int64_t side() const { return side_; }
    std::int64_t padded_side() const { return padded_; }

    // Nodes currently allocated, root included. Never exceeds
    // (2 * padded_side)^dim.
    std::uint64_t allocated_nodes() const { return nodes_allocated_; }

    void update(const Box& b, Value c);
    Value query(const Box& b);

    const VisitCounter& visits() const { return visits_; }
    void reset_visits() { visits_.reset(); }

private:
    struct NodeData {
        std::uint64_t sum = 0;
        std::uint64_t tag = 0;
    };

    std::uint32_t alloc_node();
    void apply(std::uint32_t node, std::uint64_t add, std::int64_t half);
    void push(std::uint32_t node, std::int64_t half);
    void update_rec(std::uint32_t node, const std::int64_t* base, std::int64_t span,
                    const Box& b, std::uint64_t add);
    std::uint64_t query_rec(std::uint32_t node, const std::int64_t* base, std::int64_t span,
                            const Box& b);

    int dim_;
    int kids_;
    std::int64_t side_;
    std::int64_t padded_;
    std::vector<NodeData> nodes_;
    std::vector<std::uint32_t> children_;  // kids_ slots per node, 0 = absent
    std::uint64_t nodes_allocated_ = 0;
    VisitCounter visits_;
};

}  // namespace boxsum
