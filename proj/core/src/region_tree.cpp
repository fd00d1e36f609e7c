#include "boxsum/region_tree.hpp"

#include <bit>
#include <stdexcept>

namespace boxsum {

RegionTree::RegionTree(int dim, std::int64_t side) : dim_(dim), side_(side) {
    if (dim != 2 && dim != 3) throw std::invalid_argument("region tree supports dimension 2 or 3");
    if (side < 1) throw std::invalid_argument("side length must be >= 1");
    kids_ = 1 << dim;
    padded_ = static_cast<std::int64_t>(std::bit_ceil(static_cast<std::uint64_t>(side)));
    nodes_.emplace_back();                 // index 0 is the null sentinel
    children_.assign(static_cast<std::size_t>(kids_), 0);
    alloc_node();                          // root at index 1
}

std::uint32_t RegionTree::alloc_node() {
    const auto idx = static_cast<std::uint32_t>(nodes_.size());
    nodes_.emplace_back();
    children_.resize(children_.size() + static_cast<std::size_t>(kids_), 0);
    ++nodes_allocated_;
    return idx;
}

void RegionTree::apply(std::uint32_t node, std::uint64_t add, std::int64_t span) {
    std::uint64_t volume = 1;
    for (int i = 0; i < dim_; ++i) volume *= static_cast<std::uint64_t>(span);
    nodes_[node].sum += add * volume;
    nodes_[node].tag += add;
}

void RegionTree::push(std::uint32_t node, std::int64_t span) {
    const std::uint64_t tag = nodes_[node].tag;
    if (tag == 0) return;
    for (int q = 0; q < kids_; ++q) {
        // alloc_node() grows children_, so index the slot after allocating.
        const std::size_t slot = static_cast<std::size_t>(node) * kids_ + q;
        std::uint32_t child = children_[slot];
        if (child == 0) {
            child = alloc_node();
            children_[slot] = child;
        }
        apply(child, tag, span / 2);
        visits_.add();
    }
    nodes_[node].tag = 0;
}

void RegionTree::update_rec(std::uint32_t node, const std::int64_t* base, std::int64_t span,
                            const Box& b, std::uint64_t add) {
    visits_.add();

    bool covered = true;
    for (int i = 0; i < dim_; ++i) {
        if (b.lo[i] > base[i] || base[i] + span - 1 > b.hi[i]) {
            covered = false;
            break;
        }
    }
    if (covered) {
        apply(node, add, span);
        return;
    }

    push(node, span);
    const std::int64_t half = span / 2;
    std::int64_t child_base[3];
    for (int q = 0; q < kids_; ++q) {
        bool overlaps = true;
        for (int i = 0; i < dim_; ++i) {
            child_base[i] = base[i] + ((q >> i & 1) ? half : 0);
            if (child_base[i] > b.hi[i] || child_base[i] + half - 1 < b.lo[i]) {
                overlaps = false;
                break;
            }
        }
        if (!overlaps) continue;
        const std::size_t slot = static_cast<std::size_t>(node) * kids_ + q;
        std::uint32_t child = children_[slot];
        if (child == 0) {
            child = alloc_node();
            children_[slot] = child;
        }
        update_rec(child, child_base, half, b, add);
    }

    std::uint64_t sum = 0;
    for (int q = 0; q < kids_; ++q) {
        const std::uint32_t child = children_[static_cast<std::size_t>(node) * kids_ + q];
        if (child != 0) sum += nodes_[child].sum;
    }
    nodes_[node].sum = sum;
}

std::uint64_t RegionTree::query_rec(std::uint32_t node, const std::int64_t* base, std::int64_t span,
                                    const Box& b) {
    visits_.add();

    bool covered = true;
    for (int i = 0; i < dim_; ++i) {
        if (b.lo[i] > base[i] || base[i] + span - 1 > b.hi[i]) {
            covered = false;
            break;
        }
    }
    if (covered) return nodes_[node].sum;

    push(node, span);
    const std::int64_t half = span / 2;
    std::int64_t child_base[3];
    std::uint64_t sum = 0;
    for (int q = 0; q < kids_; ++q) {
        bool overlaps = true;
        for (int i = 0; i < dim_; ++i) {
            child_base[i] = base[i] + ((q >> i & 1) ? half : 0);
            if (child_base[i] > b.hi[i] || child_base[i] + half - 1 < b.lo[i]) {
                overlaps = false;
                break;
            }
        }
        if (!overlaps) continue;
        const std::uint32_t child = children_[static_cast<std::size_t>(node) * kids_ + q];
        if (child == 0) continue;
        sum += query_rec(child, child_base, half, b);
    }
    return sum;
}

void RegionTree::update(const Box& b, Value c) {
    check_box(b, dim_, side_);
    const std::int64_t base[3] = {1, 1, 1};
    update_rec(1, base, padded_, b, static_cast<std::uint64_t>(c));
}

Value RegionTree::query(const Box& b) {
    check_box(b, dim_, side_);
    const std::int64_t base[3] = {1, 1, 1};
    return static_cast<Value>(query_rec(1, base, padded_, b));
}

}  // namespace boxsum
