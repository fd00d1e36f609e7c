#include "boxsum/rurq.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace boxsum {

RurqTree::RurqTree(int dim, std::int64_t side, std::uint64_t cell_cap)
    : dim_(dim), side_(side) {
    if (dim < 1) throw std::invalid_argument("dimension must be >= 1");
    if (dim > kMaxRurqDim) {
        throw std::invalid_argument("dimension " + std::to_string(dim) + " exceeds supported maximum " +
                                    std::to_string(kMaxRurqDim));
    }
    if (side < 1) throw std::invalid_argument("side length must be >= 1");

    const std::uint64_t count = std::uint64_t{1} << dim;
    // Per-tree cap of cell_cap / 2^d keeps the total at cell_cap.
    const std::uint64_t per_tree_cap = cell_cap / count;
    trees_.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) {
        trees_.emplace_back(dim, side, per_tree_cap);
    }
}

std::uint64_t RurqTree::allocated_cells() const {
    std::uint64_t total = 0;
    for (const auto& t : trees_) total += t.cell_count();
    return total;
}

void RurqTree::update(const Box& b, Value c) {
    check_box(b, dim_, side_);
    const auto d = static_cast<unsigned>(dim_);
    const std::uint32_t subsets = std::uint32_t{1} << d;
    const auto cw = static_cast<std::uint64_t>(c);

    std::int64_t corner[kMaxDim];
    for (std::uint32_t e = 0; e < subsets; ++e) {
        bool in_range = true;
        for (unsigned i = 0; i < d; ++i) {
            corner[i] = (e >> i & 1u) ? b.hi[i] + 1 : b.lo[i];
            if (corner[i] > side_) {
                in_range = false;
                break;
            }
        }
        if (!in_range) continue;

        const std::uint64_t w = (std::popcount(e) & 1) ? 0 - cw : cw;
        const std::span<const std::int64_t> q(corner, d);
        for (std::uint32_t mask = 0; mask < subsets; ++mask) {
            std::uint64_t coeff = w;
            for (unsigned i = 0; i < d; ++i) {
                if (!(mask >> i & 1u)) {
                    coeff *= std::uint64_t{1} - static_cast<std::uint64_t>(corner[i]);
                }
            }
            trees_[mask].point_update(q, static_cast<Value>(coeff));
        }
    }
}

Value RurqTree::prefix(std::span<const std::int64_t> p) const {
    check_coord(p, dim_, side_);
    const auto d = static_cast<unsigned>(dim_);
    const std::uint32_t subsets = std::uint32_t{1} << d;

    std::uint64_t acc = 0;
    for (std::uint32_t mask = 0; mask < subsets; ++mask) {
        std::uint64_t term = static_cast<std::uint64_t>(trees_[mask].prefix_query(p));
        for (unsigned i = 0; i < d; ++i) {
            if (mask >> i & 1u) term *= static_cast<std::uint64_t>(p[i]);
        }
        acc += term;
    }
    return static_cast<Value>(acc);
}

Value RurqTree::range_sum(const Box& b) const {
    check_box(b, dim_, side_);
    const auto d = static_cast<unsigned>(dim_);
    const std::uint32_t corners = std::uint32_t{1} << d;

    std::int64_t point[kMaxDim];
    std::uint64_t acc = 0;
    for (std::uint32_t e = 0; e < corners; ++e) {
        bool degenerate = false;
        for (unsigned i = 0; i < d; ++i) {
            point[i] = (e >> i & 1u) ? b.lo[i] - 1 : b.hi[i];
            if (point[i] == 0) {
                degenerate = true;
                break;
            }
        }
        if (degenerate) continue;

        const auto term = static_cast<std::uint64_t>(prefix(std::span<const std::int64_t>(point, d)));
        acc += (std::popcount(e) & 1) ? 0 - term : term;
    }
    return static_cast<Value>(acc);
}

std::uint64_t RurqTree::cells_touched() const {
    std::uint64_t total = 0;
    for (const auto& t : trees_) total += t.stats().cells_touched;
    return total;
}

std::uint64_t RurqTree::point_updates_performed() const {
    std::uint64_t total = 0;
    for (const auto& t : trees_) total += t.stats().update_traversals;
    return total;
}

std::uint64_t RurqTree::prefix_queries_performed() const {
    std::uint64_t total = 0;
    for (const auto& t : trees_) total += t.stats().query_traversals;
    return total;
}

std::uint64_t RurqTree::max_cells_per_traversal() const {
    std::uint64_t m = 0;
    for (const auto& t : trees_) m = std::max(m, t.stats().max_cells_per_traversal);
    return m;
}

void RurqTree::reset_stats() {
    for (auto& t : trees_) t.reset_stats();
}

}  // namespace boxsum
