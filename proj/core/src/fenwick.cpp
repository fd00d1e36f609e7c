#include "boxsum/fenwick.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace boxsum {

namespace {

inline std::int64_t lowbit(std::int64_t i) { return i & -i; }

}  // namespace

FenwickNd::FenwickNd(int dim, std::int64_t side, std::uint64_t cell_cap)
    : dim_(dim), side_(side) {
    if (dim < 1) throw std::invalid_argument("dimension must be >= 1");
    if (dim > kMaxDim) {
        throw std::invalid_argument("dimension " + std::to_string(dim) + " exceeds supported maximum " +
                                    std::to_string(kMaxDim));
    }
    if (side < 1) throw std::invalid_argument("side length must be >= 1");

    std::uint64_t cells = 1;
    for (int i = 0; i < dim; ++i) {
        const auto s = static_cast<std::uint64_t>(side);
        if (cells > cell_cap / s) {
            throw std::length_error("side^dim = " + std::to_string(side) + "^" + std::to_string(dim) +
                                    " exceeds cell capacity " + std::to_string(cell_cap));
        }
        cells *= s;
    }

    strides_.resize(dim);
    std::size_t stride = 1;
    for (int i = dim - 1; i >= 0; --i) {
        strides_[i] = stride;
        stride *= static_cast<std::size_t>(side);
    }
    cells_.assign(cells, 0);
}

void FenwickNd::add_recursive(int k, std::size_t offset, std::span<const std::int64_t> p,
                              std::uint64_t w, std::uint64_t& touched) {
    if (k == dim_) {
        cells_[offset] += w;
        ++touched;
        return;
    }
    const std::size_t stride = strides_[k];
    for (std::int64_t i = p[k]; i <= side_; i += lowbit(i)) {
        add_recursive(k + 1, offset + static_cast<std::size_t>(i - 1) * stride, p, w, touched);
    }
}

std::uint64_t FenwickNd::sum_recursive(int k, std::size_t offset, std::span<const std::int64_t> p,
                                       std::uint64_t& touched) const {
    std::uint64_t sum = 0;
    if (k == dim_) {
        ++touched;
        return cells_[offset];
    }
    const std::size_t stride = strides_[k];
    for (std::int64_t i = p[k]; i > 0; i -= lowbit(i)) {
        sum += sum_recursive(k + 1, offset + static_cast<std::size_t>(i - 1) * stride, p, touched);
    }
    return sum;
}

void FenwickNd::point_update(std::span<const std::int64_t> p, Value v) {
    check_coord(p, dim_, side_);
    const auto w = static_cast<std::uint64_t>(v);
    std::uint64_t touched = 0;

    if (dim_ == 1) {
        for (std::int64_t i = p[0]; i <= side_; i += lowbit(i)) {
            cells_[static_cast<std::size_t>(i - 1)] += w;
            ++touched;
        }
    } else if (dim_ == 2) {
        const std::size_t n = static_cast<std::size_t>(side_);
        for (std::int64_t i = p[0]; i <= side_; i += lowbit(i)) {
            std::uint64_t* row = cells_.data() + static_cast<std::size_t>(i - 1) * n;
            for (std::int64_t j = p[1]; j <= side_; j += lowbit(j)) {
                row[j - 1] += w;
                ++touched;
            }
        }
    } else {
        add_recursive(0, 0, p, w, touched);
    }

    stats_.cells_touched += touched;
    ++stats_.update_traversals;
    if (touched > stats_.max_cells_per_traversal) stats_.max_cells_per_traversal = touched;
}

Value FenwickNd::prefix_query(std::span<const std::int64_t> p) const {
    check_coord(p, dim_, side_);
    std::uint64_t sum = 0;
    std::uint64_t touched = 0;

    if (dim_ == 1) {
        for (std::int64_t i = p[0]; i > 0; i -= lowbit(i)) {
            sum += cells_[static_cast<std::size_t>(i - 1)];
            ++touched;
        }
    } else if (dim_ == 2) {
        const std::size_t n = static_cast<std::size_t>(side_);
        for (std::int64_t i = p[0]; i > 0; i -= lowbit(i)) {
            const std::uint64_t* row = cells_.data() + static_cast<std::size_t>(i - 1) * n;
            for (std::int64_t j = p[1]; j > 0; j -= lowbit(j)) {
                sum += row[j - 1];
                ++touched;
            }
        }
    } else {
        sum = sum_recursive(0, 0, p, touched);
    }

    stats_.cells_touched += touched;
    ++stats_.query_traversals;
    if (touched > stats_.max_cells_per_traversal) stats_.max_cells_per_traversal = touched;
    return static_cast<Value>(sum);
}

void FenwickNd::range_update(const Box& b, Value v) {
    check_box(b, dim_, side_);
    const auto d = static_cast<unsigned>(dim_);
    std::int64_t corner[kMaxDim];

    for (std::uint32_t e = 0; e < (std::uint32_t{1} << d); ++e) {
        bool in_range = true;
        for (unsigned i = 0; i < d; ++i) {
            corner[i] = (e >> i & 1u) ? b.hi[i] + 1 : b.lo[i];
            if (corner[i] > side_) {
                in_range = false;
                break;
            }
        }
        if (!in_range) continue;
        const auto w = static_cast<std::uint64_t>(v);
        const bool negative = std::popcount(e) & 1;
        point_update(std::span<const std::int64_t>(corner, d),
                     static_cast<Value>(negative ? 0 - w : w));
    }
}

Value FenwickNd::point_query(std::span<const std::int64_t> p) const {
    return prefix_query(p);
}

}  // namespace boxsum
