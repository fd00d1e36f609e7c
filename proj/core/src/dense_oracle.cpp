#include "boxsum/dense_oracle.hpp"

#include <stdexcept>
#include <string>

namespace boxsum {

DenseOracle::DenseOracle(int dim, std::int64_t side, std::uint64_t cell_cap)
    : dim_(dim), side_(side) {
    if (dim < 1) throw std::invalid_argument("dimension must be >= 1");
    if (dim > kMaxDim) throw std::invalid_argument("dimension exceeds supported maximum");
    if (side < 1) throw std::invalid_argument("side length must be >= 1");

    std::uint64_t cells = 1;
    for (int i = 0; i < dim; ++i) {
        const auto s = static_cast<std::uint64_t>(side);
        if (cells > cell_cap / s) {
            throw std::length_error("side^dim exceeds cell capacity " + std::to_string(cell_cap));
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

std::size_t DenseOracle::offset_of(std::span<const std::int64_t> p) const {
    std::size_t off = 0;
    for (int i = 0; i < dim_; ++i) off += static_cast<std::size_t>(p[i] - 1) * strides_[i];
    return off;
}

void DenseOracle::update(const Box& b, Value c) {
    check_box(b, dim_, side_);
    const auto w = static_cast<std::uint64_t>(c);

    // Odometer walk over the box, offset maintained incrementally.
    std::int64_t cur[kMaxDim];
    for (int i = 0; i < dim_; ++i) cur[i] = b.lo[i];
    std::size_t off = offset_of(std::span<const std::int64_t>(cur, dim_));

    for (;;) {
        cells_[off] += w;
        visits_.add();

        int k = dim_ - 1;
        while (k >= 0 && cur[k] == b.hi[k]) {
            off -= static_cast<std::size_t>(cur[k] - b.lo[k]) * strides_[k];
            cur[k] = b.lo[k];
            --k;
        }
        if (k < 0) break;
        ++cur[k];
        off += strides_[k];
    }
}

Value DenseOracle::query(const Box& b) const {
    check_box(b, dim_, side_);

    std::int64_t cur[kMaxDim];
    for (int i = 0; i < dim_; ++i) cur[i] = b.lo[i];
    std::size_t off = offset_of(std::span<const std::int64_t>(cur, dim_));

    std::uint64_t sum = 0;
    for (;;) {
        sum += cells_[off];
        visits_.add();

        int k = dim_ - 1;
        while (k >= 0 && cur[k] == b.hi[k]) {
            off -= static_cast<std::size_t>(cur[k] - b.lo[k]) * strides_[k];
            cur[k] = b.lo[k];
            --k;
        }
        if (k < 0) break;
        ++cur[k];
        off += strides_[k];
    }
    return static_cast<Value>(sum);
}

Value DenseOracle::cell(std::span<const std::int64_t> p) const {
    check_coord(p, dim_, side_);
    visits_.add();
    return static_cast<Value>(cells_[offset_of(p)]);
}

}  // namespace boxsum
