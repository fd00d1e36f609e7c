#include "boxsum/segment_tree.hpp"

#include <bit>
#include <stdexcept>

namespace boxsum {

LazySegTree1D::LazySegTree1D(std::int64_t side) : side_(side) {
    if (side < 1) throw std::invalid_argument("side length must be >= 1");
    padded_ = static_cast<std::int64_t>(std::bit_ceil(static_cast<std::uint64_t>(side)));
    sums_.assign(static_cast<std::size_t>(2 * padded_), 0);
    tags_.assign(static_cast<std::size_t>(2 * padded_), 0);
}

void LazySegTree1D::apply(std::size_t node, std::uint64_t add, std::int64_t len) {
    sums_[node] += add * static_cast<std::uint64_t>(len);
    tags_[node] += add;
}

void LazySegTree1D::push(std::size_t node, std::int64_t len) {
    if (tags_[node] == 0) return;
    apply(2 * node, tags_[node], len / 2);
    apply(2 * node + 1, tags_[node], len / 2);
    tags_[node] = 0;
}

void LazySegTree1D::update_rec(std::size_t node, std::int64_t nl, std::int64_t nr,
                               std::int64_t l, std::int64_t r, std::uint64_t add) {
    visits_.add();
    if (l <= nl && nr <= r) {
        apply(node, add, nr - nl + 1);
        return;
    }
    push(node, nr - nl + 1);
    const std::int64_t mid = nl + (nr - nl) / 2;
    if (l <= mid) update_rec(2 * node, nl, mid, l, r, add);
    if (r > mid) update_rec(2 * node + 1, mid + 1, nr, l, r, add);
    sums_[node] = sums_[2 * node] + sums_[2 * node + 1];
}

std::uint64_t LazySegTree1D::query_rec(std::size_t node, std::int64_t nl, std::int64_t nr,
                                       std::int64_t l, std::int64_t r) {
    visits_.add();
    if (l <= nl && nr <= r) return sums_[node];
    push(node, nr - nl + 1);
    const std::int64_t mid = nl + (nr - nl) / 2;
    std::uint64_t sum = 0;
    if (l <= mid) sum += query_rec(2 * node, nl, mid, l, r);
    if (r > mid) sum += query_rec(2 * node + 1, mid + 1, nr, l, r);
    return sum;
}

void LazySegTree1D::update(const Box& b, Value c) {
    check_box(b, 1, side_);
    update_rec(1, 1, padded_, b.lo[0], b.hi[0], static_cast<std::uint64_t>(c));
}

Value LazySegTree1D::query(const Box& b) {
    check_box(b, 1, side_);
    return static_cast<Value>(query_rec(1, 1, padded_, b.lo[0], b.hi[0]));
}

}  // namespace boxsum
