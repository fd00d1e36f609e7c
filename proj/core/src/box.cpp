#include "boxsum/box.hpp"

#include <stdexcept>
#include <string>

namespace boxsum {

void check_coord(std::span<const std::int64_t> p, int dim, std::int64_t side) {
    if (static_cast<int>(p.size()) != dim) {
        throw std::invalid_argument("coordinate has " + std::to_string(p.size()) +
                                    " components, structure has dimension " + std::to_string(dim));
    }
    for (int i = 0; i < dim; ++i) {
        if (p[i] < 1 || p[i] > side) {
            throw std::out_of_range("coordinate component " + std::to_string(i + 1) + " = " +
                                    std::to_string(p[i]) + " outside [1, " + std::to_string(side) + "]");
        }
    }
}

void check_box(const Box& b, int dim, std::int64_t side) {
    check_coord(b.lo, dim, side);
    check_coord(b.hi, dim, side);
    for (int i = 0; i < dim; ++i) {
        if (b.lo[i] > b.hi[i]) {
            throw std::invalid_argument("empty box: lo " + std::to_string(b.lo[i]) + " > hi " +
                                        std::to_string(b.hi[i]) + " in dimension " + std::to_string(i + 1));
        }
    }
}

std::uint64_t box_volume(const Box& b) {
    std::uint64_t v = 1;
    for (std::size_t i = 0; i < b.lo.size(); ++i) {
        v *= static_cast<std::uint64_t>(b.hi[i] - b.lo[i] + 1);
    }
    return v;
}

}  // namespace boxsum
