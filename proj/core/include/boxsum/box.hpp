#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace boxsum {

// Update constants and query results. All arithmetic in this library wraps
// modulo 2^64 (two's complement); a result equals the true mathematical value
// whenever that value fits in a signed 64-bit integer.
using Value = std::int64_t;

// A point in d-dimensional index space. Coordinates are 1-based inclusive:
// every component lies in [1, n] for a structure of side length n.
using Coord = std::vector<std::int64_t>;

// Axis-aligned inclusive box [lo, hi]. A box is valid when lo[i] <= hi[i]
// for every dimension; empty boxes are rejected at the API boundary.
struct Box {
    Coord lo;
    Coord hi;

    friend bool operator==(const Box&, const Box&) = default;
};

// Highest dimension count any structure in this library accepts.
inline constexpr int kMaxDim = 32;

// Throws std::invalid_argument / std::out_of_range when p is not a valid
// coordinate for a structure with the given dimension and side length.
void check_coord(std::span<const std::int64_t> p, int dim, std::int64_t side);

// Throws when b is not a valid non-empty in-range box.
void check_box(const Box& b, int dim, std::int64_t side);

// Number of cells inside the box, assumed valid.
std::uint64_t box_volume(const Box& b);

}  // namespace boxsum
