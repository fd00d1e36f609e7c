#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "boxsum/box.hpp"
#include "boxsum/visit_counter.hpp"

namespace boxsum {

// Ground-truth structure: a plain flat n^d array updated and queried by
// literal iteration over box cells. Wrapping arithmetic identical to the
// tree structures. Used as the oracle in every equivalence test; mutating
// ops and queries both count one visit per cell touched.
class DenseOracle {
public:
    DenseOracle(int dim, std::int64_t side, std::uint64_t cell_cap = std::uint64_t{1} << 27);

    int dim() const { return dim_; }
    std::int64_t side() const { return side_; }
    std::size_t cell_count() const { return cells_.size(); }

    void update(const Box& b, Value c);
    Value query(const Box& b) const;

    // Value of the single cell at p.
    Value cell(std::span<const std::int64_t> p) const;

    const VisitCounter& visits() const { return visits_; }
    void reset_visits() { visits_.reset(); }

private:
    std::size_t offset_of(std::span<const std::int64_t> p) const;

    int dim_;
    std::int64_t side_;
    std::vector<std::size_t> strides_;
    std::vector<std::uint64_t> cells_;
    mutable VisitCounter visits_;
};

}  // namespace boxsum
