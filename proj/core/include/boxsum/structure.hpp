#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include "boxsum/box.hpp"

namespace boxsum {

enum class StructureKind { rurq, segtree1d, quadtree, octree, oracle };

// Throws std::invalid_argument for an unknown name.
StructureKind parse_structure_kind(std::string_view name);
std::string_view structure_name(StructureKind kind);

// True when the structure can be built for the given dimension
// (segtree1d: d=1, quadtree: d=2, octree: d=3, rurq/oracle: any).
bool supports_dimension(StructureKind kind, int dim);

// Uniform box-update / box-sum interface over every structure the script
// runner and the bench harness can drive.
class Structure {
public:
    virtual ~Structure() = default;

    virtual void update(const Box& b, Value c) = 0;
    virtual Value query(const Box& b) = 0;

    // Node or cell touches since the last reset; see each structure's own
    // documentation for what one visit means.
    virtual std::uint64_t visits() const = 0;
    virtual void reset_visits() = 0;

    // Memory accounting: 64-bit cells for array-backed structures, allocated
    // nodes for region trees.
    virtual std::uint64_t allocated_cells() const = 0;

    virtual std::string_view name() const = 0;
};

// Throws std::invalid_argument when the structure does not support dim.
std::unique_ptr<Structure> make_structure(StructureKind kind, int dim, std::int64_t side);

}  // namespace boxsum
