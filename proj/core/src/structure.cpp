#include "boxsum/structure.hpp"

#include <stdexcept>

#include "boxsum/dense_oracle.hpp"
#include "boxsum/region_tree.hpp"
#include "boxsum/rurq.hpp"
#include "boxsum/segment_tree.hpp"

namespace boxsum {

namespace {

class RurqStructure final : public Structure {
public:
    RurqStructure(int dim, std::int64_t side) : tree_(dim, side) {}

    void update(const Box& b, Value c) override { tree_.update(b, c); }
    Value query(const Box& b) override { return tree_.range_sum(b); }
    std::uint64_t visits() const override { return tree_.cells_touched(); }
    void reset_visits() override { tree_.reset_stats(); }
    std::uint64_t allocated_cells() const override { return tree_.allocated_cells(); }
    std::string_view name() const override { return "rurq"; }

private:
    RurqTree tree_;
};

class SegTreeStructure final : public Structure {
public:
    explicit SegTreeStructure(std::int64_t side) : tree_(side) {}

    void update(const Box& b, Value c) override { tree_.update(b, c); }
    Value query(const Box& b) override { return tree_.query(b); }
    std::uint64_t visits() const override { return tree_.visits().nodes_visited; }
    void reset_visits() override { tree_.reset_visits(); }
    std::uint64_t allocated_cells() const override { return tree_.allocated_cells(); }
    std::string_view name() const override { return "segtree1d"; }

private:
    LazySegTree1D tree_;
};

class RegionStructure final : public Structure {
public:
    RegionStructure(int dim, std::int64_t side) : tree_(dim, side) {}

    void update(const Box& b, Value c) override { tree_.update(b, c); }
    Value query(const Box& b) override { return tree_.query(b); }
    std::uint64_t visits() const override { return tree_.visits().nodes_visited; }
    void reset_visits() override { tree_.reset_visits(); }
    std::uint64_t allocated_cells() const override { return tree_.allocated_nodes(); }
    std::string_view name() const override { return tree_.dim() == 2 ? "quadtree" : "octree"; }

private:
    RegionTree tree_;
};

class OracleStructure final : public Structure {
public:
    OracleStructure(int dim, std::int64_t side) : oracle_(dim, side) {}

    void update(const Box& b, Value c) override { oracle_.update(b, c); }
    Value query(const Box& b) override { return oracle_.query(b); }
    std::uint64_t visits() const override { return oracle_.visits().nodes_visited; }
    void reset_visits() override { oracle_.reset_visits(); }
    std::uint64_t allocated_cells() const override { return oracle_.cell_count(); }
    std::string_view name() const override { return "oracle"; }

private:
    DenseOracle oracle_;
};

}  // namespace

StructureKind parse_structure_kind(std::string_view name) {
    if (name == "rurq") return StructureKind::rurq;
    if (name == "segtree1d") return StructureKind::segtree1d;
    if (name == "quadtree") return StructureKind::quadtree;
    if (name == "octree") return StructureKind::octree;
    if (name == "oracle") return StructureKind::oracle;
    throw std::invalid_argument("unknown structure '" + std::string(name) +
                                "' (expected rurq|segtree1d|quadtree|octree|oracle)");
}

std::string_view structure_name(StructureKind kind) {
    switch (kind) {
        case StructureKind::rurq: return "rurq";
        case StructureKind::segtree1d: return "segtree1d";
        case StructureKind::quadtree: return "quadtree";
        case StructureKind::octree: return "octree";
        case StructureKind::oracle: return "oracle";
    }
    return "?";
}

bool supports_dimension(StructureKind kind, int dim) {
    switch (kind) {
        case StructureKind::segtree1d: return dim == 1;
        case StructureKind::quadtree: return dim == 2;
        case StructureKind::octree: return dim == 3;
        case StructureKind::rurq:
        case StructureKind::oracle: return dim >= 1;
    }
    return false;
}

std::unique_ptr<Structure> make_structure(StructureKind kind, int dim, std::int64_t side) {
    if (!supports_dimension(kind, dim)) {
        throw std::invalid_argument(std::string(structure_name(kind)) +
                                    " does not support dimension " + std::to_string(dim));
    }
    switch (kind) {
        case StructureKind::rurq: return std::make_unique<RurqStructure>(dim, side);
        case StructureKind::segtree1d: return std::make_unique<SegTreeStructure>(side);
        case StructureKind::quadtree:
        case StructureKind::octree: return std::make_unique<RegionStructure>(dim, side);
        case StructureKind::oracle: return std::make_unique<OracleStructure>(dim, side);
    }
    throw std::invalid_argument("unknown structure kind");
}

}  // namespace boxsum
