// Cross-checks the corner-decomposition engine against the independent
// region-form transcription in support/region_form.hpp: same abstract
// operations, derived through a different decomposition, must agree exactly.

#include <cstdint>

#include "doctest.h"

#include "boxsum/box.hpp"
#include "boxsum/dense_oracle.hpp"
#include "boxsum/rurq.hpp"
#include "boxsum/workload.hpp"
#include "support/region_form.hpp"

using boxsum::Box;
using boxsum::DenseOracle;
using boxsum::OpScript;
using boxsum::Operation;
using boxsum::RurqTree;
using boxsum::WorkloadConfig;

namespace {

OpScript workload(int dim, std::int64_t n, std::uint64_t ops, std::uint64_t seed) {
    WorkloadConfig cfg;
    cfg.dim = dim;
    cfg.side = n;
    cfg.op_count = ops;
    cfg.seed = seed;
    return boxsum::generate_workload(cfg);
}

}  // namespace

TEST_SUITE("regionform") {

TEST_CASE("1d region form equals the corner engine and the oracle") {
    const std::int64_t n = 200;
    RurqTree corner(1, n);
    region_form::RegionForm1D region(n);
    DenseOracle oracle(1, n);

    const OpScript script = workload(1, n, 800, 31);
    for (const Operation& op : script.ops) {
        if (op.kind == Operation::Kind::update) {
            corner.update(op.box, op.constant);
            region.update(op.box.lo[0], op.box.hi[0], op.constant);
            oracle.update(op.box, op.constant);
        } else {
            const auto want = oracle.query(op.box);
            REQUIRE(corner.range_sum(op.box) == want);
            REQUIRE(region.range_sum(op.box.lo[0], op.box.hi[0]) == want);
        }
    }
}

TEST_CASE("1d region form survives updates touching the boundary") {
    const std::int64_t n = 16;
    region_form::RegionForm1D region(n);
    region.update(1, 16, 7);   // x2 + 1 lands at n + 1
    region.update(16, 16, 1);
    CHECK(region.prefix(16) == 7 * 16 + 1);
    CHECK(region.range_sum(16, 16) == 8);
    CHECK(region.range_sum(1, 15) == 7 * 15);
}

TEST_CASE("2d region form equals the corner engine and the oracle") {
    const std::int64_t n = 32;
    RurqTree corner(2, n);
    region_form::RegionForm2D region(n);
    DenseOracle oracle(2, n);

    const OpScript script = workload(2, n, 800, 33);
    for (const Operation& op : script.ops) {
        if (op.kind == Operation::Kind::update) {
            corner.update(op.box, op.constant);
            region.update(op.box.lo[0], op.box.lo[1], op.box.hi[0], op.box.hi[1],
                          op.constant);
            oracle.update(op.box, op.constant);
        } else {
            const auto want = oracle.query(op.box);
            REQUIRE(corner.range_sum(op.box) == want);
            REQUIRE(region.range_sum(op.box.lo[0], op.box.lo[1], op.box.hi[0],
                                     op.box.hi[1]) == want);
        }
    }
}

TEST_CASE("2d independent term carries the full (x1-1)(y1-1) factor") {
    // A box away from the origin makes the constant tree matter: prefixes
    // strictly inside the box are wrong unless the independent term is
    // c*(x1-1)*(y1-1).
    const std::int64_t n = 8;
    region_form::RegionForm2D region(n);
    RurqTree corner(2, n);
    region.update(3, 4, 6, 7, 5);
    corner.update(Box{{3, 4}, {6, 7}}, 5);

    for (std::int64_t x = 1; x <= n; ++x) {
        for (std::int64_t y = 1; y <= n; ++y) {
            const std::int64_t p[2] = {x, y};
            REQUIRE(region.prefix(x, y) == corner.prefix({p, 2}));
        }
    }
    CHECK(region.prefix(3, 4) == 5);
    CHECK(region.prefix(4, 5) == 20);
    CHECK(region.range_sum(3, 4, 6, 7) == 5 * 4 * 4);
}

}  // TEST_SUITE
