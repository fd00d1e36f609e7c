#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"

#include "boxsum/opscript.hpp"
#include "boxsum/runner.hpp"
#include "boxsum/structure.hpp"
#include "boxsum/workload.hpp"

using boxsum::OpScript;
using boxsum::Operation;
using boxsum::ScriptError;
using boxsum::StructureKind;
using boxsum::Value;

namespace {

std::size_t error_line(const std::string& text) {
    try {
        boxsum::parse_script(text);
    } catch (const ScriptError& e) {
        return e.line();
    }
    return 0;  // parsed fine
}

}  // namespace

TEST_SUITE("opscript") {

TEST_CASE("parses the basic grammar") {
    const OpScript s = boxsum::parse_script(
        "# leading comment\n"
        "\n"
        "init 2 10\n"
        "update 1 2 3 4 -7   # trailing comment\n"
        "query 2 2 3 3\n");
    CHECK(s.dim == 2);
    CHECK(s.side == 10);
    REQUIRE(s.ops.size() == 2);
    CHECK(s.ops[0].kind == Operation::Kind::update);
    CHECK(s.ops[0].box == boxsum::Box{{1, 2}, {3, 4}});
    CHECK(s.ops[0].constant == -7);
    CHECK(s.ops[1].kind == Operation::Kind::query);
}

TEST_CASE("format and parse round-trip") {
    const OpScript hand = boxsum::parse_script("init 3 9\nupdate 1 1 1 9 9 9 5\nquery 2 3 4 5 6 7\n");
    CHECK(boxsum::parse_script(boxsum::format_script(hand)) == hand);

    boxsum::WorkloadConfig cfg;
    cfg.dim = 2;
    cfg.side = 50;
    cfg.op_count = 500;
    cfg.seed = 77;
    const OpScript generated = boxsum::generate_workload(cfg);
    CHECK(boxsum::parse_script(boxsum::format_script(generated)) == generated);
}

TEST_CASE("errors carry the offending line number") {
    CHECK(error_line("query 1 1\ninit 1 4\n") == 1);           // op before init
    CHECK(error_line("init 1 4\ninit 1 4\n") == 2);            // init twice
    CHECK(error_line("init 0 4\n") == 1);                      // bad dimension
    CHECK(error_line("init 33 4\n") == 1);                     // dimension too high
    CHECK(error_line("init 1 0\n") == 1);                      // bad side
    CHECK(error_line("init 1 4\n\n# c\nfrobnicate 1 2\n") == 4);
    CHECK(error_line("init 1 4\nupdate 1 2\n") == 2);          // missing constant
    CHECK(error_line("init 2 4\nquery 1 1 2\n") == 2);         // wrong arity
    CHECK(error_line("init 1 4\nupdate 0 2 5\n") == 2);        // coord below 1
    CHECK(error_line("init 1 4\nquery 1 5\n") == 2);           // coord above n
    CHECK(error_line("init 1 9\nupdate 5 3 1\n") == 2);        // lo > hi
    CHECK(error_line("init 1 4\nupdate 1 2 x\n") == 2);        // junk token
    CHECK(error_line("init 1 4\nupdate 1 2 9223372036854775808\n") == 2);
    CHECK(error_line("") == 1);                                // no init at all
    CHECK(error_line("# only comments\n\n") == 3);
    CHECK(error_line("init 1 4\nquery 2 3\n") == 0);
}

TEST_CASE("script runs produce one line per query in order") {
    const OpScript s = boxsum::parse_script(
        "init 1 6\nquery 1 6\nupdate 2 4 5\nquery 1 6\nquery 3 3\n");
    for (const StructureKind kind :
         {StructureKind::rurq, StructureKind::segtree1d, StructureKind::oracle}) {
        const std::vector<Value> got = boxsum::run_script(s, kind);
        REQUIRE(got.size() == 3);
        CHECK(got[0] == 0);
        CHECK(got[1] == 15);
        CHECK(got[2] == 5);
    }
    CHECK(boxsum::format_results(boxsum::run_script(s, StructureKind::rurq)) == "0\n15\n5\n");
}

TEST_CASE("runs are deterministic") {
    boxsum::WorkloadConfig cfg;
    cfg.dim = 2;
    cfg.side = 20;
    cfg.op_count = 400;
    cfg.seed = 5;
    const OpScript s = boxsum::generate_workload(cfg);
    const auto a = boxsum::run_script(s, StructureKind::rurq);
    const auto b = boxsum::run_script(s, StructureKind::rurq);
    CHECK(a == b);
    const auto c = boxsum::run_script(s, StructureKind::quadtree);
    CHECK(a == c);
}

TEST_CASE("dimension support is enforced by the runner") {
    const OpScript s2 = boxsum::parse_script("init 2 4\nquery 1 1 2 2\n");
    CHECK_THROWS_AS(boxsum::run_script(s2, StructureKind::segtree1d), std::invalid_argument);
    CHECK_THROWS_AS(boxsum::run_script(s2, StructureKind::octree), std::invalid_argument);
    const OpScript s4 = boxsum::parse_script("init 4 3\nquery 1 1 1 1 2 2 2 2\n");
    CHECK(boxsum::run_script(s4, StructureKind::rurq) == std::vector<Value>{0});
}

TEST_CASE("first divergence is located exactly") {
    const std::vector<Value> base{4, -1, 0, 33};
    CHECK(!boxsum::first_divergence(base, base).has_value());

    std::vector<Value> corrupted = base;
    corrupted[2] ^= 1;
    auto where = boxsum::first_divergence(base, corrupted);
    REQUIRE(where.has_value());
    CHECK(*where == 2);

    const std::vector<Value> shorter{4, -1};
    where = boxsum::first_divergence(base, shorter);
    REQUIRE(where.has_value());
    CHECK(*where == 2);
}

TEST_CASE("queries against an untouched grid all read zero") {
    for (int dim : {1, 2, 3}) {
        boxsum::WorkloadConfig cfg;
        cfg.dim = dim;
        cfg.side = 6;
        cfg.op_count = 50;
        cfg.seed = 3;
        cfg.update_mix = 0.0;
        const OpScript s = boxsum::generate_workload(cfg);

        for (const StructureKind kind :
             {StructureKind::rurq, StructureKind::segtree1d, StructureKind::quadtree,
              StructureKind::octree, StructureKind::oracle}) {
            if (!boxsum::supports_dimension(kind, dim)) continue;
            const std::vector<Value> got = boxsum::run_script(s, kind);
            REQUIRE(got.size() == 50);
            for (const Value v : got) CHECK(v == 0);
        }
    }
}

TEST_CASE("verify agrees on valid scripts") {
    boxsum::WorkloadConfig cfg;
    cfg.dim = 3;
    cfg.side = 8;
    cfg.op_count = 300;
    cfg.seed = 12;
    const boxsum::VerifyReport report = boxsum::verify_script(boxsum::generate_workload(cfg));
    CHECK(report.ok);
    CHECK(report.ops_run == 300);
    CHECK(report.divergent_op == 0);

    cfg.dim = 2;
    cfg.op_count = 1000;
    cfg.seed = 42;
    const boxsum::VerifyReport wide = boxsum::verify_script(boxsum::generate_workload(cfg));
    CHECK(wide.ok);
    CHECK(wide.ops_run == 1000);
}

}  // TEST_SUITE
