// Command line front end: run op scripts against a chosen structure, verify
// that every structure agrees on a script, and benchmark structures against
// generated workloads. Results go to stdout, diagnostics to stderr.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "boxsum/bench.hpp"
#include "boxsum/opscript.hpp"
#include "boxsum/runner.hpp"
#include "boxsum/structure.hpp"
#include "boxsum/workload.hpp"

namespace {

std::string read_script_text(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open script file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int do_run(const std::string& script_path, const std::string& structure) {
    boxsum::OpScript script = boxsum::parse_script(read_script_text(script_path));
    boxsum::StructureKind kind = boxsum::parse_structure_kind(structure);
    std::vector<boxsum::Value> results = boxsum::run_script(script, kind);
    std::cout << boxsum::format_results(results);
    return 0;
}

int do_verify(const boxsum::OpScript& script) {
    boxsum::VerifyReport report = boxsum::verify_script(script);
    if (report.ok) {
        std::cerr << "ok: " << report.ops_run
                  << " ops, all structures agree\n";
        return 0;
    }
    std::cerr << "divergence at op " << report.divergent_op << ": "
              << report.structure << " returned " << report.actual
              << ", expected " << report.expected << '\n';
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"range add / box sum structures: run, verify, bench"};
    app.require_subcommand(1);

    std::string script_path;
    std::string structure = "rurq";
    CLI::App* run_cmd =
        app.add_subcommand("run", "execute a script, one result line per query");
    run_cmd->add_option("--script", script_path, "script path, or - for stdin")
        ->required();
    run_cmd->add_option("--structure", structure,
                        "rurq, segtree1d, quadtree, octree, or oracle");

    bool random_workload = false;
    std::uint64_t seed = 1;
    int dim = 2;
    std::int64_t side = 64;
    std::uint64_t ops = 1000;
    CLI::App* verify_cmd = app.add_subcommand(
        "verify", "run every applicable structure and compare query results");
    CLI::Option* verify_script_opt =
        verify_cmd->add_option("--script", script_path, "script path, or - for stdin");
    CLI::Option* verify_random_opt = verify_cmd->add_flag(
        "--random", random_workload, "verify a generated workload instead");
    verify_cmd->add_option("--seed", seed, "workload seed")->needs(verify_random_opt);
    verify_cmd->add_option("--dim", dim, "workload dimension")->needs(verify_random_opt);
    verify_cmd->add_option("--n", side, "workload side length")->needs(verify_random_opt);
    verify_cmd->add_option("--ops", ops, "workload op count")->needs(verify_random_opt);
    verify_script_opt->excludes(verify_random_opt);

    boxsum::BenchConfig bench_cfg;
    std::vector<std::string> bench_structures;
    std::string format = "csv";
    CLI::App* bench_cmd =
        app.add_subcommand("bench", "time structures on identical workloads");
    bench_cmd->add_option("--dim", bench_cfg.dim, "array dimension");
    bench_cmd->add_option("--n", bench_cfg.sides, "side lengths, comma separated")
        ->required()
        ->delimiter(',');
    bench_cmd->add_option("--ops", bench_cfg.ops, "ops per run")->required();
    bench_cmd->add_option("--seed", bench_cfg.seed, "workload seed");
    bench_cmd
        ->add_option("--structures", bench_structures,
                     "structures to time, comma separated (default: all that fit)")
        ->delimiter(',');
    bench_cmd->add_option("--mix", bench_cfg.update_mix,
                          "fraction of ops that are updates");
    bench_cmd->add_option("--format", format, "csv or markdown")
        ->check(CLI::IsMember({"csv", "markdown"}));
    bench_cmd->add_flag("--count-visits", bench_cfg.count_visits,
                        "populate the visits column");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run_cmd->parsed()) return do_run(script_path, structure);

        if (verify_cmd->parsed()) {
            if (random_workload) {
                boxsum::WorkloadConfig wl;
                wl.dim = dim;
                wl.side = side;
                wl.op_count = ops;
                wl.seed = seed;
                return do_verify(boxsum::generate_workload(wl));
            }
            if (script_path.empty())
                throw std::runtime_error("verify needs --script or --random");
            return do_verify(boxsum::parse_script(read_script_text(script_path)));
        }

        if (bench_cmd->parsed()) {
            if (bench_structures.empty()) {
                for (boxsum::StructureKind kind :
                     {boxsum::StructureKind::rurq, boxsum::StructureKind::segtree1d,
                      boxsum::StructureKind::quadtree, boxsum::StructureKind::octree,
                      boxsum::StructureKind::oracle})
                    if (boxsum::supports_dimension(kind, bench_cfg.dim))
                        bench_cfg.structures.push_back(kind);
            } else {
                for (const std::string& name : bench_structures)
                    bench_cfg.structures.push_back(boxsum::parse_structure_kind(name));
            }
            boxsum::BenchReport report = boxsum::run_bench(bench_cfg, &std::cerr);
            std::cout << (format == "csv" ? boxsum::to_csv(report)
                                          : boxsum::to_markdown(report));
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
