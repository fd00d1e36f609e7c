#include "boxsum/bench.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <map>
#include <ostream>
#include <stdexcept>
#include <system_error>
#include <tuple>

namespace boxsum {
namespace {

const char* const kCsvHeader =
    "structure,d,n,ops,seed,millis,ops_per_sec,visits,cells_allocated";

std::string double_to_string(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

template <typename T>
T parse_field(const std::string& text, const char* what) {
    T value{};
    auto res = std::from_chars(text.data(), text.data() + text.size(), value);
    if (res.ec != std::errc{} || res.ptr != text.data() + text.size())
        throw std::invalid_argument(std::string("bad csv field: ") + what);
    return value;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = line.find(',', start);
        if (comma == std::string::npos) {
            out.push_back(line.substr(start));
            return out;
        }
        out.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
}

}  // namespace

BenchReport run_bench(const BenchConfig& cfg, std::ostream* diagnostics) {
    for (StructureKind kind : cfg.structures) {
        if (!supports_dimension(kind, cfg.dim))
            throw std::invalid_argument(std::string(structure_name(kind)) +
                                        " does not support dimension " +
                                        std::to_string(cfg.dim));
    }

    BenchReport report;
    report.visits_counted = cfg.count_visits;
    for (std::int64_t side : cfg.sides) {
        WorkloadConfig wl;
        wl.dim = cfg.dim;
        wl.side = side;
        wl.op_count = cfg.ops;
        wl.seed = cfg.seed;
        wl.update_mix = cfg.update_mix;
        OpScript script = generate_workload(wl);

        for (StructureKind kind : cfg.structures) {
            auto construct_start = std::chrono::steady_clock::now();
            auto structure = make_structure(kind, cfg.dim, side);
            auto construct_stop = std::chrono::steady_clock::now();

            structure->reset_visits();
            Value sink = 0;
            auto start = std::chrono::steady_clock::now();
            for (const Operation& op : script.ops) {
                if (op.kind == Operation::Kind::update)
                    structure->update(op.box, op.constant);
                else
                    sink ^= structure->query(op.box);
            }
            auto stop = std::chrono::steady_clock::now();

            BenchRow row;
            row.structure = structure->name();
            row.dim = cfg.dim;
            row.side = side;
            row.ops = cfg.ops;
            row.seed = cfg.seed;
            row.millis =
                std::chrono::duration<double, std::milli>(stop - start).count();
            row.ops_per_sec =
                row.millis > 0.0 ? static_cast<double>(cfg.ops) / (row.millis / 1e3)
                                 : 0.0;
            row.visits = cfg.count_visits ? structure->visits() : 0;
            row.cells_allocated = structure->allocated_cells();

            if (diagnostics) {
                double construct_ms = std::chrono::duration<double, std::milli>(
                                          construct_stop - construct_start)
                                          .count();
                *diagnostics << row.structure << " n=" << side << " construct="
                             << double_to_string(construct_ms) << "ms run="
                             << double_to_string(row.millis)
                             << "ms checksum=" << sink << '\n';
            }
            report.rows.push_back(std::move(row));
        }
    }

    std::sort(report.rows.begin(), report.rows.end(),
              [](const BenchRow& a, const BenchRow& b) {
                  return std::tie(a.structure, a.dim, a.side) <
                         std::tie(b.structure, b.dim, b.side);
              });
    return report;
}

std::string to_csv(const BenchReport& report) {
    std::string out = kCsvHeader;
    out += '\n';
    for (const BenchRow& r : report.rows) {
        out += r.structure;
        out += ',';
        out += std::to_string(r.dim);
        out += ',';
        out += std::to_string(r.side);
        out += ',';
        out += std::to_string(r.ops);
        out += ',';
        out += std::to_string(r.seed);
        out += ',';
        out += double_to_string(r.millis);
        out += ',';
        out += double_to_string(r.ops_per_sec);
        out += ',';
        out += std::to_string(r.visits);
        out += ',';
        out += std::to_string(r.cells_allocated);
        out += '\n';
    }
    return out;
}

BenchReport report_from_csv(const std::string& text) {
    BenchReport report;
    std::size_t pos = 0;
    bool saw_header = false;
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string line = text.substr(
            pos, eol == std::string::npos ? std::string::npos : eol - pos);
        pos = eol == std::string::npos ? text.size() : eol + 1;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (!saw_header) {
            if (line != kCsvHeader)
                throw std::invalid_argument("bad csv header: " + line);
            saw_header = true;
            continue;
        }
        std::vector<std::string> fields = split_csv_line(line);
        if (fields.size() != 9)
            throw std::invalid_argument("expected 9 csv fields, got " +
                                        std::to_string(fields.size()));
        BenchRow r;
        r.structure = fields[0];
        r.dim = parse_field<int>(fields[1], "d");
        r.side = parse_field<std::int64_t>(fields[2], "n");
        r.ops = parse_field<std::uint64_t>(fields[3], "ops");
        r.seed = parse_field<std::uint64_t>(fields[4], "seed");
        r.millis = parse_field<double>(fields[5], "millis");
        r.ops_per_sec = parse_field<double>(fields[6], "ops_per_sec");
        r.visits = parse_field<std::uint64_t>(fields[7], "visits");
        r.cells_allocated = parse_field<std::uint64_t>(fields[8], "cells_allocated");
        report.rows.push_back(std::move(r));
    }
    if (!saw_header) throw std::invalid_argument("empty csv input");
    for (const BenchRow& r : report.rows)
        if (r.visits != 0) report.visits_counted = true;
    return report;
}

namespace {

std::string pivot_table(const BenchReport& report, const char* metric,
                        double (*cell)(const BenchRow&)) {
    std::vector<std::string> structures;
    std::vector<std::int64_t> sides;
    std::map<std::pair<std::string, std::int64_t>, double> table;
    for (const BenchRow& r : report.rows) {
        if (std::find(structures.begin(), structures.end(), r.structure) ==
            structures.end())
            structures.push_back(r.structure);
        if (std::find(sides.begin(), sides.end(), r.side) == sides.end())
            sides.push_back(r.side);
        table[{r.structure, r.side}] = cell(r);
    }
    std::sort(sides.begin(), sides.end());

    std::string out = "| n |";
    for (const std::string& s : structures) {
        out += ' ';
        out += s;
        out += " (";
        out += metric;
        out += ") |";
    }
    out += "\n| --- |";
    for (std::size_t i = 0; i < structures.size(); ++i) out += " --- |";
    out += '\n';
    for (std::int64_t n : sides) {
        out += "| ";
        out += std::to_string(n);
        out += " |";
        for (const std::string& s : structures) {
            out += ' ';
            auto it = table.find({s, n});
            out += it == table.end() ? std::string("-")
                                     : double_to_string(it->second);
            out += " |";
        }
        out += '\n';
    }
    return out;
}

}  // namespace

std::string to_markdown(const BenchReport& report) {
    std::string out = pivot_table(
        report, "ms", [](const BenchRow& r) { return r.millis; });
    if (report.visits_counted) {
        out += '\n';
        out += pivot_table(report, "visits", [](const BenchRow& r) {
            return static_cast<double>(r.visits);
        });
    }
    return out;
}

}  // namespace boxsum
