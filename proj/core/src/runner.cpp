#include "boxsum/runner.hpp"

#include <memory>

namespace boxsum {

std::vector<Value> run_script(const OpScript& script, Structure& structure) {
    std::vector<Value> results;
    for (const Operation& op : script.ops) {
        if (op.kind == Operation::Kind::update) {
            structure.update(op.box, op.constant);
        } else {
            results.push_back(structure.query(op.box));
        }
    }
    return results;
}

std::vector<Value> run_script(const OpScript& script, StructureKind kind) {
    const auto structure = make_structure(kind, script.dim, script.side);
    return run_script(script, *structure);
}

std::string format_results(std::span<const Value> results) {
    std::string out;
    for (const Value v : results) {
        out += std::to_string(v);
        out += '\n';
    }
    return out;
}

std::optional<std::size_t> first_divergence(std::span<const Value> a, std::span<const Value> b) {
    const std::size_t common = a.size() < b.size() ? a.size() : b.size();
    for (std::size_t i = 0; i < common; ++i) {
        if (a[i] != b[i]) return i;
    }
    if (a.size() != b.size()) return common;
    return std::nullopt;
}

VerifyReport verify_script(const OpScript& script) {
    std::vector<std::unique_ptr<Structure>> structures;
    structures.push_back(make_structure(StructureKind::rurq, script.dim, script.side));
    structures.push_back(make_structure(StructureKind::oracle, script.dim, script.side));
    for (const StructureKind kind :
         {StructureKind::segtree1d, StructureKind::quadtree, StructureKind::octree}) {
        if (supports_dimension(kind, script.dim)) {
            structures.push_back(make_structure(kind, script.dim, script.side));
        }
    }

    VerifyReport report;
    std::size_t op_index = 0;
    for (const Operation& op : script.ops) {
        ++op_index;
        if (op.kind == Operation::Kind::update) {
            for (auto& s : structures) s->update(op.box, op.constant);
        } else {
            const Value reference = structures.front()->query(op.box);
            for (std::size_t i = 1; i < structures.size(); ++i) {
                const Value got = structures[i]->query(op.box);
                if (got != reference) {
                    report.ok = false;
                    report.ops_run = op_index;
                    report.divergent_op = op_index;
                    report.structure = std::string(structures[i]->name());
                    report.expected = reference;
                    report.actual = got;
                    return report;
                }
            }
        }
        report.ops_run = op_index;
    }
    return report;
}

}  // namespace boxsum
