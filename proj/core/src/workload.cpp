#include "boxsum/workload.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "boxsum/rng.hpp"

namespace boxsum {

OpScript generate_workload(const WorkloadConfig& cfg) {
    if (cfg.dim < 1 || cfg.dim > kMaxDim) throw std::invalid_argument("dimension must be in [1, 32]");
    if (cfg.side < 1) throw std::invalid_argument("side length must be >= 1");
    if (cfg.update_mix < 0.0 || cfg.update_mix > 1.0) {
        throw std::invalid_argument("update mix must be in [0, 1]");
    }
    if (cfg.constant_min > cfg.constant_max) {
        throw std::invalid_argument("constant range is empty");
    }

    const auto update_threshold = static_cast<std::uint64_t>(std::llround(cfg.update_mix * 10000.0));
    SplitMix64 rng(cfg.seed);

    OpScript script;
    script.dim = cfg.dim;
    script.side = cfg.side;
    script.ops.reserve(cfg.op_count);

    for (std::uint64_t k = 0; k < cfg.op_count; ++k) {
        Operation op;
        op.kind = (rng.next() % 10000 < update_threshold) ? Operation::Kind::update
                                                          : Operation::Kind::query;
        op.box.lo.resize(cfg.dim);
        op.box.hi.resize(cfg.dim);
        for (int i = 0; i < cfg.dim; ++i) {
            const std::int64_t a = rng.uniform(1, cfg.side);
            const std::int64_t b = rng.uniform(1, cfg.side);
            op.box.lo[i] = std::min(a, b);
            op.box.hi[i] = std::max(a, b);
        }
        if (op.kind == Operation::Kind::update) {
            op.constant = rng.uniform(cfg.constant_min, cfg.constant_max);
        }
        script.ops.push_back(std::move(op));
    }
    return script;
}

}  // namespace boxsum
