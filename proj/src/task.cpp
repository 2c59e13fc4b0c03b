#include "ehpo/task.hpp"

#include <cmath>

namespace ehpo {

double ScoringRule::mean_at(const HpPoint& hp) const {
    if (kind == Kind::Table) {
        for (const auto& [point, value] : table)
            if (point == hp) return value;
        throw Error("HP point not present in scoring table");
    }
    double exponent = 0.0;
    for (const auto& [dim, c] : center) {
        double x = hp.at(dim);
        if (log10_coords) {
            if (!(x > 0.0)) throw Error("log10 scoring requires positive coordinate '" + dim + "'");
            x = std::log10(x);
        }
        double w = 1.0;
        for (const auto& [wdim, wv] : width)
            if (wdim == dim) w = wv;
        double d = (x - c) / w;
        exponent += d * d;
    }
    return floor + amplitude * std::exp(-exponent);
}

const ScoringRule& SyntheticTask::scoring_for(const std::string& algorithm_id) const {
    auto it = algorithms.find(algorithm_id);
    if (it == algorithms.end())
        throw Error("unknown algorithm '" + algorithm_id + "' for task '" + task_id + "'");
    return it->second;
}

void SyntheticTask::validate() const {
    if (algorithms.empty()) throw Error("task '" + task_id + "' declares no algorithms");
    for (const auto& [id, rule] : algorithms) {
        if (!(rule.noise_amplitude >= 0.0) || rule.noise_amplitude >= 1.0)
            throw Error("noise amplitude for '" + id + "' must be in [0, 1)");
        if (rule.kind == ScoringRule::Kind::Table) {
            if (rule.table.empty()) throw Error("empty scoring table for '" + id + "'");
            for (const auto& [point, value] : rule.table) {
                if (!hp_domain.contains(point))
                    throw Error("scoring table point outside domain for '" + id + "'");
                if (!std::isfinite(value) || value < 0.0 || value > 1.0)
                    throw Error("scoring table value outside [0,1] for '" + id + "'");
            }
        } else {
            for (const auto& dim : hp_domain.dimensions()) {
                bool found = false;
                for (const auto& [cdim, cv] : rule.center) {
                    (void)cv;
                    if (cdim == dim.name) found = true;
                }
                if (!found)
                    throw Error("gaussian scoring for '" + id + "' misses dimension '" + dim.name + "'");
            }
            for (const auto& [wdim, wv] : rule.width)
                if (!(wv > 0.0)) throw Error("gaussian width must be positive for '" + wdim + "'");
        }
    }
}

} // namespace ehpo
