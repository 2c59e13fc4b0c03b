#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "ehpo/hp.hpp"

namespace ehpo {

// Continuous per-dimension sampling range for random search.
struct DimensionRange {
    enum class Kind { Uniform, LogUniform };

    std::string name;
    Kind kind = Kind::Uniform;
    double lo = 0.0;
    double hi = 0.0;

    double sample(SeedStream& stream) const;
};

// The sampling rule of a random-search configuration: either a finite
// discrete distribution over HP points or independent per-dimension ranges.
struct SamplingRule {
    enum class Kind { Discrete, PerDimension };

    Kind kind = Kind::Discrete;
    DiscreteDistribution discrete;
    std::vector<DimensionRange> ranges;

    HpPoint sample(SeedStream& stream) const;
    bool is_discrete() const { return kind == Kind::Discrete; }
};

// Random search hyper-HPs: the distribution mu and the trial count K.
struct RandomSearchConfig {
    SamplingRule distribution;
    std::uint64_t trials = 1;
};

// Grid search hyper-HPs: finite point lists per dimension; one trial per
// point of the Cartesian product.
struct GridConfig {
    std::vector<std::pair<std::string, std::vector<double>>> points;

    std::uint64_t trial_count() const {
        std::uint64_t n = 1;
        for (const auto& [dim, values] : points) {
            (void)dim;
            n *= values.size();
        }
        return n;
    }
};

// An allowable configuration c of the HPO procedure itself.
struct HyperHpConfig {
    std::variant<GridConfig, RandomSearchConfig> value;

    bool is_grid() const { return std::holds_alternative<GridConfig>(value); }
    bool is_random_search() const { return std::holds_alternative<RandomSearchConfig>(value); }
    const GridConfig& grid() const { return std::get<GridConfig>(value); }
    const RandomSearchConfig& random_search() const { return std::get<RandomSearchConfig>(value); }

    // Trials produced by one run of this configuration.
    std::uint64_t trial_count() const {
        if (is_grid()) return grid().trial_count();
        return random_search().trials;
    }

    void validate(const HpDomain& domain) const;
};

} // namespace ehpo
