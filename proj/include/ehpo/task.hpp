#pragma once

#include <map>
#include <string>
#include <vector>

#include "ehpo/hp.hpp"

namespace ehpo {

// Closed-form mean-performance rule for one algorithm on a synthetic task:
// mean value in [0,1] as a function of the HP point, plus a bounded noise
// amplitude. Two families:
//   Table    - explicit per-point values over a finite domain
//   Gaussian - floor + amplitude * exp(-sum(((x_d - center_d)/width_d)^2)),
//              optionally evaluated on log10 of each coordinate
struct ScoringRule {
    enum class Kind { Table, Gaussian };

    Kind kind = Kind::Table;
    double noise_amplitude = 0.0;

    // Table family.
    std::vector<std::pair<HpPoint, double>> table;

    // Gaussian family.
    std::vector<std::pair<std::string, double>> center;
    std::vector<std::pair<std::string, double>> width;
    double floor = 0.0;
    double amplitude = 1.0;
    bool log10_coords = false;

    double mean_at(const HpPoint& hp) const;
};

// A synthetic stand-in for (training algorithm, model, dataset): per-algorithm
// scoring rules over a shared HP domain. Evaluating a trial is a cheap closed
// form, which keeps brute-force enumeration oracles exact.
struct SyntheticTask {
    std::string task_id;
    HpDomain hp_domain;
    std::map<std::string, ScoringRule> algorithms;

    const ScoringRule& scoring_for(const std::string& algorithm_id) const;
    void validate() const;
};

} // namespace ehpo
