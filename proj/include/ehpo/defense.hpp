#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ehpo/conclusion.hpp"

namespace ehpo {

// Subsampled-majority defense parameters: R groups of K trials each, kappa
// groups subsampled per iteration, sample_budget iterations, skepticism
// threshold delta (conclude at plurality fraction >= 1 - delta).
struct DefenseParams {
    std::uint64_t trials_per_group = 1;  // K
    std::uint64_t group_count = 1;       // R
    std::uint64_t subsample_size = 1;    // kappa, odd
    std::uint64_t sample_budget = 1;     // iteration count
    double delta = 0.2;

    void validate() const;
};

enum class Vote { For, Against, Nothing };

// Majority over an odd number of per-group conclusion sets. Returns the
// strict plurality among {p, !p, nothing}; a tie involving "nothing"
// resolves to nothing (ties between p and !p cannot occur when every vote is
// decisive and kappa is odd).
Vote majority(const std::vector<ConclusionSet>& conclusions, const ConclusionPolicy& policy);

// Iteration fractions and the decision derived from them.
struct DefenseDecision {
    bool concluded = false;
    Formula::Ptr conclusion;      // set when concluded
    double fraction_for = 0.0;    // fraction voting p
    double fraction_against = 0.0; // fraction voting !p
    double fraction_nothing = 0.0;
    double one_minus_delta = 0.0;
};

// Decide from given fractions at threshold 1-delta: a candidate concludes
// when its fraction is nonzero and >= 1-delta; with several candidates the
// strictly largest fraction wins and an exact tie concludes nothing.
DefenseDecision decide_from_fractions(double fraction_for, double fraction_against, double delta,
                                      const ConclusionPolicy& policy);

// Subsampled-majority defense: sample_budget iterations, each drawing kappa
// distinct group logs (without replacement, selection stream m for iteration
// m), concluding the majority of the per-group naive conclusions; the final
// decision applies decide_from_fractions to the iteration tallies.
DefenseDecision subsample_majority_defend(const std::vector<Log>& group_logs,
                                          const DefenseParams& params,
                                          const ConclusionPolicy& policy,
                                          std::uint64_t master_seed);

} // namespace ehpo
