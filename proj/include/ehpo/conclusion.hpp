#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ehpo/formula.hpp"
#include "ehpo/log.hpp"

namespace ehpo {

// How logs are digested into a verdict about the proposition atom:
//   Threshold    conclude p iff the target algorithm's best metric >= theta,
//                otherwise conclude !p
//   Comparative  conclude p iff best(a) > best(b) + margin, !p iff
//                best(b) > best(a) + margin, nothing within the margin
struct ConclusionPolicy {
    enum class Scheme { Threshold, Comparative };

    Scheme scheme = Scheme::Threshold;
    std::string proposition_name = "p";

    // Threshold fields.
    std::string target_algorithm;
    double theta = 0.5;

    // Comparative fields.
    std::string algorithm_a;
    std::string algorithm_b;
    double margin = 0.0;

    Formula::Ptr proposition() const { return Formula::atom(proposition_name); }
    Formula::Ptr negated_proposition() const { return Formula::negate(proposition()); }
    std::vector<std::string> referenced_algorithms() const;
    void validate() const;
};

// The set of formulas a belief function outputs. Construction enforces the
// Type 1 consistency audit.
class ConclusionSet {
public:
    ConclusionSet() = default;
    explicit ConclusionSet(std::vector<Formula::Ptr> formulas);

    const std::vector<Formula::Ptr>& formulas() const { return formulas_; }
    bool empty() const { return formulas_.empty(); }
    bool contains(const Formula::Ptr& f) const;

    ConclusionSet intersect(const ConclusionSet& other) const;

private:
    std::vector<Formula::Ptr> formulas_;
};

// The naive reasoner: picks the best-performing trial per algorithm across
// the given logs and applies the policy. Throws when the logs are empty or a
// referenced algorithm is absent.
ConclusionSet naive_conclude(const std::vector<Log>& logs, const ConclusionPolicy& policy);

// Total extension used by simulation paths: an empty log set or missing
// algorithm yields no conclusions instead of an error.
ConclusionSet naive_conclude_total(const std::vector<Log>& logs, const ConclusionPolicy& policy);

// The (K,R)-defended reasoner: accepts only a single random-search log with
// exactly K*R trials, splits it into R groups of K, and outputs the
// intersection of the naive conclusions per group. Any other input concludes
// nothing.
ConclusionSet defended_conclude(const Log& big_log, std::uint64_t k, std::uint64_t r,
                                const ConclusionPolicy& policy);

} // namespace ehpo
