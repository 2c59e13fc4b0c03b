#include "ehpo/conclusion.hpp"

#include <cmath>

namespace ehpo {

std::vector<std::string> ConclusionPolicy::referenced_algorithms() const {
    if (scheme == Scheme::Threshold) return {target_algorithm};
    return {algorithm_a, algorithm_b};
}

void ConclusionPolicy::validate() const {
    if (proposition_name.empty()) throw Error("policy proposition name is empty");
    if (scheme == Scheme::Threshold) {
        if (target_algorithm.empty()) throw Error("threshold policy needs a target algorithm");
        if (!(theta >= 0.0 && theta <= 1.0)) throw Error("threshold theta must be in [0,1]");
    } else {
        if (algorithm_a.empty() || algorithm_b.empty())
            throw Error("comparative policy needs two algorithms");
        if (algorithm_a == algorithm_b)
            throw Error("comparative policy compares an algorithm with itself");
        if (!(margin >= 0.0)) throw Error("comparative margin must be nonnegative");
    }
}

ConclusionSet::ConclusionSet(std::vector<Formula::Ptr> formulas) : formulas_(std::move(formulas)) {
    auto report = consistency_audit(formulas_);
    if (!report.consistent)
        throw Error("inconsistent conclusion set: contains both " + format_formula(report.witness) +
                    " and its negation");
}

bool ConclusionSet::contains(const Formula::Ptr& f) const {
    for (const auto& g : formulas_)
        if (equal(f, g)) return true;
    return false;
}

ConclusionSet ConclusionSet::intersect(const ConclusionSet& other) const {
    std::vector<Formula::Ptr> kept;
    for (const auto& f : formulas_)
        if (other.contains(f)) kept.push_back(f);
    return ConclusionSet(std::move(kept));
}

namespace {

// Best metric for one algorithm across a set of logs; false when absent.
bool best_across(const std::vector<Log>& logs, const std::string& algorithm_id, double& out) {
    bool found = false;
    for (const auto& log : logs) {
        double b = 0.0;
        if (log.best_metric_for(algorithm_id, b)) {
            if (!found || b > out) out = b;
            found = true;
        }
    }
    return found;
}

ConclusionSet conclude_impl(const std::vector<Log>& logs, const ConclusionPolicy& policy,
                            bool total) {
    if (logs.empty()) {
        if (total) return ConclusionSet();
        throw Error("no logs to draw conclusions from");
    }
    if (policy.scheme == ConclusionPolicy::Scheme::Threshold) {
        double best = 0.0;
        if (!best_across(logs, policy.target_algorithm, best)) {
            if (total) return ConclusionSet();
            throw Error("logs contain no trials for algorithm '" + policy.target_algorithm + "'");
        }
        if (best >= policy.theta) return ConclusionSet({policy.proposition()});
        return ConclusionSet({policy.negated_proposition()});
    }
    double best_a = 0.0;
    double best_b = 0.0;
    bool have_a = best_across(logs, policy.algorithm_a, best_a);
    bool have_b = best_across(logs, policy.algorithm_b, best_b);
    if (!have_a || !have_b) {
        if (total) return ConclusionSet();
        throw Error("logs missing trials for algorithm '" +
                    (have_a ? policy.algorithm_b : policy.algorithm_a) + "'");
    }
    if (best_a > best_b + policy.margin) return ConclusionSet({policy.proposition()});
    if (best_b > best_a + policy.margin) return ConclusionSet({policy.negated_proposition()});
    return ConclusionSet(); // tie within the margin: conclude nothing
}

} // namespace

ConclusionSet naive_conclude(const std::vector<Log>& logs, const ConclusionPolicy& policy) {
    policy.validate();
    return conclude_impl(logs, policy, false);
}

ConclusionSet naive_conclude_total(const std::vector<Log>& logs, const ConclusionPolicy& policy) {
    policy.validate();
    return conclude_impl(logs, policy, true);
}

ConclusionSet defended_conclude(const Log& big_log, std::uint64_t k, std::uint64_t r,
                                const ConclusionPolicy& policy) {
    policy.validate();
    if (k == 0 || r == 0) return ConclusionSet();
    if (big_log.header.procedure_id != kProcedureRandomSearch) return ConclusionSet();
    if (big_log.trials.size() != k * r) return ConclusionSet();

    std::vector<Log> groups = split_log(big_log, r);
    ConclusionSet result = naive_conclude_total({groups.front()}, policy);
    for (std::size_t i = 1; i < groups.size() && !result.empty(); ++i)
        result = result.intersect(naive_conclude_total({groups[i]}, policy));
    return result;
}

} // namespace ehpo
