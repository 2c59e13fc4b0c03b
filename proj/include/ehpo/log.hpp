#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ehpo/hyper_config.hpp"
#include "ehpo/task.hpp"

namespace ehpo {

inline constexpr const char* kLogSchemaVersion = "ehpo-log/1";
inline constexpr const char* kProcedureRandomSearch = "random-search";
inline constexpr const char* kProcedureGridSearch = "grid-search";

// One inner run: algorithm + HP point + seed stream index + observed metric.
// Cost is always one trial-unit; time budgets are measured in trials.
struct TrialRecord {
    std::string algorithm_id;
    HpPoint hp;
    std::uint64_t seed_index = 0;
    double metric = 0.0;
    std::uint64_t cost = 1;

    bool operator==(const TrialRecord& o) const = default;
};

struct LogHeader {
    std::string schema_version = kLogSchemaVersion;
    std::string procedure_id;
    HyperHpConfig hyper_hp_config;
    std::uint64_t master_seed = 0;
    HpPoint best_hp;
    std::uint64_t total_time = 0;
};

// A reproducible record of one HPO run. total_time equals the trial count;
// best_hp is the HP of the first maximum-metric trial.
struct Log {
    LogHeader header;
    std::vector<TrialRecord> trials;

    // First index attaining the maximum metric.
    std::size_t best_trial_index() const;
    double best_metric() const;
    // Best metric over trials of one algorithm; false if absent.
    bool best_metric_for(const std::string& algorithm_id, double& out) const;
    bool has_algorithm(const std::string& algorithm_id) const;

    bool equals(const Log& o) const;
};

// Recompute best_hp and total_time from the trial list.
void finalize_log(Log& log);

// Evaluate one trial: metric = clamp(mean(hp) + noise * u, 0, 1) with u the
// stream's next symmetric draw. Pure function of its arguments.
TrialRecord eval_trial(const SyntheticTask& task, const std::string& algorithm_id,
                       const HpPoint& hp, SeedStream seed);

// K independent trials with HPs drawn from mu. Trial i samples its HP on
// stream i and is evaluated on stream K+i (recorded as the trial's
// seed_index).
Log run_random_search(const SyntheticTask& task, const std::string& algorithm_id,
                      const RandomSearchConfig& config, std::uint64_t master_seed);

// One trial per Cartesian-product point, dimensions in declared order with
// the rightmost dimension cycling fastest; trial j evaluates on stream j.
Log run_grid_search(const SyntheticTask& task, const std::string& algorithm_id,
                    const GridConfig& config, std::uint64_t master_seed);

// Run a HyperHpConfig (either variant) for one algorithm.
Log run_hpo(const SyntheticTask& task, const std::string& algorithm_id,
            const HyperHpConfig& config, std::uint64_t master_seed);

// Split a random-search log into R contiguous equal chunks. Only licensed
// for random search, whose trials are interchangeable.
std::vector<Log> split_log(const Log& log, std::uint64_t groups);

// Concatenate trial lists of several logs into one (used for group logs that
// carry every algorithm a comparative policy references). Headers must agree
// on procedure and config shape; best_hp/total_time are recomputed.
Log merge_logs(const std::vector<Log>& logs);

// Iterative range scouting: evaluate a log-uniform grid over [lo, hi]; if the
// best grid point sits on a boundary, move the opposite boundary one decade
// toward it and repeat, stopping when the best point is interior, the range
// has shrunk to a single decade, or max_rounds is reached.
struct ScoutResult {
    double lo = 0.0;
    double hi = 0.0;
    std::uint64_t rounds_used = 0;
    bool best_interior = false;
};
ScoutResult scout_hyper_hps(const SyntheticTask& task, const std::string& algorithm_id,
                            double start_lo, double start_hi,
                            std::uint64_t grid_points_per_round, std::uint64_t max_rounds,
                            std::uint64_t master_seed);

// Newline-delimited serialization: header record first, then one record per
// trial. Reals carry 17 significant digits so re-serialization is
// byte-identical.
void write_log(const Log& log, std::ostream& out);
void write_log_file(const Log& log, const std::string& path);
Log read_log(std::istream& in);
Log read_log_file(const std::string& path);

} // namespace ehpo
