#include "ehpo/log.hpp"

#include <algorithm>
#include <cmath>

namespace ehpo {

std::size_t Log::best_trial_index() const {
    if (trials.empty()) throw Error("log has no trials");
    std::size_t best = 0;
    for (std::size_t i = 1; i < trials.size(); ++i)
        if (trials[i].metric > trials[best].metric) best = i;
    return best;
}

double Log::best_metric() const { return trials[best_trial_index()].metric; }

bool Log::best_metric_for(const std::string& algorithm_id, double& out) const {
    bool found = false;
    for (const auto& t : trials) {
        if (t.algorithm_id != algorithm_id) continue;
        if (!found || t.metric > out) out = t.metric;
        found = true;
    }
    return found;
}

bool Log::has_algorithm(const std::string& algorithm_id) const {
    for (const auto& t : trials)
        if (t.algorithm_id == algorithm_id) return true;
    return false;
}

bool Log::equals(const Log& o) const {
    if (header.schema_version != o.header.schema_version) return false;
    if (header.procedure_id != o.header.procedure_id) return false;
    if (header.master_seed != o.header.master_seed) return false;
    if (!(header.best_hp == o.header.best_hp)) return false;
    if (header.total_time != o.header.total_time) return false;
    return trials == o.trials;
}

void finalize_log(Log& log) {
    log.header.total_time = log.trials.size();
    log.header.best_hp = log.trials[log.best_trial_index()].hp;
}

TrialRecord eval_trial(const SyntheticTask& task, const std::string& algorithm_id,
                       const HpPoint& hp, SeedStream seed) {
    if (!task.hp_domain.contains(hp)) throw Error("HP point outside task domain");
    const ScoringRule& rule = task.scoring_for(algorithm_id);
    double u = seed.next_symmetric();
    double metric = rule.mean_at(hp) + rule.noise_amplitude * u;
    metric = std::clamp(metric, 0.0, 1.0);
    TrialRecord rec;
    rec.algorithm_id = algorithm_id;
    rec.hp = hp;
    rec.seed_index = seed.stream_index();
    rec.metric = metric;
    rec.cost = 1;
    return rec;
}

Log run_random_search(const SyntheticTask& task, const std::string& algorithm_id,
                      const RandomSearchConfig& config, std::uint64_t master_seed) {
    if (config.trials < 1) throw Error("random search requires at least one trial");
    if (config.distribution.kind == SamplingRule::Kind::Discrete &&
        config.distribution.discrete.size() == 0)
        throw Error("empty sampling support");

    Log log;
    log.header.procedure_id = kProcedureRandomSearch;
    log.header.hyper_hp_config.value = config;
    log.header.master_seed = master_seed;
    log.trials.reserve(config.trials);
    const std::uint64_t k = config.trials;
    for (std::uint64_t i = 0; i < k; ++i) {
        SeedStream sampler = derive_seed(master_seed, i);
        HpPoint hp = config.distribution.sample(sampler);
        log.trials.push_back(eval_trial(task, algorithm_id, hp, derive_seed(master_seed, k + i)));
    }
    finalize_log(log);
    return log;
}

Log run_grid_search(const SyntheticTask& task, const std::string& algorithm_id,
                    const GridConfig& config, std::uint64_t master_seed) {
    if (config.points.empty()) throw Error("grid configuration has no dimensions");
    for (const auto& [dim, values] : config.points)
        if (values.empty()) throw Error("empty grid point list for dimension '" + dim + "'");

    Log log;
    log.header.procedure_id = kProcedureGridSearch;
    log.header.hyper_hp_config.value = config;
    log.header.master_seed = master_seed;
    log.trials.reserve(config.trial_count());

    // Odometer over declared dimension order, last dimension fastest.
    std::vector<std::size_t> idx(config.points.size(), 0);
    std::uint64_t trial = 0;
    for (;;) {
        std::vector<std::pair<std::string, double>> coords;
        coords.reserve(config.points.size());
        for (std::size_t d = 0; d < config.points.size(); ++d)
            coords.emplace_back(config.points[d].first, config.points[d].second[idx[d]]);
        log.trials.push_back(
            eval_trial(task, algorithm_id, HpPoint(std::move(coords)), derive_seed(master_seed, trial)));
        ++trial;

        std::size_t d = config.points.size();
        while (d > 0) {
            --d;
            if (++idx[d] < config.points[d].second.size()) break;
            idx[d] = 0;
            if (d == 0) {
                finalize_log(log);
                return log;
            }
        }
    }
}

Log run_hpo(const SyntheticTask& task, const std::string& algorithm_id,
            const HyperHpConfig& config, std::uint64_t master_seed) {
    if (config.is_grid()) return run_grid_search(task, algorithm_id, config.grid(), master_seed);
    return run_random_search(task, algorithm_id, config.random_search(), master_seed);
}

std::vector<Log> split_log(const Log& log, std::uint64_t groups) {
    if (log.header.procedure_id != kProcedureRandomSearch)
        throw Error("split is only licensed for random-search logs");
    if (groups == 0) throw Error("group count must be positive");
    if (log.trials.size() % groups != 0)
        throw Error("trial count " + std::to_string(log.trials.size()) +
                    " not divisible by " + std::to_string(groups));

    const std::size_t per = log.trials.size() / groups;
    std::vector<Log> out;
    out.reserve(groups);
    for (std::uint64_t g = 0; g < groups; ++g) {
        Log sub;
        sub.header = log.header;
        if (sub.header.hyper_hp_config.is_random_search()) {
            auto rs = sub.header.hyper_hp_config.random_search();
            rs.trials = per;
            sub.header.hyper_hp_config.value = rs;
        }
        sub.trials.assign(log.trials.begin() + g * per, log.trials.begin() + (g + 1) * per);
        finalize_log(sub);
        out.push_back(std::move(sub));
    }
    return out;
}

Log merge_logs(const std::vector<Log>& logs) {
    if (logs.empty()) throw Error("cannot merge zero logs");
    Log out;
    out.header = logs.front().header;
    for (const auto& l : logs) {
        if (l.header.procedure_id != out.header.procedure_id)
            throw Error("cannot merge logs from different procedures");
        out.trials.insert(out.trials.end(), l.trials.begin(), l.trials.end());
    }
    finalize_log(out);
    return out;
}

ScoutResult scout_hyper_hps(const SyntheticTask& task, const std::string& algorithm_id,
                            double start_lo, double start_hi,
                            std::uint64_t grid_points_per_round, std::uint64_t max_rounds,
                            std::uint64_t master_seed) {
    if (!(start_lo > 0.0) || !(start_lo < start_hi))
        throw Error("scouting requires a positive, nonempty start range");
    if (grid_points_per_round < 3) throw Error("scouting needs at least 3 grid points per round");
    if (task.hp_domain.dimensions().size() != 1)
        throw Error("scouting operates on single-dimension tasks");
    const std::string dim = task.hp_domain.dimensions().front().name;

    ScoutResult result;
    result.lo = start_lo;
    result.hi = start_hi;
    const std::uint64_t g = grid_points_per_round;
    for (std::uint64_t round = 0; round < max_rounds; ++round) {
        double llo = std::log10(result.lo);
        double lhi = std::log10(result.hi);
        std::size_t best = 0;
        double best_metric = -1.0;
        for (std::uint64_t j = 0; j < g; ++j) {
            double x = std::pow(10.0, llo + (lhi - llo) * static_cast<double>(j) /
                                               static_cast<double>(g - 1));
            HpPoint hp(std::vector<std::pair<std::string, double>>{{dim, x}});
            TrialRecord rec =
                eval_trial(task, algorithm_id, hp, derive_seed(master_seed, round * g + j));
            if (rec.metric > best_metric) {
                best_metric = rec.metric;
                best = j;
            }
        }
        result.rounds_used = round + 1;
        if (best != 0 && best != g - 1) {
            result.best_interior = true;
            return result;
        }
        if (lhi - llo <= 1.0) return result; // cannot shrink below one decade
        if (best == g - 1)
            result.lo *= 10.0; // pull the lower boundary toward the top
        else
            result.hi /= 10.0; // pull the upper boundary toward the bottom
    }
    return result;
}

} // namespace ehpo
