#include "ehpo/hyper_config.hpp"

#include <cmath>

namespace ehpo {

double DimensionRange::sample(SeedStream& stream) const {
    double u = stream.next_unit();
    if (kind == Kind::Uniform) return lo + u * (hi - lo);
    return std::exp(std::log(lo) + u * (std::log(hi) - std::log(lo)));
}

HpPoint SamplingRule::sample(SeedStream& stream) const {
    if (kind == Kind::Discrete) return discrete.sample(stream);
    std::vector<std::pair<std::string, double>> coords;
    coords.reserve(ranges.size());
    for (const auto& r : ranges) coords.emplace_back(r.name, r.sample(stream));
    return HpPoint(std::move(coords));
}

void HyperHpConfig::validate(const HpDomain& domain) const {
    if (is_grid()) {
        const auto& g = grid();
        if (g.points.empty()) throw Error("grid configuration has no dimensions");
        for (const auto& [dim, values] : g.points) {
            if (values.empty()) throw Error("empty grid point list for dimension '" + dim + "'");
            const HpDimension* d = domain.find(dim);
            if (!d) throw Error("grid dimension '" + dim + "' not in HP domain");
            for (double v : values)
                if (!d->contains(v))
                    throw Error("grid point outside domain for dimension '" + dim + "'");
        }
        return;
    }
    const auto& rs = random_search();
    if (rs.trials < 1) throw Error("random search requires at least one trial");
    if (rs.distribution.kind == SamplingRule::Kind::Discrete) {
        if (rs.distribution.discrete.size() == 0) throw Error("empty sampling support");
        for (const auto& p : rs.distribution.discrete.support())
            if (!domain.contains(p)) throw Error("sampling support point outside HP domain");
    } else {
        if (rs.distribution.ranges.empty()) throw Error("no sampling ranges declared");
        for (const auto& r : rs.distribution.ranges) {
            const HpDimension* d = domain.find(r.name);
            if (!d) throw Error("sampling dimension '" + r.name + "' not in HP domain");
            if (!(r.lo < r.hi)) throw Error("degenerate sampling range for '" + r.name + "'");
            if (r.kind == DimensionRange::Kind::LogUniform && !(r.lo > 0.0))
                throw Error("log-uniform range requires positive bounds for '" + r.name + "'");
            if (!d->contains(r.lo) || !d->contains(r.hi))
                throw Error("sampling range outside domain for '" + r.name + "'");
        }
    }
}

} // namespace ehpo
