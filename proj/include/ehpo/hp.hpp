#pragma once

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "ehpo/errors.hpp"
#include "ehpo/seed_stream.hpp"

namespace ehpo {

// One hyperparameter configuration: dimension name -> real value, kept in
// declared dimension order. Values are unitless (a coordinate may be the
// log10 of a learning rate, for example).
class HpPoint {
public:
    HpPoint() = default;
    explicit HpPoint(std::vector<std::pair<std::string, double>> coords)
        : coords_(std::move(coords)) {
        for (std::size_t i = 0; i < coords_.size(); ++i) {
            if (!std::isfinite(coords_[i].second))
                throw Error("non-finite coordinate for dimension '" + coords_[i].first + "'");
            for (std::size_t j = i + 1; j < coords_.size(); ++j)
                if (coords_[i].first == coords_[j].first)
                    throw Error("duplicate dimension '" + coords_[i].first + "'");
        }
    }

    const std::vector<std::pair<std::string, double>>& coordinates() const { return coords_; }
    std::size_t size() const { return coords_.size(); }
    bool empty() const { return coords_.empty(); }

    bool has(const std::string& dim) const {
        for (const auto& c : coords_)
            if (c.first == dim) return true;
        return false;
    }

    double at(const std::string& dim) const {
        for (const auto& c : coords_)
            if (c.first == dim) return c.second;
        throw Error("unknown dimension '" + dim + "'");
    }

    bool operator==(const HpPoint& o) const { return coords_ == o.coords_; }
    bool operator!=(const HpPoint& o) const { return !(*this == o); }

private:
    std::vector<std::pair<std::string, double>> coords_;
};

// Per-dimension allowable values: a bounded real interval or a finite set of
// points.
struct HpDimension {
    enum class Kind { Interval, Points };

    std::string name;
    Kind kind = Kind::Points;
    double lo = 0.0;
    double hi = 0.0;
    std::vector<double> points;

    bool contains(double v) const {
        if (kind == Kind::Interval) return v >= lo && v <= hi;
        for (double p : points)
            if (p == v) return true;
        return false;
    }
};

// The allowable HP space: ordered dimensions.
class HpDomain {
public:
    HpDomain() = default;
    explicit HpDomain(std::vector<HpDimension> dims) : dims_(std::move(dims)) {
        for (const auto& d : dims_) {
            if (d.kind == HpDimension::Kind::Interval && !(d.lo <= d.hi))
                throw Error("empty interval for dimension '" + d.name + "'");
            if (d.kind == HpDimension::Kind::Points && d.points.empty())
                throw Error("empty point set for dimension '" + d.name + "'");
        }
    }

    const std::vector<HpDimension>& dimensions() const { return dims_; }

    const HpDimension* find(const std::string& name) const {
        for (const auto& d : dims_)
            if (d.name == name) return &d;
        return nullptr;
    }

    bool contains(const HpPoint& p) const {
        if (p.size() != dims_.size()) return false;
        for (const auto& d : dims_) {
            if (!p.has(d.name) || !d.contains(p.at(d.name))) return false;
        }
        return true;
    }

private:
    std::vector<HpDimension> dims_;
};

// Finite distribution over HP points. Weights must be nonnegative and sum to
// one within 1e-12; support points must be distinct.
class DiscreteDistribution {
public:
    DiscreteDistribution() = default;
    DiscreteDistribution(std::vector<HpPoint> support, std::vector<double> weights)
        : support_(std::move(support)), weights_(std::move(weights)) {
        validate();
    }

    const std::vector<HpPoint>& support() const { return support_; }
    const std::vector<double>& weights() const { return weights_; }
    std::size_t size() const { return support_.size(); }

    const HpPoint& sample(SeedStream& stream) const {
        double u = stream.next_unit();
        double acc = 0.0;
        for (std::size_t i = 0; i < weights_.size(); ++i) {
            acc += weights_[i];
            if (u < acc) return support_[i];
        }
        return support_.back();
    }

    // Weight of a point, 0 if outside the support.
    double weight_of(const HpPoint& p) const {
        for (std::size_t i = 0; i < support_.size(); ++i)
            if (support_[i] == p) return weights_[i];
        return 0.0;
    }

private:
    void validate() const {
        if (support_.empty()) throw Error("empty distribution support");
        if (support_.size() != weights_.size())
            throw Error("distribution support/weight count mismatch");
        double sum = 0.0;
        for (double w : weights_) {
            if (!(w >= 0.0) || !std::isfinite(w)) throw Error("invalid distribution weight");
            sum += w;
        }
        if (std::abs(sum - 1.0) > 1e-12) throw Error("distribution weights do not sum to 1");
        for (std::size_t i = 0; i < support_.size(); ++i)
            for (std::size_t j = i + 1; j < support_.size(); ++j)
                if (support_[i] == support_[j]) throw Error("duplicate support point");
    }

    std::vector<HpPoint> support_;
    std::vector<double> weights_;
};

} // namespace ehpo
