#ifndef SHLAT_PROBABILITY_HPP
#define SHLAT_PROBABILITY_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "shlat/errors.hpp"
#include "shlat/rational.hpp"

namespace shlat {

class ProbabilitySpace;
using SpacePtr = std::shared_ptr<const ProbabilitySpace>;

// Finite probability space with exact rational masses. Outcomes are dense
// integers 0..n-1. Immutable after construction.
class ProbabilitySpace {
public:
    // Validates: nonempty, masses >= 0, sum exactly 1.
    static SpacePtr create(std::vector<Rational> masses);

    std::size_t size() const { return masses_.size(); }
    const Rational& mass(std::size_t outcome) const { return masses_[outcome]; }
    const std::vector<Rational>& masses() const { return masses_; }

    // Outcomes of positive mass, in increasing order.
    const std::vector<std::size_t>& support() const { return support_; }
    bool is_restricted() const { return support_.size() == masses_.size(); }

private:
    explicit ProbabilitySpace(std::vector<Rational> masses);
    std::vector<Rational> masses_;
    std::vector<std::size_t> support_;
};

SpacePtr new_space(std::vector<Rational> masses);

// Drops zero-mass outcomes; returns the same space when already restricted.
SpacePtr restrict_support(const SpacePtr& space);

// Random variable as a total labeling of outcomes. The a.s. value set is the
// image over positive-mass outcomes, in first-occurrence order.
class RandomVariable {
public:
    RandomVariable() = default;

    const SpacePtr& space() const { return space_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(std::size_t outcome) const { return labels_[outcome]; }

    const std::vector<std::string>& values() const { return values_; }
    std::size_t value_count() const { return values_.size(); }

    // Dense a.s.-value index of an outcome; -1 on zero-mass outcomes.
    int value_index(std::size_t outcome) const { return value_index_[outcome]; }

    // Exact mass of each a.s. value, indexed like values().
    const std::vector<Rational>& value_masses() const { return value_masses_; }

    bool is_deterministic() const { return values_.size() <= 1; }

    friend RandomVariable rv(const SpacePtr& space, std::vector<std::string> labels);

private:
    SpacePtr space_;
    std::vector<std::string> labels_;
    std::vector<std::string> values_;
    std::vector<int> value_index_;
    std::vector<Rational> value_masses_;
};

RandomVariable rv(const SpacePtr& space, std::vector<std::string> labels);

inline bool same_space(const RandomVariable& x, const RandomVariable& y) {
    return x.space() == y.space();
}

inline void require_same_space(const RandomVariable& x, const RandomVariable& y) {
    if (!same_space(x, y)) throw SpaceMismatch();
}

// Dense matrix of exact joint masses over the a.s. values of X (rows) and
// Y (columns).
struct JointDistribution {
    std::vector<std::string> rowValues;
    std::vector<std::string> colValues;
    std::vector<std::vector<Rational>> entries;

    std::size_t rows() const { return rowValues.size(); }
    std::size_t cols() const { return colValues.size(); }
};

JointDistribution joint(const RandomVariable& x, const RandomVariable& y);

std::map<std::string, Rational> marginal(const RandomVariable& x);

}  // namespace shlat

#endif
