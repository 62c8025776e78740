#include "shlat/probability.hpp"

#include <unordered_map>
#include <utility>

namespace shlat {

ProbabilitySpace::ProbabilitySpace(std::vector<Rational> masses)
    : masses_(std::move(masses)) {
    for (std::size_t i = 0; i < masses_.size(); ++i) {
        if (masses_[i] > 0) support_.push_back(i);
    }
}

SpacePtr ProbabilitySpace::create(std::vector<Rational> masses) {
    if (masses.empty()) throw EmptySupport("new_space: no outcomes");
    Rational sum = 0;
    for (const auto& m : masses) {
        if (m < 0) throw NegativeMass();
        sum += m;
    }
    if (sum != 1) throw SumNotOne("new_space: masses sum to " + to_string(sum));
    SpacePtr space(new ProbabilitySpace(std::move(masses)));
    if (space->support().empty()) throw EmptySupport();
    return space;
}

SpacePtr new_space(std::vector<Rational> masses) {
    return ProbabilitySpace::create(std::move(masses));
}

SpacePtr restrict_support(const SpacePtr& space) {
    if (space->is_restricted()) return space;
    std::vector<Rational> masses;
    masses.reserve(space->support().size());
    for (std::size_t i : space->support()) masses.push_back(space->mass(i));
    return ProbabilitySpace::create(std::move(masses));
}

RandomVariable rv(const SpacePtr& space, std::vector<std::string> labels) {
    if (labels.size() != space->size())
        throw LengthMismatch("rv: " + std::to_string(labels.size()) + " labels over " +
                             std::to_string(space->size()) + " outcomes");
    RandomVariable x;
    x.space_ = space;
    x.labels_ = std::move(labels);
    x.value_index_.assign(space->size(), -1);
    std::unordered_map<std::string, int> index_of;
    for (std::size_t i : space->support()) {
        auto [it, inserted] = index_of.try_emplace(x.labels_[i], int(x.values_.size()));
        if (inserted) {
            x.values_.push_back(x.labels_[i]);
            x.value_masses_.emplace_back(0);
        }
        x.value_index_[i] = it->second;
        x.value_masses_[it->second] += space->mass(i);
    }
    return x;
}

JointDistribution joint(const RandomVariable& x, const RandomVariable& y) {
    require_same_space(x, y);
    JointDistribution j;
    j.rowValues = x.values();
    j.colValues = y.values();
    j.entries.assign(j.rows(), std::vector<Rational>(j.cols(), Rational(0)));
    const auto& space = *x.space();
    for (std::size_t i : space.support())
        j.entries[x.value_index(i)][y.value_index(i)] += space.mass(i);
    return j;
}

std::map<std::string, Rational> marginal(const RandomVariable& x) {
    std::map<std::string, Rational> m;
    for (std::size_t v = 0; v < x.value_count(); ++v)
        m[x.values()[v]] = x.value_masses()[v];
    return m;
}

}  // namespace shlat
