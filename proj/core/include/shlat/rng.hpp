#ifndef SHLAT_RNG_HPP
#define SHLAT_RNG_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "shlat/probability.hpp"

namespace shlat {

// SplitMix64. Self-contained so that randomized sweeps are reproducible
// across standard libraries and platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform-ish integer in [0, n); modulo bias is irrelevant here.
    std::uint64_t below(std::uint64_t n) { return next() % n; }

    // Integer in [lo, hi] inclusive.
    std::uint64_t range(std::uint64_t lo, std::uint64_t hi) {
        return lo + below(hi - lo + 1);
    }

private:
    std::uint64_t state_;
};

inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t trial) {
    Rng r(base ^ (0x51ed2701a1b21407ULL + trial * 0x2545f4914f6cdd1dULL));
    return r.next();
}

// Random restricted space with outcome count in [min_outcomes, max_outcomes]
// and small-integer masses.
inline SpacePtr random_space(Rng& rng, std::size_t min_outcomes, std::size_t max_outcomes) {
    std::size_t n = std::size_t(rng.range(min_outcomes, max_outcomes));
    std::vector<long> weights(n);
    long total = 0;
    for (auto& w : weights) {
        w = long(rng.range(1, 6));
        total += w;
    }
    std::vector<Rational> masses;
    masses.reserve(n);
    for (long w : weights) masses.push_back(make_rational(w, total));
    return new_space(std::move(masses));
}

// Random variable with at most max_values distinct labels.
inline RandomVariable random_variable(Rng& rng, const SpacePtr& space,
                                      std::size_t max_values) {
    std::vector<std::string> labels;
    labels.reserve(space->size());
    for (std::size_t i = 0; i < space->size(); ++i)
        labels.push_back("v" + std::to_string(rng.below(max_values)));
    return rv(space, std::move(labels));
}

// Random quotient of X: a random map of X's value set onto a smaller range.
inline RandomVariable random_quotient(Rng& rng, const RandomVariable& x) {
    std::size_t n = x.value_count();
    std::size_t classes = n == 0 ? 1 : std::size_t(rng.range(1, n));
    std::vector<std::size_t> class_of(n);
    for (auto& c : class_of) c = rng.below(classes);
    std::vector<std::string> labels(x.labels().size(), "q0");
    for (std::size_t i : x.space()->support())
        labels[i] = "q" + std::to_string(class_of[x.value_index(i)]);
    return rv(x.space(), std::move(labels));
}

}  // namespace shlat

#endif
