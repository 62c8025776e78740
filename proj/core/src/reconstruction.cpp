#include "shlat/reconstruction.hpp"

#include <map>

#include "shlat/lattice.hpp"
#include "shlat/rng.hpp"

namespace shlat {

bool validate_components(const RandomVariable& x,
                         const std::vector<RandomVariable>& components) {
    for (const auto& c : components)
        if (!is_leq(c, x)) return false;
    return true;
}

bool mutually_independent(const std::vector<RandomVariable>& components) {
    if (components.empty()) return true;
    for (std::size_t i = 1; i < components.size(); ++i)
        require_same_space(components[0], components[i]);

    std::map<std::vector<int>, Rational> tuples;
    const auto& space = *components[0].space();
    std::vector<int> key(components.size());
    for (std::size_t i : space.support()) {
        for (std::size_t c = 0; c < components.size(); ++c)
            key[c] = components[c].value_index(i);
        tuples[key] += space.mass(i);
    }

    // If every observed tuple carries the product mass and the tuple count
    // equals the product of support sizes, the product measure is matched.
    std::size_t product = 1;
    for (const auto& c : components) {
        product *= c.value_count();
        if (product > space.support().size() + 1) return false;  // cannot match
    }
    if (tuples.size() != product) return false;
    for (const auto& [k, mass] : tuples) {
        Rational expected = 1;
        for (std::size_t c = 0; c < components.size(); ++c)
            expected *= components[c].value_masses()[k[c]];
        if (mass != expected) return false;
    }
    return true;
}

ReconstructionReport analyze(const RandomVariable& x,
                             const std::vector<RandomVariable>& components) {
    if (components.empty()) throw BadParameters("analyze: need at least one component");
    if (!validate_components(x, components)) throw ComponentNotDerived();

    ReconstructionReport r;
    r.n = components.size();
    r.necessaryBound = double(r.n) - 1.0;

    // Every component is <= X, so every Rajski denominator is exactly H(X).
    const LogExpr hx = entropy_expr(x);
    r.sumExpr = {LogExpr{}, hx};
    for (const auto& c : components) {
        RatioExpr d{hx - entropy_expr(c), hx};
        r.distanceValues.push_back(d.value());
        r.sumExpr += d;
        r.distances.push_back(std::move(d));
    }
    r.sumDistances = r.sumExpr.value();

    RandomVariable joined = components[0];
    for (std::size_t i = 1; i < components.size(); ++i)
        joined = join(joined, components[i]);
    r.groundTruthPerfect = is_equivalent(x, joined);
    r.deltaExpr = {hx - entropy_expr(joined), hx};
    r.delta = r.deltaExpr.value();

    r.necessaryHolds = approx_leq(r.sumDistances, r.necessaryBound) ||
                       r.sumExpr.equals_rational(Rational(long(r.n) - 1));
    r.mutuallyIndependent = mutually_independent(components);
    r.sufficientApplies = r.mutuallyIndependent && r.necessaryHolds;

    // Cross-check the theorems against ground truth.
    bool ok = true;
    if (r.groundTruthPerfect && !r.necessaryHolds) ok = false;           // Thm 1
    if (r.sufficientApplies && !r.groundTruthPerfect) ok = false;        // Thm 2
    bool delta_zero = r.deltaExpr.num.is_zero();
    if (delta_zero != r.groundTruthPerfect) ok = false;
    if (!approx_leq(r.sumDistances, r.necessaryBound + r.delta)) ok = false;  // eq. sum bound
    if (!delta_zero) {
        // Sandwich: delta < sum <= n-1+delta. With a single component the
        // left side degenerates to equality, so strictness only binds for
        // n >= 2.
        if (!(r.delta < r.sumDistances + kEntropicTolerance)) ok = false;
        if (r.n >= 2 && r.sumExpr.num == r.deltaExpr.num) ok = false;
    }
    r.consistent = ok;
    return r;
}

double impossibility_margin(const ReconstructionReport& report) {
    return report.sumDistances - report.necessaryBound;
}

ImpossibilityCertificate certify(const ReconstructionReport& report) {
    ImpossibilityCertificate c;
    c.margin = impossibility_margin(report);
    c.rhoSum = double(report.n) - report.sumDistances;
    if (c.margin > kEntropicTolerance) c.verdict = "impossible";
    else if (c.margin >= -kEntropicTolerance) c.verdict = "boundary";
    else c.verdict = "none";
    return c;
}

SweepResult soundness_sweep(std::size_t trials, std::uint64_t seed) {
    SweepResult result;
    result.trials = trials;
    for (std::size_t t = 0; t < trials; ++t) {
        Rng rng(derive_seed(seed, t));
        SpacePtr space = random_space(rng, 2, 6);
        RandomVariable x = random_variable(rng, space, 6);
        std::size_t n = std::size_t(rng.range(1, 4));
        std::vector<RandomVariable> components;
        for (std::size_t i = 0; i < n; ++i) components.push_back(random_quotient(rng, x));

        ReconstructionReport r = analyze(x, components);
        auto fail = [&](const std::string& what) {
            ++result.failures;
            if (result.failureNotes.size() < 10)
                result.failureNotes.push_back("trial " + std::to_string(t) + ": " + what);
        };
        if (!r.consistent) fail("inconsistent report");
        if (r.groundTruthPerfect && r.sumDistances > r.necessaryBound + kEntropicTolerance)
            fail("necessary condition violated");
        if (r.mutuallyIndependent && approx_leq(r.sumDistances, r.necessaryBound) &&
            !r.groundTruthPerfect)
            fail("sufficient condition violated");
        // General inequality, with equality exactly on independent trials.
        if (!approx_leq(r.sumDistances, r.delta + r.necessaryBound)) fail("sum bound violated");
        if (r.mutuallyIndependent) {
            ++result.independentCount;
            // The equality case divides by H(X), so it says nothing about a
            // deterministic X (all distances vanish there).
            if (!x.is_deterministic() &&
                !approx_eq(r.sumDistances, r.delta + r.necessaryBound))
                fail("independence equality violated");
        }
        if (r.groundTruthPerfect) ++result.perfectCount;
    }
    return result;
}

}  // namespace shlat
