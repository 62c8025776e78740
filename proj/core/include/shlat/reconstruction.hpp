#ifndef SHLAT_RECONSTRUCTION_HPP
#define SHLAT_RECONSTRUCTION_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "shlat/log_expr.hpp"
#include "shlat/metrics.hpp"
#include "shlat/probability.hpp"

namespace shlat {

// Verdict of the perfect-reconstruction analyzer for X and components
// X_1,...,X_n in the sublattice generated by X. Ground truth is always
// computed directly (join + structural equivalence); the necessary and
// sufficient conditions become checked predictions against it.
struct ReconstructionReport {
    std::size_t n = 0;
    std::vector<RatioExpr> distances;       // d(X, X_i), exact symbolic form
    std::vector<double> distanceValues;
    RatioExpr sumExpr;
    double sumDistances = 0.0;
    double necessaryBound = 0.0;            // n - 1
    bool necessaryHolds = false;
    bool mutuallyIndependent = false;
    bool sufficientApplies = false;
    RatioExpr deltaExpr;                    // redundancy d(X, X_1 v ... v X_n)
    double delta = 0.0;
    bool groundTruthPerfect = false;
    bool consistent = false;
};

// True iff every component is <= X.
bool validate_components(const RandomVariable& x,
                         const std::vector<RandomVariable>& components);

// Exact mutual independence: the joint mass of every value tuple equals the
// product of the marginal masses.
bool mutually_independent(const std::vector<RandomVariable>& components);

ReconstructionReport analyze(const RandomVariable& x,
                             const std::vector<RandomVariable>& components);

// Sum of distances minus (n - 1); a value above tolerance certifies that
// perfect reconstruction is impossible.
double impossibility_margin(const ReconstructionReport& report);

struct ImpossibilityCertificate {
    double margin = 0.0;
    double rhoSum = 0.0;       // sum of dependency coefficients; threshold 1
    std::string verdict;       // "impossible", "boundary" or "none"
};

ImpossibilityCertificate certify(const ReconstructionReport& report);

// Randomized soundness sweep over random variables (<= 6 values) and random
// quotient components (n <= 4), checking Theorems 1-3 and the general sum
// inequality on every trial. Trials are seeded independently.
struct SweepResult {
    std::size_t trials = 0;
    std::size_t failures = 0;
    std::size_t perfectCount = 0;
    std::size_t independentCount = 0;
    std::vector<std::string> failureNotes;  // first few failures, for reports
};

SweepResult soundness_sweep(std::size_t trials, std::uint64_t seed);

}  // namespace shlat

#endif
