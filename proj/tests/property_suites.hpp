#ifndef SHLAT_TESTS_PROPERTY_SUITES_HPP
#define SHLAT_TESTS_PROPERTY_SUITES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "shlat/geometry.hpp"
#include "shlat/lattice.hpp"
#include "shlat/metrics.hpp"
#include "shlat/reconstruction.hpp"
#include "shlat/rng.hpp"

// Randomized property suites shared by the unit tests (small trial counts)
// and the acceptance gate (10,000 trials each). Every function returns the
// number of failing trials and records a few descriptions.
namespace props {

struct SuiteResult {
    std::size_t trials = 0;
    std::size_t failures = 0;
    std::vector<std::string> notes;

    void fail(std::size_t trial, const std::string& what) {
        ++failures;
        if (notes.size() < 5) notes.push_back("trial " + std::to_string(trial) + ": " + what);
    }
};

using namespace shlat;

// Symmetry and identity exactly, triangle inequalities within tolerance,
// d = 1 iff independence (nondeterministic case, checked exactly).
inline SuiteResult metric_axioms(std::size_t trials, std::uint64_t seed) {
    SuiteResult res;
    res.trials = trials;
    for (std::size_t t = 0; t < trials; ++t) {
        Rng rng(derive_seed(seed, t));
        SpacePtr space = random_space(rng, 2, 6);
        RandomVariable x = random_variable(rng, space, 6);
        RandomVariable y = random_variable(rng, space, 6);
        RandomVariable z = random_variable(rng, space, 6);

        if (!(shannon_distance_expr(x, y) == shannon_distance_expr(y, x)))
            res.fail(t, "D not symmetric");
        double dxy = rajski_distance(x, y);
        if (!approx_eq(dxy, rajski_distance(y, x))) res.fail(t, "d not symmetric");
        if (shannon_distance(x, y) < -kEntropicTolerance) res.fail(t, "D negative");
        if (dxy < -kEntropicTolerance || dxy > 1.0 + kEntropicTolerance)
            res.fail(t, "d out of [0,1]");
        if (!approx_leq(shannon_distance(x, z),
                        shannon_distance(x, y) + shannon_distance(y, z)))
            res.fail(t, "D triangle violated");
        if (!approx_leq(rajski_distance(x, z), dxy + rajski_distance(y, z)))
            res.fail(t, "d triangle violated");
        if (shannon_distance_expr(x, y).is_zero() != is_equivalent(x, y))
            res.fail(t, "D = 0 vs equivalence mismatch");
        if (!x.is_deterministic() && !y.is_deterministic()) {
            if (rajski_distance_expr(x, y).equals_rational(1) != independent(x, y))
                res.fail(t, "d = 1 vs independence mismatch");
        }
    }
    return res;
}

// Distances inside the sublattice generated by X: the closed forms for
// quotients, the Apollonius median identity, and the two join bounds with
// their exact equality cases.
inline SuiteResult sublattice_geometry(std::size_t trials, std::uint64_t seed) {
    SuiteResult res;
    res.trials = trials;
    for (std::size_t t = 0; t < trials; ++t) {
        Rng rng(derive_seed(seed ^ 0xa5a5a5a5ULL, t));
        SpacePtr space = random_space(rng, 2, 6);
        RandomVariable x = random_variable(rng, space, 6);
        RandomVariable y = random_quotient(rng, x);
        RandomVariable z = random_quotient(rng, x);

        // D(X,Y) = H(X) - H(Y) for Y <= X, exactly.
        if (!(shannon_distance_expr(x, y) == entropy_expr(x) - entropy_expr(y)))
            res.fail(t, "quotient distance form violated");

        double median = shannon_distance(x, join(y, z));
        double apollonius = (shannon_distance(x, y) + shannon_distance(x, z) -
                             shannon_distance(y, z)) / 2.0;
        if (!approx_eq(median, apollonius)) res.fail(t, "Apollonius identity violated");

        double lhs4 = rajski_distance(x, y) + rajski_distance(x, z);
        double rhs4 = rajski_distance(x, join(y, z)) + 1.0;
        if (!approx_leq(lhs4, rhs4)) res.fail(t, "join lower bound violated");
        if (!x.is_deterministic()) {
            // Equality iff Y and Z are independent; exact on both sides.
            LogExpr hx = entropy_expr(x);
            LogExpr lhs = (hx - entropy_expr(y)) + (hx - entropy_expr(z));
            LogExpr rhs = (hx - joint_entropy_expr(y, z)) + hx;
            if ((lhs == rhs) != independent(y, z))
                res.fail(t, "join bound equality vs independence mismatch");
        }
        if (!approx_leq(rajski_distance(x, join(y, z)),
                        rajski_distance(x, y) + rajski_distance(x, z)))
            res.fail(t, "join upper bound violated");
    }
    return res;
}

inline SuiteResult submodularity(std::size_t trials, std::uint64_t seed) {
    SuiteResult res;
    res.trials = trials;
    for (std::size_t t = 0; t < trials; ++t) {
        Rng rng(derive_seed(seed ^ 0x5bd1e995ULL, t));
        SpacePtr space = random_space(rng, 2, 6);
        RandomVariable x = random_variable(rng, space, 6);
        RandomVariable y = random_variable(rng, space, 6);
        RandomVariable m = meet(x, y);
        if (!approx_leq(entropy(m) + joint_entropy(x, y), entropy(x) + entropy(y)))
            res.fail(t, "submodularity violated");
        if (!approx_leq(entropy(m), mutual_information(x, y)))
            res.fail(t, "common information exceeds mutual information");
    }
    return res;
}

// Joints assembled from rank-1 blocks: the common information then carries
// all of the mutual information, H(X ^ Y) = I(X;Y) exactly.
inline SuiteResult rank_one_equality(std::size_t trials, std::uint64_t seed) {
    SuiteResult res;
    res.trials = trials;
    for (std::size_t t = 0; t < trials; ++t) {
        Rng rng(derive_seed(seed ^ 0xc2b2ae35ULL, t));
        std::size_t blocks = std::size_t(rng.range(1, 3));
        std::vector<Rational> masses;
        std::vector<std::string> x_labels, y_labels;
        long block_weight_total = 0;
        std::vector<long> block_weight(blocks);
        for (auto& w : block_weight) {
            w = long(rng.range(1, 4));
            block_weight_total += w;
        }
        for (std::size_t b = 0; b < blocks; ++b) {
            std::size_t rows = std::size_t(rng.range(1, 3));
            std::size_t cols = std::size_t(rng.range(1, 3));
            std::vector<long> rw(rows), cw(cols);
            long rt = 0, ct = 0;
            for (auto& w : rw) rt += (w = long(rng.range(1, 4)));
            for (auto& w : cw) ct += (w = long(rng.range(1, 4)));
            for (std::size_t r = 0; r < rows; ++r) {
                for (std::size_t c = 0; c < cols; ++c) {
                    masses.push_back(make_rational(block_weight[b], block_weight_total) *
                                     make_rational(rw[r], rt) * make_rational(cw[c], ct));
                    x_labels.push_back("b" + std::to_string(b) + "r" + std::to_string(r));
                    y_labels.push_back("b" + std::to_string(b) + "c" + std::to_string(c));
                }
            }
        }
        SpacePtr space = new_space(masses);
        RandomVariable x = rv(space, x_labels);
        RandomVariable y = rv(space, y_labels);
        LogExpr mutual = entropy_expr(x) + entropy_expr(y) - joint_entropy_expr(x, y);
        if (!(entropy_expr(meet(x, y)) == mutual))
            res.fail(t, "rank-1 block equality violated");
    }
    return res;
}

inline SuiteResult continuity(std::size_t trials, std::uint64_t seed) {
    SuiteResult res;
    res.trials = trials;
    for (std::size_t t = 0; t < trials; ++t) {
        Rng rng(derive_seed(seed ^ 0x27d4eb2fULL, t));
        SpacePtr space = random_space(rng, 2, 6);
        RandomVariable x = random_variable(rng, space, 6);
        RandomVariable y = random_variable(rng, space, 6);
        RandomVariable xp = random_variable(rng, space, 6);
        RandomVariable yp = random_variable(rng, space, 6);
        InequalityReport report = inequality_suite(x, y, xp, yp);
        if (!report.all_hold) {
            for (const auto& c : report.checks)
                if (!c.holds) res.fail(t, c.name + " violated");
        }
    }
    return res;
}

inline SuiteResult complement_postconditions(std::size_t trials, std::uint64_t seed) {
    SuiteResult res;
    res.trials = trials;
    for (std::size_t t = 0; t < trials; ++t) {
        Rng rng(derive_seed(seed ^ 0x165667b1ULL, t));
        SpacePtr space = random_space(rng, 2, 6);
        RandomVariable y = random_variable(rng, space, 6);
        RandomVariable x = random_quotient(rng, y);
        auto [z, tensor] = complement(x, y);
        if (!is_equivalent(join(x, z), y)) res.fail(t, "join(X,Z) != Y");
        if (!meet(x, z).is_deterministic()) res.fail(t, "meet(X,Z) != 0");
        // The tensor marginalized over z must recover the (X, Y) joint.
        JointDistribution j = joint(x, y);
        for (std::size_t r = 0; r < j.rows(); ++r)
            for (std::size_t c = 0; c < j.cols(); ++c) {
                Rational sum = 0;
                for (const auto& m : tensor.entries[r][c]) sum += m;
                if (sum != j.entries[r][c]) res.fail(t, "tensor marginal mismatch");
            }
    }
    return res;
}

// Alignment w.r.t. d forces alignment w.r.t. D, and both give equality in
// their triangle inequalities.
inline SuiteResult alignment(std::size_t trials, std::uint64_t seed) {
    SuiteResult res;
    res.trials = trials;
    for (std::size_t t = 0; t < trials; ++t) {
        Rng rng(derive_seed(seed ^ 0x85ebca6bULL, t));
        SpacePtr space = random_space(rng, 2, 6);
        RandomVariable x = random_variable(rng, space, 4);
        RandomVariable z = random_variable(rng, space, 4);
        // Mix genuinely aligned triples with arbitrary middles.
        RandomVariable y = rng.below(2) == 0 ? join(x, z) : random_variable(rng, space, 4);

        bool rajski = is_aligned_rajski(x, y, z);
        bool shannon = is_aligned_shannon(x, y, z);
        if (rajski && !shannon) res.fail(t, "Rajski alignment without Shannon alignment");
        if (shannon && !approx_eq(shannon_distance(x, y) + shannon_distance(y, z),
                                  shannon_distance(x, z)))
            res.fail(t, "Shannon alignment without triangle equality");
        if (rajski && !approx_eq(rajski_distance(x, y) + rajski_distance(y, z),
                                 rajski_distance(x, z)))
            res.fail(t, "Rajski alignment without triangle equality");
    }
    return res;
}

}  // namespace props

#endif
