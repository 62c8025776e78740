#ifndef SHLAT_CASES_HPP
#define SHLAT_CASES_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "shlat/probability.hpp"

namespace shlat {

// A named, checkable prediction: symbolic form plus numeric evaluation.
struct ExpectedValue {
    std::string name;
    std::string symbolic;
    double numeric = 0.0;
};

// Executable fixture for one worked application: a target variable, its
// components, and the predicted report fields to check the analyzer against.
struct CaseInstance {
    std::string name;
    SpacePtr space;
    RandomVariable target;
    std::vector<std::string> componentNames;
    std::vector<RandomVariable> components;
    std::vector<ExpectedValue> expected;
    std::optional<bool> expectedPerfect;
    std::optional<bool> expectedIndependent;
};

// X over the given signed values (no zero) with a symmetric distribution;
// components |X| and sgn(X). Predicted sum of distances is exactly 1.
CaseInstance sign_abs(const std::vector<std::pair<long, Rational>>& distribution);

// Optional arithmetic tables for non-prime q: add[a][b] and mul[a][b].
struct FieldTables {
    std::vector<std::vector<unsigned>> add;
    std::vector<std::vector<unsigned>> mul;
};

// X uniform over F_q^k, components = symbols of X * G for a k x n generator
// matrix G. Predicted sum is n - n'/k (n' = nonzero columns); perfect iff
// rank(G) = k.
CaseInstance linear_code(unsigned q, std::size_t k, std::size_t n,
                         const std::vector<std::vector<unsigned>>& generator,
                         const std::optional<FieldTables>& tables = std::nullopt);

// X uniform on {1..m}; components are the p-adic valuations for primes
// p <= m. Always perfect by unique factorization.
CaseInstance prime_valuations(unsigned long m);

// X uniform on {0..k-1} for k the product of pairwise coprime moduli;
// components are the residues. Predicted sum is exactly n - 1.
CaseInstance crt(const std::vector<unsigned long>& moduli);

// X a uniform random permutation of {1..k}; components are the comparison
// bits for the given (1-based) index pairs.
CaseInstance sorting_bound(unsigned k,
                           const std::vector<std::pair<unsigned, unsigned>>& comparisons);

// The cyclic near-diagonal pair (X_eps, Y_eps) exhibiting discontinuity of
// the meet: a single communication class for eps > 0, N classes at eps = 0.
CaseInstance epsilon_chain(std::size_t n, const Rational& epsilon);

}  // namespace shlat

#endif
