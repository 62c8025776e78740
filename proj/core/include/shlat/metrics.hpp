#ifndef SHLAT_METRICS_HPP
#define SHLAT_METRICS_HPP

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "shlat/lattice.hpp"
#include "shlat/log_expr.hpp"
#include "shlat/probability.hpp"

namespace shlat {

// All entropic values are in bits (base-2 logarithms). Structural decisions
// (equivalence, order, independence, Markov property) are never taken from
// these floats; they use exact rational tests.
using Bits = double;

inline constexpr double kEntropicTolerance = 1e-9;

inline bool approx_leq(double lhs, double rhs) {
    return lhs <= rhs + kEntropicTolerance * std::max({1.0, std::abs(lhs), std::abs(rhs)});
}
inline bool approx_eq(double a, double b) {
    return std::abs(a - b) <= kEntropicTolerance * std::max({1.0, std::abs(a), std::abs(b)});
}

Bits entropy(const RandomVariable& x);
Bits joint_entropy(const RandomVariable& x, const RandomVariable& y);
Bits conditional_entropy(const RandomVariable& x, const RandomVariable& y);
Bits mutual_information(const RandomVariable& x, const RandomVariable& y);
// I(X; Z | Y)
Bits conditional_mutual_information(const RandomVariable& x, const RandomVariable& z,
                                    const RandomVariable& y);

// D(X,Y) = H(X|Y) + H(Y|X)
Bits shannon_distance(const RandomVariable& x, const RandomVariable& y);

// d(X,Y) = D(X,Y)/H(X,Y), with d(0,0) = 0. Dimensionless, in [0,1].
double rajski_distance(const RandomVariable& x, const RandomVariable& y);

// rho(X,Y) = 1 - d(X,Y) = I(X;Y)/H(X,Y); rejects deterministic operands.
double dependency(const RandomVariable& x, const RandomVariable& y);

// Exact symbolic forms of the same quantities.
LogExpr entropy_expr(const RandomVariable& x);
LogExpr joint_entropy_expr(const RandomVariable& x, const RandomVariable& y);
LogExpr shannon_distance_expr(const RandomVariable& x, const RandomVariable& y);
RatioExpr rajski_distance_expr(const RandomVariable& x, const RandomVariable& y);

// Exact conditional independence of X and Z given Y: every conditional joint
// block factorizes as a rational rank-1 product.
bool conditionally_independent(const RandomVariable& x, const RandomVariable& z,
                               const RandomVariable& y);

// Exact independence of X and Y.
bool independent(const RandomVariable& x, const RandomVariable& y);

// Alignment w.r.t. D: X - Y - Z Markov and Y <= X v Z (structural test).
bool is_aligned_shannon(const RandomVariable& x, const RandomVariable& y,
                        const RandomVariable& z);

// Alignment w.r.t. d: Y == X v Z.
bool is_aligned_rajski(const RandomVariable& x, const RandomVariable& y,
                       const RandomVariable& z);

struct InequalityCheck {
    std::string name;
    double lhs = 0.0;  // inequality is lhs <= rhs
    double rhs = 0.0;
    bool holds = false;
};

struct InequalityReport {
    std::vector<InequalityCheck> checks;
    bool all_hold = true;
};

// Evaluates the continuity bounds, join continuity, submodularity and the
// common-vs-mutual-information bound on the quadruple (X, Y, X', Y').
InequalityReport inequality_suite(const RandomVariable& x, const RandomVariable& y,
                                  const RandomVariable& xp, const RandomVariable& yp);

}  // namespace shlat

#endif
