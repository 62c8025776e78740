#include "shlat/metrics.hpp"

#include <unordered_map>

namespace shlat {

namespace {

// Masses of the distinct a.s. (x, y) pairs, gathered sparsely.
std::vector<Rational> pair_masses(const RandomVariable& x, const RandomVariable& y) {
    require_same_space(x, y);
    std::unordered_map<std::size_t, Rational> acc;
    const std::size_t stride = y.value_count();
    for (std::size_t i : x.space()->support()) {
        std::size_t key = std::size_t(x.value_index(i)) * stride + std::size_t(y.value_index(i));
        acc[key] += x.space()->mass(i);
    }
    std::vector<Rational> masses;
    masses.reserve(acc.size());
    for (auto& [k, m] : acc) masses.push_back(std::move(m));
    return masses;
}

Bits entropy_of(const std::vector<Rational>& masses) {
    double h = 0.0;
    for (const auto& m : masses) {
        double p = to_double(m);
        if (p > 0.0) h -= p * std::log2(p);
    }
    return h;
}

LogExpr entropy_expr_of(const std::vector<Rational>& masses) {
    LogExpr h;
    for (const auto& m : masses) {
        if (m > 0) h += LogExpr::log2_of(1 / m) * m;
    }
    return h;
}

}  // namespace

Bits entropy(const RandomVariable& x) { return entropy_of(x.value_masses()); }

Bits joint_entropy(const RandomVariable& x, const RandomVariable& y) {
    return entropy_of(pair_masses(x, y));
}

Bits conditional_entropy(const RandomVariable& x, const RandomVariable& y) {
    return joint_entropy(x, y) - entropy(y);
}

Bits mutual_information(const RandomVariable& x, const RandomVariable& y) {
    return entropy(x) - conditional_entropy(x, y);
}

Bits conditional_mutual_information(const RandomVariable& x, const RandomVariable& z,
                                    const RandomVariable& y) {
    return conditional_entropy(x, y) + conditional_entropy(z, y) -
           (joint_entropy(join(x, z), y) - entropy(y));
}

Bits shannon_distance(const RandomVariable& x, const RandomVariable& y) {
    return 2.0 * joint_entropy(x, y) - entropy(x) - entropy(y);
}

double rajski_distance(const RandomVariable& x, const RandomVariable& y) {
    require_same_space(x, y);
    if (x.is_deterministic() && y.is_deterministic()) return 0.0;  // d(0,0) = 0
    return shannon_distance(x, y) / joint_entropy(x, y);
}

double dependency(const RandomVariable& x, const RandomVariable& y) {
    if (x.is_deterministic() || y.is_deterministic()) throw DeterministicOperand();
    return 1.0 - rajski_distance(x, y);
}

LogExpr entropy_expr(const RandomVariable& x) { return entropy_expr_of(x.value_masses()); }

LogExpr joint_entropy_expr(const RandomVariable& x, const RandomVariable& y) {
    return entropy_expr_of(pair_masses(x, y));
}

LogExpr shannon_distance_expr(const RandomVariable& x, const RandomVariable& y) {
    LogExpr h = joint_entropy_expr(x, y);
    return h + h - entropy_expr(x) - entropy_expr(y);
}

RatioExpr rajski_distance_expr(const RandomVariable& x, const RandomVariable& y) {
    return {shannon_distance_expr(x, y), joint_entropy_expr(x, y)};
}

bool independent(const RandomVariable& x, const RandomVariable& y) {
    require_same_space(x, y);
    std::unordered_map<std::size_t, Rational> acc;
    const std::size_t stride = y.value_count();
    for (std::size_t i : x.space()->support()) {
        std::size_t key = std::size_t(x.value_index(i)) * stride + std::size_t(y.value_index(i));
        acc[key] += x.space()->mass(i);
    }
    // Every pair in the product of supports must carry the product mass;
    // if every observed pair does and the observed count matches the product
    // count, no positive-product pair can be missing.
    if (acc.size() != x.value_count() * y.value_count()) return false;
    for (const auto& [key, m] : acc) {
        std::size_t xi = key / stride, yi = key % stride;
        if (m != x.value_masses()[xi] * y.value_masses()[yi]) return false;
    }
    return true;
}

bool conditionally_independent(const RandomVariable& x, const RandomVariable& z,
                               const RandomVariable& y) {
    require_same_space(x, y);
    require_same_space(z, y);
    const std::size_t nx = x.value_count(), nz = z.value_count();
    struct Slice {
        std::unordered_map<std::size_t, Rational> xz;  // joint within Y = y
        std::unordered_map<std::size_t, Rational> xm;  // P(X=x, Y=y)
        std::unordered_map<std::size_t, Rational> zm;  // P(Z=z, Y=y)
        Rational total;
    };
    std::vector<Slice> slices(y.value_count());
    for (std::size_t i : y.space()->support()) {
        Slice& s = slices[y.value_index(i)];
        const Rational& m = y.space()->mass(i);
        std::size_t xi = std::size_t(x.value_index(i)), zi = std::size_t(z.value_index(i));
        s.xz[xi * nz + zi] += m;
        s.xm[xi] += m;
        s.zm[zi] += m;
        s.total += m;
    }
    for (const Slice& s : slices) {
        // Rank-1 test: P(x,z,y) * P(y) == P(x,y) * P(z,y) for all x, z.
        for (const auto& [xi, mx] : s.xm) {
            for (const auto& [zi, mz] : s.zm) {
                auto it = s.xz.find(xi * nz + zi);
                Rational cell = it == s.xz.end() ? Rational(0) : it->second;
                if (cell * s.total != mx * mz) return false;
            }
        }
    }
    return true;
}

bool is_aligned_shannon(const RandomVariable& x, const RandomVariable& y,
                        const RandomVariable& z) {
    return is_leq(y, join(x, z)) && conditionally_independent(x, z, y);
}

bool is_aligned_rajski(const RandomVariable& x, const RandomVariable& y,
                       const RandomVariable& z) {
    return is_equivalent(y, join(x, z));
}

InequalityReport inequality_suite(const RandomVariable& x, const RandomVariable& y,
                                  const RandomVariable& xp, const RandomVariable& yp) {
    require_same_space(x, y);
    require_same_space(x, xp);
    require_same_space(x, yp);
    InequalityReport report;
    auto check = [&](std::string name, double lhs, double rhs) {
        bool holds = approx_leq(lhs, rhs);
        report.checks.push_back({std::move(name), lhs, rhs, holds});
        if (!holds) report.all_hold = false;
    };

    const double dxx = shannon_distance(x, xp);
    const double dyy = shannon_distance(y, yp);
    check("continuity_1_entropy", std::abs(entropy(x) - entropy(y)), shannon_distance(x, y));
    check("continuity_2_joint_entropy", std::abs(joint_entropy(x, y) - joint_entropy(xp, yp)),
          dxx + dyy);
    check("continuity_3_conditional_entropy",
          std::abs(conditional_entropy(x, y) - conditional_entropy(xp, yp)), dxx + 2.0 * dyy);
    check("continuity_4_mutual_information",
          std::abs(mutual_information(x, y) - mutual_information(xp, yp)), 2.0 * (dxx + dyy));
    check("join_continuity", shannon_distance(join(x, y), join(xp, yp)), dxx + dyy);

    RandomVariable m = meet(x, y);
    check("submodularity", entropy(m) + joint_entropy(x, y), entropy(x) + entropy(y));
    check("common_vs_mutual", entropy(m), mutual_information(x, y));
    return report;
}

}  // namespace shlat
