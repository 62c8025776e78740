#include "shlat/cases.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "shlat/lattice.hpp"
#include "shlat/log_expr.hpp"
#include "shlat/metrics.hpp"

namespace shlat {

namespace {

bool is_prime(unsigned long n) {
    if (n < 2) return false;
    for (unsigned long p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

LogExpr entropy_expr_of_masses(const std::vector<Rational>& masses) {
    LogExpr h;
    for (const auto& m : masses)
        if (m > 0) h += LogExpr::log2_of(1 / m) * m;
    return h;
}

}  // namespace

CaseInstance sign_abs(const std::vector<std::pair<long, Rational>>& distribution) {
    std::map<long, Rational> mass_of;
    for (const auto& [v, m] : distribution) {
        if (v == 0) throw ZeroMass("sign_abs: P(X=0) must be zero");
        mass_of[v] += m;
    }
    for (const auto& [v, m] : mass_of) {
        auto it = mass_of.find(-v);
        if (it == mass_of.end() || it->second != m) throw NotSymmetric();
    }

    CaseInstance inst;
    inst.name = "sign-abs";
    std::vector<Rational> masses;
    std::vector<std::string> target_labels, abs_labels, sgn_labels;
    for (const auto& [v, m] : mass_of) {
        masses.push_back(m);
        target_labels.push_back(std::to_string(v));
        abs_labels.push_back(std::to_string(v < 0 ? -v : v));
        sgn_labels.push_back(v < 0 ? "-1" : "+1");
    }
    inst.space = new_space(masses);
    inst.target = rv(inst.space, target_labels);
    inst.componentNames = {"abs", "sgn"};
    inst.components = {rv(inst.space, abs_labels), rv(inst.space, sgn_labels)};

    LogExpr hx = entropy_expr_of_masses(masses);
    RatioExpr d_abs{LogExpr::of_rational(1), hx};
    RatioExpr d_sgn{hx - LogExpr::of_rational(1), hx};
    inst.expected = {
        {"sum_distances", "1", 1.0},
        {"d_abs", d_abs.str(), d_abs.value()},
        {"d_sgn", d_sgn.str(), d_sgn.value()},
    };
    inst.expectedPerfect = true;
    inst.expectedIndependent = true;
    return inst;
}

CaseInstance linear_code(unsigned q, std::size_t k, std::size_t n,
                         const std::vector<std::vector<unsigned>>& generator,
                         const std::optional<FieldTables>& tables) {
    if (q < 2) throw BadDimensions("linear_code: q < 2");
    if (generator.size() != k) throw BadDimensions("linear_code: generator has wrong row count");
    for (const auto& row : generator) {
        if (row.size() != n) throw BadDimensions("linear_code: generator has wrong column count");
        for (unsigned e : row)
            if (e >= q) throw BadDimensions("linear_code: entry out of field range");
    }
    if (tables) {
        if (tables->add.size() != q || tables->mul.size() != q)
            throw BadDimensions("linear_code: field tables must be q x q");
    } else if (!is_prime(q)) {
        throw BadParameters("linear_code: non-prime q requires field tables");
    }
    auto fadd = [&](unsigned a, unsigned b) -> unsigned {
        return tables ? tables->add[a][b] : (a + b) % q;
    };
    auto fmul = [&](unsigned a, unsigned b) -> unsigned {
        return tables ? tables->mul[a][b] : (unsigned long)(a)*b % q;
    };

    std::size_t outcomes = 1;
    for (std::size_t i = 0; i < k; ++i) {
        outcomes *= q;
        if (outcomes > (1u << 20)) throw BadParameters("linear_code: q^k too large");
    }

    CaseInstance inst;
    inst.name = "linear-code";
    inst.space = new_space(std::vector<Rational>(outcomes, make_rational(1, long(outcomes))));
    std::vector<std::string> target_labels(outcomes);
    std::vector<std::vector<std::string>> comp_labels(n, std::vector<std::string>(outcomes));
    std::vector<unsigned> digits(k);
    for (std::size_t w = 0; w < outcomes; ++w) {
        std::size_t rem = w;
        for (std::size_t j = 0; j < k; ++j) {
            digits[j] = unsigned(rem % q);
            rem /= q;
        }
        target_labels[w] = std::to_string(w);
        for (std::size_t i = 0; i < n; ++i) {
            unsigned sym = 0;
            for (std::size_t j = 0; j < k; ++j) sym = fadd(sym, fmul(digits[j], generator[j][i]));
            comp_labels[i][w] = std::to_string(sym);
        }
    }
    inst.target = rv(inst.space, target_labels);
    for (std::size_t i = 0; i < n; ++i) {
        inst.componentNames.push_back("X" + std::to_string(i + 1));
        inst.components.push_back(rv(inst.space, comp_labels[i]));
    }

    std::size_t nonzero_cols = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < k; ++j)
            if (generator[j][i] != 0) {
                ++nonzero_cols;
                break;
            }
    }

    // Rank by Gaussian elimination over the field.
    auto finv = [&](unsigned a) -> unsigned {
        for (unsigned t = 0; t < q; ++t)
            if (fmul(a, t) == 1) return t;
        throw BadParameters("linear_code: field tables describe no inverse");
    };
    std::vector<std::vector<unsigned>> m = generator;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < k; ++col) {
        std::size_t pivot = rank;
        while (pivot < k && m[pivot][col] == 0) ++pivot;
        if (pivot == k) continue;
        std::swap(m[rank], m[pivot]);
        unsigned inv = finv(m[rank][col]);
        for (std::size_t c = 0; c < n; ++c) m[rank][c] = fmul(m[rank][c], inv);
        for (std::size_t r = 0; r < k; ++r) {
            if (r == rank || m[r][col] == 0) continue;
            unsigned factor = m[r][col];
            for (std::size_t c = 0; c < n; ++c) {
                unsigned sub = fmul(factor, m[rank][c]);
                // a - b as a + (q-1 copies of b) is wasteful; find the additive inverse.
                unsigned neg = 0;
                while (fadd(sub, neg) != 0) ++neg;
                m[r][c] = fadd(m[r][c], neg);
            }
        }
        ++rank;
    }

    Rational sum = Rational(long(n)) - make_rational(long(nonzero_cols), long(k));
    inst.expected = {
        {"sum_distances", to_string(sum), to_double(sum)},
        {"nonzero_columns", std::to_string(nonzero_cols), double(nonzero_cols)},
        {"rank", std::to_string(rank), double(rank)},
    };
    inst.expectedPerfect = (rank == k);
    inst.expectedIndependent = (rank == k && nonzero_cols == k);
    return inst;
}

CaseInstance prime_valuations(unsigned long m) {
    if (m < 2) throw BadParameters("prime_valuations: m >= 2 required");
    CaseInstance inst;
    inst.name = "primes";
    inst.space = new_space(std::vector<Rational>(m, make_rational(1, long(m))));
    std::vector<std::string> target_labels(m);
    for (unsigned long v = 0; v < m; ++v) target_labels[v] = std::to_string(v + 1);
    inst.target = rv(inst.space, target_labels);

    std::size_t n = 0;
    for (unsigned long p = 2; p <= m; ++p) {
        if (!is_prime(p)) continue;
        ++n;
        std::vector<std::string> labels(m);
        for (unsigned long v = 1; v <= m; ++v) {
            unsigned long x = v, e = 0;
            while (x % p == 0) {
                x /= p;
                ++e;
            }
            labels[v - 1] = std::to_string(e);
        }
        inst.componentNames.push_back("X_" + std::to_string(p));
        inst.components.push_back(rv(inst.space, labels));
    }

    double log2_mfact = 0.0;
    for (unsigned long i = 2; i <= m; ++i) log2_mfact += std::log2(double(i));
    double bound = double(n) - log2_mfact / (double(m) * std::log2(double(m)));
    inst.expected = {
        {"sum_upper_bound",
         std::to_string(n) + " - log2(" + std::to_string(m) + "!)/(" + std::to_string(m) +
             "*log2(" + std::to_string(m) + "))",
         bound},
        {"necessary_bound", std::to_string(n - 1), double(n - 1)},
    };
    inst.expectedPerfect = true;  // unique factorization
    return inst;
}

CaseInstance crt(const std::vector<unsigned long>& moduli) {
    if (moduli.empty()) throw BadParameters("crt: no moduli");
    for (unsigned long k : moduli)
        if (k < 2) throw NotCoprime("crt: moduli must exceed 1");
    for (std::size_t i = 0; i < moduli.size(); ++i)
        for (std::size_t j = i + 1; j < moduli.size(); ++j)
            if (std::gcd(moduli[i], moduli[j]) != 1)
                throw NotCoprime("crt: gcd(" + std::to_string(moduli[i]) + "," +
                                 std::to_string(moduli[j]) + ") > 1");
    unsigned long k = 1;
    for (unsigned long ki : moduli) {
        k *= ki;
        if (k > 1000000) throw BadParameters("crt: modulus product too large");
    }

    CaseInstance inst;
    inst.name = "crt";
    inst.space = new_space(std::vector<Rational>(k, make_rational(1, long(k))));
    std::vector<std::string> target_labels(k);
    for (unsigned long v = 0; v < k; ++v) target_labels[v] = std::to_string(v);
    inst.target = rv(inst.space, target_labels);
    for (unsigned long ki : moduli) {
        std::vector<std::string> labels(k);
        for (unsigned long v = 0; v < k; ++v) labels[v] = std::to_string(v % ki);
        inst.componentNames.push_back("mod" + std::to_string(ki));
        inst.components.push_back(rv(inst.space, labels));
    }

    const std::size_t n = moduli.size();
    double margin_drop_last = std::log2(double(moduli.back())) / std::log2(double(k));
    inst.expected = {
        {"sum_distances", std::to_string(n - 1), double(n - 1)},
        {"margin_if_drop_last",
         "log2(" + std::to_string(moduli.back()) + ")/log2(" + std::to_string(k) + ")",
         margin_drop_last},
    };
    inst.expectedPerfect = true;
    inst.expectedIndependent = true;
    return inst;
}

CaseInstance sorting_bound(unsigned k,
                           const std::vector<std::pair<unsigned, unsigned>>& comparisons) {
    if (k < 2 || k > 7) throw KTooLarge("sorting_bound: 2 <= k <= 7 required");
    for (const auto& [i, j] : comparisons)
        if (i < 1 || j < 1 || i > k || j > k || i == j)
            throw BadParameters("sorting_bound: bad comparison pair");

    std::vector<std::vector<unsigned>> perms;
    std::vector<unsigned> perm(k);
    std::iota(perm.begin(), perm.end(), 1u);
    do {
        perms.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    const std::size_t count = perms.size();  // k!

    CaseInstance inst;
    inst.name = "sort";
    inst.space = new_space(std::vector<Rational>(count, make_rational(1, long(count))));
    std::vector<std::string> target_labels(count);
    for (std::size_t w = 0; w < count; ++w) {
        std::string s;
        for (unsigned e : perms[w]) s += std::to_string(e);
        target_labels[w] = s;
    }
    inst.target = rv(inst.space, target_labels);
    for (const auto& [i, j] : comparisons) {
        std::vector<std::string> labels(count);
        for (std::size_t w = 0; w < count; ++w)
            labels[w] = perms[w][i - 1] < perms[w][j - 1] ? "1" : "0";
        inst.componentNames.push_back("X_" + std::to_string(i) + "," + std::to_string(j));
        inst.components.push_back(rv(inst.space, labels));
    }

    double log2_kfact = 0.0;
    for (unsigned i = 2; i <= k; ++i) log2_kfact += std::log2(double(i));
    double lower_bound = std::ceil(log2_kfact - 1e-12);
    inst.expected = {
        {"comparison_lower_bound", "ceil(log2(" + std::to_string(k) + "!))", lower_bound},
        {"per_comparison_distance", "1 - 1/log2(" + std::to_string(k) + "!)",
         1.0 - 1.0 / log2_kfact},
    };
    return inst;
}

CaseInstance epsilon_chain(std::size_t n, const Rational& epsilon) {
    if (n < 2 || epsilon < 0 || epsilon >= 1) throw BadParameters("epsilon_chain");
    CaseInstance inst;
    inst.name = "chain";
    std::vector<Rational> masses;
    std::vector<std::string> x_labels, y_labels;
    const Rational diag = (1 - epsilon) / make_rational(long(n));
    const Rational off = epsilon / make_rational(long(n));
    for (std::size_t i = 0; i < n; ++i) {
        masses.push_back(diag);
        x_labels.push_back("r" + std::to_string(i));
        y_labels.push_back("c" + std::to_string(i));
        masses.push_back(off);
        x_labels.push_back("r" + std::to_string(i));
        y_labels.push_back("c" + std::to_string((i + 1) % n));
    }
    inst.space = new_space(masses);
    RandomVariable x = rv(inst.space, x_labels);
    RandomVariable y = rv(inst.space, y_labels);
    inst.target = join(x, y);
    inst.componentNames = {"X", "Y"};
    inst.components = {x, y};

    bool connected = epsilon > 0;
    inst.expected = {
        {"block_count", connected ? "1" : std::to_string(n),
         connected ? 1.0 : double(n)},
        {"meet_entropy_bits", connected ? "0" : "log2(" + std::to_string(n) + ")",
         connected ? 0.0 : std::log2(double(n))},
    };
    inst.expectedPerfect = true;  // X v Y rebuilds the pair by construction
    return inst;
}

}  // namespace shlat
