#ifndef SHLAT_LOG_EXPR_HPP
#define SHLAT_LOG_EXPR_HPP

#include <map>
#include <string>

#include "shlat/rational.hpp"

namespace shlat {

// Exact rational combination of base-2 logarithms of primes, plus a rational
// constant. Every entropy of a rational distribution has this form, and by
// unique factorization the representation is canonical: the expression is
// zero iff the constant and every coefficient are zero, which makes equality
// testing exact.
class LogExpr {
public:
    LogExpr() = default;

    static LogExpr of_rational(const Rational& c);
    static LogExpr log2_of(const Rational& arg);  // requires arg > 0

    LogExpr& operator+=(const LogExpr& other);
    LogExpr& operator-=(const LogExpr& other);
    LogExpr& operator*=(const Rational& c);

    friend LogExpr operator+(LogExpr a, const LogExpr& b) { return a += b; }
    friend LogExpr operator-(LogExpr a, const LogExpr& b) { return a -= b; }
    friend LogExpr operator*(LogExpr a, const Rational& c) { return a *= c; }

    bool is_zero() const { return constant_ == 0 && terms_.empty(); }
    bool operator==(const LogExpr& other) const {
        return constant_ == other.constant_ && terms_ == other.terms_;
    }

    // True iff the expression equals the rational r exactly.
    bool equals_rational(const Rational& r) const {
        return terms_.empty() && constant_ == r;
    }

    double value() const;   // numeric evaluation in bits
    std::string str() const;

private:
    Rational constant_;
    std::map<mpz_class, Rational> terms_;  // prime -> coefficient of log2(prime)

    void add_term(const mpz_class& prime, const Rational& coeff);
};

// Quotient of two log-linear expressions; the exact form of Rajski distances
// and related normalized quantities.
struct RatioExpr {
    LogExpr num;
    LogExpr den;

    double value() const;
    std::string str() const;

    // Exact test num == r * den (meaningful when den != 0).
    bool equals_rational(const Rational& r) const {
        LogExpr d = den;
        d *= r;
        return num == d;
    }

    RatioExpr& operator+=(const RatioExpr& other);  // requires identical denominator
};

}  // namespace shlat

#endif
