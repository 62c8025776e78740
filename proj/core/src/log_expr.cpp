#include "shlat/log_expr.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace shlat {

namespace {

// Trial division; probability masses in this library have small factors.
void factorize_into(mpz_class n, std::vector<std::pair<mpz_class, long>>& out) {
    for (mpz_class p = 2; p * p <= n; ++p) {
        long e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e > 0) out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
}

}  // namespace

LogExpr LogExpr::of_rational(const Rational& c) {
    LogExpr e;
    e.constant_ = c;
    return e;
}

LogExpr LogExpr::log2_of(const Rational& arg) {
    if (arg <= 0) throw std::invalid_argument("log2_of: argument must be positive");
    LogExpr e;
    std::vector<std::pair<mpz_class, long>> factors;
    factorize_into(arg.get_num(), factors);
    for (const auto& [p, exp] : factors) e.add_term(p, Rational(exp));
    factors.clear();
    factorize_into(arg.get_den(), factors);
    for (const auto& [p, exp] : factors) e.add_term(p, Rational(-exp));
    return e;
}

void LogExpr::add_term(const mpz_class& prime, const Rational& coeff) {
    if (coeff == 0) return;
    if (prime == 2) {
        constant_ += coeff;  // log2(2) = 1
        return;
    }
    auto it = terms_.find(prime);
    if (it == terms_.end()) {
        terms_.emplace(prime, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

LogExpr& LogExpr::operator+=(const LogExpr& other) {
    constant_ += other.constant_;
    for (const auto& [p, c] : other.terms_) add_term(p, c);
    return *this;
}

LogExpr& LogExpr::operator-=(const LogExpr& other) {
    constant_ -= other.constant_;
    for (const auto& [p, c] : other.terms_) add_term(p, -c);
    return *this;
}

LogExpr& LogExpr::operator*=(const Rational& c) {
    if (c == 0) {
        constant_ = 0;
        terms_.clear();
        return *this;
    }
    constant_ *= c;
    for (auto& [p, coeff] : terms_) coeff *= c;
    return *this;
}

double LogExpr::value() const {
    double v = to_double(constant_);
    for (const auto& [p, c] : terms_) v += to_double(c) * std::log2(p.get_d());
    return v;
}

std::string LogExpr::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    auto emit = [&](const Rational& coeff, const std::string& sym) {
        Rational c = coeff;
        if (first) {
            if (c < 0) {
                out << "-";
                c = -c;
            }
        } else {
            out << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        if (sym.empty()) {
            out << to_string(c);
        } else if (c == 1) {
            out << sym;
        } else {
            out << to_string(c) << "*" << sym;
        }
        first = false;
    };
    if (constant_ != 0) emit(constant_, "");
    for (const auto& [p, c] : terms_) emit(c, "log2(" + p.get_str(10) + ")");
    return out.str();
}

double RatioExpr::value() const {
    if (num.is_zero()) return 0.0;  // covers the d(0,0) = 0 convention
    return num.value() / den.value();
}

std::string RatioExpr::str() const {
    return "(" + num.str() + ")/(" + den.str() + ")";
}

RatioExpr& RatioExpr::operator+=(const RatioExpr& other) {
    if (!(den == other.den))
        throw std::invalid_argument("RatioExpr: mismatched denominators");
    num += other.num;
    return *this;
}

}  // namespace shlat
