#ifndef SHLAT_RATIONAL_HPP
#define SHLAT_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <string>

namespace shlat {

// Exact rational number, always canonical (lowest terms, positive denominator).
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Parses "p/q" or "p" with optional sign. Decimals are rejected.
std::optional<Rational> parse_rational(const std::string& text);

// Serializes as "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

inline double to_double(const Rational& r) { return r.get_d(); }

}  // namespace shlat

#endif
