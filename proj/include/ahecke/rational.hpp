#pragma once

#include <gmpxx.h>

#include <string>

namespace ahecke {

using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

// Parses "a" or "a/b".
Rational parse_rational(const std::string& s);

// Exact square root of a nonnegative rational, if it is a perfect square.
bool exact_sqrt(const Rational& r, Rational& out);

Rational rational_pow(const Rational& base, int exp);

}  // namespace ahecke
