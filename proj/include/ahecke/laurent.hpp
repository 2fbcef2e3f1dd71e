#pragma once

#include "ahecke/rational.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace ahecke {

// Parameter symbols are small integers; q_s = v_s^2.
using ParamSymbol = int;

// Laurent polynomials in v_0..v_{k-1} over Q.
class LaurentPoly {
public:
    static constexpr int kMaxSymbols = 4;
    using Monomial = std::array<std::int16_t, kMaxSymbols>;
    using Term = std::pair<Monomial, Rational>;

    LaurentPoly() = default;
    LaurentPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
    LaurentPoly(long c) : LaurentPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)

    static LaurentPoly monomial(const Monomial& m, const Rational& c = 1);
    static LaurentPoly v(ParamSymbol s, int power = 1);
    static LaurentPoly q(ParamSymbol s, int power = 1) { return v(s, 2 * power); }

    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_constant() const;
    const std::vector<Term>& terms() const { return terms_; }

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }
    bool operator<(const LaurentPoly& o) const { return terms_ < o.terms_; }

    // Units are exactly the nonzero monomials.
    LaurentPoly inverse() const;

    std::string to_string() const;

private:
    std::vector<Term> terms_;  // sorted by monomial, nonzero coefficients
    void add_term(const Monomial& m, const Rational& c);
};

// Assigns a value to each v_s (equivalently a perfect-square q_s).
class Specialization {
public:
    Specialization() = default;
    // q_values[s] is the value of q_s; each must be a positive perfect square other than 1.
    static Specialization from_q(const std::vector<Rational>& q_values);
    static Specialization from_v(const std::vector<Rational>& v_values);

    const Rational& v(ParamSymbol s) const;
    Rational q(ParamSymbol s) const { return v(s) * v(s); }
    std::size_t size() const { return v_.size(); }

    Rational eval(const LaurentPoly& p) const;

private:
    std::vector<Rational> v_;
};

}  // namespace ahecke
