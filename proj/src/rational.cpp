#include "ahecke/rational.hpp"

#include "ahecke/error.hpp"

namespace ahecke {

Rational parse_rational(const std::string& s) {
    Rational r;
    if (s.empty() || r.set_str(s, 10) != 0) fail(ErrorKind::Usage, "not a rational: '" + s + "'");
    if (r.get_den() == 0) fail(ErrorKind::Usage, "zero denominator: '" + s + "'");
    r.canonicalize();
    return r;
}

bool exact_sqrt(const Rational& r, Rational& out) {
    if (sgn(r) < 0) return false;
    mpz_class n = r.get_num(), d = r.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
    mpz_class sn, sd;
    mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
    out = Rational(sn, sd);
    out.canonicalize();
    return true;
}

Rational rational_pow(const Rational& base, int exp) {
    if (exp < 0) {
        if (sgn(base) == 0) fail(ErrorKind::NonInvertibleCoefficient, "0 to a negative power");
        Rational inv = 1 / base;
        return rational_pow(inv, -exp);
    }
    Rational out = 1, b = base;
    unsigned e = static_cast<unsigned>(exp);
    while (e) {
        if (e & 1u) out *= b;
        b *= b;
        e >>= 1u;
    }
    return out;
}

const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::NonInvertibleCoefficient: return "NonInvertibleCoefficient";
        case ErrorKind::IllegalParameter: return "IllegalParameter";
        case ErrorKind::UnsupportedType: return "UnsupportedType";
        case ErrorKind::NotARoot: return "NotARoot";
        case ErrorKind::InconsistentParameters: return "InconsistentParameters";
        case ErrorKind::NotSaturated: return "NotSaturated";
        case ErrorKind::NotInNormalizer: return "NotInNormalizer";
        case ErrorKind::NotASubgroup: return "NotASubgroup";
        case ErrorKind::ParameterMismatch: return "ParameterMismatch";
        case ErrorKind::NonPolynomialQuotient: return "NonPolynomialQuotient";
        case ErrorKind::IllegalCharacter: return "IllegalCharacter";
        case ErrorKind::NotAModule: return "NotAModule";
        case ErrorKind::AssumptionViolated: return "AssumptionViolated";
        case ErrorKind::NoGoodRepresentative: return "NoGoodRepresentative";
        case ErrorKind::EmptySphere: return "EmptySphere";
        case ErrorKind::Usage: return "Usage";
    }
    return "Error";
}

}  // namespace ahecke
