#pragma once

#include <stdexcept>
#include <string>

namespace ahecke {

enum class ErrorKind {
    NonInvertibleCoefficient,
    IllegalParameter,
    UnsupportedType,
    NotARoot,
    InconsistentParameters,
    NotSaturated,
    NotInNormalizer,
    NotASubgroup,
    ParameterMismatch,
    NonPolynomialQuotient,
    IllegalCharacter,
    NotAModule,
    AssumptionViolated,
    NoGoodRepresentative,
    EmptySphere,
    Usage,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind k, const std::string& what) { throw Error(k, what); }

}  // namespace ahecke
