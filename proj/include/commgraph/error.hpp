#pragma once

#include <stdexcept>
#include <string>

namespace cg {

// Error codes shared by the library, the CLI exit-code mapping and the
// python bindings. Input-shaped problems map to CLI exit 2, capability
// limits (infinite field, budget, unsupported lifts) to exit 3.
enum class Err {
    NonPrime,
    ReducibleModulus,
    DegreeMismatch,
    DivisionByZero,
    FieldMismatch,
    ShapeMismatch,
    TooLarge,
    NotMonic,
    ScalarInput,
    NonSplitSpectrum,
    NoEigenvalueInField,
    InfiniteField,
    BudgetExceeded,
    DegenerateParameters,
    NotMinimalSpec,
    BadConjugator,
    BadParameters,
    BadDimension,
    RepeatedEigenvalues,
    Char2IndexClash,
    WrongClass,
    MinimalInput,
    NotSemisimpleMinimal,
    FieldTooSmall,
    SemisimpleInput,
    NotJordan,
    AmbientMismatch,
    IdentityMissing,
    ParseError,
    Unsupported,
    Internal,
};

const char* err_name(Err c);

class Error : public std::runtime_error {
  public:
    Err code;
    Error(Err c, const std::string& msg)
        : std::runtime_error(std::string(err_name(c)) + ": " + msg), code(c) {}
};

[[noreturn]] inline void fail(Err c, const std::string& msg) { throw Error(c, msg); }

inline void require(bool ok, Err c, const std::string& msg) {
    if (!ok) fail(c, msg);
}

} // namespace cg
