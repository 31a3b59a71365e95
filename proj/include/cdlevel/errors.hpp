#pragma once

#include <stdexcept>
#include <string>

namespace cdlevel {

/// Error codes for every failure mode the library reports.
enum class Errc {
    MixedFields,
    DivisionByZero,
    ZeroInput,
    NotMonomial,
    ZeroScale,
    NoLeadingOne,
    DegenerateResult,
    DimensionMismatch,
    SignUndetermined,
    WrongField,
    FactorizationBudgetExceeded,
    NotMonomialForm,
    ZeroParameter,
    ZeroGamma,
    DimensionBudgetExceeded,
    MixedAlgebras,
    EnumerationBudgetExceeded,
    HypothesisViolation,
    BadWittIndex,
    CertificateContradiction,
    ParseError,
    InternalInvariant,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

} // namespace cdlevel
