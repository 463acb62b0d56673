#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace twb {

enum class Errc {
    NonDivisibleConductor,
    DivisionByZero,
    FieldMismatch,
    UnsupportedField,
    NonUnitConstantTerm,
    PoleAtZero,
    ZeroDenominator,
    OrderExceeded,
    OrderMismatch,
    NotMultiplicative,
    WrongSupport,
    NotNormalized,
    NonCyclicUnitGroup,
    InvalidArgument,
};

std::string_view errc_name(Errc code) noexcept;

/// Raised by every arithmetic and validation routine in the library.
class MathError : public std::runtime_error {
public:
    MathError(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace twb
