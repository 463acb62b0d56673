#include "twb/errors.hpp"

namespace twb {

std::string_view errc_name(Errc code) noexcept {
    switch (code) {
    case Errc::NonDivisibleConductor: return "NonDivisibleConductor";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::UnsupportedField: return "UnsupportedField";
    case Errc::NonUnitConstantTerm: return "NonUnitConstantTerm";
    case Errc::PoleAtZero: return "PoleAtZero";
    case Errc::ZeroDenominator: return "ZeroDenominator";
    case Errc::OrderExceeded: return "OrderExceeded";
    case Errc::OrderMismatch: return "OrderMismatch";
    case Errc::NotMultiplicative: return "NotMultiplicative";
    case Errc::WrongSupport: return "WrongSupport";
    case Errc::NotNormalized: return "NotNormalized";
    case Errc::NonCyclicUnitGroup: return "NonCyclicUnitGroup";
    case Errc::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

}  // namespace twb
