#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace oseq {

enum class Errc {
    EmptySequence,
    LeadingEntryNotOne,
    NegativeEntry,
    NotArtinianShape,
    MacaulayViolation,
    CodimExceedsVars,
    DegreeNotMaterialized,
    NotAnIdeal,
    IndexOutOfRange,
    UnitMonomial,
    DimensionMismatch,
    TooManyVariables,
    NotStable,
    MissingEntry,
    ReductionBoundNotMet,
    BaseNotValid,
    ParameterOutOfRange,
    NonHomogeneousGenerator,
    NotArtinianByTmax,
    LowGenericity,
    ParseError,
    Overflow,
};

constexpr std::string_view errc_name(Errc e) noexcept {
    switch (e) {
    case Errc::EmptySequence: return "EmptySequence";
    case Errc::LeadingEntryNotOne: return "LeadingEntryNotOne";
    case Errc::NegativeEntry: return "NegativeEntry";
    case Errc::NotArtinianShape: return "NotArtinianShape";
    case Errc::MacaulayViolation: return "MacaulayViolation";
    case Errc::CodimExceedsVars: return "CodimExceedsVars";
    case Errc::DegreeNotMaterialized: return "DegreeNotMaterialized";
    case Errc::NotAnIdeal: return "NotAnIdeal";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::UnitMonomial: return "UnitMonomial";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::TooManyVariables: return "TooManyVariables";
    case Errc::NotStable: return "NotStable";
    case Errc::MissingEntry: return "MissingEntry";
    case Errc::ReductionBoundNotMet: return "ReductionBoundNotMet";
    case Errc::BaseNotValid: return "BaseNotValid";
    case Errc::ParameterOutOfRange: return "ParameterOutOfRange";
    case Errc::NonHomogeneousGenerator: return "NonHomogeneousGenerator";
    case Errc::NotArtinianByTmax: return "NotArtinianByTmax";
    case Errc::LowGenericity: return "LowGenericity";
    case Errc::ParseError: return "ParseError";
    case Errc::Overflow: return "Overflow";
    }
    return "Unknown";
}

/// Every library failure is reported as an Error carrying its Errc.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace oseq
