#include "arithcap/errors.hpp"

namespace arithcap {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::NonzeroRemainder: return "NonzeroRemainder";
    case ErrorCode::NonUnitConstantTerm: return "NonUnitConstantTerm";
    case ErrorCode::NonzeroConstantTerm: return "NonzeroConstantTerm";
    case ErrorCode::NonInvertibleLinearTerm: return "NonInvertibleLinearTerm";
    case ErrorCode::NotMonic: return "NotMonic";
    case ErrorCode::ZeroInput: return "ZeroInput";
    case ErrorCode::PartsMismatch: return "PartsMismatch";
    case ErrorCode::NotFound: return "NotFound";
    case ErrorCode::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorCode::InsufficientMargin: return "InsufficientMargin";
    case ErrorCode::NoMargin: return "NoMargin";
    case ErrorCode::DegreeCapExceeded: return "DegreeCapExceeded";
    case ErrorCode::TopCoefficientsNotIntegral: return "TopCoefficientsNotIntegral";
    case ErrorCode::CenterOnBoundary: return "CenterOnBoundary";
    case ErrorCode::SolverIllConditioned: return "SolverIllConditioned";
    case ErrorCode::PoleAtCenter: return "PoleAtCenter";
    case ErrorCode::AllCoefficientsBelowTolerance: return "AllCoefficientsBelowTolerance";
    case ErrorCode::ConstantMap: return "ConstantMap";
    case ErrorCode::BoundaryZero: return "BoundaryZero";
    case ErrorCode::CenterNotZero: return "CenterNotZero";
    case ErrorCode::AsymmetricDomain: return "AsymmetricDomain";
    case ErrorCode::WrongVanishingOrder: return "WrongVanishingOrder";
    case ErrorCode::InvalidDomain: return "InvalidDomain";
    case ErrorCode::SampleSingularity: return "SampleSingularity";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::IOError: return "IOError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

std::string_view to_string(ErrorFamily family) noexcept {
    switch (family) {
    case ErrorFamily::Algebra: return "algebra";
    case ErrorFamily::Integerization: return "integerization";
    case ErrorFamily::Patching: return "patching";
    case ErrorFamily::Potential: return "potential";
    case ErrorFamily::Family: return "family";
    case ErrorFamily::Parse: return "parse";
    case ErrorFamily::IO: return "io";
    case ErrorFamily::Usage: return "usage";
    }
    return "unknown";
}

ErrorFamily family_of(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::NonzeroRemainder:
    case ErrorCode::NonUnitConstantTerm:
    case ErrorCode::NonzeroConstantTerm:
    case ErrorCode::NonInvertibleLinearTerm:
    case ErrorCode::NotMonic:
    case ErrorCode::ZeroInput:
    case ErrorCode::PartsMismatch:
        return ErrorFamily::Algebra;
    case ErrorCode::NotFound:
    case ErrorCode::DegreeTooSmall:
        return ErrorFamily::Integerization;
    case ErrorCode::InsufficientMargin:
    case ErrorCode::NoMargin:
    case ErrorCode::DegreeCapExceeded:
    case ErrorCode::TopCoefficientsNotIntegral:
        return ErrorFamily::Patching;
    case ErrorCode::CenterOnBoundary:
    case ErrorCode::SolverIllConditioned:
    case ErrorCode::PoleAtCenter:
    case ErrorCode::AllCoefficientsBelowTolerance:
    case ErrorCode::ConstantMap:
    case ErrorCode::BoundaryZero:
    case ErrorCode::CenterNotZero:
    case ErrorCode::AsymmetricDomain:
    case ErrorCode::WrongVanishingOrder:
    case ErrorCode::InvalidDomain:
        return ErrorFamily::Potential;
    case ErrorCode::SampleSingularity:
        return ErrorFamily::Family;
    case ErrorCode::SyntaxError:
        return ErrorFamily::Parse;
    case ErrorCode::IOError:
        return ErrorFamily::IO;
    case ErrorCode::InvalidArgument:
        return ErrorFamily::Usage;
    }
    return ErrorFamily::Usage;
}

} // namespace arithcap
