#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace arithcap {

// Every failure raised by the library carries one of these codes. The CLI
// maps the family of a code to its exit status.
enum class ErrorCode {
    // exact_algebra
    NonzeroRemainder,
    NonUnitConstantTerm,
    NonzeroConstantTerm,
    NonInvertibleLinearTerm,
    NotMonic,
    ZeroInput,
    PartsMismatch,
    // integerization
    NotFound,
    DegreeTooSmall,
    // patching
    InsufficientMargin,
    NoMargin,
    DegreeCapExceeded,
    TopCoefficientsNotIntegral,
    // potential
    CenterOnBoundary,
    SolverIllConditioned,
    PoleAtCenter,
    AllCoefficientsBelowTolerance,
    ConstantMap,
    BoundaryZero,
    CenterNotZero,
    AsymmetricDomain,
    WrongVanishingOrder,
    InvalidDomain,
    // family
    SampleSingularity,
    // cli / shared
    SyntaxError,
    IOError,
    InvalidArgument,
};

enum class ErrorFamily { Algebra, Integerization, Patching, Potential, Family, Parse, IO, Usage };

std::string_view to_string(ErrorCode code) noexcept;
std::string_view to_string(ErrorFamily family) noexcept;
ErrorFamily family_of(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }
    ErrorFamily family() const noexcept { return family_of(code_); }

private:
    ErrorCode code_;
};

// Parse failures also carry the byte offset of the offending character.
class SyntaxError : public Error {
public:
    SyntaxError(std::size_t offset, const std::string& message)
        : Error(ErrorCode::SyntaxError, message + " at offset " + std::to_string(offset)),
          offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

} // namespace arithcap
