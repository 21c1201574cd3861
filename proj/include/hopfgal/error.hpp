#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hopfgal {

// Every failure the library reports by exception carries one of these kinds.
// The CLI maps "mathematical" kinds to exit code 1 and input kinds to exit 2.
enum class ErrorKind {
    // input / structural
    SchemaError,
    UnresolvedReference,
    BadScalar,
    DimensionMismatch,
    RingMismatch,
    FieldMismatch,
    RankMismatch,
    BaseMismatch,
    BaseNotField,
    Unsupported,
    // mathematical
    DivisionByZero,
    NonUnit,
    NonUnitAlpha,
    CharDivides,
    CharTwo,
    BadRootOfUnity,
    NoAntipode,
    NotInvertible,
    NotComoduleMap,
    NonCentralDatum,
    NotAssociative,
    BadNormalization,
    BadRoot,
    BadMorphism,
    NotGraded,
    NotCommutative,
    NotEtaleInclusion,
};

std::string_view to_string(ErrorKind kind) noexcept;

// True for kinds that signal a failed mathematical verification rather than
// malformed input.
bool is_mathematical(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace hopfgal
