#include "hopfgal/error.hpp"

namespace hopfgal {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::SchemaError: return "SchemaError";
        case ErrorKind::UnresolvedReference: return "UnresolvedReference";
        case ErrorKind::BadScalar: return "BadScalar";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::RingMismatch: return "RingMismatch";
        case ErrorKind::FieldMismatch: return "FieldMismatch";
        case ErrorKind::RankMismatch: return "RankMismatch";
        case ErrorKind::BaseMismatch: return "BaseMismatch";
        case ErrorKind::BaseNotField: return "BaseNotField";
        case ErrorKind::Unsupported: return "Unsupported";
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::NonUnit: return "NonUnit";
        case ErrorKind::NonUnitAlpha: return "NonUnitAlpha";
        case ErrorKind::CharDivides: return "CharDivides";
        case ErrorKind::CharTwo: return "CharTwo";
        case ErrorKind::BadRootOfUnity: return "BadRootOfUnity";
        case ErrorKind::NoAntipode: return "NoAntipode";
        case ErrorKind::NotInvertible: return "NotInvertible";
        case ErrorKind::NotComoduleMap: return "NotComoduleMap";
        case ErrorKind::NonCentralDatum: return "NonCentralDatum";
        case ErrorKind::NotAssociative: return "NotAssociative";
        case ErrorKind::BadNormalization: return "BadNormalization";
        case ErrorKind::BadRoot: return "BadRoot";
        case ErrorKind::BadMorphism: return "BadMorphism";
        case ErrorKind::NotGraded: return "NotGraded";
        case ErrorKind::NotCommutative: return "NotCommutative";
        case ErrorKind::NotEtaleInclusion: return "NotEtaleInclusion";
    }
    return "Unknown";
}

bool is_mathematical(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::SchemaError:
        case ErrorKind::UnresolvedReference:
        case ErrorKind::BadScalar:
        case ErrorKind::DimensionMismatch:
        case ErrorKind::RingMismatch:
        case ErrorKind::FieldMismatch:
        case ErrorKind::RankMismatch:
        case ErrorKind::BaseMismatch:
        case ErrorKind::BaseNotField:
        case ErrorKind::Unsupported:
            return false;
        default:
            return true;
    }
}

}  // namespace hopfgal
