#include "hurwitz/error.hpp"

namespace hurwitz {

std::string_view error_name(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::MixedFields: return "MixedFields";
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::NotAUnit: return "NotAUnit";
        case ErrorKind::ShapeMismatch: return "ShapeMismatch";
        case ErrorKind::Singular: return "Singular";
        case ErrorKind::SizeLimit: return "SizeLimit";
        case ErrorKind::ArityMismatch: return "ArityMismatch";
        case ErrorKind::SingularWronskian: return "SingularWronskian";
        case ErrorKind::NotConstantCoefficient: return "NotConstantCoefficient";
        case ErrorKind::CentralizerMismatch: return "CentralizerMismatch";
        case ErrorKind::NotSplitOverK: return "NotSplitOverK";
        case ErrorKind::NotAMember: return "NotAMember";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(error_name(kind)) + ": " + detail), kind_(kind) {}

ParseError::ParseError(std::size_t position, const std::string& detail)
    : Error(ErrorKind::ParseError, detail + " (at position " + std::to_string(position) + ")"),
      position_(position) {}

}  // namespace hurwitz
