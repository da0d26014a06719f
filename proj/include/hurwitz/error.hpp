#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hurwitz {

enum class ErrorKind {
    MixedFields,
    DivisionByZero,
    ParseError,
    InvalidArgument,
    NotAUnit,
    ShapeMismatch,
    Singular,
    SizeLimit,
    ArityMismatch,
    SingularWronskian,
    NotConstantCoefficient,
    CentralizerMismatch,
    NotSplitOverK,
    NotAMember,
};

std::string_view error_name(ErrorKind kind) noexcept;

/// Every failure raised by the library. `kind()` is stable and is what the
/// CLI prints on its diagnostic stream.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& detail);

    ErrorKind kind() const noexcept { return kind_; }
    std::string_view name() const noexcept { return error_name(kind_); }

private:
    ErrorKind kind_;
};

/// Parse failures carry the byte offset where the input stopped making sense.
class ParseError : public Error {
public:
    ParseError(std::size_t position, const std::string& detail);

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace hurwitz
