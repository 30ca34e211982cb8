#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace relcycles {

enum class ErrorKind {
    UnitRequired,
    FieldMismatch,
    BadIndex,
    InternalInvariantViolation,
    PreconditionFailed,
    NotAdmissible,
    NotInG,
    ZeroFunction,
    NoBasePoint,
    ResourceBound,
    ParseError,
    InvalidArgument,
    Unsupported,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Exception type used throughout the library. The kind is machine-checkable;
/// the message carries the offending values.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Parse failure with a 1-based line/column into the input text.
class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what)
        : Error(ErrorKind::ParseError,
                "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

} // namespace relcycles
