#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ontofm {

enum class ErrorCode {
    ParseError,
    ValidationError,
    UnknownInstance,
    UnknownConcept,
    InvalidConstraint,
    NotFound,
    OutsideRoot,
    NodeNotVisible,
    InvalidArgument,
    IoError,
};

/// Machine name of an error code ("parse_error", "node_not_visible", ...).
std::string_view to_string(ErrorCode code);

/// Every domain failure in the library is raised as an Error. `detail` names
/// the offending id or path (empty when there is none).
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, std::string message, std::string detail = {});

    ErrorCode code() const noexcept { return code_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    ErrorCode code_;
    std::string detail_;
};

/// Malformed document; line and column are 1-based, 0 when unknown.
class ParseError : public Error {
public:
    ParseError(std::string message, std::size_t line, std::size_t column, std::string detail = {});

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace ontofm
