#include "ontofm/error.hpp"

#include <utility>

namespace ontofm {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::ParseError: return "parse_error";
        case ErrorCode::ValidationError: return "validation_error";
        case ErrorCode::UnknownInstance: return "unknown_instance";
        case ErrorCode::UnknownConcept: return "unknown_concept";
        case ErrorCode::InvalidConstraint: return "invalid_constraint";
        case ErrorCode::NotFound: return "not_found";
        case ErrorCode::OutsideRoot: return "outside_root";
        case ErrorCode::NodeNotVisible: return "node_not_visible";
        case ErrorCode::InvalidArgument: return "invalid_argument";
        case ErrorCode::IoError: return "io_error";
    }
    return "unknown";
}

Error::Error(ErrorCode code, std::string message, std::string detail)
    : std::runtime_error(std::move(message)), code_(code), detail_(std::move(detail)) {}

static std::string with_position(std::string message, std::size_t line, std::size_t column) {
    if (line == 0) {
        return message;
    }
    return message + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")";
}

ParseError::ParseError(std::string message, std::size_t line, std::size_t column, std::string detail)
    : Error(ErrorCode::ParseError, with_position(std::move(message), line, column), std::move(detail)),
      line_(line),
      column_(column) {}

}  // namespace ontofm
