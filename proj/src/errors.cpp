#include "apc/errors.hpp"

namespace apc {

std::string_view error_kind_name(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::Syntax: return "SyntaxError";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::Domain: return "DomainError";
    case ErrorKind::Range: return "RangeError";
    case ErrorKind::Type: return "TypeError";
    case ErrorKind::Dimension: return "DimensionError";
    case ErrorKind::Index: return "IndexError";
    case ErrorKind::UndefinedVariable: return "UndefinedVariable";
    case ErrorKind::UndefinedFunction: return "UndefinedFunction";
    case ErrorKind::UnknownCommand: return "UnknownCommand";
    case ErrorKind::SingularMatrix: return "SingularMatrixError";
    case ErrorKind::Io: return "IoError";
    case ErrorKind::Format: return "FormatError";
    case ErrorKind::Interrupted: return "Interrupted";
    }
    return "Error";
}

std::string Error::display() const {
    std::string out(error_kind_name(kind_));
    out += ": ";
    out += what();
    return out;
}

SyntaxError::SyntaxError(const std::string& message, SourcePos pos)
    : Error(ErrorKind::Syntax,
            message + " at line " + std::to_string(pos.line) + ", column " +
                std::to_string(pos.col)),
      pos_(pos) {}

}  // namespace apc
