#pragma once
// Error taxonomy shared by every layer of the interpreter.
//
// All failures are reported as apc::Error carrying a kind; the console
// renders them as "<Kind>: <message>".

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace apc {

enum class ErrorKind {
    Syntax,
    DivisionByZero,
    Domain,
    Range,
    Type,
    Dimension,
    Index,
    UndefinedVariable,
    UndefinedFunction,
    UnknownCommand,
    SingularMatrix,
    Io,
    Format,
    Interrupted,
};

std::string_view error_kind_name(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

    // "DomainError: log of non-positive value -1"
    std::string display() const;

private:
    ErrorKind kind_;
};

// Source position, 1-based line and column.
struct SourcePos {
    std::size_t line = 1;
    std::size_t col = 1;
    std::size_t offset = 0;
};

class SyntaxError : public Error {
public:
    SyntaxError(const std::string& message, SourcePos pos);

    const SourcePos& pos() const noexcept { return pos_; }

private:
    SourcePos pos_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

}  // namespace apc
