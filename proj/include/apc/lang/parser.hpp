#pragma once
// Recursive-descent parser producing one Statement per logical line.

#include <optional>
#include <string_view>
#include <vector>

#include "apc/lang/ast.hpp"
#include "apc/lang/lexer.hpp"

namespace apc::lang {

class Parser {
public:
    explicit Parser(std::vector<Token> tokens);

    // Next statement, or nullopt at end of input. Blank lines are skipped.
    // On SyntaxError the parser has already moved past the offending line,
    // so calling next() again resumes with the following statement.
    std::optional<Statement> next();

    // A single expression spanning all remaining tokens.
    Expr expression_only();

private:
    const Token& peek(std::size_t ahead = 0) const;
    const Token& advance();
    bool at_statement_end() const;
    void skip_to_statement_end();
    [[noreturn]] void unexpected(const std::string& expected) const;
    void expect_delim(char c, const Token& opener);

    Statement statement();
    Expr expr();
    Expr additive();
    Expr multiplicative();
    Expr unary();
    Expr power();
    Expr exponent();
    Expr postfix();
    Expr primary();
    std::vector<Expr> list(char close, const Token& opener,
                           std::vector<std::pair<std::string, Expr>>* options);

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

std::vector<Statement> parse(std::string_view source);
Expr parse_expression(std::string_view source);

}  // namespace apc::lang
