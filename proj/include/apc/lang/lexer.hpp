#pragma once
// Tokenizer for the expression language.
//
// Identifiers and $variables are case-folded while lexing; string literals
// keep their case. Newlines inside an open bracket do not end a statement,
// and a trailing '%' splices the next physical line onto the current one.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "apc/errors.hpp"

namespace apc::lang {

enum class TokenKind {
    Number,
    String,
    Boolean,
    Variable,
    Identifier,
    Operator,
    Delimiter,
    Newline,
    Continuation,
    Comment,
    Error,
    End,
};

std::string_view token_kind_name(TokenKind kind) noexcept;

struct Token {
    TokenKind kind = TokenKind::End;
    // Number: literal text; String: decoded contents; Operator/Delimiter:
    // the character; Error: the message.
    std::string lexeme;
    SourcePos pos;
    std::size_t length = 0;  // bytes of source covered

    bool is(TokenKind k, std::string_view text) const { return kind == k && lexeme == text; }
    bool is_op(char c) const { return kind == TokenKind::Operator && lexeme.size() == 1 && lexeme[0] == c; }
    bool is_delim(char c) const { return kind == TokenKind::Delimiter && lexeme.size() == 1 && lexeme[0] == c; }
};

// The statement stream: comments and continuations dropped, bracketed
// newlines suppressed. Throws SyntaxError on the first bad token.
std::vector<Token> tokenize(std::string_view source);

// Like tokenize, but never throws: a bad token becomes an Error token and
// lexing resumes on the next physical line.
std::vector<Token> tokenize_lenient(std::string_view source);

// Every token including comments, continuations and all newlines, for
// syntax highlighting. Never throws.
std::vector<Token> tokenize_for_highlight(std::string_view source);

// True when source ends inside an open bracket or after a trailing '%',
// i.e. an interactive reader should ask for another line.
bool needs_more_input(std::string_view source);

}  // namespace apc::lang
