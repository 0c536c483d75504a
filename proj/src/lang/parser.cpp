#include "apc/lang/parser.hpp"

namespace apc::lang {

namespace {

std::string describe(const Token& t) {
    switch (t.kind) {
    case TokenKind::Operator:
    case TokenKind::Delimiter: return "'" + t.lexeme + "'";
    case TokenKind::Newline:
    case TokenKind::End: return std::string(token_kind_name(t.kind));
    case TokenKind::String: return "string \"" + t.lexeme + "\"";
    default: return std::string(token_kind_name(t.kind)) + " '" + t.lexeme + "'";
    }
}

char closer_of(char open) {
    switch (open) {
    case '(': return ')';
    case '[': return ']';
    default: return '}';
    }
}

}  // namespace

Parser::Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {
    if (tokens_.empty() || tokens_.back().kind != TokenKind::End) {
        Token end;
        end.kind = TokenKind::End;
        if (!tokens_.empty()) end.pos = tokens_.back().pos;
        tokens_.push_back(end);
    }
}

const Token& Parser::peek(std::size_t ahead) const {
    std::size_t i = pos_ + ahead;
    return i < tokens_.size() ? tokens_[i] : tokens_.back();
}

const Token& Parser::advance() {
    const Token& t = peek();
    if (pos_ < tokens_.size() - 1) ++pos_;
    return t;
}

bool Parser::at_statement_end() const {
    TokenKind k = peek().kind;
    return k == TokenKind::Newline || k == TokenKind::End;
}

void Parser::skip_to_statement_end() {
    while (!at_statement_end()) advance();
}

void Parser::unexpected(const std::string& expected) const {
    const Token& t = peek();
    if (t.kind == TokenKind::Error) throw SyntaxError(t.lexeme, t.pos);
    throw SyntaxError("expected " + expected + ", found " + describe(t), t.pos);
}

void Parser::expect_delim(char c, const Token& opener) {
    if (peek().is_delim(c)) {
        advance();
        return;
    }
    if (at_statement_end()) {
        throw SyntaxError(std::string("unclosed '") + opener.lexeme + "'", opener.pos);
    }
    unexpected(std::string("'") + c + "'");
}

std::optional<Statement> Parser::next() {
    while (peek().kind == TokenKind::Newline) advance();
    if (peek().kind == TokenKind::End) return std::nullopt;
    try {
        Statement s = statement();
        if (!at_statement_end()) {
            if (peek().kind == TokenKind::Delimiter &&
                (peek().lexeme == ")" || peek().lexeme == "]" || peek().lexeme == "}")) {
                throw SyntaxError("unmatched '" + peek().lexeme + "'", peek().pos);
            }
            unexpected("end of statement");
        }
        return s;
    } catch (const SyntaxError&) {
        skip_to_statement_end();
        throw;
    }
}

Expr Parser::expression_only() {
    Expr e = expr();
    while (peek().kind == TokenKind::Newline) advance();
    if (peek().kind != TokenKind::End) unexpected("end of input");
    return e;
}

Statement Parser::statement() {
    Statement s;
    const Token& first = peek();
    s.pos = first.pos;
    if (first.kind == TokenKind::Identifier && !peek(1).is_delim('(')) {
        s.kind = Statement::Kind::Command;
        s.command = advance().lexeme;
        while (!at_statement_end()) {
            if (peek().kind == TokenKind::Error) unexpected("command argument");
            s.cmd_args.push_back(advance());
        }
        return s;
    }
    if (first.kind == TokenKind::Variable && peek(1).is_op('=')) {
        s.kind = Statement::Kind::Assignment;
        s.target = advance().lexeme;
        advance();
        s.expr = expr();
        return s;
    }
    s.kind = Statement::Kind::Expression;
    s.expr = expr();
    return s;
}

Expr Parser::expr() { return additive(); }

Expr Parser::additive() {
    Expr lhs = multiplicative();
    while (peek().is_op('+') || peek().is_op('-')) {
        const Token& op = advance();
        Expr rhs = multiplicative();
        SourcePos at = lhs.pos;
        lhs = Expr::binary(op.lexeme[0], std::move(lhs), std::move(rhs), at);
    }
    return lhs;
}

Expr Parser::multiplicative() {
    Expr lhs = unary();
    while (peek().is_op('*') || peek().is_op('/')) {
        const Token& op = advance();
        Expr rhs = unary();
        SourcePos at = lhs.pos;
        lhs = Expr::binary(op.lexeme[0], std::move(lhs), std::move(rhs), at);
    }
    return lhs;
}

Expr Parser::unary() {
    if (peek().is_op('-')) {
        SourcePos at = advance().pos;
        return Expr::neg(unary(), at);
    }
    if (peek().is_op('+')) {
        advance();
        return unary();
    }
    return power();
}

Expr Parser::power() {
    Expr base = postfix();
    if (peek().is_op('^')) {
        advance();
        Expr rhs = exponent();
        SourcePos at = base.pos;
        return Expr::binary('^', std::move(base), std::move(rhs), at);
    }
    return base;
}

Expr Parser::exponent() {
    if (peek().is_op('-')) {
        SourcePos at = advance().pos;
        return Expr::neg(exponent(), at);
    }
    if (peek().is_op('+')) {
        advance();
        return exponent();
    }
    return power();
}

Expr Parser::postfix() {
    Expr base = primary();
    while (peek().is_delim('[')) {
        Token opener = advance();
        Expr idx = expr();
        expect_delim(']', opener);
        SourcePos at = base.pos;
        base = Expr::index(std::move(base), std::move(idx), at);
    }
    return base;
}

Expr Parser::primary() {
    const Token& t = peek();
    switch (t.kind) {
    case TokenKind::Number: advance(); return Expr::number(t.lexeme, t.pos);
    case TokenKind::String: advance(); return Expr::string(t.lexeme, t.pos);
    case TokenKind::Boolean: advance(); return Expr::boolean(t.lexeme == "true", t.pos);
    case TokenKind::Variable: advance(); return Expr::var(t.lexeme, t.pos);
    case TokenKind::Identifier: {
        Token name = advance();
        if (!peek().is_delim('(')) unexpected("'(' after function name '" + name.lexeme + "'");
        Token opener = advance();
        std::vector<std::pair<std::string, Expr>> options;
        std::vector<Expr> args = list(')', opener, &options);
        return Expr::call(name.lexeme, std::move(args), std::move(options), name.pos);
    }
    case TokenKind::Delimiter: {
        if (t.lexeme == "(") {
            Token opener = advance();
            Expr inner = expr();
            expect_delim(')', opener);
            return inner;
        }
        if (t.lexeme == "[") {
            Token opener = advance();
            return Expr::vector(list(']', opener, nullptr), opener.pos);
        }
        if (t.lexeme == "{") {
            Token opener = advance();
            std::vector<Expr> items = list('}', opener, nullptr);
            if (items.size() == 2) {
                return Expr::complex(std::move(items[0]), std::move(items[1]), opener.pos);
            }
            if (items.size() == 3) {
                return Expr::matrix(std::move(items[0]), std::move(items[1]), std::move(items[2]),
                                    opener.pos);
            }
            throw SyntaxError("braces need 2 members (complex) or 3 members (matrix), found " +
                                  std::to_string(items.size()),
                              opener.pos);
        }
        break;
    }
    default: break;
    }
    unexpected("an expression");
}

std::vector<Expr> Parser::list(char close, const Token& opener,
                               std::vector<std::pair<std::string, Expr>>* options) {
    std::vector<Expr> items;
    if (peek().is_delim(close)) {
        advance();
        return items;
    }
    for (;;) {
        if (options && peek().kind == TokenKind::Identifier && peek(1).is_op('=')) {
            std::string name = advance().lexeme;
            advance();
            options->emplace_back(std::move(name), expr());
        } else {
            items.push_back(expr());
        }
        if (peek().is_delim(',')) {
            advance();
            continue;
        }
        if (peek().is_delim(close)) {
            advance();
            return items;
        }
        if (at_statement_end()) {
            throw SyntaxError(std::string("unclosed '") + opener.lexeme + "'", opener.pos);
        }
        unexpected(std::string("',' or '") + closer_of(opener.lexeme[0]) + "'");
    }
}

std::vector<Statement> parse(std::string_view source) {
    Parser p(tokenize(source));
    std::vector<Statement> out;
    while (auto s = p.next()) out.push_back(std::move(*s));
    return out;
}

Expr parse_expression(std::string_view source) { return Parser(tokenize(source)).expression_only(); }

}  // namespace apc::lang
