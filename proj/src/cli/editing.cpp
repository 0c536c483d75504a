#include <algorithm>
#include <cctype>
#include <set>

#include "apc/cli/console.hpp"
#include "apc/lang/lexer.hpp"

namespace apc::cli {

using lang::Token;
using lang::TokenKind;

namespace {

bool is_opener(char c) { return c == '(' || c == '[' || c == '{'; }
bool is_closer(char c) { return c == ')' || c == ']' || c == '}'; }
char partner(char c) { return c == '(' ? ')' : c == '[' ? ']' : '}'; }

struct Brackets {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::set<std::size_t> unmatched;
};

Brackets scan_brackets(const std::vector<Token>& tokens) {
    Brackets out;
    std::vector<std::pair<std::size_t, char>> stack;
    for (const Token& t : tokens) {
        if (t.kind != TokenKind::Delimiter || t.lexeme.size() != 1) continue;
        const char c = t.lexeme[0];
        if (is_opener(c)) {
            stack.emplace_back(t.pos.offset, c);
        } else if (is_closer(c)) {
            if (!stack.empty() && partner(stack.back().second) == c) {
                out.pairs.emplace_back(stack.back().first, t.pos.offset);
                stack.pop_back();
            } else {
                out.unmatched.insert(t.pos.offset);
            }
        }
    }
    for (const auto& [offset, c] : stack) out.unmatched.insert(offset);
    return out;
}

std::optional<std::size_t> mate(const Brackets& b, std::size_t pos) {
    for (auto [open, close] : b.pairs) {
        if (open == pos) return close;
        if (close == pos) return open;
    }
    return std::nullopt;
}

std::string_view color_of(const Token& t) {
    switch (t.kind) {
    case TokenKind::Number: return "\x1b[36m";
    case TokenKind::String: return "\x1b[32m";
    case TokenKind::Boolean: return "\x1b[35m";
    case TokenKind::Variable: return "\x1b[33m";
    case TokenKind::Identifier: return is_function_name(t.lexeme) ? "\x1b[34m" : "\x1b[1m";
    case TokenKind::Comment:
    case TokenKind::Continuation: return "\x1b[2m";
    case TokenKind::Error: return "\x1b[31m";
    default: return {};
    }
}

bool fragment_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

}  // namespace

std::optional<std::size_t> matching_bracket(std::string_view line, std::size_t pos) {
    return mate(scan_brackets(lang::tokenize_for_highlight(line)), pos);
}

std::string highlight(std::string_view line, std::optional<std::size_t> cursor) {
    const std::vector<Token> tokens = lang::tokenize_for_highlight(line);
    const Brackets brackets = scan_brackets(tokens);
    std::set<std::size_t> lit;
    if (cursor) {
        for (std::size_t at : {*cursor, *cursor - 1}) {
            if (at >= line.size() || (!is_opener(line[at]) && !is_closer(line[at]))) continue;
            if (auto m = mate(brackets, at)) {
                lit = {at, *m};
                break;
            }
        }
    }
    std::string out;
    std::size_t done = 0;
    for (const Token& t : tokens) {
        const std::size_t start = t.pos.offset;
        if (t.kind == TokenKind::End || start < done || t.length == 0) continue;
        out.append(line.substr(done, start - done));
        std::string_view text = line.substr(start, t.length);
        std::string_view color = color_of(t);
        if (lit.count(start)) color = "\x1b[7m";
        else if (brackets.unmatched.count(start)) color = "\x1b[31m";
        if (color.empty()) {
            out.append(text);
        } else {
            out.append(color);
            out.append(text);
            out.append("\x1b[0m");
        }
        done = start + t.length;
    }
    out.append(line.substr(std::min(done, line.size())));
    return out;
}

Completion complete_at(const Session& session, std::string_view line, std::size_t cursor) {
    cursor = std::min(cursor, line.size());
    std::size_t start = cursor;
    while (start > 0 && fragment_char(line[start - 1])) --start;
    if (start > 0 && line[start - 1] == '$') --start;
    Completion c;
    c.start = start;
    const std::string fragment(line.substr(start, cursor - start));
    c.replacement = fragment;
    if (fragment.empty()) return c;
    std::vector<std::string> names = session.complete(fragment);
    if (names.empty()) return c;
    if (names.size() == 1) {
        c.replacement = names[0];
        const bool call_follows = cursor < line.size() && line[cursor] == '(';
        if (is_function_name(names[0]) && !call_follows) c.replacement += '(';
        return c;
    }
    std::string common = names.front();
    for (const std::string& n : names) {
        std::size_t k = 0;
        while (k < common.size() && k < n.size() && common[k] == n[k]) ++k;
        common.resize(k);
    }
    if (common.size() > fragment.size()) c.replacement = common;
    c.choices = std::move(names);
    return c;
}

}  // namespace apc::cli
