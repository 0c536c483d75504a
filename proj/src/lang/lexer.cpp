#include "apc/lang/lexer.hpp"

#include <cctype>

namespace apc::lang {

std::string_view token_kind_name(TokenKind kind) noexcept {
    switch (kind) {
    case TokenKind::Number: return "number";
    case TokenKind::String: return "string";
    case TokenKind::Boolean: return "boolean";
    case TokenKind::Variable: return "variable";
    case TokenKind::Identifier: return "identifier";
    case TokenKind::Operator: return "operator";
    case TokenKind::Delimiter: return "delimiter";
    case TokenKind::Newline: return "end of line";
    case TokenKind::Continuation: return "continuation";
    case TokenKind::Comment: return "comment";
    case TokenKind::Error: return "error";
    case TokenKind::End: return "end of input";
    }
    return "token";
}

namespace {

enum class Mode { Strict, Lenient, Highlight };

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool digit(char c) { return c >= '0' && c <= '9'; }

std::string fold(std::string_view s) {
    std::string out(s);
    for (char& c : out) c = char(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

struct LexState {
    int depth = 0;
    bool splice = false;
    bool had_error = false;
};

class Lexer {
public:
    Lexer(std::string_view src, Mode mode) : src_(src), mode_(mode) {}

    std::vector<Token> run(LexState* final_state = nullptr) {
        while (i_ < src_.size()) step();
        Token end;
        end.kind = TokenKind::End;
        end.pos = here();
        out_.push_back(end);
        if (final_state) *final_state = st_;
        return std::move(out_);
    }

private:
    SourcePos here() const { return {line_, i_ - line_start_ + 1, i_}; }

    void bump() {
        if (src_[i_] == '\n') {
            ++line_;
            line_start_ = i_ + 1;
        }
        ++i_;
    }

    void emit(TokenKind kind, std::string lexeme, SourcePos start) {
        Token t;
        t.kind = kind;
        t.lexeme = std::move(lexeme);
        t.pos = start;
        t.length = i_ - start.offset;
        out_.push_back(std::move(t));
    }

    // Reports a bad token that started at `start`; the cursor is just past it.
    void error(const std::string& message, SourcePos start) {
        st_.had_error = true;
        if (mode_ == Mode::Strict) throw SyntaxError(message, start);
        if (mode_ == Mode::Lenient) {
            while (i_ < src_.size() && src_[i_] != '\n') ++i_;
            st_.depth = 0;
            st_.splice = false;
        }
        emit(TokenKind::Error, message, start);
    }

    bool rest_of_line_blank(std::size_t from) const {
        std::size_t j = from;
        while (j < src_.size() && (src_[j] == ' ' || src_[j] == '\t' || src_[j] == '\r')) ++j;
        if (j == src_.size() || src_[j] == '\n') return true;
        return j + 1 < src_.size() && src_[j] == '/' && src_[j + 1] == '/';
    }

    void step() {
        const char c = src_[i_];
        const SourcePos start = here();
        if (c == ' ' || c == '\t' || c == '\r') {
            ++i_;
            return;
        }
        if (c == '\n') {
            bump();
            if (mode_ == Mode::Highlight) {
                emit(TokenKind::Newline, "\n", start);
                return;
            }
            if (st_.splice) {
                st_.splice = false;
                return;
            }
            if (st_.depth == 0) emit(TokenKind::Newline, "\n", start);
            return;
        }
        if (c == '/' && i_ + 1 < src_.size() && src_[i_ + 1] == '/') {
            while (i_ < src_.size() && src_[i_] != '\n') ++i_;
            if (mode_ == Mode::Highlight) {
                emit(TokenKind::Comment, std::string(src_.substr(start.offset, i_ - start.offset)), start);
            }
            return;
        }
        if (c == '%') {
            ++i_;
            if (!rest_of_line_blank(i_)) {
                error("'%' continuation must end the line", start);
                return;
            }
            st_.splice = true;
            if (mode_ == Mode::Highlight) emit(TokenKind::Continuation, "%", start);
            return;
        }
        if (digit(c) || (c == '.' && i_ + 1 < src_.size() && digit(src_[i_ + 1]))) {
            lex_number(start);
            return;
        }
        if (c == '"') {
            lex_string(start);
            return;
        }
        if (ident_start(c)) {
            while (i_ < src_.size() && ident_char(src_[i_])) ++i_;
            std::string word = fold(src_.substr(start.offset, i_ - start.offset));
            if (word == "true" || word == "false") {
                emit(TokenKind::Boolean, word, start);
            } else {
                emit(TokenKind::Identifier, word, start);
            }
            return;
        }
        if (c == '$') {
            ++i_;
            if (i_ >= src_.size() || !ident_char(src_[i_])) {
                error("expected a variable name after '$'", start);
                return;
            }
            while (i_ < src_.size() && ident_char(src_[i_])) ++i_;
            emit(TokenKind::Variable, fold(src_.substr(start.offset, i_ - start.offset)), start);
            return;
        }
        switch (c) {
        case '+': case '-': case '*': case '/': case '^': case '=':
            ++i_;
            emit(TokenKind::Operator, std::string(1, c), start);
            return;
        case '(': case '[': case '{':
            ++i_;
            ++st_.depth;
            emit(TokenKind::Delimiter, std::string(1, c), start);
            return;
        case ')': case ']': case '}':
            ++i_;
            if (st_.depth > 0) --st_.depth;
            emit(TokenKind::Delimiter, std::string(1, c), start);
            return;
        case ',':
            ++i_;
            emit(TokenKind::Delimiter, ",", start);
            return;
        default:
            break;
        }
        ++i_;
        if (std::isprint(static_cast<unsigned char>(c))) {
            error(std::string("unexpected character '") + c + "'", start);
        } else {
            error("unexpected character", start);
        }
    }

    void lex_number(SourcePos start) {
        while (i_ < src_.size() && digit(src_[i_])) ++i_;
        if (i_ < src_.size() && src_[i_] == '.') {
            ++i_;
            while (i_ < src_.size() && digit(src_[i_])) ++i_;
        }
        if (i_ < src_.size() && (src_[i_] == 'e' || src_[i_] == 'E')) {
            std::size_t j = i_ + 1;
            if (j < src_.size() && (src_[j] == '+' || src_[j] == '-')) ++j;
            if (j < src_.size() && digit(src_[j])) {
                i_ = j;
                while (i_ < src_.size() && digit(src_[i_])) ++i_;
            }
        }
        emit(TokenKind::Number, fold(src_.substr(start.offset, i_ - start.offset)), start);
    }

    void lex_string(SourcePos start) {
        ++i_;
        std::string value;
        while (i_ < src_.size() && src_[i_] != '"' && src_[i_] != '\n') {
            char c = src_[i_++];
            if (c == '\\' && i_ < src_.size() && src_[i_] != '\n') {
                char e = src_[i_++];
                switch (e) {
                case 'n': value += '\n'; break;
                case 't': value += '\t'; break;
                default: value += e; break;
                }
            } else {
                value += c;
            }
        }
        if (i_ >= src_.size() || src_[i_] != '"') {
            error("unterminated string", start);
            return;
        }
        ++i_;
        emit(TokenKind::String, std::move(value), start);
    }

    std::string_view src_;
    Mode mode_;
    std::size_t i_ = 0;
    std::size_t line_ = 1;
    std::size_t line_start_ = 0;
    LexState st_;
    std::vector<Token> out_;
};

}  // namespace

std::vector<Token> tokenize(std::string_view source) { return Lexer(source, Mode::Strict).run(); }

std::vector<Token> tokenize_lenient(std::string_view source) {
    return Lexer(source, Mode::Lenient).run();
}

std::vector<Token> tokenize_for_highlight(std::string_view source) {
    return Lexer(source, Mode::Highlight).run();
}

bool needs_more_input(std::string_view source) {
    LexState st;
    Lexer(source, Mode::Lenient).run(&st);
    return !st.had_error && (st.depth > 0 || st.splice);
}

}  // namespace apc::lang
