#include "apc/lang/ast.hpp"

namespace apc::lang {

Expr Expr::number(std::string literal, SourcePos pos) {
    Expr e;
    e.kind = Kind::Number;
    e.text = std::move(literal);
    e.pos = pos;
    return e;
}

Expr Expr::string(std::string value, SourcePos pos) {
    Expr e;
    e.kind = Kind::String;
    e.text = std::move(value);
    e.pos = pos;
    return e;
}

Expr Expr::boolean(bool value, SourcePos pos) {
    Expr e;
    e.kind = Kind::Boolean;
    e.flag = value;
    e.pos = pos;
    return e;
}

Expr Expr::var(std::string name, SourcePos pos) {
    Expr e;
    e.kind = Kind::Var;
    e.text = std::move(name);
    e.pos = pos;
    return e;
}

Expr Expr::neg(Expr operand, SourcePos pos) {
    Expr e;
    e.kind = Kind::Neg;
    e.args.push_back(std::move(operand));
    e.pos = pos;
    return e;
}

Expr Expr::binary(char op, Expr lhs, Expr rhs, SourcePos pos) {
    Expr e;
    e.kind = Kind::Binary;
    e.op = op;
    e.args.push_back(std::move(lhs));
    e.args.push_back(std::move(rhs));
    e.pos = pos;
    return e;
}

Expr Expr::call(std::string name, std::vector<Expr> args,
                std::vector<std::pair<std::string, Expr>> options, SourcePos pos) {
    Expr e;
    e.kind = Kind::Call;
    e.text = std::move(name);
    e.args = std::move(args);
    e.options = std::move(options);
    e.pos = pos;
    return e;
}

Expr Expr::index(Expr base, Expr idx, SourcePos pos) {
    Expr e;
    e.kind = Kind::Index;
    e.args.push_back(std::move(base));
    e.args.push_back(std::move(idx));
    e.pos = pos;
    return e;
}

Expr Expr::vector(std::vector<Expr> items, SourcePos pos) {
    Expr e;
    e.kind = Kind::Vector;
    e.args = std::move(items);
    e.pos = pos;
    return e;
}

Expr Expr::complex(Expr re, Expr im, SourcePos pos) {
    Expr e;
    e.kind = Kind::Complex;
    e.args.push_back(std::move(re));
    e.args.push_back(std::move(im));
    e.pos = pos;
    return e;
}

Expr Expr::matrix(Expr data, Expr rows, Expr cols, SourcePos pos) {
    Expr e;
    e.kind = Kind::Matrix;
    e.args.push_back(std::move(data));
    e.args.push_back(std::move(rows));
    e.args.push_back(std::move(cols));
    e.pos = pos;
    return e;
}

bool operator==(const Expr& a, const Expr& b) {
    return a.kind == b.kind && a.text == b.text && a.op == b.op && a.flag == b.flag &&
           a.args == b.args && a.options == b.options;
}

bool operator==(const Statement& a, const Statement& b) {
    if (a.kind != b.kind || a.target != b.target || a.command != b.command) return false;
    if (a.kind != Statement::Kind::Command) return a.expr == b.expr;
    if (a.cmd_args.size() != b.cmd_args.size()) return false;
    for (std::size_t i = 0; i < a.cmd_args.size(); ++i) {
        if (a.cmd_args[i].kind != b.cmd_args[i].kind || a.cmd_args[i].lexeme != b.cmd_args[i].lexeme) {
            return false;
        }
    }
    return true;
}

namespace {

int precedence(const Expr& e) {
    switch (e.kind) {
    case Expr::Kind::Binary:
        if (e.op == '+' || e.op == '-') return 1;
        if (e.op == '*' || e.op == '/') return 2;
        return 4;
    case Expr::Kind::Neg: return 3;
    default: return 5;
    }
}

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        default: out += c;
        }
    }
    return out + '"';
}

std::string print(const Expr& e, int min_prec);

std::string join(const std::vector<Expr>& items) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out += ", ";
        out += print(items[i], 0);
    }
    return out;
}

std::string print_core(const Expr& e) {
    switch (e.kind) {
    case Expr::Kind::Number: return e.text;
    case Expr::Kind::String: return quote(e.text);
    case Expr::Kind::Boolean: return e.flag ? "true" : "false";
    case Expr::Kind::Var: return e.text;
    case Expr::Kind::Neg: return "-" + print(e.args[0], 3);
    case Expr::Kind::Binary: {
        int lhs = 1, rhs = 2;
        if (e.op == '*' || e.op == '/') {
            lhs = 2;
            rhs = 3;
        } else if (e.op == '^') {
            lhs = 5;
            rhs = 3;
        }
        const char* sep = e.op == '^' ? "" : " ";
        return print(e.args[0], lhs) + sep + e.op + sep + print(e.args[1], rhs);
    }
    case Expr::Kind::Call: {
        std::string out = e.text + "(" + join(e.args);
        for (std::size_t i = 0; i < e.options.size(); ++i) {
            if (i || !e.args.empty()) out += ", ";
            out += e.options[i].first + "=" + print(e.options[i].second, 0);
        }
        return out + ")";
    }
    case Expr::Kind::Index: return print(e.args[0], 5) + "[" + print(e.args[1], 0) + "]";
    case Expr::Kind::Vector: return "[" + join(e.args) + "]";
    case Expr::Kind::Complex:
    case Expr::Kind::Matrix: return "{" + join(e.args) + "}";
    }
    return {};
}

std::string print(const Expr& e, int min_prec) {
    std::string s = print_core(e);
    if (precedence(e) < min_prec) return "(" + s + ")";
    return s;
}

std::string token_source(const Token& t) {
    switch (t.kind) {
    case TokenKind::String: return quote(t.lexeme);
    default: return t.lexeme;
    }
}

}  // namespace

std::string to_source(const Expr& e) { return print(e, 0); }

std::string to_source(const Statement& s) {
    switch (s.kind) {
    case Statement::Kind::Expression: return to_source(s.expr);
    case Statement::Kind::Assignment: return s.target + " = " + to_source(s.expr);
    case Statement::Kind::Command: {
        std::string out = s.command;
        for (const Token& t : s.cmd_args) out += " " + token_source(t);
        return out;
    }
    }
    return {};
}

}  // namespace apc::lang
