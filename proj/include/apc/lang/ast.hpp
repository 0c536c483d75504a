#pragma once
// Syntax tree for statements and expressions.

#include <string>
#include <utility>
#include <vector>

#include "apc/errors.hpp"
#include "apc/lang/lexer.hpp"

namespace apc::lang {

struct Expr {
    enum class Kind {
        Number,   // text = literal
        String,   // text = contents
        Boolean,  // flag
        Var,      // text = "$name"
        Neg,      // args[0]
        Binary,   // op, args[0], args[1]
        Call,     // text = name, args, options
        Index,    // args[0] = base, args[1] = index
        Vector,   // args
        Complex,  // args[0] = re, args[1] = im
        Matrix,   // args[0] = data, args[1] = rows, args[2] = cols
    };

    Kind kind = Kind::Number;
    std::string text;
    char op = 0;
    bool flag = false;
    std::vector<Expr> args;
    std::vector<std::pair<std::string, Expr>> options;
    SourcePos pos;

    static Expr number(std::string literal, SourcePos pos = {});
    static Expr string(std::string value, SourcePos pos = {});
    static Expr boolean(bool value, SourcePos pos = {});
    static Expr var(std::string name, SourcePos pos = {});
    static Expr neg(Expr operand, SourcePos pos = {});
    static Expr binary(char op, Expr lhs, Expr rhs, SourcePos pos = {});
    static Expr call(std::string name, std::vector<Expr> args,
                     std::vector<std::pair<std::string, Expr>> options = {}, SourcePos pos = {});
    static Expr index(Expr base, Expr idx, SourcePos pos = {});
    static Expr vector(std::vector<Expr> items, SourcePos pos = {});
    static Expr complex(Expr re, Expr im, SourcePos pos = {});
    static Expr matrix(Expr data, Expr rows, Expr cols, SourcePos pos = {});
};

// Structural equality; source positions are ignored.
bool operator==(const Expr& a, const Expr& b);

struct Statement {
    enum class Kind { Expression, Assignment, Command };

    Kind kind = Kind::Expression;
    Expr expr;                  // Expression and Assignment
    std::string target;         // Assignment: "$name"
    std::string command;        // Command name
    std::vector<Token> cmd_args;
    SourcePos pos;
};

bool operator==(const Statement& a, const Statement& b);

// Source text that parses back to the same tree.
std::string to_source(const Expr& e);
std::string to_source(const Statement& s);

}  // namespace apc::lang
