#include "evaluator.hpp"

#include "apc/bignum/decimal.hpp"
#include "apc/errors.hpp"
#include "apc/lang/parser.hpp"

namespace apc {

using lang::Expr;

namespace {

ArithOp to_op(char c) {
    switch (c) {
    case '+': return ArithOp::Add;
    case '-': return ArithOp::Sub;
    case '*': return ArithOp::Mul;
    case '/': return ArithOp::Div;
    default: return ArithOp::Pow;
    }
}

[[noreturn]] void undefined_op(char op, const Value& a, const Value& b) {
    fail(ErrorKind::Type, std::string("operator ") + op + " is not defined for " + std::string(class_name(a)) +
                              " and " + std::string(class_name(b)));
}

BigComplex to_complex(const Value& v) {
    if (v.is<BigComplex>()) return v.as<BigComplex>();
    return {v.number(), Number::integer(0)};
}

Value complex_op(char op, const Value& a, const Value& b, const PrecisionContext& ctx) {
    const BigComplex x = to_complex(a);
    switch (op) {
    case '+': return add(x, to_complex(b), ctx);
    case '-': return sub(x, to_complex(b), ctx);
    case '*': return mul(x, to_complex(b), ctx);
    case '/': return div(x, to_complex(b), ctx);
    default: break;
    }
    if (!a.is<BigComplex>() || !b.is_number() || !b.number().is_integral()) {
        fail(ErrorKind::Type, "complex powers need a complex base and an integer exponent");
    }
    return pow(x, b.number().to_bigint(), ctx);
}

NumMatrix matrix_power(const NumMatrix& m, const Number& e, const PrecisionContext& ctx) {
    if (!e.is_integral()) fail(ErrorKind::Type, "matrix powers need an integer exponent, got " + e.format(17));
    if (m.rows() != m.cols()) fail(ErrorKind::Dimension, "matrix power requires a square matrix, got " + m.shape());
    BigInt n = e.to_bigint();
    if (!n.fits_i64()) fail(ErrorKind::Range, "matrix exponent too large");
    std::int64_t k = n.to_i64();
    NumMatrix base = k < 0 ? invert(m, ctx) : m;
    std::uint64_t u = k < 0 ? std::uint64_t(-(k + 1)) + 1 : std::uint64_t(k);
    NumMatrix result = NumMatrix::identity(m.rows());
    while (u) {
        if (u & 1) result = mat_mul(result, base, ctx);
        u >>= 1;
        if (u) base = mat_mul(base, base, ctx);
        ctx.poll();
    }
    return result;
}

NumVector negate_vector(const NumVector& v, const PrecisionContext& ctx) {
    std::vector<Number> out;
    out.reserve(v.size());
    for (const Number& x : v.elements()) out.push_back(-x);
    return NumVector::from(std::move(out), ctx);
}

}  // namespace

Value negate(const Value& v, const PrecisionContext& ctx) {
    switch (v.cls()) {
    case Value::Class::Int:
    case Value::Class::Float: return -v.number();
    case Value::Class::Complex: return BigComplex{-v.as<BigComplex>().re, -v.as<BigComplex>().im};
    case Value::Class::Vector: return negate_vector(v.as<NumVector>(), ctx);
    case Value::Class::Matrix: {
        const NumMatrix& m = v.as<NumMatrix>();
        std::vector<Number> data;
        for (const Number& x : m.data()) data.push_back(-x);
        return NumMatrix::from(m.rows(), m.cols(), std::move(data), ctx);
    }
    default: break;
    }
    fail(ErrorKind::Type, "unary - is not defined for " + std::string(class_name(v)));
}

Value binary_op(char op, const Value& a, const Value& b, const PrecisionContext& ctx) {
    using C = Value::Class;
    const ArithOp k = to_op(op);
    const bool an = a.is_number(), bn = b.is_number();
    const C ca = a.cls(), cb = b.cls();
    if (an && bn) return apply(k, a.number(), b.number(), ctx);
    if ((an || ca == C::Complex) && (bn || cb == C::Complex)) return complex_op(op, a, b, ctx);
    if (ca == C::Vector && bn) return broadcast(k, a.as<NumVector>(), b.number(), false, ctx);
    if (an && cb == C::Vector) return broadcast(k, b.as<NumVector>(), a.number(), true, ctx);
    if (ca == C::Vector && cb == C::Vector) return zip(k, a.as<NumVector>(), b.as<NumVector>(), ctx);
    if (ca == C::Matrix && cb == C::Matrix) {
        if (op == '+' || op == '-') return mat_zip(k, a.as<NumMatrix>(), b.as<NumMatrix>(), ctx);
        if (op == '*') return mat_mul(a.as<NumMatrix>(), b.as<NumMatrix>(), ctx);
    }
    if (ca == C::Matrix && bn) {
        if (op == '^') return matrix_power(a.as<NumMatrix>(), b.number(), ctx);
        return mat_scalar(k, a.as<NumMatrix>(), b.number(), false, ctx);
    }
    if (an && cb == C::Matrix && (op == '+' || op == '-' || op == '*')) {
        return mat_scalar(k, b.as<NumMatrix>(), a.number(), true, ctx);
    }
    if (ca == C::Matrix && cb == C::Vector && op == '*') return mat_vec(a.as<NumMatrix>(), b.as<NumVector>(), ctx);
    undefined_op(op, a, b);
}

ChartPtr Evaluator::add_chart(viz::ChartSpec spec) {
    spec.name = "chart_" + std::to_string(session.chart_counter_ + new_charts.size() + 1);
    auto p = std::make_shared<const viz::ChartSpec>(std::move(spec));
    new_charts.push_back(p);
    return p;
}

ReportPtr Evaluator::add_report(report::ReportKind kind, std::string body, std::string from) {
    report::Report r;
    r.name = "report_" + std::to_string(session.report_counter_ + new_reports.size() + 1);
    r.kind = kind;
    r.body = std::move(body);
    r.created_from = std::move(from);
    auto p = std::make_shared<const report::Report>(std::move(r));
    new_reports.push_back(p);
    return p;
}

void Evaluator::commit() {
    for (const ChartPtr& c : new_charts) session.charts_[c->name] = c;
    for (const ReportPtr& r : new_reports) session.reports_[r->name] = r;
    session.chart_counter_ += new_charts.size();
    session.report_counter_ += new_reports.size();
    if (pending_binding) session.vars_[pending_binding->first] = std::move(pending_binding->second);
    pending_binding.reset();
}

Value Evaluator::eval_tokens(const std::vector<lang::Token>& tokens) {
    std::vector<lang::Token> toks = tokens;
    lang::Token end;
    end.kind = lang::TokenKind::End;
    if (!toks.empty()) end.pos = toks.back().pos;
    toks.push_back(end);
    return eval(lang::Parser(std::move(toks)).expression_only());
}

Value Evaluator::eval(const Expr& e) {
    ctx.poll();
    switch (e.kind) {
    case Expr::Kind::Number: return Number(parse_decimal(e.text, ctx));
    case Expr::Kind::String: return Text{e.text};
    case Expr::Kind::Boolean: return Value(Value::Storage(e.flag));
    case Expr::Kind::Var: {
        auto it = session.vars_.find(e.text);
        if (it == session.vars_.end()) fail(ErrorKind::UndefinedVariable, "undefined variable " + e.text);
        return it->second;
    }
    case Expr::Kind::Neg: return negate(eval(e.args[0]), ctx);
    case Expr::Kind::Binary: {
        Value lhs = eval(e.args[0]);
        Value rhs = eval(e.args[1]);
        return binary_op(e.op, lhs, rhs, ctx);
    }
    case Expr::Kind::Call: return call(e);
    case Expr::Kind::Index: {
        Value base = eval(e.args[0]);
        if (!base.is<DatasetPtr>()) {
            fail(ErrorKind::Type, "indexing is only defined for datasets, got " + std::string(class_name(base)));
        }
        Value idx = eval(e.args[1]);
        if (!idx.is_number() || !idx.number().is_integral()) {
            fail(ErrorKind::Type, "dataset column index must be an integer, got " + render_value(idx, 17));
        }
        BigInt i = idx.number().to_bigint();
        std::int64_t col = i.fits_i64() ? i.to_i64() : -1;
        return data::dataset_column(*base.as<DatasetPtr>(), col);
    }
    case Expr::Kind::Vector: {
        std::vector<Number> items;
        items.reserve(e.args.size());
        for (std::size_t i = 0; i < e.args.size(); ++i) {
            Value v = eval(e.args[i]);
            if (!v.is_number()) {
                fail(ErrorKind::Type, "vector components must be real numbers, got " +
                                          std::string(class_name(v)) + " at position " + std::to_string(i));
            }
            items.push_back(v.number());
        }
        return NumVector::from(std::move(items), ctx);
    }
    case Expr::Kind::Complex: {
        Value re = eval(e.args[0]);
        Value im = eval(e.args[1]);
        if (!re.is_number() || !im.is_number()) {
            fail(ErrorKind::Type, "complex parts must be real numbers, got " + std::string(class_name(re)) + " and " +
                                      std::string(class_name(im)));
        }
        return BigComplex{re.number(), im.number()};
    }
    case Expr::Kind::Matrix: {
        Value data = eval(e.args[0]);
        Value rows = eval(e.args[1]);
        Value cols = eval(e.args[2]);
        if (!data.is<NumVector>()) {
            fail(ErrorKind::Type, "matrix data must be a vector, got " + std::string(class_name(data)));
        }
        if (!rows.is_number() || !cols.is_number()) {
            fail(ErrorKind::Type, "matrix dimensions must be integers");
        }
        return construct_matrix(data.as<NumVector>(), rows.number(), cols.number(), ctx);
    }
    }
    fail(ErrorKind::Type, "cannot evaluate expression");
}

Value Evaluator::call(const Expr& e) {
    const FunctionDef* f = find_function(e.text);
    if (!f) fail(ErrorKind::UndefinedFunction, "unknown function '" + e.text + "'");
    const std::size_t n = e.args.size();
    if (n < f->min_args || n > f->max_args) {
        std::string want = f->min_args == f->max_args
                               ? std::to_string(f->min_args)
                               : std::to_string(f->min_args) + " to " + std::to_string(f->max_args);
        fail(ErrorKind::Type, f->name + " expects " + want + " argument" + (f->max_args == 1 ? "" : "s") +
                                  ", got " + std::to_string(n) + " (usage: " + f->synopsis + ")");
    }
    CallArgs args;
    args.name = f->name;
    for (const auto& [key, expr] : e.options) {
        if (std::find(f->options.begin(), f->options.end(), key) == f->options.end()) {
            std::string valid;
            for (const auto& o : f->options) valid += (valid.empty() ? "" : ", ") + o;
            fail(ErrorKind::Type, f->name + " has no option '" + key + "'" +
                                      (valid.empty() ? std::string(" (it takes none)") : " (options: " + valid + ")"));
        }
        args.options[key] = eval(expr);
    }
    for (const Expr& a : e.args) args.args.push_back(eval(a));
    return f->handler(*this, args);
}

}  // namespace apc
