#pragma once
// Internal evaluator shared by the function and command tables.

#include <map>
#include <string>
#include <vector>

#include "apc/runtime/session.hpp"

namespace apc {

class Evaluator;

struct CallArgs {
    std::string name;
    std::vector<Value> args;
    std::map<std::string, Value, std::less<>> options;

    Number number(std::size_t i) const;
    const NumVector& vector(std::size_t i) const;
    const NumMatrix& matrix(std::size_t i) const;
    std::optional<std::string> text_option(std::string_view key) const;
    std::optional<bool> bool_option(std::string_view key) const;
    std::optional<Number> number_option(std::string_view key) const;
    [[noreturn]] void bad_arg(std::size_t i, std::string_view expected) const;
};

struct FunctionDef {
    std::string name;
    std::size_t min_args;
    std::size_t max_args;
    std::vector<std::string> options;
    std::string synopsis;
    std::string description;
    Value (*handler)(Evaluator&, const CallArgs&);
};

const std::vector<FunctionDef>& function_table();
const FunctionDef* find_function(std::string_view name);

struct CommandDef {
    std::string name;
    std::string synopsis;
    std::string description;
    void (*handler)(Evaluator&, const lang::Statement&, std::vector<OutputItem>&);
};

const std::vector<CommandDef>& command_table();
const CommandDef* find_command(std::string_view name);

Value negate(const Value& v, const PrecisionContext& ctx);
Value binary_op(char op, const Value& a, const Value& b, const PrecisionContext& ctx);

class Evaluator {
public:
    explicit Evaluator(Session& s) : session(s), ctx(s.ctx_) {}

    Value eval(const lang::Expr& e);
    // Evaluates command argument tokens as one expression.
    Value eval_tokens(const std::vector<lang::Token>& tokens);

    // Objects created by the running statement; stored on commit.
    ChartPtr add_chart(viz::ChartSpec spec);
    ReportPtr add_report(report::ReportKind kind, std::string body, std::string from);
    void commit();

    auto& vars() { return session.vars_; }
    auto& charts() { return session.charts_; }
    auto& reports() { return session.reports_; }
    auto& datasets() { return session.datasets_; }
    PrecisionContext& mutable_context() { return session.ctx_; }
    void request_exit() { session.exit_requested_ = true; }

    Session& session;
    const PrecisionContext& ctx;
    std::vector<ChartPtr> new_charts;
    std::vector<ReportPtr> new_reports;
    std::optional<std::pair<std::string, Value>> pending_binding;

private:
    Value call(const lang::Expr& e);
};

}  // namespace apc
