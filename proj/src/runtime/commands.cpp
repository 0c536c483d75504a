#include <algorithm>

#include "apc/errors.hpp"
#include "apc/report/report.hpp"
#include "evaluator.hpp"

namespace apc {

using lang::Statement;
using lang::Token;
using lang::TokenKind;

namespace {

void emit_text(std::vector<OutputItem>& out, std::string text) {
    out.push_back({OutputItem::Tag::Text, std::move(text)});
}

[[noreturn]] void usage(const Statement& s, const std::string& synopsis) {
    fail(ErrorKind::Type, "usage: " + synopsis + " (in '" + to_source(s) + "')");
}

std::uint32_t positive_argument(Evaluator& ev, const Statement& s, std::uint64_t max) {
    Value v = ev.eval_tokens(s.cmd_args);
    if (!v.is_number() || !v.number().is_integral()) {
        fail(ErrorKind::Domain, s.command + " needs a positive integer, got " + render_value(v, 17));
    }
    const Number n = v.number();
    if (n.sign() <= 0 || compare(n, Number(BigInt(std::int64_t(max)))) > 0) {
        fail(ErrorKind::Domain, s.command + " must be between 1 and " + std::to_string(max) + ", got " + n.format(17));
    }
    return std::uint32_t(n.to_bigint().to_i64());
}

void c_precision(Evaluator& ev, const Statement& s, std::vector<OutputItem>& out) {
    if (s.cmd_args.empty()) {
        const PrecisionContext& c = ev.ctx;
        emit_text(out, "  Internal precision is set to " + std::to_string(c.words) + " (memory blocks)\n" +
                           "  Actual precision: " + std::to_string(c.bits()) + " bits\n" +
                           "  Number of printed digits: " + std::to_string(c.output_digits));
        return;
    }
    ev.session.set_precision(positive_argument(ev, s, kMaxWords));
}

void c_output_precision(Evaluator& ev, const Statement& s, std::vector<OutputItem>& out) {
    if (s.cmd_args.empty()) {
        emit_text(out, "  Number of printed digits: " + std::to_string(ev.ctx.output_digits));
        return;
    }
    ev.session.set_output_digits(positive_argument(ev, s, 1000000));
}

void c_help(Evaluator& ev, const Statement& s, std::vector<OutputItem>& out) {
    if (s.cmd_args.size() > 1) usage(s, "help [topic]");
    std::string topic = s.cmd_args.empty() ? std::string() : s.cmd_args[0].lexeme;
    emit_text(out, ev.session.help(topic));
}

void c_objects(Evaluator& ev, const Statement& s, std::vector<OutputItem>& out) {
    if (s.cmd_args.size() > 1) usage(s, "objects [vars|charts|reports|datasets]");
    std::string group;
    if (!s.cmd_args.empty()) {
        const std::string& k = s.cmd_args[0].lexeme;
        if (k == "vars" || k == "variables") group = "variables";
        else if (k == "charts" || k == "reports" || k == "datasets") group = k;
        else fail(ErrorKind::Domain, "unknown object kind '" + k + "' (use vars, charts, reports or datasets)");
    }
    std::vector<ObjectEntry> entries = ev.session.objects(group);
    if (entries.empty()) return;
    std::string text;
    std::string current;
    for (const ObjectEntry& e : entries) {
        if (!text.empty()) text += '\n';
        if (group.empty()) {
            if (e.group != current) {
                current = e.group;
                text += current + ":\n";
            }
            text += "  ";
        }
        text += e.line;
    }
    emit_text(out, std::move(text));
}

void c_delete(Evaluator& ev, const Statement& s, std::vector<OutputItem>&) {
    if (s.cmd_args.size() != 1) usage(s, "delete $variable | name");
    const Token& t = s.cmd_args[0];
    if (t.kind == TokenKind::Variable) {
        auto it = ev.vars().find(t.lexeme);
        if (it == ev.vars().end()) fail(ErrorKind::UndefinedVariable, "undefined variable " + t.lexeme);
        ev.vars().erase(it);
        return;
    }
    if (t.kind == TokenKind::Identifier) {
        if (ev.charts().erase(t.lexeme) || ev.reports().erase(t.lexeme) || ev.datasets().erase(t.lexeme)) return;
    }
    fail(ErrorKind::UndefinedVariable, "no object named '" + t.lexeme + "'");
}

char parse_delimiter(const std::string& v) {
    if (v == "," || v == "comma") return ',';
    if (v == "\t" || v == "tab") return '\t';
    if (v == ";" || v == "semicolon") return ';';
    fail(ErrorKind::Domain, "delimiter must be \",\", \";\" or \"tab\", got \"" + v + "\"");
}

void c_import(Evaluator& ev, const Statement& s, std::vector<OutputItem>&) {
    const std::string synopsis = "import \"path\" $name [delimiter=\",\"|\"tab\"] [header=true|false]";
    const auto& a = s.cmd_args;
    if (a.size() < 2 || a[0].kind != TokenKind::String || a[1].kind != TokenKind::Variable) usage(s, synopsis);
    data::ImportOptions opts;
    for (std::size_t i = 2; i < a.size(); i += 3) {
        if (i + 2 >= a.size() || a[i].kind != TokenKind::Identifier || !a[i + 1].is_op('=')) usage(s, synopsis);
        const Token& v = a[i + 2];
        if (a[i].lexeme == "delimiter" && (v.kind == TokenKind::String || v.kind == TokenKind::Identifier)) {
            opts.delimiter = parse_delimiter(v.lexeme);
        } else if (a[i].lexeme == "header" && v.kind == TokenKind::Boolean) {
            opts.header = v.lexeme == "true";
        } else {
            usage(s, synopsis);
        }
    }
    const std::string var = a[1].lexeme;
    auto d = std::make_shared<const data::Dataset>(data::import_dataset(a[0].lexeme, var.substr(1), opts, ev.ctx));
    ev.datasets()[d->name] = d;
    ev.pending_binding.emplace(var, Value(Value::Storage(DatasetPtr(d))));
}

void c_export(Evaluator& ev, const Statement& s, std::vector<OutputItem>&) {
    const auto& a = s.cmd_args;
    if (a.size() != 2 || a[1].kind != TokenKind::String ||
        (a[0].kind != TokenKind::Identifier && a[0].kind != TokenKind::Variable)) {
        usage(s, "export name \"path\"");
    }
    const std::string& name = a[0].lexeme;
    const std::string& path = a[1].lexeme;
    Value target;
    if (a[0].kind == TokenKind::Variable) {
        auto it = ev.vars().find(name);
        if (it == ev.vars().end()) fail(ErrorKind::UndefinedVariable, "undefined variable " + name);
        target = it->second;
    } else if (auto c = ev.session.chart(name)) {
        target = Value::Storage(c);
    } else if (auto r = ev.session.report(name)) {
        target = Value::Storage(r);
    } else if (auto d = ev.session.dataset(name)) {
        target = Value::Storage(d);
    } else {
        fail(ErrorKind::UndefinedVariable, "no chart, report or dataset named '" + name + "'");
    }
    if (target.is<ChartPtr>()) data::write_file(path, viz::render_svg(*target.as<ChartPtr>()));
    else if (target.is<ReportPtr>()) data::write_file(path, target.as<ReportPtr>()->body);
    else if (target.is<DatasetPtr>()) data::write_file(path, data::to_csv(*target.as<DatasetPtr>()));
    else fail(ErrorKind::Type, "only charts, reports and datasets can be exported, " + name + " is " +
                                   std::string(class_name(target)));
}

void c_report(Evaluator& ev, const Statement& s, std::vector<OutputItem>&) {
    if (s.cmd_args.size() > 1) usage(s, "report [html|text]");
    std::string kind = s.cmd_args.empty() ? "html" : s.cmd_args[0].lexeme;
    const auto& lines = ev.session.transcript();
    if (kind == "html") ev.add_report(report::ReportKind::Html, report::transcript_html(lines), "console");
    else if (kind == "text") ev.add_report(report::ReportKind::Text, report::transcript_text(lines), "console");
    else fail(ErrorKind::Domain, "report kind must be html or text, got '" + kind + "'");
}

void c_exit(Evaluator& ev, const Statement& s, std::vector<OutputItem>&) {
    if (!s.cmd_args.empty()) usage(s, s.command);
    ev.request_exit();
}

std::vector<CommandDef> build_table() {
    return {
        {"delete", "delete $variable | name", "Removes a variable, chart, report or dataset.", c_delete},
        {"exit", "exit", "Ends the console session.", c_exit},
        {"export", "export name \"path\"", "Writes a chart (SVG), report (HTML or text) or dataset (CSV) to a file.", c_export},
        {"help", "help [topic]", "Lists every function and command, or describes one of them.\nExample: help invert", c_help},
        {"import", "import \"path\" $name [delimiter=\",\"|\"tab\"] [header=true|false]",
         "Loads a comma- or tab-separated file as a dataset. Columns are read with $name[0], $name[1], ...", c_import},
        {"objects", "objects [vars|charts|reports|datasets]", "Lists the objects stored in the session.", c_objects},
        {"output_precision", "output_precision [digits]",
         "Sets the number of significant digits printed, without changing the internal precision.\nExample: output_precision 8",
         c_output_precision},
        {"precision", "precision [words]",
         "Sets the internal precision in 32-bit words and prints 8 digits per word; without an argument, shows the current setting.\n"
         "Example: precision 2",
         c_precision},
        {"quit", "quit", "Ends the console session.", c_exit},
        {"report", "report [html|text]", "Turns the console output so far into a report object.", c_report},
    };
}

}  // namespace

const std::vector<CommandDef>& command_table() {
    static const std::vector<CommandDef> table = build_table();
    return table;
}

const CommandDef* find_command(std::string_view name) {
    const auto& t = command_table();
    auto it = std::find_if(t.begin(), t.end(), [&](const CommandDef& c) { return c.name == name; });
    return it == t.end() ? nullptr : &*it;
}

}  // namespace apc
