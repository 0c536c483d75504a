#include "apc/runtime/session.hpp"

#include <algorithm>
#include <new>

#include "apc/errors.hpp"
#include "apc/lang/lexer.hpp"
#include "apc/lang/parser.hpp"
#include "evaluator.hpp"

namespace apc {

namespace {

constexpr std::size_t kPreviewWidth = 60;

std::string preview(std::string text) {
    std::string flat;
    bool space = false;
    for (char c : text) {
        if (c == '\n' || c == ' ') {
            space = true;
            continue;
        }
        if (space && !flat.empty()) flat += ' ';
        space = false;
        flat += c;
    }
    if (flat.size() > kPreviewWidth) flat = flat.substr(0, kPreviewWidth - 3) + "...";
    return flat;
}

// "[1, 2; 3, 4]"
std::string matrix_preview(const NumMatrix& m, std::uint32_t digits) {
    std::string out = "[";
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (r) out += "; ";
        for (std::size_t c = 0; c < m.cols(); ++c) out += (c ? ", " : "") + m.at(r, c).format(digits);
        if (out.size() > kPreviewWidth) break;
    }
    return out + "]";
}

std::string chart_line(const viz::ChartSpec& c) {
    std::string line = c.name + " : " + std::string(viz::chart_kind_name(c.kind)) + " chart, ";
    if (c.kind == viz::ChartKind::Histogram) return line + std::to_string(c.y.size()) + " bins";
    return line + std::to_string(c.x.size()) + (c.x.size() == 1 ? " point" : " points");
}

std::string dataset_line(const data::Dataset& d) {
    return d.name + " : dataset, " + std::to_string(d.rows) + " rows x " + std::to_string(d.columns.size()) +
           " columns";
}

std::string lower(std::string_view s) {
    std::string out(s);
    for (char& c : out) c = char(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

bool is_fresh(const Value& v, const Evaluator& ev) {
    if (v.is<ChartPtr>()) {
        return std::find(ev.new_charts.begin(), ev.new_charts.end(), v.as<ChartPtr>()) != ev.new_charts.end();
    }
    if (v.is<ReportPtr>()) {
        return std::find(ev.new_reports.begin(), ev.new_reports.end(), v.as<ReportPtr>()) != ev.new_reports.end();
    }
    return false;
}

}  // namespace

std::string_view tag_name(OutputItem::Tag tag) noexcept {
    switch (tag) {
    case OutputItem::Tag::Text: return "text";
    case OutputItem::Tag::Error: return "error";
    case OutputItem::Tag::ChartRef: return "chart_ref";
    case OutputItem::Tag::ReportRef: return "report_ref";
    }
    return "text";
}

const std::vector<HelpEntry>& help_entries() {
    static const std::vector<HelpEntry> entries = [] {
        std::vector<HelpEntry> out;
        for (const FunctionDef& f : function_table()) out.push_back({f.name, f.synopsis, f.description, false});
        for (const CommandDef& c : command_table()) out.push_back({c.name, c.synopsis, c.description, true});
        std::sort(out.begin(), out.end(), [](const HelpEntry& a, const HelpEntry& b) { return a.name < b.name; });
        return out;
    }();
    return entries;
}

bool is_function_name(std::string_view name) { return find_function(lower(name)) != nullptr; }

Session::Session() { ctx_.interrupt = &interrupt_; }

bool Session::execute(std::string_view source, const Sink& sink, bool stop_on_error) {
    lang::Parser parser(lang::tokenize_lenient(source));
    bool ok = true;
    while (true) {
        std::vector<OutputItem> items;
        try {
            std::optional<lang::Statement> s = parser.next();
            if (!s) break;
            items = run(*s);
        } catch (const Error& e) {
            items = {{OutputItem::Tag::Error, e.display()}};
            transcript_.push_back(items.back().text);
        }
        bool failed = false;
        for (const OutputItem& item : items) {
            failed = failed || item.tag == OutputItem::Tag::Error;
            sink(item);
        }
        if (failed) {
            ok = false;
            if (stop_on_error) break;
        }
        if (exit_requested_) break;
    }
    return ok;
}

std::vector<OutputItem> Session::execute(std::string_view source, bool stop_on_error) {
    std::vector<OutputItem> out;
    execute(source, [&](const OutputItem& item) { out.push_back(item); }, stop_on_error);
    return out;
}

std::vector<OutputItem> Session::run(const lang::Statement& s) {
    interrupt_ = false;
    const PrecisionContext saved = ctx_;
    std::vector<OutputItem> out;
    try {
        Evaluator ev(*this);
        switch (s.kind) {
        case lang::Statement::Kind::Expression: {
            Value v = ev.eval(s.expr);
            if (!v.is<Unit>() && !is_fresh(v, ev)) out.push_back({OutputItem::Tag::Text, render_value(v, ctx_.output_digits)});
            break;
        }
        case lang::Statement::Kind::Assignment:
            ev.pending_binding.emplace(s.target, ev.eval(s.expr));
            break;
        case lang::Statement::Kind::Command: {
            const CommandDef* c = find_command(s.command);
            if (!c) fail(ErrorKind::UnknownCommand, "unknown command '" + s.command + "'");
            c->handler(ev, s, out);
            break;
        }
        }
        for (const ChartPtr& c : ev.new_charts) out.push_back({OutputItem::Tag::ChartRef, c->name});
        for (const ReportPtr& r : ev.new_reports) out.push_back({OutputItem::Tag::ReportRef, r->name});
        ev.commit();
    } catch (const Error& e) {
        ctx_ = saved;
        out = {{OutputItem::Tag::Error, e.display()}};
    } catch (const std::bad_alloc&) {
        ctx_ = saved;
        out = {{OutputItem::Tag::Error, Error(ErrorKind::Range, "result too large for available memory").display()}};
    }
    for (const OutputItem& item : out) {
        if (item.tag == OutputItem::Tag::Text || item.tag == OutputItem::Tag::Error) transcript_.push_back(item.text);
    }
    return out;
}

std::vector<std::string> Session::complete(std::string_view fragment) const {
    const std::string f = lower(fragment);
    std::vector<std::string> out;
    auto take = [&](const std::string& name) {
        if (name.compare(0, f.size(), f) == 0) out.push_back(name);
    };
    if (!f.empty() && f[0] == '$') {
        for (const auto& [name, v] : vars_) take(name);
    } else {
        for (const FunctionDef& fn : function_table()) take(fn.name);
        for (const CommandDef& c : command_table()) take(c.name);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<ObjectEntry> Session::objects(std::string_view group) const {
    std::vector<ObjectEntry> out;
    auto want = [&](std::string_view g) { return group.empty() || group == g; };
    if (want("datasets")) {
        for (const auto& [name, d] : datasets_) out.push_back({"datasets", name, dataset_line(*d)});
    }
    if (want("variables")) {
        for (const auto& [name, v] : vars_) {
            std::string line = name + " : " + std::string(class_name(v));
            if (v.is<DatasetPtr>()) line += " " + v.as<DatasetPtr>()->name;
            else if (v.is<NumMatrix>()) line += " = " + preview(matrix_preview(v.as<NumMatrix>(), ctx_.output_digits));
            else line += " = " + preview(render_value(v, ctx_.output_digits));
            out.push_back({"variables", name, line});
        }
    }
    if (want("charts")) {
        for (const auto& [name, c] : charts_) out.push_back({"charts", name, chart_line(*c)});
    }
    if (want("reports")) {
        for (const auto& [name, r] : reports_) {
            out.push_back({"reports", name,
                           name + " : " + std::string(report::report_kind_name(r->kind)) + " report, " + r->created_from});
        }
    }
    return out;
}

std::string Session::help(std::string_view topic) const {
    const auto& entries = help_entries();
    if (topic.empty()) {
        std::size_t width = 0;
        for (const HelpEntry& e : entries) width = std::max(width, e.name.size());
        std::string out = "Functions and commands (help <name> for details):";
        for (const HelpEntry& e : entries) {
            out += "\n  " + e.name + std::string(width - e.name.size() + 2, ' ') + e.synopsis;
        }
        return out;
    }
    const std::string key = lower(topic);
    auto it = std::find_if(entries.begin(), entries.end(), [&](const HelpEntry& e) { return e.name == key; });
    if (it == entries.end()) return "no help for " + std::string(topic);
    std::string out = it->synopsis + (it->is_command ? "  (command)" : "  (function)");
    std::size_t start = 0;
    const std::string& d = it->description;
    while (start <= d.size()) {
        std::size_t nl = d.find('\n', start);
        if (nl == std::string::npos) nl = d.size();
        out += "\n  " + d.substr(start, nl - start);
        start = nl + 1;
    }
    return out;
}

void Session::set_precision(std::uint32_t words) {
    if (words < 1 || words > kMaxWords) {
        fail(ErrorKind::Domain, "precision must be between 1 and " + std::to_string(kMaxWords) + " words, got " +
                                    std::to_string(words));
    }
    ctx_.words = words;
    ctx_.output_digits = 8 * words;
}

void Session::set_output_digits(std::uint32_t digits) {
    if (digits < 1) fail(ErrorKind::Domain, "output precision must be at least 1 digit");
    ctx_.output_digits = digits;
}

std::optional<Value> Session::variable(std::string_view name) const {
    std::string key = lower(name);
    if (key.empty() || key[0] != '$') key.insert(key.begin(), '$');
    auto it = vars_.find(key);
    if (it == vars_.end()) return std::nullopt;
    return it->second;
}

ChartPtr Session::chart(std::string_view name) const {
    auto it = charts_.find(lower(name));
    return it == charts_.end() ? nullptr : it->second;
}

ReportPtr Session::report(std::string_view name) const {
    auto it = reports_.find(lower(name));
    return it == reports_.end() ? nullptr : it->second;
}

DatasetPtr Session::dataset(std::string_view name) const {
    auto it = datasets_.find(lower(name));
    return it == datasets_.end() ? nullptr : it->second;
}

std::vector<std::string> Session::chart_names() const {
    std::vector<std::string> out;
    for (const auto& [name, c] : charts_) out.push_back(name);
    return out;
}

std::vector<std::string> Session::report_names() const {
    std::vector<std::string> out;
    for (const auto& [name, r] : reports_) out.push_back(name);
    return out;
}

}  // namespace apc
