#pragma once
// Interpreter session: variables, object stores, precision, and the
// statement evaluator shared by the console, the service and the bindings.

#include <atomic>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "apc/bignum/context.hpp"
#include "apc/lang/ast.hpp"
#include "apc/runtime/value.hpp"

namespace apc {

struct OutputItem {
    enum class Tag { Text, Error, ChartRef, ReportRef };
    Tag tag = Tag::Text;
    std::string text;

    friend bool operator==(const OutputItem&, const OutputItem&) = default;
};

std::string_view tag_name(OutputItem::Tag tag) noexcept;

struct ObjectEntry {
    std::string group;  // "datasets", "variables", "charts", "reports"
    std::string name;
    std::string line;   // "$myvar : integer = 12"
};

struct HelpEntry {
    std::string name;
    std::string synopsis;
    std::string description;
    bool is_command = false;
};

// Every built-in function and command, sorted by name.
const std::vector<HelpEntry>& help_entries();
bool is_function_name(std::string_view name);

class Session {
public:
    using Sink = std::function<void(const OutputItem&)>;

    Session();
    Session(const Session&) = delete;
    Session& operator=(const Session&) = delete;

    // Runs each statement of source in order and reports its output items.
    // Returns false if any statement failed; with stop_on_error the first
    // failure ends the run.
    bool execute(std::string_view source, const Sink& sink, bool stop_on_error = false);
    std::vector<OutputItem> execute(std::string_view source, bool stop_on_error = false);

    // A single parsed statement.
    std::vector<OutputItem> run(const lang::Statement& s);

    std::vector<std::string> complete(std::string_view fragment) const;
    std::vector<ObjectEntry> objects(std::string_view group = {}) const;
    std::string help(std::string_view topic = {}) const;

    const PrecisionContext& context() const noexcept { return ctx_; }
    // Same effect as the precision command.
    void set_precision(std::uint32_t words);
    void set_output_digits(std::uint32_t digits);

    std::optional<Value> variable(std::string_view name) const;
    ChartPtr chart(std::string_view name) const;
    ReportPtr report(std::string_view name) const;
    DatasetPtr dataset(std::string_view name) const;
    std::vector<std::string> chart_names() const;
    std::vector<std::string> report_names() const;

    // Text of every text and error item so far.
    const std::vector<std::string>& transcript() const noexcept { return transcript_; }

    bool exit_requested() const noexcept { return exit_requested_; }
    // Raising this flag makes the running statement fail with Interrupted.
    std::atomic<bool>& interrupt_flag() noexcept { return interrupt_; }

private:
    friend class Evaluator;

    std::atomic<bool> interrupt_{false};
    PrecisionContext ctx_;
    std::map<std::string, Value, std::less<>> vars_;
    std::map<std::string, ChartPtr, std::less<>> charts_;
    std::map<std::string, ReportPtr, std::less<>> reports_;
    std::map<std::string, DatasetPtr, std::less<>> datasets_;
    std::uint64_t chart_counter_ = 0;
    std::uint64_t report_counter_ = 0;
    std::vector<std::string> transcript_;
    bool exit_requested_ = false;
};

}  // namespace apc
