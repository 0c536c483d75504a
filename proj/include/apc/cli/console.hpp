#pragma once
// Terminal front end: script runner, line editing helpers and the REPL.

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "apc/runtime/session.hpp"

namespace apc::cli {

enum ExitStatus { kExitOk = 0, kExitEvalError = 1, kExitUsage = 2 };

struct ConsoleConfig {
    std::optional<std::filesystem::path> output_dir;  // batch: charts/reports written here
    bool color = true;
    std::string prompt = "> ";
    std::string continuation_prompt = ". ";
    std::optional<std::filesystem::path> history_file;
};

// Runs source statement by statement: text to out, the first error to err
// (which ends the run). New charts and reports go to output_dir when set.
ExitStatus run_batch(Session& session, std::string_view source, std::ostream& out, std::ostream& err,
                     const ConsoleConfig& config);

// Writes a chart or report from the session to dir; returns the file path.
std::filesystem::path export_object(const Session& session, const OutputItem& ref, const std::filesystem::path& dir);

// Position of the bracket paired with the one at pos, if any.
std::optional<std::size_t> matching_bracket(std::string_view line, std::size_t pos);

// ANSI-colored copy of line. The bracket at or just before cursor and its
// partner are shown in inverse video; unmatched brackets in red.
std::string highlight(std::string_view line, std::optional<std::size_t> cursor);

struct Completion {
    std::size_t start = 0;            // fragment start in the line
    std::string replacement;          // text to put in place of the fragment
    std::vector<std::string> choices; // shown when the match is ambiguous
};

// TAB completion at cursor. A unique function name gains "(".
Completion complete_at(const Session& session, std::string_view line, std::size_t cursor);

// Interactive loop on the controlling terminal; falls back to plain line
// reading when stdin is not a terminal.
ExitStatus run_repl(Session& session, const ConsoleConfig& config);

}  // namespace apc::cli
