// Console for the expression language: interactive when attached to a
// terminal, batch otherwise.

#include <unistd.h>

#include <cstdlib>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "apc/cli/console.hpp"
#include "apc/data/dataset.hpp"
#include "apc/errors.hpp"

namespace {

std::optional<std::filesystem::path> history_path() {
    if (const char* p = std::getenv("APCALC_HISTORY")) {
        if (*p) return std::filesystem::path(p);
        return std::nullopt;
    }
    if (const char* home = std::getenv("HOME")) return std::filesystem::path(home) / ".apcalc_history";
    return std::nullopt;
}

std::string read_source(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    return apc::data::read_file(path);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Arbitrary-precision calculator console"};
    std::vector<std::string> scripts;
    std::optional<std::uint32_t> precision;
    std::optional<std::string> output_dir;
    bool no_color = false;
    app.add_option("--script,scripts", scripts, "Run these scripts in order and exit ('-' reads stdin)");
    app.add_option("--precision", precision, "Internal precision in 32-bit words")
        ->check(CLI::Range(1u, apc::kMaxWords));
    app.add_option("--output-dir", output_dir, "Directory for charts and reports created by scripts");
    app.add_flag("--no-color", no_color, "Disable syntax coloring");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : apc::cli::kExitUsage;
    }

    apc::cli::ConsoleConfig config;
    config.color = !no_color && !std::getenv("NO_COLOR");
    if (output_dir) config.output_dir = *output_dir;
    config.history_file = history_path();

    apc::Session session;
    if (precision) session.set_precision(*precision);

    if (scripts.empty() && !isatty(STDIN_FILENO)) scripts.push_back("-");
    if (scripts.empty()) return apc::cli::run_repl(session, config);

    for (const std::string& path : scripts) {
        std::string source;
        try {
            source = read_source(path);
        } catch (const apc::Error& e) {
            std::cerr << e.display() << '\n';
            return apc::cli::kExitUsage;
        }
        auto status = apc::cli::run_batch(session, source, std::cout, std::cerr, config);
        if (status != apc::cli::kExitOk) return status;
        if (session.exit_requested()) break;
    }
    return apc::cli::kExitOk;
}
