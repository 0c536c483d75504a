#include <filesystem>
#include <sstream>

#include "apc/cli/console.hpp"
#include "apc/data/dataset.hpp"
#include "doctest.h"

using namespace apc;
using namespace apc::cli;

namespace {

struct Run {
    ExitStatus status;
    std::string out, err;
};

Run batch(std::string_view src, ConsoleConfig cfg = {}) {
    Session s;
    std::ostringstream out, err;
    ExitStatus st = run_batch(s, src, out, err, cfg);
    return {st, out.str(), err.str()};
}

std::string strip_ansi(const std::string& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '\x1b') {
            while (i < s.size() && s[i] != 'm') ++i;
            continue;
        }
        out += s[i];
    }
    return out;
}

}  // namespace

TEST_CASE("batch runs") {
    Run r = batch("2^( 3 + 1 ) / 4\n$myvar = 2^( 3 + 1 ) / 4\n$MyVar * 3\n");
    CHECK(r.status == kExitOk);
    CHECK(r.out == "4\n12\n");
    CHECK(r.err.empty());
    r = batch("");
    CHECK(r.status == kExitOk);
    CHECK(r.out.empty());
    r = batch("1\n$undefined\n2");
    CHECK(r.status == kExitEvalError);
    CHECK(r.out == "1\n");
    CHECK(r.err.find("$undefined") != std::string::npos);
}

TEST_CASE("batch exports new charts and reports") {
    auto dir = std::filesystem::temp_directory_path() / "apcalc_batch_out";
    std::filesystem::remove_all(dir);
    ConsoleConfig cfg;
    cfg.output_dir = dir;
    Run r = batch("plot([1, 2], [1, 4])\nztest([1, 2, 3], 1, 1, report=true)\ndelete chart_1\nreport text", cfg);
    CHECK(r.status == kExitOk);
    CHECK(std::filesystem::exists(dir / "chart_1.svg"));
    CHECK(std::filesystem::exists(dir / "report_1.html"));
    CHECK(std::filesystem::exists(dir / "report_2.txt"));
    CHECK(r.err.find("wrote") != std::string::npos);
    CHECK(r.out.find("One-sample z-test") == 0);
}

TEST_CASE("bracket matching and highlighting") {
    std::string line = "plot($x, [1, (2)])";
    CHECK(matching_bracket(line, 4) == 17);
    CHECK(matching_bracket(line, 17) == 4);
    CHECK(matching_bracket(line, 9) == 16);
    CHECK(matching_bracket(line, 13) == 15);
    CHECK_FALSE(matching_bracket("plot(", 4));
    CHECK_FALSE(matching_bracket("\"(\" )", 1));
    for (const char* src : {"$x = {2, -3} // note", "plot(", "\"open", "1 + %", "a ) b", "x@y"}) {
        CHECK(strip_ansi(highlight(src, std::nullopt)) == src);
        CHECK(strip_ansi(highlight(src, 3)) == src);
    }
    CHECK(highlight("plot(", std::nullopt).find("\x1b[31m(") != std::string::npos);
    CHECK(highlight("(1)", 3).find("\x1b[7m(") != std::string::npos);
    CHECK(highlight("$x", std::nullopt) == "\x1b[33m$x\x1b[0m");
}

TEST_CASE("tab completion") {
    Session s;
    s.execute("$myvar = 1\n$mine = 2");
    Completion c = complete_at(s, "$y = seq", 8);
    CHECK(c.start == 5);
    CHECK(c.replacement == "sequence(");
    c = complete_at(s, "SQ", 2);
    CHECK(c.replacement == "sqrt(");
    c = complete_at(s, "sqrt(2)", 4);
    CHECK(c.replacement == "sqrt");
    c = complete_at(s, "1 + $m", 6);
    CHECK(c.start == 4);
    CHECK(c.replacement == "$m");
    CHECK(c.choices == std::vector<std::string>{"$mine", "$myvar"});
    c = complete_at(s, "prec", 4);
    CHECK(c.replacement == "precision");
    c = complete_at(s, "1 + ", 4);
    CHECK(c.replacement.empty());
    CHECK(c.choices.empty());
}
