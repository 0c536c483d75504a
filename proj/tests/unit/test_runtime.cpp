#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <thread>

#include "apc/runtime/session.hpp"
#include "doctest.h"
#include "support/ast_gen.hpp"

using namespace apc;

namespace {

std::vector<std::string> texts(const std::vector<OutputItem>& items) {
    std::vector<std::string> out;
    for (const auto& i : items) out.push_back(i.text);
    return out;
}

std::string one(Session& s, std::string_view src) {
    auto items = s.execute(src);
    REQUIRE(items.size() == 1);
    return items[0].text;
}

std::string error_of(Session& s, std::string_view src) {
    auto items = s.execute(src);
    REQUIRE(items.size() == 1);
    CHECK(items[0].tag == OutputItem::Tag::Error);
    return items[0].text;
}

std::string snapshot(const Session& s) {
    std::string out;
    for (const auto& e : s.objects()) out += e.line + "\n";
    const auto& c = s.context();
    out += std::to_string(c.words) + "/" + std::to_string(c.output_digits);
    return out;
}

}  // namespace

TEST_CASE("variables, assignment silence and case folding") {
    Session s;
    auto items = s.execute("2^( 3 + 1 ) / 4\n$myvar = 2^( 3 + 1 ) / 4\n$MyVar * 3");
    CHECK(texts(items) == std::vector<std::string>{"4", "12"});
    CHECK(s.variable("$myvar")->is<BigInt>());
    CHECK(one(s, "$x = 1\n$X") == "1");
    CHECK(error_of(s, "$nope") == "UndefinedVariable: undefined variable $nope");
    CHECK(one(s, "sQRt(4)") == "2");
}

TEST_CASE("complex numbers") {
    Session s;
    auto items = s.execute("{2, -3}\n$x = {2, -1}\n$y = {-1, 3}\nim($x*$y)");
    CHECK(texts(items) == std::vector<std::string>{"2 - i 3", "7"});
    CHECK(one(s, "{1, 2} * {1, -2}") == "5");
    CHECK(one(s, "{0, 1}^2") == "-1");
    CHECK(one(s, "re({2.5, 1})") == "2.5");
    CHECK(one(s, "{1, 1} + 1") == "2 + i 1");
}

TEST_CASE("vectors") {
    Session s;
    auto items = s.execute("[1, 2, 3]\n$x = [ -1, log( 2 )]\n$x\n$x + [1, 2] - 10\ndotprod([1, -2],[-3, 4])");
    CHECK(texts(items) == std::vector<std::string>{"[1, 2, 3]", "[-1, 0.69314718]", "[-10, -7.3068528]", "-11"});
    CHECK(one(s, "append([1, -2], 5)") == "[1, -2, 5]");
    CHECK(one(s, "2 * [1, 2]") == "[2, 4]");
    CHECK(one(s, "1 - [1, 2]") == "[0, -1]");
    CHECK(one(s, "-[1, 2]") == "[-1, -2]");
    CHECK(error_of(s, "[1, 2] + [1]").rfind("DimensionError", 0) == 0);
    CHECK(error_of(s, "sqrt([4, -1])").find("component 1") != std::string::npos);
}

TEST_CASE("matrices") {
    Session s;
    CHECK(one(s, "{ [1, 3.4, 21.6, 19, -0.1, 10], 2, 3 }") == "[  1   3.4  21.6\n  19  -0.1    10 ]");
    CHECK(one(s, "{ [1, 3.4, 21.6, 19, -0.1, 10], 3, 3 }") ==
          "[  1   3.4  21.6\n  19  -0.1    10\n   0     0     0 ]");
    CHECK(one(s, "invert({[1, 3, -1, 4], 2, 2}) * 7") == "[ 4  -3\n  1   1 ]");
    CHECK(one(s, "$m = {[1, 2, 3, 4], 2, 2}\n$m^2") == "[  7  10\n  15  22 ]");
    CHECK(one(s, "$m * invert($m)") == "[ 1  0\n  0  1 ]");
    CHECK(one(s, "det($m)") == "-2");
    CHECK(one(s, "trace($m)") == "5");
    CHECK(one(s, "transpose($m)") == "[ 1  3\n  2  4 ]");
    CHECK(one(s, "$m * [1, 1]") == "[3, 7]");
    CHECK(one(s, "$m - $m") == "[ 0  0\n  0  0 ]");
    CHECK(one(s, "2 * $m") == "[ 2  4\n  6  8 ]");
    CHECK(one(s, "$m^-1 * $m") == "[ 1  0\n  0  1 ]");
    CHECK(error_of(s, "[1, 2] * $m") == "TypeError: operator * is not defined for vector and matrix");
    CHECK(error_of(s, "invert({[1, 2, 2, 4], 2, 2})").rfind("SingularMatrixError", 0) == 0);
}

TEST_CASE("precision and output precision") {
    Session s;
    auto items = s.execute("precision 2\nprecision");
    CHECK(texts(items) == std::vector<std::string>{
                              "  Internal precision is set to 2 (memory blocks)\n  Actual precision: 64 bits\n"
                              "  Number of printed digits: 16"});
    CHECK(one(s, "pi()") == "3.141592653589793");
    items = s.execute("precision 6\npi()\nprecision");
    CHECK(texts(items)[0] == "3.14159265358979323846264338327950288419716939938");
    CHECK(texts(items)[1].find("Actual precision: 192 bits") != std::string::npos);
    CHECK(texts(items)[1].find("Number of printed digits: 48") != std::string::npos);
    CHECK(one(s, "output_precision 2\nlog(2)") == "0.69");
    CHECK(s.context().words == 6);
    CHECK(error_of(s, "precision 0").rfind("DomainError", 0) == 0);
    CHECK(error_of(s, "output_precision -1").rfind("DomainError", 0) == 0);
    CHECK(error_of(s, "precision 1.5").rfind("DomainError", 0) == 0);
    CHECK(s.context().output_digits == 2);
    CHECK(s.execute("output_precision 8").empty());
    CHECK(one(s, "log(2)") == "0.69314718");
}

TEST_CASE("display never changes stored values") {
    Session s;
    s.execute("precision 4\n$l = log(2)\noutput_precision 3");
    CHECK(one(s, "$l") == "0.693");
    s.execute("output_precision 32");
    CHECK(one(s, "$l") == "0.69314718055994530941723212145818");
}

TEST_CASE("sequence, elementwise functions and plot") {
    Session s;
    auto items = s.execute(
        "$x = sequence(-1, 1, 0.1)\n$y = cos( $x ) * sin( $x )\nplot($x, $y, xtitle=\"x [rad]\", "
        "ytitle=\"cos(x)*sin(x)\")");
    REQUIRE(items.size() == 1);
    CHECK(items[0].tag == OutputItem::Tag::ChartRef);
    CHECK(items[0].text == "chart_1");
    ChartPtr c = s.chart("chart_1");
    REQUIRE(c);
    CHECK(c->x.size() == 21);
    CHECK(c->ytitle == "cos(x)*sin(x)");
    CHECK(c->xtitle == "x [rad]");
    CHECK(c->y[0] == doctest::Approx(std::cos(-1.0) * std::sin(-1.0)));
    items = s.execute("$c = plot([1, 2], [3, 4], kind=\"scatter\")\n$c");
    REQUIRE(items.size() == 2);
    CHECK(items[0].tag == OutputItem::Tag::ChartRef);
    CHECK(items[0].text == "chart_2");
    CHECK(items[1] == OutputItem{OutputItem::Tag::Text, "chart_2"});
    CHECK(error_of(s, "plot([1, 2], [1])").rfind("DimensionError", 0) == 0);
    CHECK(error_of(s, "plot([1], [1], colour=\"red\")").rfind("TypeError", 0) == 0);
    CHECK(one(s, "frequency([0, 1], bins=2)") == "chart_3");
    CHECK(s.chart("chart_3")->y == std::vector<double>{1, 1});
}

TEST_CASE("z-test and t-test with reports") {
    Session s;
    auto items = s.execute("$x = [9, 3, -1, -2, 4, 5]\nztest( $x, 2, 3, report=true )");
    REQUIRE(items.size() == 2);
    CHECK(items[0].tag == OutputItem::Tag::Text);
    CHECK(items[0].text.find("z = 0.81649658") != std::string::npos);
    CHECK(items[0].text.find("p = 0.41421618") != std::string::npos);
    CHECK(items[1] == OutputItem{OutputItem::Tag::ReportRef, "report_1"});
    ReportPtr r = s.report("report_1");
    REQUIRE(r);
    CHECK(r->body.find("0.81649658") != std::string::npos);
    items = s.execute("ttest($x, 2, report=true)");
    REQUIRE(items.size() == 2);
    CHECK(items[1].text == "report_2");
    CHECK(s.execute("ztest($x, 2, 3)").size() == 1);
    CHECK(error_of(s, "ztest($x, 2, 0)").rfind("DomainError", 0) == 0);
    CHECK(one(s, "mean($x)") == "3");
    CHECK(one(s, "stddev($x)") == "4.0496913");
}

TEST_CASE("failed statements leave the session unchanged") {
    Session s;
    s.execute("$a = 1\nprecision 3\nplot([1], [1])");
    const std::string before = snapshot(s);
    for (const char* bad : {"$a = 1 / 0", "$b = plot([1, 2], [1])", "$a = plot([1], [1]) + 1",
                            "precision 0", "$a = [1, 2] + [1]", "$a = nosuch(1)", "frobnicate 3",
                            "$a = ztest([1, 2], 0, 1, report=true) + 1", "delete $zz", "import \"/no/such\" $d"}) {
        auto items = s.execute(bad);
        REQUIRE(items.size() == 1);
        CHECK(items[0].tag == OutputItem::Tag::Error);
        CHECK(snapshot(s) == before);
    }
    CHECK(one(s, "plot([2], [2])") == "chart_2");
}

TEST_CASE("uppercasing a script does not change its outputs or state") {
    testgen::AstGen gen(7);
    int compared = 0;
    for (int round = 0; round < 40; ++round) {
        std::string script = "$a = 3\n$b = [1, 2.5]\n";
        for (int i = 0; i < 6; ++i) script += to_source(gen.statement()) + "\n";
        Session lower_s, upper_s;
        auto a = lower_s.execute(script);
        auto b = upper_s.execute(testgen::upcase_code(script));
        CHECK(a == b);
        CHECK(snapshot(lower_s) == snapshot(upper_s));
        compared += int(a.size());
    }
    CHECK(compared > 0);
}

TEST_CASE("objects, delete and completion") {
    Session s;
    CHECK(s.execute("objects").empty());
    s.execute("$myvar = 2^( 3 + 1 ) / 4 * 3");
    CHECK(one(s, "objects vars") == "$myvar : integer = 12");
    s.execute("$long = sequence(1, 100)\nplot([1, 2], [3, 4])");
    auto e = s.objects("variables");
    REQUIRE(e.size() == 2);
    CHECK(e[0].line.size() <= 80);
    CHECK(e[0].line.substr(e[0].line.size() - 3) == "...");
    CHECK(one(s, "objects charts") == "chart_1 : line chart, 2 points");
    CHECK(one(s, "objects") ==
          "variables:\n  $long : vector = [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 1...\n"
          "  $myvar : integer = 12\ncharts:\n  chart_1 : line chart, 2 points");
    CHECK(s.complete("seq") == std::vector<std::string>{"sequence"});
    CHECK(s.complete("SQ") == std::vector<std::string>{"sqrt"});
    CHECK(s.complete("$my") == std::vector<std::string>{"$myvar"});
    CHECK(s.complete("p") == std::vector<std::string>{"pi", "plot", "precision"});
    CHECK(s.execute("delete $myvar").empty());
    CHECK(error_of(s, "$myvar").rfind("UndefinedVariable", 0) == 0);
    CHECK(s.execute("delete chart_1").empty());
    CHECK(s.chart_names().empty());
    CHECK(error_of(s, "delete chart_1").rfind("UndefinedVariable", 0) == 0);
    CHECK(error_of(s, "objects widgets").rfind("DomainError", 0) == 0);
}

TEST_CASE("help and registry coverage") {
    Session s;
    std::string h = one(s, "help invert");
    CHECK(h.find("invert(matrix)") != std::string::npos);
    CHECK(one(s, "help nosuch") == "no help for nosuch");
    std::string all = one(s, "help");
    for (const char* name : {"log", "exp", "sqrt", "sin", "cos", "pi", "im", "re", "append", "dotprod", "invert", "det",
                             "trace", "transpose", "sequence", "mean", "stddev", "ztest", "ttest", "frequency", "plot"}) {
        CHECK(is_function_name(name));
        CHECK(all.find(std::string("\n  ") + name + " ") != std::string::npos);
    }
    CHECK(is_function_name("LOG"));
    CHECK_FALSE(is_function_name("nosuch"));
    for (const HelpEntry& e : help_entries()) {
        CHECK_FALSE(e.synopsis.empty());
        CHECK_FALSE(e.description.empty());
    }
    for (const char* cmd : {"precision", "output_precision", "help"}) CHECK(s.complete(cmd).front() == cmd);
    CHECK(error_of(s, "nosuch(1)") == "UndefinedFunction: unknown function 'nosuch'");
    CHECK(error_of(s, "frobnicate 1") == "UnknownCommand: unknown command 'frobnicate'");
    CHECK(error_of(s, "log(1, 2)").rfind("TypeError", 0) == 0);
}

TEST_CASE("statements run in order and syntax errors do not stop the script") {
    Session s;
    auto items = s.execute("1 +\n2\n[1, 2\n3");
    REQUIRE(items.size() == 3);
    CHECK(items[0].tag == OutputItem::Tag::Error);
    CHECK(items[1].text == "2");
    CHECK(items[2].tag == OutputItem::Tag::Error);
    CHECK(s.execute("1/0\n2", true).size() == 1);
    items = s.execute("title = 1");
    CHECK(items.size() == 1);
    CHECK(s.execute("1 + %\n 2") == std::vector<OutputItem>{{OutputItem::Tag::Text, "3"}});
}

TEST_CASE("console report from transcript") {
    Session s;
    s.execute("2^( 3 + 1 ) / 4\n$myvar = 2^( 3 + 1 ) / 4\n$MyVar * 3");
    auto items = s.execute("report text");
    CHECK(items == std::vector<OutputItem>{{OutputItem::Tag::ReportRef, "report_1"}});
    CHECK(s.report("report_1")->body == "4\n12");
    Session empty;
    empty.execute("report text");
    CHECK(empty.report("report_1")->body.empty());
    CHECK(s.execute("exit").empty());
    CHECK(s.exit_requested());
}

TEST_CASE("interrupt flag aborts a long computation") {
    Session s;
    s.execute("precision 4000");
    s.interrupt_flag() = true;
    // The flag is cleared when a statement starts, so raise it from inside via a second thread.
    std::thread t([&] {
        std::this_thread::sleep_for(std::chrono::milliseconds(50));
        s.interrupt_flag() = true;
    });
    auto items = s.execute("pi()");
    t.join();
    REQUIRE(items.size() == 1);
    CHECK(items[0].text.rfind("Interrupted", 0) == 0);
}
