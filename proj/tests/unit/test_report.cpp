#include <filesystem>

#include "apc/bignum/decimal.hpp"
#include "apc/data/dataset.hpp"
#include "apc/report/report.hpp"
#include "apc/runtime/session.hpp"
#include "doctest.h"
#include "support/markup.hpp"

using namespace apc;

TEST_CASE("z-test report content") {
    PrecisionContext ctx{};
    NumVector v = NumVector::from({Number::integer(9), Number::integer(3), Number::integer(-1), Number::integer(-2),
                                   Number::integer(4), Number::integer(5)},
                                  ctx);
    auto r = stats::ztest(v, Number::integer(2), Number::integer(3), ctx);
    std::string html = report::ztest_html(r, 8);
    boost::property_tree::ptree tree;
    CHECK(testgen::well_formed(html, &tree));
    CHECK(tree.begin()->first == "html");
    CHECK(html.find("One-sample z-test (two-sided)") != std::string::npos);
    CHECK(html.find("0.81649658") != std::string::npos);
    CHECK(html.find(format_decimal(r.p, 8)) != std::string::npos);
    CHECK(html.find("fail to reject H0") != std::string::npos);
    auto zero = stats::ztest(v, Number::integer(3), Number::integer(3), ctx);
    CHECK(report::ztest_html(zero, 8).find("p = 1") != std::string::npos);
    CHECK(report::ztest_summary(r, 8).find("z = 0.81649658") != std::string::npos);
    auto t = stats::ttest(v, Number::integer(2), ctx);
    CHECK(testgen::well_formed(report::ttest_html(t, 8)));
}

TEST_CASE("report numbers match console rendering") {
    Session s;
    s.execute("precision 3\noutput_precision 12\n$x = [1.5, 2.25, 9, -4]");
    auto items = s.execute("ztest($x, 1, 2, report=true)\nmean($x)\nstddev($x)");
    REQUIRE(items.size() == 4);
    const std::string& body = s.report("report_1")->body;
    CHECK(body.find(items[2].text) != std::string::npos);
    CHECK(items[0].text.find(items[2].text) != std::string::npos);
}

TEST_CASE("transcript reports and export") {
    Session s;
    s.execute("1 + 1\n$a = <\n\"<b>\"");
    CHECK(s.execute("report html")[0].text == "report_1");
    std::string html = s.report("report_1")->body;
    CHECK(testgen::well_formed(html));
    CHECK(html.find("&lt;b&gt;") != std::string::npos);
    auto path = std::filesystem::temp_directory_path() / "apcalc_report_test.html";
    CHECK(s.execute("export report_1 \"" + path.string() + "\"").empty());
    CHECK(data::read_file(path.string()) == html);
    CHECK(s.execute("export report_1 \"" + path.string() + "\"").empty());
    CHECK(s.execute("export report_9 \"x\"")[0].text.rfind("UndefinedVariable", 0) == 0);
    CHECK(s.execute("export report_1 \"/no/such/dir/x.html\"")[0].text.rfind("IoError", 0) == 0);
    s.execute("plot([1, 2], [3, 4])");
    auto svg = std::filesystem::temp_directory_path() / "apcalc_chart_test.svg";
    CHECK(s.execute("export chart_1 \"" + svg.string() + "\"").empty());
    CHECK(testgen::well_formed(data::read_file(svg.string())));
}
