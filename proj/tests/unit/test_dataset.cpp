#include <filesystem>

#include <functional>

#include "apc/data/dataset.hpp"
#include "apc/errors.hpp"
#include "apc/runtime/session.hpp"
#include "doctest.h"

using namespace apc;
using namespace apc::data;

namespace fs = std::filesystem;

namespace {

const PrecisionContext kCtx{};

std::string render(const NumVector& v) { return render_vector(v, 8); }

std::string error_text(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.display();
    }
    return {};
}

fs::path scratch(const std::string& name) {
    fs::path dir = fs::temp_directory_path() / "apcalc_test_dataset";
    fs::create_directories(dir);
    return dir / name;
}

}  // namespace

TEST_CASE("minimal csv with header") {
    Dataset d = parse_dataset("x,y\n1,2\n3,4\n", "d", {}, kCtx);
    CHECK(d.rows == 2);
    REQUIRE(d.columns.size() == 2);
    CHECK(d.columns[0].header == "x");
    CHECK(d.columns[1].header == "y");
    CHECK(render(dataset_column(d, 0)) == "[1, 3]");
    CHECK(render(dataset_column(d, 1)) == "[2, 4]");
    CHECK(error_text([&] { dataset_column(d, 5); }).find("valid 0..1") != std::string::npos);
    CHECK(error_text([&] { dataset_column(d, -1); }).rfind("IndexError", 0) == 0);
}

TEST_CASE("delimiter and header detection") {
    CHECK(detect_delimiter("a\tb\n1\t2") == '\t');
    CHECK(detect_delimiter("a,b\n1,2") == ',');
    CHECK(detect_header(split_records("x,y\n1,2", ',')));
    CHECK_FALSE(detect_header(split_records("1,2\n3,4", ',')));
    CHECK_FALSE(detect_header(split_records("name,city\nann,rome", ',')));
    Dataset t = parse_dataset("0.6439767\t1\n0.0746277\t2\n", "t", {}, kCtx);
    CHECK(t.rows == 2);
    CHECK(t.columns[0].header == "c0");
    CHECK(render(dataset_column(t, 0)) == "[0.6439767, 0.0746277]");
    ImportOptions forced;
    forced.header = true;
    CHECK(parse_dataset("1,2\n3,4", "f", forced, kCtx).rows == 1);
    for (int i = 0; i < 3; ++i) CHECK(detect_delimiter("a;b,c\t\n") == detect_delimiter("a;b,c\t\n"));
}

TEST_CASE("quoting, text columns and errors") {
    Dataset d = parse_dataset("name,value\n\"Smith, J\",1\n\"say \"\"hi\"\"\",2\n", "q", {}, kCtx);
    REQUIRE(d.columns.size() == 2);
    CHECK_FALSE(d.columns[0].numeric);
    CHECK(d.columns[0].text[0] == "Smith, J");
    CHECK(d.columns[0].text[1] == "say \"hi\"");
    CHECK(error_text([&] { dataset_column(d, 0); }).rfind("TypeError", 0) == 0);
    CHECK(error_text([&] { parse_dataset("a,b\n1,2\n3\n", "r", {}, kCtx); }).find("row 3") != std::string::npos);
    CHECK(error_text([&] { parse_dataset("", "e", {}, kCtx); }).rfind("FormatError", 0) == 0);
    CHECK(error_text([&] { import_dataset("/no/such/file.csv", "m", {}, kCtx); }).rfind("IoError", 0) == 0);
}

TEST_CASE("csv export and re-import round trip") {
    PrecisionContext ctx{4, 32};
    Dataset d = parse_dataset("x,y,label\n0.1,1e-30,a\n-2.5,3,\"b,c\"\n7,0.333333333333333333333,d\n", "d", {}, ctx);
    std::string csv = to_csv(d);
    Dataset back = parse_dataset(csv, "d", {}, ctx);
    REQUIRE(back.columns.size() == d.columns.size());
    CHECK(back.rows == d.rows);
    for (std::size_t j = 0; j < d.columns.size(); ++j) {
        CHECK(back.columns[j].header == d.columns[j].header);
        CHECK(back.columns[j].numeric == d.columns[j].numeric);
        if (d.columns[j].numeric) {
            const auto& a = d.columns[j].numbers.elements();
            const auto& b = back.columns[j].numbers.elements();
            for (std::size_t i = 0; i < a.size(); ++i) CHECK(compare(a[i], b[i]) == 0);
        } else {
            CHECK(back.columns[j].text == d.columns[j].text);
        }
    }
    CHECK(to_csv(back) == csv);
}

TEST_CASE("import and export through the session") {
    fs::path in = scratch("in.csv");
    write_file(in.string(), "x,y\n1,2\n3,4\n");
    Session s;
    CHECK(s.execute("import \"" + in.string() + "\" $MyData").empty());
    CHECK(s.execute("$mydata[0]") == std::vector<OutputItem>{{OutputItem::Tag::Text, "[1, 3]"}});
    CHECK(s.execute("$v = $mydata[1]\n$v") == std::vector<OutputItem>{{OutputItem::Tag::Text, "[2, 4]"}});
    auto err = s.execute("$mydata[5]");
    REQUIRE(err.size() == 1);
    CHECK(err[0].text.find("valid 0..1") != std::string::npos);
    CHECK(s.execute("[1, 2][0]")[0].text.rfind("TypeError", 0) == 0);
    CHECK(s.execute("objects datasets")[0].text == "mydata : dataset, 2 rows x 2 columns");
    fs::path out = scratch("out.csv");
    CHECK(s.execute("export mydata \"" + out.string() + "\"").empty());
    CHECK(read_file(out.string()) == "x,y\n1,2\n3,4\n");
    CHECK(s.execute("plot($mydata)")[0].text == "chart_1");
    CHECK(s.chart("chart_1")->xtitle == "x");
    fs::path tab = scratch("in.tsv");
    write_file(tab.string(), "1\t2\n3\t4\n");
    CHECK(s.execute("import \"" + tab.string() + "\" $t header=false delimiter=\"tab\"").empty());
    CHECK(s.execute("$t[1]")[0].text == "[2, 4]");
}
