#include <algorithm>
#include <cmath>

#include "apc/bignum/elementary.hpp"
#include "apc/errors.hpp"
#include "apc/report/report.hpp"
#include "apc/stats/stats.hpp"
#include "evaluator.hpp"

namespace apc {

namespace {

std::string ordinal(std::size_t i) {
    static const char* names[] = {"first", "second", "third", "fourth", "fifth", "sixth"};
    return i < 6 ? names[i] : "argument " + std::to_string(i + 1);
}

using ScalarFn = Number (*)(const Number&, const PrecisionContext&);

// Applies fn to a number, or to each component of a vector or matrix.
Value map_numeric(const CallArgs& a, ScalarFn fn, const PrecisionContext& ctx) {
    const Value& v = a.args[0];
    if (v.is_number()) return fn(v.number(), ctx);
    auto bound = [&](const Number& x) { return fn(x, ctx); };
    if (v.is<NumVector>()) return map(bound, v.as<NumVector>(), ctx);
    if (v.is<NumMatrix>()) {
        const NumMatrix& m = v.as<NumMatrix>();
        NumVector flat = map(bound, NumVector::from(m.data(), ctx), ctx);
        return NumMatrix::from(m.rows(), m.cols(), flat.elements(), ctx);
    }
    a.bad_arg(0, "a number, vector or matrix");
}

Number f_log(const Number& x, const PrecisionContext& ctx) { return log(x.to_float(ctx), ctx); }
Number f_exp(const Number& x, const PrecisionContext& ctx) { return exp(x.to_float(ctx), ctx); }
Number f_sin(const Number& x, const PrecisionContext& ctx) { return sin(x.to_float(ctx), ctx); }
Number f_cos(const Number& x, const PrecisionContext& ctx) { return cos(x.to_float(ctx), ctx); }
Number f_sqrt(const Number& x, const PrecisionContext& ctx) {
    if (x.sign() < 0) fail(ErrorKind::Domain, "sqrt requires a non-negative argument, got " + x.format(17));
    return sqrt(x.to_float(ctx), ctx);
}

std::vector<double> downcast(const NumVector& v) {
    std::vector<double> out;
    out.reserve(v.size());
    for (const Number& x : v.elements()) {
        double d = x.to_double();
        if (!std::isfinite(d)) fail(ErrorKind::Range, "value " + x.format(17) + " is outside the plottable range");
        out.push_back(d);
    }
    return out;
}

void apply_titles(viz::ChartSpec& spec, const CallArgs& a) {
    if (auto t = a.text_option("title")) spec.title = *t;
    if (auto t = a.text_option("xtitle")) spec.xtitle = *t;
    if (auto t = a.text_option("ytitle")) spec.ytitle = *t;
}

Value h_log(Evaluator& ev, const CallArgs& a) { return map_numeric(a, f_log, ev.ctx); }
Value h_exp(Evaluator& ev, const CallArgs& a) { return map_numeric(a, f_exp, ev.ctx); }
Value h_sin(Evaluator& ev, const CallArgs& a) { return map_numeric(a, f_sin, ev.ctx); }
Value h_cos(Evaluator& ev, const CallArgs& a) { return map_numeric(a, f_cos, ev.ctx); }
Value h_sqrt(Evaluator& ev, const CallArgs& a) { return map_numeric(a, f_sqrt, ev.ctx); }

Value h_pi(Evaluator& ev, const CallArgs&) { return Number(pi_bbp(ev.ctx)); }

Value h_re(Evaluator&, const CallArgs& a) {
    if (a.args[0].is<BigComplex>()) return a.args[0].as<BigComplex>().re;
    return a.number(0);
}

Value h_im(Evaluator&, const CallArgs& a) {
    if (a.args[0].is<BigComplex>()) return a.args[0].as<BigComplex>().im;
    a.number(0);
    return Number::integer(0);
}

Value h_append(Evaluator& ev, const CallArgs& a) {
    const NumVector& v = a.vector(0);
    if (a.args[1].is_number()) return append(v, NumVector::from({a.args[1].number()}, ev.ctx), ev.ctx);
    return append(v, a.vector(1), ev.ctx);
}

Value h_dotprod(Evaluator& ev, const CallArgs& a) { return dotprod(a.vector(0), a.vector(1), ev.ctx); }
Value h_invert(Evaluator& ev, const CallArgs& a) { return invert(a.matrix(0), ev.ctx); }
Value h_det(Evaluator& ev, const CallArgs& a) { return det(a.matrix(0), ev.ctx); }
Value h_trace(Evaluator& ev, const CallArgs& a) { return trace(a.matrix(0), ev.ctx); }
Value h_transpose(Evaluator&, const CallArgs& a) { return transpose(a.matrix(0)); }

Value h_sequence(Evaluator& ev, const CallArgs& a) {
    Number step = a.args.size() > 2 ? a.number(2) : Number::integer(1);
    return sequence(a.number(0), a.number(1), step, ev.ctx);
}

Value h_mean(Evaluator& ev, const CallArgs& a) { return stats::mean(a.vector(0), ev.ctx); }
Value h_stddev(Evaluator& ev, const CallArgs& a) { return stats::stddev(a.vector(0), ev.ctx); }

Value h_ztest(Evaluator& ev, const CallArgs& a) {
    stats::ZTestResult r = stats::ztest(a.vector(0), a.number(1), a.number(2), ev.ctx);
    const std::uint32_t digits = ev.ctx.output_digits;
    if (a.bool_option("report").value_or(false)) {
        ev.add_report(report::ReportKind::Html, report::ztest_html(r, digits), "ztest");
    }
    return Text{report::ztest_summary(r, digits)};
}

Value h_ttest(Evaluator& ev, const CallArgs& a) {
    stats::TTestResult r = stats::ttest(a.vector(0), a.number(1), ev.ctx);
    const std::uint32_t digits = ev.ctx.output_digits;
    if (a.bool_option("report").value_or(false)) {
        ev.add_report(report::ReportKind::Html, report::ttest_html(r, digits), "ttest");
    }
    return Text{report::ttest_summary(r, digits)};
}

Value h_frequency(Evaluator& ev, const CallArgs& a) {
    const NumVector& v = a.vector(0);
    if (v.empty()) fail(ErrorKind::Domain, "frequency requires at least 1 value");
    std::size_t bins = 0;
    if (auto b = a.number_option("bins")) {
        if (!b->is_integral() || b->sign() <= 0 || compare(*b, Number::integer(100000)) > 0) {
            fail(ErrorKind::Domain, "bins must be an integer between 1 and 100000, got " + b->format(17));
        }
        bins = std::size_t(b->to_bigint().to_i64());
    }
    stats::Histogram h = stats::histogram(downcast(v), bins);
    viz::ChartSpec spec;
    spec.kind = viz::ChartKind::Histogram;
    spec.bin_width = h.width;
    for (std::size_t i = 0; i < h.counts.size(); ++i) {
        spec.x.push_back(h.lo + double(i) * h.width);
        spec.y.push_back(double(h.counts[i]));
    }
    apply_titles(spec, a);
    return ev.add_chart(std::move(spec));
}

Value h_plot(Evaluator& ev, const CallArgs& a) {
    viz::ChartSpec spec;
    if (a.args.size() == 2) {
        spec.x = downcast(a.vector(0));
        spec.y = downcast(a.vector(1));
        if (spec.x.size() != spec.y.size()) {
            fail(ErrorKind::Dimension, "plot needs x and y of equal length, got " + std::to_string(spec.x.size()) +
                                           " and " + std::to_string(spec.y.size()));
        }
    } else if (a.args[0].is<DatasetPtr>()) {
        const data::Dataset& d = *a.args[0].as<DatasetPtr>();
        if (d.columns.size() < 2) fail(ErrorKind::Dimension, "plot of a dataset needs at least 2 columns");
        spec.x = downcast(data::dataset_column(d, 0));
        spec.y = downcast(data::dataset_column(d, 1));
        spec.xtitle = d.columns[0].header;
        spec.ytitle = d.columns[1].header;
    } else {
        spec.y = downcast(a.vector(0));
        for (std::size_t i = 0; i < spec.y.size(); ++i) spec.x.push_back(double(i));
    }
    if (spec.x.empty()) fail(ErrorKind::Domain, "plot requires at least 1 point");
    if (auto k = a.text_option("kind")) {
        if (*k == "line") spec.kind = viz::ChartKind::Line;
        else if (*k == "scatter") spec.kind = viz::ChartKind::Scatter;
        else fail(ErrorKind::Domain, "kind must be \"line\" or \"scatter\", got \"" + *k + "\"");
    }
    apply_titles(spec, a);
    auto limit = [&](std::string_view key) -> std::optional<double> {
        if (auto n = a.number_option(key)) return n->to_double();
        return std::nullopt;
    };
    spec.xmin = limit("xmin");
    spec.xmax = limit("xmax");
    spec.ymin = limit("ymin");
    spec.ymax = limit("ymax");
    if ((spec.xmin && spec.xmax && *spec.xmin >= *spec.xmax) || (spec.ymin && spec.ymax && *spec.ymin >= *spec.ymax)) {
        fail(ErrorKind::Domain, "axis minimum must be below its maximum");
    }
    return ev.add_chart(std::move(spec));
}

const std::vector<std::string> kChartOptions = {"title", "xtitle", "ytitle"};

std::vector<FunctionDef> build_table() {
    std::vector<FunctionDef> t = {
        {"append", 2, 2, {}, "append(vector, vector_or_number)", "Concatenates two vectors.\nExample: append([1, 2], 3) gives [1, 2, 3]", h_append},
        {"cos", 1, 1, {}, "cos(x)", "Cosine of x in radians; applied to each component of a vector or matrix.", h_cos},
        {"det", 1, 1, {}, "det(matrix)", "Determinant of a square matrix; exact for integer matrices.", h_det},
        {"dotprod", 2, 2, {}, "dotprod(vector, vector)", "Scalar product of two vectors of equal length.\nExample: dotprod([1, 2], [3, 4]) gives 11", h_dotprod},
        {"exp", 1, 1, {}, "exp(x)", "Exponential of x; applied to each component of a vector or matrix.", h_exp},
        {"frequency", 1, 1, {"bins", "title", "xtitle", "ytitle"}, "frequency(vector, bins=n, title=\"..\", xtitle=\"..\", ytitle=\"..\")",
         "Histogram chart of the values; bins defaults to ceil(sqrt(n)).", h_frequency},
        {"im", 1, 1, {}, "im(complex)", "Imaginary part of a complex number.\nExample: im({2, -3}) gives -3", h_im},
        {"invert", 1, 1, {}, "invert(matrix)", "Inverse of a square matrix by Gaussian elimination with partial pivoting.\nExample: invert({[1, 3, -1, 4], 2, 2})", h_invert},
        {"log", 1, 1, {}, "log(x)", "Natural logarithm of x > 0; applied to each component of a vector or matrix.", h_log},
        {"mean", 1, 1, {}, "mean(vector)", "Arithmetic mean.", h_mean},
        {"pi", 0, 0, {}, "pi()", "The constant pi at the current precision, from the Bailey-Borwein-Plouffe series.", h_pi},
        {"plot", 1, 2, {"title", "xtitle", "ytitle", "kind", "xmin", "xmax", "ymin", "ymax"},
         "plot(x, y, title=\"..\", xtitle=\"..\", ytitle=\"..\", kind=\"line\"|\"scatter\", xmin=.., xmax=.., ymin=.., ymax=..)",
         "Chart of y against x. With one vector, plots it against its index; with a dataset, plots column 1 against column 0.\n"
         "Example: plot($x, $y, xtitle=\"x [rad]\", ytitle=\"cos(x)*sin(x)\")", h_plot},
        {"re", 1, 1, {}, "re(complex)", "Real part of a complex number.", h_re},
        {"sequence", 2, 3, {}, "sequence(start, stop, step)", "Vector start, start+step, ... up to stop; step defaults to 1.\nExample: sequence(0, 1, 0.25)", h_sequence},
        {"sin", 1, 1, {}, "sin(x)", "Sine of x in radians; applied to each component of a vector or matrix.", h_sin},
        {"sqrt", 1, 1, {}, "sqrt(x)", "Square root of x >= 0; applied to each component of a vector or matrix.", h_sqrt},
        {"stddev", 1, 1, {}, "stddev(vector)", "Sample standard deviation (n - 1 denominator).", h_stddev},
        {"trace", 1, 1, {}, "trace(matrix)", "Sum of the diagonal of a square matrix.", h_trace},
        {"transpose", 1, 1, {}, "transpose(matrix)", "Matrix transpose.", h_transpose},
        {"ttest", 2, 2, {"report"}, "ttest(vector, mu0, report=true|false)",
         "Two-sided one-sample Student t-test of mean = mu0. report=true also creates an HTML report.", h_ttest},
        {"ztest", 3, 3, {"report"}, "ztest(vector, mu0, sigma, report=true|false)",
         "Two-sided one-sample z-test of mean = mu0 with known sigma. report=true also creates an HTML report.\n"
         "Example: ztest($x, 2, 3, report=true)", h_ztest},
    };
    return t;
}

}  // namespace

Number CallArgs::number(std::size_t i) const {
    if (!args[i].is_number()) bad_arg(i, "a real number");
    return args[i].number();
}

const NumVector& CallArgs::vector(std::size_t i) const {
    if (!args[i].is<NumVector>()) bad_arg(i, "a vector");
    return args[i].as<NumVector>();
}

const NumMatrix& CallArgs::matrix(std::size_t i) const {
    if (!args[i].is<NumMatrix>()) bad_arg(i, "a matrix");
    return args[i].as<NumMatrix>();
}

std::optional<std::string> CallArgs::text_option(std::string_view key) const {
    auto it = options.find(key);
    if (it == options.end()) return std::nullopt;
    if (!it->second.is<Text>()) {
        fail(ErrorKind::Type, name + " option " + std::string(key) + " must be text, got " +
                                  std::string(class_name(it->second)));
    }
    return it->second.as<Text>().str;
}

std::optional<bool> CallArgs::bool_option(std::string_view key) const {
    auto it = options.find(key);
    if (it == options.end()) return std::nullopt;
    if (!it->second.is<bool>()) {
        fail(ErrorKind::Type, name + " option " + std::string(key) + " must be true or false, got " +
                                  std::string(class_name(it->second)));
    }
    return it->second.as<bool>();
}

std::optional<Number> CallArgs::number_option(std::string_view key) const {
    auto it = options.find(key);
    if (it == options.end()) return std::nullopt;
    if (!it->second.is_number()) {
        fail(ErrorKind::Type, name + " option " + std::string(key) + " must be a number, got " +
                                  std::string(class_name(it->second)));
    }
    return it->second.number();
}

void CallArgs::bad_arg(std::size_t i, std::string_view expected) const {
    fail(ErrorKind::Type, name + " expects " + std::string(expected) + " as its " + ordinal(i) + " argument, got " +
                              std::string(class_name(args[i])));
}

const std::vector<FunctionDef>& function_table() {
    static const std::vector<FunctionDef> table = build_table();
    return table;
}

const FunctionDef* find_function(std::string_view name) {
    const auto& t = function_table();
    auto it = std::find_if(t.begin(), t.end(), [&](const FunctionDef& f) { return f.name == name; });
    return it == t.end() ? nullptr : &*it;
}

}  // namespace apc
