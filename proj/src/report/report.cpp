#include "apc/report/report.hpp"

#include "apc/bignum/decimal.hpp"

namespace apc::report {

std::string_view report_kind_name(ReportKind kind) noexcept {
    return kind == ReportKind::Html ? "html" : "text";
}

std::string html_escape(std::string_view text) {
    std::string out;
    for (char c : text) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

std::string html_document(std::string_view title, std::string_view body_html) {
    std::string out = "<!DOCTYPE html>\n<html lang=\"en\">\n<head>\n<meta charset=\"utf-8\"/>\n<title>";
    out += html_escape(title);
    out += "</title>\n<style>\n"
           "body { font-family: sans-serif; margin: 2em; color: #222; }\n"
           "table { border-collapse: collapse; margin: 1em 0; }\n"
           "th, td { border: 1px solid #bbb; padding: 0.3em 0.8em; text-align: left; }\n"
           "th { background: #eee; }\n"
           "pre { font-family: monospace; }\n"
           "</style>\n</head>\n<body>\n";
    out += body_html;
    out += "</body>\n</html>\n";
    return out;
}

namespace {

std::string num(const Number& n, std::uint32_t digits) { return n.format(digits); }
std::string num(const BigFloat& f, std::uint32_t digits) { return format_decimal(f, digits); }

std::string decision(bool reject) {
    return reject ? "reject H0 at alpha = 0.05" : "fail to reject H0 at alpha = 0.05";
}

std::string table(const std::vector<std::pair<std::string, std::string>>& rows) {
    std::string out = "<table>\n<tr><th>Quantity</th><th>Value</th></tr>\n";
    for (const auto& [k, v] : rows) out += "<tr><td>" + html_escape(k) + "</td><td>" + html_escape(v) + "</td></tr>\n";
    return out + "</table>\n";
}

}  // namespace

std::string ztest_summary(const stats::ZTestResult& r, std::uint32_t digits) {
    return "One-sample z-test (two-sided)\n"
           "  n = " + std::to_string(r.n) + ", mean = " + num(r.sample_mean, digits) +
           ", mu0 = " + num(r.mu0, digits) + ", sigma = " + num(r.sigma, digits) + "\n"
           "  z = " + num(r.z, digits) + ", p = " + num(r.p, digits) + "\n"
           "  " + decision(r.reject);
}

std::string ttest_summary(const stats::TTestResult& r, std::uint32_t digits) {
    return "One-sample t-test (two-sided)\n"
           "  n = " + std::to_string(r.n) + ", mean = " + num(r.sample_mean, digits) +
           ", mu0 = " + num(r.mu0, digits) + ", sd = " + num(r.sd, digits) + "\n"
           "  t = " + num(r.t, digits) + ", df = " + std::to_string(r.df) + ", p = " + num(r.p, digits) + "\n"
           "  " + decision(r.reject);
}

std::string ztest_html(const stats::ZTestResult& r, std::uint32_t digits) {
    std::string body = "<h1>One-sample z-test (two-sided)</h1>\n";
    body += "<p>Null hypothesis: population mean = " + html_escape(num(r.mu0, digits)) +
            " (known sigma = " + html_escape(num(r.sigma, digits)) + ")</p>\n";
    body += table({{"n", std::to_string(r.n)},
                   {"sample mean", num(r.sample_mean, digits)},
                   {"mu0", num(r.mu0, digits)},
                   {"sigma", num(r.sigma, digits)},
                   {"z", num(r.z, digits)},
                   {"p (two-sided)", num(r.p, digits)}});
    body += "<p>z = " + html_escape(num(r.z, digits)) + ", p = " + html_escape(num(r.p, digits)) + "</p>\n";
    body += "<p><strong>Decision:</strong> " + decision(r.reject) + "</p>\n";
    return html_document("One-sample z-test (two-sided)", body);
}

std::string ttest_html(const stats::TTestResult& r, std::uint32_t digits) {
    std::string body = "<h1>One-sample t-test (two-sided)</h1>\n";
    body += "<p>Null hypothesis: population mean = " + html_escape(num(r.mu0, digits)) + "</p>\n";
    body += table({{"n", std::to_string(r.n)},
                   {"sample mean", num(r.sample_mean, digits)},
                   {"mu0", num(r.mu0, digits)},
                   {"sample sd", num(r.sd, digits)},
                   {"t", num(r.t, digits)},
                   {"df", std::to_string(r.df)},
                   {"p (two-sided)", num(r.p, digits)}});
    body += "<p>t = " + html_escape(num(r.t, digits)) + ", p = " + html_escape(num(r.p, digits)) + "</p>\n";
    body += "<p><strong>Decision:</strong> " + decision(r.reject) + "</p>\n";
    return html_document("One-sample t-test (two-sided)", body);
}

std::string transcript_text(const std::vector<std::string>& lines) {
    std::string out;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (i) out += '\n';
        out += lines[i];
    }
    return out;
}

std::string transcript_html(const std::vector<std::string>& lines) {
    return html_document("Console output", "<h1>Console output</h1>\n<pre>" + html_escape(transcript_text(lines)) + "</pre>\n");
}

}  // namespace apc::report
