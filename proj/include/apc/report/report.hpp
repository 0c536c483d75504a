#pragma once
// Printable report documents (HTML or plain text).

#include <string>
#include <string_view>
#include <vector>

#include "apc/stats/stats.hpp"

namespace apc::report {

enum class ReportKind { Html, Text };

std::string_view report_kind_name(ReportKind kind) noexcept;

struct Report {
    std::string name;
    ReportKind kind = ReportKind::Html;
    std::string body;
    std::string created_from;
};

std::string html_escape(std::string_view text);

// Complete HTML5 document with inline styling.
std::string html_document(std::string_view title, std::string_view body_html);

// Console summaries; numbers are printed with `digits` significant digits,
// exactly as the console renders them.
std::string ztest_summary(const stats::ZTestResult& r, std::uint32_t digits);
std::string ttest_summary(const stats::TTestResult& r, std::uint32_t digits);

std::string ztest_html(const stats::ZTestResult& r, std::uint32_t digits);
std::string ttest_html(const stats::TTestResult& r, std::uint32_t digits);

// Console transcript as a report body.
std::string transcript_text(const std::vector<std::string>& lines);
std::string transcript_html(const std::vector<std::string>& lines);

}  // namespace apc::report
