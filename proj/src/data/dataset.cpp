#include "apc/data/dataset.hpp"

#include <fstream>
#include <sstream>

#include "apc/bignum/decimal.hpp"
#include "apc/errors.hpp"

namespace apc::data {

namespace {

std::string trim(std::string_view s) {
    std::size_t a = 0, b = s.size();
    while (a < b && (s[a] == ' ' || s[a] == '\t' || s[a] == '\r')) ++a;
    while (b > a && (s[b - 1] == ' ' || s[b - 1] == '\t' || s[b - 1] == '\r')) --b;
    return std::string(s.substr(a, b - a));
}

std::optional<Number> numeric_cell(const std::string& cell, const PrecisionContext& ctx) {
    std::string t = trim(cell);
    if (t.empty()) return std::nullopt;
    try {
        return Number(parse_decimal(t, ctx));
    } catch (const Error&) {
        return std::nullopt;
    }
}

bool looks_numeric(const std::string& cell) { return numeric_cell(cell, PrecisionContext{2, 8}).has_value(); }

bool blank_record(const std::vector<std::string>& r) { return r.size() == 1 && trim(r[0]).empty(); }

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos && trim(s) == s) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

std::string csv_number(const Number& n) {
    if (n.is_int()) return n.format(0);
    const BigFloat& f = n.as_float();
    return format_decimal(f, round_trip_digits(f.bits()));
}

}  // namespace

std::vector<std::vector<std::string>> split_records(std::string_view text, char delimiter) {
    std::vector<std::vector<std::string>> records;
    std::vector<std::string> record;
    std::string field;
    const bool quoting = delimiter != '\t';
    bool in_quotes = false;
    bool any = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        any = true;
        if (in_quotes) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else {
                    in_quotes = false;
                }
            } else {
                field += c;
            }
            continue;
        }
        if (quoting && c == '"' && trim(field).empty()) {
            field.clear();
            in_quotes = true;
        } else if (c == delimiter) {
            record.push_back(std::move(field));
            field.clear();
        } else if (c == '\n') {
            if (!field.empty() && field.back() == '\r') field.pop_back();
            record.push_back(std::move(field));
            field.clear();
            records.push_back(std::move(record));
            record.clear();
            any = false;
        } else {
            field += c;
        }
    }
    if (in_quotes) fail(ErrorKind::Format, "unterminated quoted field in row " + std::to_string(records.size() + 1));
    if (any) {
        if (!field.empty() && field.back() == '\r') field.pop_back();
        record.push_back(std::move(field));
        records.push_back(std::move(record));
    }
    return records;
}

char detect_delimiter(std::string_view text) {
    std::string_view first = text.substr(0, text.find('\n'));
    std::size_t tabs = 0, commas = 0;
    for (char c : first) {
        tabs += c == '\t';
        commas += c == ',';
    }
    return tabs > commas ? '\t' : ',';
}

bool detect_header(const std::vector<std::vector<std::string>>& records) {
    if (records.size() < 2) return false;
    for (std::size_t j = 0; j < records[0].size(); ++j) {
        if (looks_numeric(records[0][j])) continue;
        bool rest_numeric = true;
        for (std::size_t r = 1; r < records.size() && rest_numeric; ++r) {
            rest_numeric = j < records[r].size() && looks_numeric(records[r][j]);
        }
        if (rest_numeric) return true;
    }
    return false;
}

Dataset parse_dataset(std::string_view text, std::string name, const ImportOptions& opts,
                      const PrecisionContext& ctx) {
    const char delim = opts.delimiter.value_or(detect_delimiter(text));
    auto all = split_records(text, delim);
    // Keep physical record numbers for error messages; drop blank lines.
    std::vector<std::vector<std::string>> records;
    std::vector<std::size_t> line_of;
    for (std::size_t i = 0; i < all.size(); ++i) {
        if (blank_record(all[i])) continue;
        records.push_back(std::move(all[i]));
        line_of.push_back(i + 1);
    }
    if (records.empty()) fail(ErrorKind::Format, "empty file");
    const std::size_t width = records[0].size();
    for (std::size_t r = 1; r < records.size(); ++r) {
        if (records[r].size() != width) {
            fail(ErrorKind::Format, "row " + std::to_string(line_of[r]) + " has " +
                                        std::to_string(records[r].size()) + " fields, expected " +
                                        std::to_string(width));
        }
    }
    const bool header = opts.header.value_or(detect_header(records));
    Dataset d;
    d.name = std::move(name);
    d.rows = records.size() - (header ? 1 : 0);
    for (std::size_t j = 0; j < width; ++j) {
        Column col;
        col.header = header ? trim(records[0][j]) : std::string();
        if (col.header.empty()) col.header = "c" + std::to_string(j);
        std::vector<Number> nums;
        bool numeric = d.rows > 0;
        for (std::size_t r = header ? 1 : 0; r < records.size(); ++r) {
            col.text.push_back(records[r][j]);
            if (numeric) {
                auto v = numeric_cell(records[r][j], ctx);
                if (v) {
                    nums.push_back(std::move(*v));
                } else {
                    numeric = false;
                }
            }
        }
        if (numeric) {
            col.numeric = true;
            col.numbers = NumVector::from(std::move(nums), ctx);
            col.text.clear();
        }
        d.columns.push_back(std::move(col));
        ctx.poll();
    }
    return d;
}

Dataset import_dataset(const std::string& path, std::string name, const ImportOptions& opts,
                       const PrecisionContext& ctx) {
    return parse_dataset(read_file(path), std::move(name), opts, ctx);
}

NumVector dataset_column(const Dataset& d, std::int64_t index) {
    if (index < 0 || std::uint64_t(index) >= d.columns.size()) {
        std::string range = d.columns.empty() ? "none" : "0.." + std::to_string(d.columns.size() - 1);
        fail(ErrorKind::Index, "column " + std::to_string(index) + " out of range for dataset " + d.name +
                                   " (valid " + range + ")");
    }
    const Column& c = d.columns[std::size_t(index)];
    if (!c.numeric) fail(ErrorKind::Type, "column " + std::to_string(index) + " (" + c.header + ") is not numeric");
    return c.numbers;
}

std::string to_csv(const Dataset& d) {
    std::string out;
    for (std::size_t j = 0; j < d.columns.size(); ++j) {
        if (j) out += ',';
        out += csv_field(d.columns[j].header);
    }
    out += '\n';
    for (std::size_t r = 0; r < d.rows; ++r) {
        for (std::size_t j = 0; j < d.columns.size(); ++j) {
            if (j) out += ',';
            const Column& c = d.columns[j];
            out += c.numeric ? csv_number(c.numbers[r]) : csv_field(c.text[r]);
        }
        out += '\n';
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorKind::Io, "cannot open file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) fail(ErrorKind::Io, "error reading file '" + path + "'");
    return ss.str();
}

void write_file(const std::string& path, std::string_view body) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) fail(ErrorKind::Io, "cannot write file '" + path + "'");
    out.write(body.data(), std::streamsize(body.size()));
    if (!out) fail(ErrorKind::Io, "error writing file '" + path + "'");
}

}  // namespace apc::data
