#pragma once
// Tables of observations loaded from comma- or tab-separated text.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "apc/linalg.hpp"

namespace apc::data {

struct Column {
    std::string header;
    bool numeric = false;
    NumVector numbers;               // when numeric
    std::vector<std::string> text;   // otherwise
};

struct Dataset {
    std::string name;
    std::vector<Column> columns;
    std::size_t rows = 0;
};

struct ImportOptions {
    std::optional<char> delimiter;  // auto: tab if the first line has more tabs than commas
    std::optional<bool> header;     // auto: see detect_header
};

// Splits delimited text into records. Commas honor RFC-4180 quoting;
// tab-separated text has no quoting.
std::vector<std::vector<std::string>> split_records(std::string_view text, char delimiter);

char detect_delimiter(std::string_view text);

// A header row is assumed when some column has a non-numeric first cell
// and numeric cells in every following row.
bool detect_header(const std::vector<std::vector<std::string>>& records);

Dataset parse_dataset(std::string_view text, std::string name, const ImportOptions& opts,
                      const PrecisionContext& ctx);
Dataset import_dataset(const std::string& path, std::string name, const ImportOptions& opts,
                       const PrecisionContext& ctx);

// Copy of a numeric column; IndexError outside 0..cols-1, TypeError for text.
NumVector dataset_column(const Dataset& d, std::int64_t index);

// CSV with a header row; floats keep enough digits to re-parse exactly.
std::string to_csv(const Dataset& d);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view body);

}  // namespace apc::data
