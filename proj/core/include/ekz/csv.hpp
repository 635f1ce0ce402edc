#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ekz/time_series.hpp"

namespace ekz {

/// A column is addressed by zero-based position or by header name.
using ColumnRef = std::variant<std::size_t, std::string>;

struct ColumnSpec {
    std::optional<ColumnRef> time_column;  // only used to validate the grid
    ColumnRef value_column = std::size_t{0};
    std::vector<std::string> missing_tokens = {"", "NA", "NaN"};
    char delimiter = ',';
    bool header = true;
};

/// Reads one value column from a delimited text file (RFC-4180-style
/// quoting). Samples keep file order; missing tokens set the mask. When a
/// time column is named the grid must be uniform (constant increment within
/// relative 1e-9); no resampling is performed.
TimeSeries read_timeseries(const std::filesystem::path& path,
                           const ColumnSpec& spec = {});
TimeSeries read_timeseries(std::istream& in, const ColumnSpec& spec,
                           const std::string& context);

/// Named columns of reals-or-missing, all the same length.
struct Table {
    struct Column {
        std::string name;
        std::vector<std::optional<double>> cells;
    };

    std::vector<Column> columns;

    void add(std::string name, std::vector<double> values);
    void add(std::string name, std::vector<std::optional<double>> cells);
    void add(std::string name, const TimeSeries& series);

    std::size_t rows() const noexcept;
};

/// CSV with a header row; missing cells written as "NA", reals with 17
/// significant digits so a round trip through read is bitwise exact.
void write_table(const std::filesystem::path& path, const Table& table);
void write_table(std::ostream& out, const Table& table);

/// Shortest-width decimal form with 17 significant digits.
std::string format_double(double value);

}  // namespace ekz
