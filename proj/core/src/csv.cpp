#include "ekz/csv.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "ekz/error.hpp"

namespace ekz {

namespace {

// One RFC-4180 record: fields split on the delimiter, double quotes strip
// and escape ("" -> "), quoted fields may contain delimiters and newlines.
// Returns false at end of input. line is advanced past every consumed
// newline so diagnostics can point at the record's first line.
bool read_record(std::istream& in, char delimiter, std::vector<std::string>& fields,
                 std::size_t& line, const std::string& context) {
    fields.clear();
    int c = in.get();
    if (c == EOF) return false;

    std::string field;
    bool quoted = false;
    while (true) {
        if (c == EOF) {
            fields.push_back(std::move(field));
            if (quoted)
                throw ParseError(context + ":" + std::to_string(line) +
                                 ": unterminated quoted field");
            return true;
        }
        const char ch = static_cast<char>(c);
        if (quoted) {
            if (ch == '"') {
                if (in.peek() == '"') {
                    field.push_back('"');
                    in.get();
                } else {
                    quoted = false;
                }
            } else {
                if (ch == '\n') ++line;
                field.push_back(ch);
            }
        } else if (ch == '"' && field.empty()) {
            quoted = true;
        } else if (ch == delimiter) {
            fields.push_back(std::move(field));
            field.clear();
        } else if (ch == '\n') {
            ++line;
            break;
        } else if (ch == '\r' && in.peek() == '\n') {
            in.get();
            ++line;
            break;
        } else {
            field.push_back(ch);
        }
        c = in.get();
    }
    fields.push_back(std::move(field));
    return true;
}

double parse_number(const std::string& field, std::size_t line,
                    const std::string& context, const char* what) {
    const char* begin = field.data();
    const char* end = begin + field.size();
    while (begin < end && (*begin == ' ' || *begin == '\t')) ++begin;
    while (end > begin && (*(end - 1) == ' ' || *(end - 1) == '\t')) --end;
    double value{};
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end)
        throw ParseError(context + ":" + std::to_string(line) + ": cannot parse " +
                         std::string(what) + " '" + field + "' as a number");
    return value;
}

std::size_t resolve_column(const ColumnRef& ref, const std::vector<std::string>& header,
                           bool has_header, std::size_t width,
                           const std::string& context, const char* what) {
    if (const auto* index = std::get_if<std::size_t>(&ref)) {
        if (*index >= width)
            throw ParseError(context + ": " + what + " column index " +
                             std::to_string(*index) + " out of range (file has " +
                             std::to_string(width) + " columns)");
        return *index;
    }
    const auto& name = std::get<std::string>(ref);
    if (!has_header)
        throw ParseError(context + ": " + what + " column '" + name +
                         "' requested by name but the file has no header");
    const auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end())
        throw ParseError(context + ": " + what + " column '" + name +
                         "' not found in header");
    return static_cast<std::size_t>(it - header.begin());
}

bool needs_quotes(const std::string& field, char delimiter) {
    return field.find_first_of({delimiter, '"', '\n', '\r'}) != std::string::npos;
}

void write_field(std::ostream& out, const std::string& field, char delimiter) {
    if (!needs_quotes(field, delimiter)) {
        out << field;
        return;
    }
    out << '"';
    for (char ch : field) {
        if (ch == '"') out << '"';
        out << ch;
    }
    out << '"';
}

}  // namespace

TimeSeries read_timeseries(std::istream& in, const ColumnSpec& spec,
                           const std::string& context) {
    if (spec.delimiter == '"')
        throw DomainError("delimiter must not be the quote character");

    std::size_t line = 1;
    std::vector<std::string> fields;
    std::vector<std::string> header;

    if (spec.header) {
        if (!read_record(in, spec.delimiter, header, line, context))
            throw ParseError(context + ": empty file");
    }

    std::vector<double> values;
    std::vector<bool> missing;
    std::vector<double> times;

    while (true) {
        const std::size_t record_line = line;
        if (!read_record(in, spec.delimiter, fields, line, context)) break;
        if (fields.size() == 1 && fields[0].empty()) continue;  // blank line

        if (values.empty()) {
            // Column references resolve against the first data record's width.
            resolve_column(spec.value_column, header, spec.header, fields.size(),
                           context, "value");
            if (spec.time_column)
                resolve_column(*spec.time_column, header, spec.header, fields.size(),
                               context, "time");
        }
        const std::size_t value_at = resolve_column(
            spec.value_column, header, spec.header, fields.size(), context, "value");

        const std::string& raw = fields[value_at];
        const bool is_missing = std::find(spec.missing_tokens.begin(),
                                          spec.missing_tokens.end(),
                                          raw) != spec.missing_tokens.end();
        if (is_missing) {
            values.push_back(std::numeric_limits<double>::quiet_NaN());
            missing.push_back(true);
        } else {
            values.push_back(parse_number(raw, record_line, context, "value"));
            missing.push_back(false);
        }

        if (spec.time_column) {
            const std::size_t time_at = resolve_column(
                *spec.time_column, header, spec.header, fields.size(), context, "time");
            times.push_back(parse_number(fields[time_at], record_line, context, "time"));
        }
    }

    if (values.empty())
        throw ParseError(context + ": no data rows");

    TimeSeries series(std::move(values), std::move(missing));

    if (spec.time_column && times.size() >= 2) {
        const double step = times[1] - times[0];
        if (step == 0.0)
            throw DataError(context + ": non-uniform time grid at row 2 "
                            "(zero increment)");
        for (std::size_t i = 2; i < times.size(); ++i) {
            const double increment = times[i] - times[i - 1];
            const double scale = std::max(std::abs(step), std::abs(increment));
            if (std::abs(increment - step) > 1e-9 * scale)
                throw DataError(context + ": non-uniform time grid at row " +
                                std::to_string(i + 1) + " (increment " +
                                format_double(increment) + " vs " +
                                format_double(step) + ")");
        }
        if (step > 0.0) series.set_time_step(step);
    }
    return series;
}

TimeSeries read_timeseries(const std::filesystem::path& path, const ColumnSpec& spec) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open '" + path.string() + "' for reading");
    return read_timeseries(in, spec, path.string());
}

void Table::add(std::string name, std::vector<double> values) {
    std::vector<std::optional<double>> cells;
    cells.reserve(values.size());
    for (double v : values) cells.emplace_back(v);
    columns.push_back(Column{std::move(name), std::move(cells)});
}

void Table::add(std::string name, std::vector<std::optional<double>> cells) {
    columns.push_back(Column{std::move(name), std::move(cells)});
}

void Table::add(std::string name, const TimeSeries& series) {
    std::vector<std::optional<double>> cells;
    cells.reserve(series.size());
    for (std::size_t i = 0; i < series.size(); ++i) {
        if (series.missing(i))
            cells.emplace_back(std::nullopt);
        else
            cells.emplace_back(series[i]);
    }
    columns.push_back(Column{std::move(name), std::move(cells)});
}

std::size_t Table::rows() const noexcept {
    return columns.empty() ? 0 : columns.front().cells.size();
}

std::string format_double(double value) {
    char buffer[32];
    const int written = std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return std::string(buffer, static_cast<std::size_t>(written));
}

void write_table(std::ostream& out, const Table& table) {
    if (table.columns.empty())
        throw DomainError("table has no columns");
    const std::size_t rows = table.rows();
    for (const auto& column : table.columns) {
        if (column.cells.size() != rows)
            throw DomainError("table columns differ in length ('" + column.name +
                              "' has " + std::to_string(column.cells.size()) +
                              " rows, expected " + std::to_string(rows) + ")");
        for (const auto& cell : column.cells)
            if (cell && !std::isfinite(*cell))
                throw DomainError("column '" + column.name +
                                  "' contains a non-finite value");
    }

    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        if (c) out << ',';
        write_field(out, table.columns[c].name, ',');
    }
    out << '\n';
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < table.columns.size(); ++c) {
            if (c) out << ',';
            const auto& cell = table.columns[c].cells[r];
            out << (cell ? format_double(*cell) : "NA");
        }
        out << '\n';
    }
}

void write_table(const std::filesystem::path& path, const Table& table) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw IoError("cannot open '" + path.string() + "' for writing");
    write_table(out, table);
    out.flush();
    if (!out)
        throw IoError("write to '" + path.string() + "' failed");
}

}  // namespace ekz
