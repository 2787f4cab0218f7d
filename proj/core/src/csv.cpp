#include "orgknow/csv.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <limits>

namespace orgknow {

namespace {

std::string location(const std::string& source, std::size_t line) {
    return source + ":" + std::to_string(line);
}

std::string_view trim(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
        text.remove_prefix(1);
    }
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
        text.remove_suffix(1);
    }
    return text;
}

std::vector<std::string> split_line(const std::string& line, std::size_t line_number,
                                    const std::string& source) {
    std::vector<std::string> fields;
    std::size_t i = 0;
    while (true) {
        std::string field;
        if (i < line.size() && line[i] == '"') {
            ++i;
            bool closed = false;
            while (i < line.size()) {
                if (line[i] == '"') {
                    if (i + 1 < line.size() && line[i + 1] == '"') {
                        field.push_back('"');
                        i += 2;
                        continue;
                    }
                    ++i;
                    closed = true;
                    break;
                }
                field.push_back(line[i]);
                ++i;
            }
            if (!closed) {
                throw MalformedRowError(location(source, line_number) +
                                        ": unterminated quoted field");
            }
            if (i < line.size() && line[i] != ',') {
                throw MalformedRowError(location(source, line_number) +
                                        ": unexpected characters after quoted field");
            }
        } else {
            std::size_t start = i;
            while (i < line.size() && line[i] != ',') {
                ++i;
            }
            field = std::string(trim(std::string_view(line).substr(start, i - start)));
        }
        fields.push_back(std::move(field));
        if (i >= line.size()) {
            break;
        }
        ++i; // skip the comma; a trailing comma yields a final empty field
    }
    return fields;
}

} // namespace

std::vector<CsvRow> read_csv(std::istream& in, const std::string& source) {
    std::vector<CsvRow> rows;
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (trim(line).empty()) {
            throw MalformedRowError(location(source, line_number) + ": empty row");
        }
        rows.push_back({line_number, split_line(line, line_number, source)});
    }
    if (in.bad()) {
        throw InputError(source + ": read failure");
    }
    return rows;
}

void require_header(const CsvRow& row, const std::vector<std::string_view>& columns,
                    const std::string& source) {
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (i >= row.fields.size() || row.fields[i] != columns[i]) {
            throw MalformedRowError(location(source, row.line_number) +
                                    ": header is missing column '" + std::string(columns[i]) +
                                    "'");
        }
    }
    if (row.fields.size() > columns.size()) {
        throw MalformedRowError(location(source, row.line_number) + ": unexpected column '" +
                                row.fields[columns.size()] + "' in header");
    }
}

void require_fields(const CsvRow& row, std::size_t count, const std::string& source) {
    if (row.fields.size() != count) {
        throw MalformedRowError(location(source, row.line_number) + ": expected " +
                                std::to_string(count) + " fields, got " +
                                std::to_string(row.fields.size()));
    }
}

std::string csv_escape(std::string_view field) {
    if (field.find_first_of(",\"\n\r") == std::string_view::npos) {
        return std::string(field);
    }
    std::string out;
    out.reserve(field.size() + 2);
    out.push_back('"');
    for (char c : field) {
        if (c == '"') {
            out.push_back('"');
        }
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

std::string format_double(double value) {
    char buffer[64];
    auto result = std::to_chars(buffer, buffer + sizeof buffer, value);
    return std::string(buffer, result.ptr);
}

std::string format_fixed(double value, int decimals) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.*f", decimals, value);
    return buffer;
}

namespace {

std::int64_t parse_integer(const CsvRow& row, std::size_t index, const std::string& source,
                           const char* column) {
    if (index >= row.fields.size()) {
        throw MalformedRowError(location(source, row.line_number) + ": missing field '" +
                                column + "'");
    }
    const std::string& field = row.fields[index];
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc() || ptr != field.data() + field.size()) {
        throw MalformedRowError(location(source, row.line_number) + ": field '" + column +
                                "' is not an integer: '" + field + "'");
    }
    return value;
}

} // namespace

std::int64_t parse_integer_field(const CsvRow& row, std::size_t index,
                                 const std::string& source, const char* column) {
    return parse_integer(row, index, source, column);
}

std::uint32_t parse_id_field(const CsvRow& row, std::size_t index, const std::string& source,
                             const char* column) {
    std::int64_t value = parse_integer(row, index, source, column);
    if (value < 1 || value > std::numeric_limits<std::uint32_t>::max()) {
        throw MalformedRowError(location(source, row.line_number) + ": field '" + column +
                                "' must be a positive id, got " + std::to_string(value));
    }
    return static_cast<std::uint32_t>(value);
}

std::uint64_t parse_count_field(const CsvRow& row, std::size_t index,
                                const std::string& source, const char* column) {
    std::int64_t value = parse_integer(row, index, source, column);
    if (value < 0) {
        throw NegativeCountError(location(source, row.line_number) + ": field '" + column +
                                 "' must be >= 0, got " + std::to_string(value));
    }
    return static_cast<std::uint64_t>(value);
}

} // namespace orgknow
