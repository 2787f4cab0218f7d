#pragma once

#include <cstdint>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "orgknow/errors.hpp"

namespace orgknow {

/// One parsed CSV record with its 1-based line number in the source.
struct CsvRow {
    std::size_t line_number = 0;
    std::vector<std::string> fields;
};

/// Reads every row of a CSV stream. Fields may be double-quoted (with ""
/// escaping commas and quotes); unquoted fields are trimmed of surrounding
/// whitespace. Empty lines and unterminated quotes raise MalformedRowError
/// carrying `source` and the line number; nothing is skipped silently.
std::vector<CsvRow> read_csv(std::istream& in, const std::string& source);

/// Checks that `row` matches the expected header exactly, raising
/// MalformedRowError naming the first missing or unexpected column.
void require_header(const CsvRow& row, const std::vector<std::string_view>& columns,
                    const std::string& source);

/// Checks the field count of a data row.
void require_fields(const CsvRow& row, std::size_t count, const std::string& source);

/// Quotes a field if it contains commas, quotes, or newlines.
std::string csv_escape(std::string_view field);

/// Shortest decimal form that parses back to exactly the same double.
std::string format_double(double value);

/// Fixed-point form with the given number of decimals (report tables use 3).
std::string format_fixed(double value, int decimals);

/// Signed integer field; raises MalformedRowError on junk.
std::int64_t parse_integer_field(const CsvRow& row, std::size_t index,
                                 const std::string& source, const char* column);

/// Node id field: positive integer.
std::uint32_t parse_id_field(const CsvRow& row, std::size_t index,
                             const std::string& source, const char* column);

/// Activity count field: non-negative integer. A negative value raises
/// NegativeCountError rather than MalformedRowError, since the row is
/// syntactically fine but violates the metrics invariant.
std::uint64_t parse_count_field(const CsvRow& row, std::size_t index,
                                const std::string& source, const char* column);

} // namespace orgknow
