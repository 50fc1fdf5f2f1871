#pragma once

#include <cstddef>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "ddosml/table.hpp"

namespace ddosml {

// RFC-4180-style CSV: comma delimiter, first row header, optional quoting
// with doubled quotes, UTF-8 passthrough. Accepts CIC-DDoS2019 day-1 files
// unmodified: header names are whitespace-padded and data cells carry the
// pandas tokens "Infinity" / "inf" / "NaN" / "".

/// Parses one numeric cell. Empty or unparseable tokens become NaN;
/// "Infinity"/"inf" map to +inf and their negations to -inf, so non-finite
/// values survive ingestion for the cleaning stage.
double parse_numeric_token(std::string_view token);

/// Shortest decimal form that round-trips the exact 64-bit value, with the
/// same non-finite tokens the reader accepts.
std::string format_numeric(double value);

/// Loads a CSV file. The `label_column` (matched after header trimming) is
/// kept as a string column; every other column is numeric. At most `cap`
/// data rows are read, taken from the head of the file. An empty
/// label_column loads everything as numeric.
FeatureTable read_csv(const std::string& path,
                      const std::string& label_column = "Label",
                      std::size_t cap = std::numeric_limits<std::size_t>::max());

/// Writes the table in the dialect read_csv accepts; numeric cells use
/// round-trip formatting so write -> read is value-exact.
void write_csv(const FeatureTable& table, const std::string& path);

namespace detail {
/// Splits one logical CSV record (no embedded newlines) into raw fields.
std::vector<std::string> split_record(std::string_view line);
std::string trim(std::string_view s);
}  // namespace detail

}  // namespace ddosml
