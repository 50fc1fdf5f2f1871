#include "ddosml/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "ddosml/errors.hpp"

namespace ddosml {

namespace detail {

std::string trim(std::string_view s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r')) ++b;
    while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r')) --e;
    return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_record(std::string_view line) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur.push_back('"');
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur.push_back(c);
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(cur));
            cur.clear();
        } else if (c != '\r') {
            cur.push_back(c);
        }
    }
    fields.push_back(std::move(cur));
    return fields;
}

}  // namespace detail

double parse_numeric_token(std::string_view token) {
    const std::string t = detail::trim(token);
    if (t.empty()) return std::numeric_limits<double>::quiet_NaN();
    if (t == "Infinity" || t == "inf" || t == "Inf" || t == "+inf" || t == "INF")
        return std::numeric_limits<double>::infinity();
    if (t == "-Infinity" || t == "-inf" || t == "-Inf" || t == "-INF")
        return -std::numeric_limits<double>::infinity();
    if (t == "NaN" || t == "nan" || t == "NAN")
        return std::numeric_limits<double>::quiet_NaN();
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (ec != std::errc() || ptr != t.data() + t.size())
        return std::numeric_limits<double>::quiet_NaN();
    return value;
}

std::string format_numeric(double value) {
    if (std::isnan(value)) return "NaN";
    if (std::isinf(value)) return value > 0 ? "Infinity" : "-Infinity";
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    (void)ec;
    return std::string(buf, ptr);
}

namespace {

// Cuts one logical record out of the buffer, honoring quoted fields (which
// may embed commas, doubled quotes and newlines). Returns false at the end.
bool next_record(std::string_view buffer, std::size_t& pos, std::string_view& record) {
    if (pos >= buffer.size()) return false;
    const std::size_t start = pos;
    bool quoted = false;
    while (pos < buffer.size()) {
        const char c = buffer[pos];
        if (c == '"') quoted = !quoted;
        if (c == '\n' && !quoted) {
            record = buffer.substr(start, pos - start);
            ++pos;
            return true;
        }
        ++pos;
    }
    record = buffer.substr(start);
    return true;
}

bool blank_record(std::string_view record) {
    for (char c : record)
        if (c != '\r' && c != ' ' && c != '\t') return false;
    return true;
}

}  // namespace

FeatureTable read_csv(const std::string& path, const std::string& label_column, std::size_t cap) {
    std::ifstream in(path, std::ios::binary);
    if (!in.is_open()) throw IoError("cannot open " + path);
    std::string buffer;
    in.seekg(0, std::ios::end);
    buffer.resize(static_cast<std::size_t>(in.tellg()));
    in.seekg(0);
    in.read(buffer.data(), static_cast<std::streamsize>(buffer.size()));

    std::size_t pos = 0;
    std::string_view record;
    if (!next_record(buffer, pos, record)) throw MissingHeaderError("empty file: " + path);

    std::vector<std::string> header;
    for (const std::string& raw : detail::split_record(record))
        header.push_back(detail::trim(raw));
    if (header.empty() || (header.size() == 1 && header[0].empty()))
        throw MissingHeaderError("no header fields in " + path);

    std::size_t label_idx = header.size();
    if (!label_column.empty()) {
        for (std::size_t i = 0; i < header.size(); ++i)
            if (header[i] == label_column) { label_idx = i; break; }
        if (label_idx == header.size()) throw MissingLabelColumnError(label_column);
    }

    std::vector<std::vector<double>> numeric_cols(header.size());
    std::vector<std::string> labels;

    std::size_t n_read = 0;
    while (n_read < cap && next_record(buffer, pos, record)) {
        if (blank_record(record)) continue;
        std::vector<std::string> fields = detail::split_record(record);
        fields.resize(header.size());  // pad short rows, drop spill
        for (std::size_t i = 0; i < header.size(); ++i) {
            if (i == label_idx)
                labels.push_back(detail::trim(fields[i]));
            else
                numeric_cols[i].push_back(parse_numeric_token(fields[i]));
        }
        ++n_read;
    }

    FeatureTable table;
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (i == label_idx)
            table.add_text(header[i], std::move(labels));
        else
            table.add_numeric(header[i], std::move(numeric_cols[i]));
    }
    return table;
}

namespace {

bool needs_quoting(const std::string& s) {
    return s.find_first_of(",\"\n\r") != std::string::npos;
}

void write_field(std::ostream& out, const std::string& s) {
    if (!needs_quoting(s)) {
        out << s;
        return;
    }
    out << '"';
    for (char c : s) {
        if (c == '"') out << "\"\"";
        else out << c;
    }
    out << '"';
}

}  // namespace

void write_csv(const FeatureTable& table, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out.is_open()) throw IoError("cannot open " + path + " for writing");

    const std::size_t n_cols = table.n_columns();
    for (std::size_t c = 0; c < n_cols; ++c) {
        if (c) out << ',';
        write_field(out, table.column_at(c).name);
    }
    out << '\n';

    for (std::size_t r = 0; r < table.n_rows(); ++r) {
        for (std::size_t c = 0; c < n_cols; ++c) {
            if (c) out << ',';
            const auto& col = table.column_at(c);
            if (col.is_numeric())
                out << format_numeric(std::get<FeatureTable::NumericValues>(col.values)[r]);
            else
                write_field(out, std::get<FeatureTable::TextValues>(col.values)[r]);
        }
        out << '\n';
    }
    if (!out) throw IoError("write failed: " + path);
}

}  // namespace ddosml
