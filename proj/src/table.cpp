#include "ddosml/table.hpp"

#include <cmath>
#include <limits>

#include "ddosml/errors.hpp"

namespace ddosml {

void FeatureTable::add_numeric(std::string name, NumericValues values) {
    if (index_.count(name)) throw DuplicateColumnError(name);
    if (!columns_.empty() && values.size() != n_rows_)
        throw LengthMismatchError("column '" + name + "' has " + std::to_string(values.size()) +
                                  " rows, table has " + std::to_string(n_rows_));
    if (columns_.empty()) n_rows_ = values.size();
    index_.emplace(name, columns_.size());
    columns_.push_back(Column{std::move(name), std::move(values)});
}

void FeatureTable::add_text(std::string name, TextValues values) {
    if (index_.count(name)) throw DuplicateColumnError(name);
    if (!columns_.empty() && values.size() != n_rows_)
        throw LengthMismatchError("column '" + name + "' has " + std::to_string(values.size()) +
                                  " rows, table has " + std::to_string(n_rows_));
    if (columns_.empty()) n_rows_ = values.size();
    index_.emplace(name, columns_.size());
    columns_.push_back(Column{std::move(name), std::move(values)});
}

const FeatureTable::Column& FeatureTable::find(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw UnknownColumnError(name);
    return columns_[it->second];
}

bool FeatureTable::is_numeric(const std::string& name) const {
    return find(name).is_numeric();
}

const FeatureTable::NumericValues& FeatureTable::numeric(const std::string& name) const {
    const Column& col = find(name);
    if (!col.is_numeric()) throw UnknownColumnError(name + " (not numeric)");
    return std::get<NumericValues>(col.values);
}

const FeatureTable::TextValues& FeatureTable::text(const std::string& name) const {
    const Column& col = find(name);
    if (col.is_numeric()) throw UnknownColumnError(name + " (not a string column)");
    return std::get<TextValues>(col.values);
}

std::vector<std::string> FeatureTable::column_names() const {
    std::vector<std::string> names;
    names.reserve(columns_.size());
    for (const Column& c : columns_) names.push_back(c.name);
    return names;
}

std::vector<std::string> FeatureTable::numeric_names() const {
    std::vector<std::string> names;
    for (const Column& c : columns_)
        if (c.is_numeric()) names.push_back(c.name);
    return names;
}

std::vector<std::string> FeatureTable::text_names() const {
    std::vector<std::string> names;
    for (const Column& c : columns_)
        if (!c.is_numeric()) names.push_back(c.name);
    return names;
}

FeatureTable FeatureTable::select_columns(const std::vector<std::string>& names) const {
    FeatureTable out;
    for (const std::string& name : names) {
        const Column& col = find(name);
        if (col.is_numeric())
            out.add_numeric(col.name, std::get<NumericValues>(col.values));
        else
            out.add_text(col.name, std::get<TextValues>(col.values));
    }
    // A projection of zero columns still describes the same rows.
    if (names.empty()) out.n_rows_ = n_rows_;
    return out;
}

FeatureTable FeatureTable::drop_columns(const std::vector<std::string>& names) const {
    for (const std::string& name : names) find(name);  // validate up front
    std::vector<std::string> keep;
    for (const Column& c : columns_) {
        bool dropped = false;
        for (const std::string& name : names)
            if (c.name == name) { dropped = true; break; }
        if (!dropped) keep.push_back(c.name);
    }
    FeatureTable out = select_columns(keep);
    out.n_rows_ = keep.empty() ? n_rows_ : out.n_rows_;
    return out;
}

FeatureTable FeatureTable::filter_rows(const std::vector<bool>& mask) const {
    if (mask.size() != n_rows_)
        throw LengthMismatchError("mask length " + std::to_string(mask.size()) +
                                  " != n_rows " + std::to_string(n_rows_));
    std::size_t kept = 0;
    for (bool b : mask) kept += b ? 1 : 0;

    FeatureTable out;
    for (const Column& c : columns_) {
        if (c.is_numeric()) {
            const auto& src = std::get<NumericValues>(c.values);
            NumericValues dst;
            dst.reserve(kept);
            for (std::size_t i = 0; i < src.size(); ++i)
                if (mask[i]) dst.push_back(src[i]);
            out.add_numeric(c.name, std::move(dst));
        } else {
            const auto& src = std::get<TextValues>(c.values);
            TextValues dst;
            dst.reserve(kept);
            for (std::size_t i = 0; i < src.size(); ++i)
                if (mask[i]) dst.push_back(src[i]);
            out.add_text(c.name, std::move(dst));
        }
    }
    if (columns_.empty()) out.n_rows_ = 0;
    return out;
}

ColumnStats FeatureTable::stats(const std::string& name) const {
    const NumericValues& v = numeric(name);
    ColumnStats s;
    s.name = name;
    s.min = std::numeric_limits<double>::infinity();
    s.max = -std::numeric_limits<double>::infinity();

    std::size_t n_finite = 0;
    double sum = 0.0;
    for (double x : v) {
        if (!std::isfinite(x)) {
            ++s.n_nonfinite;
            continue;
        }
        ++n_finite;
        sum += x;
        if (x < s.min) s.min = x;
        if (x > s.max) s.max = x;
    }
    if (n_finite == 0) {
        s.mean = std::numeric_limits<double>::quiet_NaN();
        s.std_dev = std::numeric_limits<double>::quiet_NaN();
        s.min = std::numeric_limits<double>::quiet_NaN();
        s.max = std::numeric_limits<double>::quiet_NaN();
        return s;
    }
    s.mean = sum / static_cast<double>(n_finite);
    double ss = 0.0;
    for (double x : v) {
        if (!std::isfinite(x)) continue;
        const double d = x - s.mean;
        ss += d * d;
    }
    s.std_dev = std::sqrt(ss / static_cast<double>(n_finite));
    return s;
}

bool FeatureTable::operator==(const FeatureTable& other) const {
    if (n_rows_ != other.n_rows_ || columns_.size() != other.columns_.size()) return false;
    for (std::size_t i = 0; i < columns_.size(); ++i) {
        const Column& a = columns_[i];
        const Column& b = other.columns_[i];
        if (a.name != b.name || a.is_numeric() != b.is_numeric()) return false;
        if (a.is_numeric()) {
            const auto& va = std::get<NumericValues>(a.values);
            const auto& vb = std::get<NumericValues>(b.values);
            for (std::size_t r = 0; r < va.size(); ++r) {
                const bool both_nan = std::isnan(va[r]) && std::isnan(vb[r]);
                if (!both_nan && va[r] != vb[r]) return false;
            }
        } else if (std::get<TextValues>(a.values) != std::get<TextValues>(b.values)) {
            return false;
        }
    }
    return true;
}

}  // namespace ddosml
