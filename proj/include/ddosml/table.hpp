#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

namespace ddosml {

struct ColumnStats {
    std::string name;
    double mean = 0.0;
    double std_dev = 0.0;  // population (divide-by-n) convention
    double min = 0.0;
    double max = 0.0;
    std::size_t n_nonfinite = 0;
};

/// Columnar table of named 64-bit numeric columns plus string columns (the
/// class labels). Column order is global across both kinds and stable under
/// every transformation; appends go to the end. Instances are treated as
/// immutable once built: all transformations return new tables, so a table
/// can be shared read-only across threads.
class FeatureTable {
public:
    using NumericValues = std::vector<double>;
    using TextValues = std::vector<std::string>;

    struct Column {
        std::string name;
        std::variant<NumericValues, TextValues> values;

        bool is_numeric() const { return std::holds_alternative<NumericValues>(values); }
        std::size_t size() const {
            return is_numeric() ? std::get<NumericValues>(values).size()
                                : std::get<TextValues>(values).size();
        }
    };

    FeatureTable() = default;

    std::size_t n_rows() const { return n_rows_; }
    std::size_t n_columns() const { return columns_.size(); }
    bool empty() const { return columns_.empty(); }

    void add_numeric(std::string name, NumericValues values);
    void add_text(std::string name, TextValues values);

    bool has_column(const std::string& name) const { return index_.count(name) > 0; }
    bool is_numeric(const std::string& name) const;

    const NumericValues& numeric(const std::string& name) const;
    const TextValues& text(const std::string& name) const;
    const Column& column_at(std::size_t i) const { return columns_[i]; }

    /// All column names in table order.
    std::vector<std::string> column_names() const;
    /// Names of numeric columns only, in table order.
    std::vector<std::string> numeric_names() const;
    /// Names of string columns only, in table order.
    std::vector<std::string> text_names() const;

    /// Projection onto `names`, in the given order. Throws UnknownColumnError.
    FeatureTable select_columns(const std::vector<std::string>& names) const;

    /// Complement of select_columns: every column except `names`.
    FeatureTable drop_columns(const std::vector<std::string>& names) const;

    /// Keeps rows where mask is true, preserving relative order.
    /// Throws LengthMismatchError if the mask length differs from n_rows.
    FeatureTable filter_rows(const std::vector<bool>& mask) const;

    /// Mean/std/min/max over finite entries only; n_nonfinite counts NaN and
    /// +-infinity. Population standard deviation.
    ColumnStats stats(const std::string& name) const;

    bool operator==(const FeatureTable& other) const;

private:
    const Column& find(const std::string& name) const;

    std::vector<Column> columns_;
    std::unordered_map<std::string, std::size_t> index_;
    std::size_t n_rows_ = 0;
};

}  // namespace ddosml
