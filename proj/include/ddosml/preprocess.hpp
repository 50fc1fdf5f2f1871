#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ddosml/table.hpp"

namespace ddosml {

/// Bijection between class strings and integer codes. Codes are 0..k-1 in
/// lexicographic class order, so the assignment is reproducible from the
/// class set alone.
class LabelEncoder {
public:
    LabelEncoder() = default;
    explicit LabelEncoder(std::vector<std::string> classes);

    static LabelEncoder fit(const std::vector<std::string>& labels);

    int code_of(const std::string& label) const;
    const std::string& label_of(int code) const;
    std::size_t n_classes() const { return classes_.size(); }
    const std::vector<std::string>& classes() const { return classes_; }

    std::vector<int> encode(const std::vector<std::string>& labels) const;
    std::vector<std::string> decode(const std::vector<int>& codes) const;

    std::string to_json() const;
    static LabelEncoder from_json(const std::string& text);

private:
    std::vector<std::string> classes_;
    std::map<std::string, int> code_of_;
};

/// Names of numeric columns containing any NaN or +-inf, in table order.
std::vector<std::string> find_nonfinite_columns(const FeatureTable& table);

enum class CleanPolicy { drop_rows, median_impute };

/// Removes the listed columns, then handles non-finite entries: drop_rows
/// removes any row carrying a non-finite value in a numeric column,
/// median_impute replaces them with the finite column median.
FeatureTable drop_and_clean(const FeatureTable& table, const std::vector<std::string>& drop,
                            CleanPolicy policy);

/// Per-column z-score transform fitted on training rows only. Population
/// standard deviation; a zero std is replaced by 1 before dividing.
class Scaler {
public:
    struct ColumnParams {
        std::string name;
        double mean = 0.0;
        double std_dev = 1.0;
    };

    static Scaler fit(const FeatureTable& train, const std::vector<std::string>& columns);
    FeatureTable apply(const FeatureTable& table) const;

    const std::vector<ColumnParams>& params() const { return params_; }

    std::string to_json() const;
    static Scaler from_json(const std::string& text);

private:
    std::vector<ColumnParams> params_;
};

struct SplitSpec {
    double test_fraction = 0.2;
    std::string stratify_on = "Label";
    std::uint64_t seed = 0;
};

struct Split {
    FeatureTable train;
    FeatureTable test;
    std::vector<std::size_t> train_rows;  // original row indices
    std::vector<std::size_t> test_rows;
};

/// Seeded stratified split. Per-class test counts are round(count * fraction),
/// clamped so classes with >= 2 rows land in both partitions; singleton
/// classes go to train. Partitions are disjoint and exhaustive and preserve
/// original row order within each side.
Split stratified_split(const FeatureTable& table, const SplitSpec& spec);

}  // namespace ddosml
