#include "ddosml/preprocess.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include <json.hpp>

#include "ddosml/errors.hpp"
#include "ddosml/rng.hpp"

namespace ddosml {

LabelEncoder::LabelEncoder(std::vector<std::string> classes) : classes_(std::move(classes)) {
    std::sort(classes_.begin(), classes_.end());
    classes_.erase(std::unique(classes_.begin(), classes_.end()), classes_.end());
    for (std::size_t i = 0; i < classes_.size(); ++i)
        code_of_[classes_[i]] = static_cast<int>(i);
}

LabelEncoder LabelEncoder::fit(const std::vector<std::string>& labels) {
    if (labels.empty()) throw EmptyColumnError("cannot fit encoder on an empty column");
    return LabelEncoder(labels);
}

int LabelEncoder::code_of(const std::string& label) const {
    auto it = code_of_.find(label);
    if (it == code_of_.end()) throw UnknownColumnError("label '" + label + "' not in encoder");
    return it->second;
}

const std::string& LabelEncoder::label_of(int code) const {
    if (code < 0 || static_cast<std::size_t>(code) >= classes_.size())
        throw CodeOutOfRangeError("code " + std::to_string(code) + " out of range");
    return classes_[static_cast<std::size_t>(code)];
}

std::vector<int> LabelEncoder::encode(const std::vector<std::string>& labels) const {
    std::vector<int> codes;
    codes.reserve(labels.size());
    for (const std::string& label : labels) codes.push_back(code_of(label));
    return codes;
}

std::vector<std::string> LabelEncoder::decode(const std::vector<int>& codes) const {
    std::vector<std::string> labels;
    labels.reserve(codes.size());
    for (int code : codes) labels.push_back(label_of(code));
    return labels;
}

std::string LabelEncoder::to_json() const {
    nlohmann::ordered_json j;
    j["format"] = "ddosml.label_encoder/1";
    j["classes"] = classes_;
    return j.dump(2);
}

LabelEncoder LabelEncoder::from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    if (j.value("format", "") != "ddosml.label_encoder/1")
        throw ValidationError("encoder", "unrecognized format tag");
    return LabelEncoder(j.at("classes").get<std::vector<std::string>>());
}

std::vector<std::string> find_nonfinite_columns(const FeatureTable& table) {
    std::vector<std::string> names;
    for (std::size_t c = 0; c < table.n_columns(); ++c) {
        const auto& col = table.column_at(c);
        if (!col.is_numeric()) continue;
        for (double v : std::get<FeatureTable::NumericValues>(col.values)) {
            if (!std::isfinite(v)) {
                names.push_back(col.name);
                break;
            }
        }
    }
    return names;
}

namespace {

double finite_median(const std::vector<double>& values) {
    std::vector<double> finite;
    finite.reserve(values.size());
    for (double v : values)
        if (std::isfinite(v)) finite.push_back(v);
    if (finite.empty()) return std::numeric_limits<double>::quiet_NaN();
    std::sort(finite.begin(), finite.end());
    const std::size_t n = finite.size();
    return n % 2 ? finite[n / 2] : 0.5 * (finite[n / 2 - 1] + finite[n / 2]);
}

}  // namespace

FeatureTable drop_and_clean(const FeatureTable& table, const std::vector<std::string>& drop,
                            CleanPolicy policy) {
    FeatureTable dropped = table.drop_columns(drop);

    if (policy == CleanPolicy::drop_rows) {
        std::vector<bool> keep(dropped.n_rows(), true);
        for (std::size_t c = 0; c < dropped.n_columns(); ++c) {
            const auto& col = dropped.column_at(c);
            if (!col.is_numeric()) continue;
            const auto& v = std::get<FeatureTable::NumericValues>(col.values);
            for (std::size_t r = 0; r < v.size(); ++r)
                if (!std::isfinite(v[r])) keep[r] = false;
        }
        return dropped.filter_rows(keep);
    }

    FeatureTable out;
    for (std::size_t c = 0; c < dropped.n_columns(); ++c) {
        const auto& col = dropped.column_at(c);
        if (!col.is_numeric()) {
            out.add_text(col.name, std::get<FeatureTable::TextValues>(col.values));
            continue;
        }
        FeatureTable::NumericValues v = std::get<FeatureTable::NumericValues>(col.values);
        const double median = finite_median(v);
        for (double& x : v)
            if (!std::isfinite(x)) x = median;
        out.add_numeric(col.name, std::move(v));
    }
    return out;
}

Scaler Scaler::fit(const FeatureTable& train, const std::vector<std::string>& columns) {
    Scaler scaler;
    scaler.params_.reserve(columns.size());
    for (const std::string& name : columns) {
        const ColumnStats s = train.stats(name);
        ColumnParams p;
        p.name = name;
        p.mean = s.mean;
        p.std_dev = s.std_dev > 0.0 ? s.std_dev : 1.0;
        scaler.params_.push_back(std::move(p));
    }
    return scaler;
}

FeatureTable Scaler::apply(const FeatureTable& table) const {
    FeatureTable out;
    for (std::size_t c = 0; c < table.n_columns(); ++c) {
        const auto& col = table.column_at(c);
        if (!col.is_numeric()) {
            out.add_text(col.name, std::get<FeatureTable::TextValues>(col.values));
            continue;
        }
        const ColumnParams* params = nullptr;
        for (const ColumnParams& p : params_)
            if (p.name == col.name) { params = &p; break; }
        FeatureTable::NumericValues v = std::get<FeatureTable::NumericValues>(col.values);
        if (params != nullptr)
            for (double& x : v) x = (x - params->mean) / params->std_dev;
        out.add_numeric(col.name, std::move(v));
    }
    return out;
}

std::string Scaler::to_json() const {
    nlohmann::ordered_json j;
    j["format"] = "ddosml.scaler/1";
    auto& cols = j["columns"] = nlohmann::ordered_json::array();
    for (const ColumnParams& p : params_)
        cols.push_back({{"name", p.name}, {"mean", p.mean}, {"std", p.std_dev}});
    return j.dump(2);
}

Scaler Scaler::from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    if (j.value("format", "") != "ddosml.scaler/1")
        throw ValidationError("scaler", "unrecognized format tag");
    Scaler scaler;
    for (const auto& c : j.at("columns")) {
        ColumnParams p;
        p.name = c.at("name").get<std::string>();
        p.mean = c.at("mean").get<double>();
        p.std_dev = c.at("std").get<double>();
        scaler.params_.push_back(std::move(p));
    }
    return scaler;
}

Split stratified_split(const FeatureTable& table, const SplitSpec& spec) {
    if (!(spec.test_fraction > 0.0 && spec.test_fraction < 1.0))
        throw ValidationError("split.test_fraction", "must be in (0,1)");
    if (!table.has_column(spec.stratify_on))
        throw UnknownColumnError(spec.stratify_on);

    // Group original row indices per class, preserving order.
    std::map<std::string, std::vector<std::size_t>> by_class;
    const auto& labels = table.text(spec.stratify_on);
    for (std::size_t i = 0; i < labels.size(); ++i) by_class[labels[i]].push_back(i);

    std::vector<bool> in_test(table.n_rows(), false);
    for (auto& [label, rows] : by_class) {
        const std::size_t count = rows.size();
        std::size_t n_test = static_cast<std::size_t>(
            std::llround(spec.test_fraction * static_cast<double>(count)));
        if (count >= 2) n_test = std::clamp<std::size_t>(n_test, 1, count - 1);
        else n_test = 0;  // singleton classes go to train

        Rng rng(derive_seed(derive_seed(spec.seed, "stratified-split"), label));
        std::vector<std::size_t> shuffled = rows;
        rng.shuffle(shuffled);
        for (std::size_t i = 0; i < n_test; ++i) in_test[shuffled[i]] = true;
    }

    Split split;
    std::vector<bool> in_train(table.n_rows());
    for (std::size_t i = 0; i < in_test.size(); ++i) {
        in_train[i] = !in_test[i];
        (in_test[i] ? split.test_rows : split.train_rows).push_back(i);
    }
    split.train = table.filter_rows(in_train);
    split.test = table.filter_rows(in_test);
    return split;
}

}  // namespace ddosml
