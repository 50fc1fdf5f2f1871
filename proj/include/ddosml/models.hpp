#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "ddosml/matrix.hpp"
#include "ddosml/table.hpp"

namespace ddosml {

enum class ModelKind {
    decision_tree,
    random_forest,
    adaboost,
    knn,
    gaussian_nb,
    logistic_regression,
    feedforward_net,
    extra_trees,
};

const std::vector<ModelKind>& all_model_kinds();
std::string to_string(ModelKind kind);
ModelKind model_kind_from_string(const std::string& name);

/// Kind + hyperparameter overrides + seed. Unset hyperparameters take the
/// documented defaults; every effective value lands in the run manifest.
struct ModelSpec {
    ModelKind kind = ModelKind::decision_tree;
    nlohmann::ordered_json hyper = nlohmann::ordered_json::object();
    std::uint64_t seed = 0;
};

/// Internal classifier interface: everything trains on a row-major matrix
/// with integer codes 0..K-1 and reports class probabilities.
class Classifier {
public:
    virtual ~Classifier() = default;
    virtual void fit(const Matrix& X, const std::vector<int>& y, int n_classes) = 0;
    virtual Matrix predict_proba(const Matrix& X) const = 0;
    virtual nlohmann::ordered_json params_json() const = 0;
    virtual void load_params(const nlohmann::json& j) = 0;
};

/// Argmax per row with ties broken toward the smallest class code; the one
/// decision rule every model shares, so argmax(predict_proba) == predict by
/// construction.
std::vector<int> argmax_rows(const Matrix& proba);

/// A fitted model bound to the feature projection it was trained on.
class TrainedModel {
public:
    static TrainedModel fit(const ModelSpec& spec, const Matrix& X, const std::vector<int>& y,
                            const std::vector<std::string>& feature_names);

    std::vector<int> predict(const Matrix& X) const;
    std::vector<int> predict(const FeatureTable& table) const;
    Matrix predict_proba(const Matrix& X) const;
    Matrix predict_proba(const FeatureTable& table) const;

    const ModelSpec& spec() const { return spec_; }
    const std::vector<std::string>& feature_names() const { return feature_names_; }
    const std::vector<int>& classes() const { return classes_; }

    nlohmann::ordered_json to_json() const;
    static TrainedModel from_json(const nlohmann::json& j);

    void save(const std::string& path) const;
    static TrainedModel load(const std::string& path);

private:
    TrainedModel() = default;

    ModelSpec spec_;
    std::vector<std::string> feature_names_;
    std::vector<int> classes_;
    std::shared_ptr<const Classifier> impl_;
};

/// The effective hyperparameters for a spec: documented defaults overlaid
/// with the spec's overrides (for the manifest).
nlohmann::ordered_json effective_hyperparameters(const ModelSpec& spec);

}  // namespace ddosml
