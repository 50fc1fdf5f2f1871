#include "ddosml/models.hpp"

#include <cmath>
#include <fstream>

#include "ddosml/errors.hpp"
#include "ddosml/models/classifiers.hpp"

namespace ddosml {

const std::vector<ModelKind>& all_model_kinds() {
    static const std::vector<ModelKind> kinds = {
        ModelKind::decision_tree,  ModelKind::random_forest,
        ModelKind::adaboost,       ModelKind::knn,
        ModelKind::gaussian_nb,    ModelKind::logistic_regression,
        ModelKind::feedforward_net, ModelKind::extra_trees,
    };
    return kinds;
}

std::string to_string(ModelKind kind) {
    switch (kind) {
        case ModelKind::decision_tree: return "decision_tree";
        case ModelKind::random_forest: return "random_forest";
        case ModelKind::adaboost: return "adaboost";
        case ModelKind::knn: return "knn";
        case ModelKind::gaussian_nb: return "gaussian_nb";
        case ModelKind::logistic_regression: return "logistic_regression";
        case ModelKind::feedforward_net: return "feedforward_net";
        case ModelKind::extra_trees: return "extra_trees";
    }
    throw ValidationError("model.kind", "unknown kind");
}

ModelKind model_kind_from_string(const std::string& name) {
    for (ModelKind kind : all_model_kinds())
        if (to_string(kind) == name) return kind;
    throw ValidationError("model.kind", "unknown model kind '" + name + "'");
}

namespace {

std::unique_ptr<Classifier> make_classifier(const ModelSpec& spec) {
    switch (spec.kind) {
        case ModelKind::decision_tree:
            return std::make_unique<DecisionTreeModel>(spec.hyper, spec.seed);
        case ModelKind::random_forest:
            return std::make_unique<ForestModel>(spec.hyper, spec.seed, false);
        case ModelKind::extra_trees:
            return std::make_unique<ForestModel>(spec.hyper, spec.seed, true);
        case ModelKind::adaboost:
            return std::make_unique<AdaBoostModel>(spec.hyper, spec.seed);
        case ModelKind::knn:
            return std::make_unique<KnnModel>(spec.hyper, spec.seed);
        case ModelKind::gaussian_nb:
            return std::make_unique<GaussianNbModel>(spec.hyper, spec.seed);
        case ModelKind::logistic_regression:
            return std::make_unique<LogisticModel>(spec.hyper, spec.seed);
        case ModelKind::feedforward_net:
            return std::make_unique<NeuralNetModel>(spec.hyper, spec.seed);
    }
    throw ValidationError("model.kind", "unknown kind");
}

void merge_defaults(nlohmann::ordered_json& out, const nlohmann::ordered_json& overrides) {
    for (const auto& [key, value] : overrides.items()) out[key] = value;
}

}  // namespace

nlohmann::ordered_json effective_hyperparameters(const ModelSpec& spec) {
    nlohmann::ordered_json h;
    switch (spec.kind) {
        case ModelKind::decision_tree:
            h = {{"max_depth", 16}, {"min_leaf", 2}};
            break;
        case ModelKind::random_forest:
            h = {{"n_trees", 100}, {"max_depth", 16}, {"min_leaf", 2},
                 {"bootstrap", true}, {"max_features", "sqrt"}};
            break;
        case ModelKind::extra_trees:
            h = {{"n_trees", 100}, {"max_depth", 16}, {"min_leaf", 2},
                 {"bootstrap", false}, {"max_features", "sqrt"}};
            break;
        case ModelKind::adaboost:
            h = {{"rounds", 100}, {"weak_depth", 4}};
            break;
        case ModelKind::knn:
            h = {{"k", 5}};
            break;
        case ModelKind::gaussian_nb:
            h = nlohmann::ordered_json::object();
            break;
        case ModelKind::logistic_regression:
            h = {{"learning_rate", 0.5}, {"iterations", 300}, {"l2", 1e-4}};
            break;
        case ModelKind::feedforward_net:
            h = {{"hidden", 64}, {"epochs", 20}, {"batch", 128},
                 {"learning_rate", 0.05}, {"momentum", 0.9}};
            break;
    }
    merge_defaults(h, spec.hyper);
    return h;
}

std::vector<int> argmax_rows(const Matrix& proba) {
    std::vector<int> out(proba.rows);
    for (std::size_t r = 0; r < proba.rows; ++r) {
        std::size_t best = 0;
        for (std::size_t c = 1; c < proba.cols; ++c)
            if (proba.at(r, c) > proba.at(r, best)) best = c;
        out[r] = static_cast<int>(best);
    }
    return out;
}

TrainedModel TrainedModel::fit(const ModelSpec& spec, const Matrix& X, const std::vector<int>& y,
                               const std::vector<std::string>& feature_names) {
    if (X.cols != feature_names.size())
        throw FeatureMismatchError("fit: X has " + std::to_string(X.cols) +
                                   " columns, feature_names has " +
                                   std::to_string(feature_names.size()));
    if (X.rows != y.size()) throw LengthMismatchError("fit: X rows != y length");
    if (X.rows == 0) throw EmptyMatrixError("fit: no training rows");
    for (double v : X.data)
        if (!std::isfinite(v)) throw NonFiniteError("fit: non-finite feature value");

    // Codes must be contiguous from 0 so every model can index by class.
    int max_code = -1;
    for (int code : y) {
        if (code < 0) throw CodeOutOfRangeError("fit: negative class code");
        max_code = std::max(max_code, code);
    }
    const int n_classes = max_code + 1;
    if (n_classes < 2) throw SingleClassError("fit: need at least two classes");
    std::vector<bool> seen(static_cast<std::size_t>(n_classes), false);
    for (int code : y) seen[static_cast<std::size_t>(code)] = true;
    for (int c = 0; c < n_classes; ++c)
        if (!seen[static_cast<std::size_t>(c)])
            throw CodeOutOfRangeError("fit: class codes are not contiguous from 0 (missing " +
                                      std::to_string(c) + ")");

    TrainedModel model;
    model.spec_ = spec;
    model.feature_names_ = feature_names;
    model.classes_.resize(static_cast<std::size_t>(n_classes));
    for (int c = 0; c < n_classes; ++c) model.classes_[static_cast<std::size_t>(c)] = c;

    auto impl = make_classifier(spec);
    impl->fit(X, y, n_classes);
    model.impl_ = std::move(impl);
    return model;
}

Matrix TrainedModel::predict_proba(const Matrix& X) const {
    if (!impl_) throw UnfittedModelError("model is not fitted");
    if (X.cols != feature_names_.size())
        throw FeatureMismatchError("predict: X has " + std::to_string(X.cols) +
                                   " columns, model expects " +
                                   std::to_string(feature_names_.size()));
    Matrix proba = impl_->predict_proba(X);
    // Guard the row-sum contract against accumulated drift.
    for (std::size_t r = 0; r < proba.rows; ++r) {
        double total = 0.0;
        for (std::size_t c = 0; c < proba.cols; ++c) total += proba.at(r, c);
        if (total > 0.0)
            for (std::size_t c = 0; c < proba.cols; ++c) proba.at(r, c) /= total;
    }
    return proba;
}

Matrix TrainedModel::predict_proba(const FeatureTable& table) const {
    for (const std::string& name : feature_names_)
        if (!table.has_column(name))
            throw FeatureMismatchError("predict: table lacks feature '" + name + "'");
    return predict_proba(to_matrix(table, feature_names_));
}

std::vector<int> TrainedModel::predict(const Matrix& X) const {
    return argmax_rows(predict_proba(X));
}

std::vector<int> TrainedModel::predict(const FeatureTable& table) const {
    return argmax_rows(predict_proba(table));
}

nlohmann::ordered_json TrainedModel::to_json() const {
    if (!impl_) throw UnfittedModelError("model is not fitted");
    nlohmann::ordered_json j;
    j["format"] = "ddosml.model/1";
    j["kind"] = ddosml::to_string(spec_.kind);
    j["seed"] = spec_.seed;
    j["hyperparameters"] = effective_hyperparameters(spec_);
    j["classes"] = classes_;
    j["feature_names"] = feature_names_;
    j["parameters"] = impl_->params_json();
    return j;
}

TrainedModel TrainedModel::from_json(const nlohmann::json& j) {
    if (j.value("format", "") != "ddosml.model/1")
        throw ValidationError("model", "unrecognized format tag");
    TrainedModel model;
    model.spec_.kind = model_kind_from_string(j.at("kind").get<std::string>());
    model.spec_.seed = j.at("seed").get<std::uint64_t>();
    model.spec_.hyper = j.at("hyperparameters");
    model.classes_ = j.at("classes").get<std::vector<int>>();
    model.feature_names_ = j.at("feature_names").get<std::vector<std::string>>();

    auto impl = make_classifier(model.spec_);
    impl->load_params(j.at("parameters"));
    model.impl_ = std::move(impl);
    return model;
}

void TrainedModel::save(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out.is_open()) throw IoError("cannot open " + path + " for writing");
    out << to_json().dump(2) << '\n';
    if (!out) throw IoError("write failed: " + path);
}

TrainedModel TrainedModel::load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in.is_open()) throw IoError("cannot open " + path);
    nlohmann::json j;
    in >> j;
    return from_json(j);
}

}  // namespace ddosml
