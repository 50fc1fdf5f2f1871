#pragma once

#include <cstdint>
#include <vector>

#include "ddosml/models.hpp"
#include "ddosml/models/tree.hpp"

namespace ddosml {

/// Single CART tree (Gini, depth/min-leaf caps). Probabilities are the leaf
/// class distribution.
class DecisionTreeModel : public Classifier {
public:
    DecisionTreeModel(const nlohmann::json& hyper, std::uint64_t seed);
    void fit(const Matrix& X, const std::vector<int>& y, int n_classes) override;
    Matrix predict_proba(const Matrix& X) const override;
    nlohmann::ordered_json params_json() const override;
    void load_params(const nlohmann::json& j) override;

private:
    TreeParams params_;
    ClassificationTree tree_;
    int n_classes_ = 0;
};

/// Bagged tree ensemble; covers both random_forest (bootstrap, sqrt-features,
/// sorted splits) and extra_trees (no bootstrap, random thresholds). Each
/// tree owns a derived seed, so fits are identical however trees are
/// scheduled. Probabilities are vote fractions, which keeps argmax equal to
/// the majority vote with smallest-code ties.
class ForestModel : public Classifier {
public:
    ForestModel(const nlohmann::json& hyper, std::uint64_t seed, bool extra_trees);
    void fit(const Matrix& X, const std::vector<int>& y, int n_classes) override;
    Matrix predict_proba(const Matrix& X) const override;
    nlohmann::ordered_json params_json() const override;
    void load_params(const nlohmann::json& j) override;

private:
    std::size_t n_trees_ = 100;
    bool bootstrap_ = true;
    bool random_thresholds_ = false;
    TreeParams tree_params_;
    std::uint64_t seed_ = 0;
    std::vector<ClassificationTree> trees_;
    int n_classes_ = 0;
};

/// Multiclass AdaBoost (SAMME) over depth-1 stumps:
/// alpha = ln((1 - eps) / eps) + ln(K - 1).
class AdaBoostModel : public Classifier {
public:
    AdaBoostModel(const nlohmann::json& hyper, std::uint64_t seed);
    void fit(const Matrix& X, const std::vector<int>& y, int n_classes) override;
    Matrix predict_proba(const Matrix& X) const override;
    nlohmann::ordered_json params_json() const override;
    void load_params(const nlohmann::json& j) override;

    const std::vector<double>& alphas() const { return alphas_; }

private:
    std::size_t rounds_ = 100;
    std::size_t weak_depth_ = 4;
    std::vector<ClassificationTree> stumps_;
    std::vector<double> alphas_;
    int n_classes_ = 0;
};

/// k nearest neighbors by Euclidean distance; stores the training set.
/// Probabilities are vote fractions among the k neighbors; distance ties
/// resolve toward the lower training index.
class KnnModel : public Classifier {
public:
    KnnModel(const nlohmann::json& hyper, std::uint64_t seed);
    void fit(const Matrix& X, const std::vector<int>& y, int n_classes) override;
    Matrix predict_proba(const Matrix& X) const override;
    nlohmann::ordered_json params_json() const override;
    void load_params(const nlohmann::json& j) override;

private:
    std::size_t k_ = 5;
    Matrix train_;
    std::vector<int> y_;
    int n_classes_ = 0;
};

/// Gaussian naive Bayes with a variance floor of 1e-9 times the largest
/// feature variance.
class GaussianNbModel : public Classifier {
public:
    GaussianNbModel(const nlohmann::json& hyper, std::uint64_t seed);
    void fit(const Matrix& X, const std::vector<int>& y, int n_classes) override;
    Matrix predict_proba(const Matrix& X) const override;
    nlohmann::ordered_json params_json() const override;
    void load_params(const nlohmann::json& j) override;

private:
    std::vector<std::vector<double>> mean_;  // [class][feature]
    std::vector<std::vector<double>> var_;
    std::vector<double> log_prior_;
    int n_classes_ = 0;
};

/// Multinomial softmax regression trained by full-batch gradient descent
/// with L2 regularization. Weights start at zero, so fits need no seed.
class LogisticModel : public Classifier {
public:
    LogisticModel(const nlohmann::json& hyper, std::uint64_t seed);
    void fit(const Matrix& X, const std::vector<int>& y, int n_classes) override;
    Matrix predict_proba(const Matrix& X) const override;
    nlohmann::ordered_json params_json() const override;
    void load_params(const nlohmann::json& j) override;

private:
    double learning_rate_ = 0.5;
    std::size_t iterations_ = 300;
    double l2_ = 1e-4;
    std::size_t n_features_ = 0;
    std::vector<double> weights_;  // [class][feature] row-major
    std::vector<double> bias_;
    int n_classes_ = 0;
};

/// One-hidden-layer network: ReLU hidden units, softmax output,
/// cross-entropy loss, mini-batch SGD with momentum for a fixed epoch count.
class NeuralNetModel : public Classifier {
public:
    NeuralNetModel(const nlohmann::json& hyper, std::uint64_t seed);
    void fit(const Matrix& X, const std::vector<int>& y, int n_classes) override;
    Matrix predict_proba(const Matrix& X) const override;
    nlohmann::ordered_json params_json() const override;
    void load_params(const nlohmann::json& j) override;

    /// Mean cross-entropy over the batch; fills `grad` (same layout as
    /// `params`: W1[h*p], b1[h], W2[K*h], b2[K]) when non-null. Exposed so
    /// the analytic gradient can be checked against finite differences.
    double loss_and_grad(const Matrix& X, const std::vector<int>& y,
                         const std::vector<double>& params, std::vector<double>* grad) const;

    std::size_t n_params() const;
    const std::vector<double>& params() const { return params_; }
    void set_dims(std::size_t n_features, int n_classes);

private:
    std::size_t hidden_ = 64;
    std::size_t epochs_ = 20;
    std::size_t batch_ = 128;
    double learning_rate_ = 0.05;
    double momentum_ = 0.9;
    std::uint64_t seed_ = 0;

    std::size_t n_features_ = 0;
    int n_classes_ = 0;
    std::vector<double> params_;
};

}  // namespace ddosml
