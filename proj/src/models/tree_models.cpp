#include <cmath>

#include "ddosml/errors.hpp"
#include "ddosml/models/classifiers.hpp"
#include "ddosml/parallel.hpp"
#include "hyper.hpp"

namespace ddosml {

namespace {

std::size_t sqrt_features(std::size_t p) {
    const auto m = static_cast<std::size_t>(std::sqrt(static_cast<double>(p)));
    return m > 0 ? m : 1;
}

}  // namespace

// ---------------------------------------------------------------------------
// decision_tree

DecisionTreeModel::DecisionTreeModel(const nlohmann::json& hyper, std::uint64_t /*seed*/) {
    params_.max_depth = hyper::count_at_least(hyper, "max_depth", 16, 1);
    params_.min_leaf = hyper::count_at_least(hyper, "min_leaf", 2, 1);
}

void DecisionTreeModel::fit(const Matrix& X, const std::vector<int>& y, int n_classes) {
    n_classes_ = n_classes;
    tree_.fit(X, y, n_classes, params_);
}

Matrix DecisionTreeModel::predict_proba(const Matrix& X) const {
    Matrix proba(X.rows, static_cast<std::size_t>(n_classes_));
    for (std::size_t r = 0; r < X.rows; ++r) {
        const std::vector<double>& dist = tree_.leaf_dist(X.row(r));
        for (std::size_t c = 0; c < dist.size(); ++c) proba.at(r, c) = dist[c];
    }
    return proba;
}

nlohmann::ordered_json DecisionTreeModel::params_json() const {
    nlohmann::ordered_json j;
    j["n_classes"] = n_classes_;
    j["tree"] = tree_.to_json();
    return j;
}

void DecisionTreeModel::load_params(const nlohmann::json& j) {
    n_classes_ = j.at("n_classes").get<int>();
    tree_.load(j.at("tree"));
}

// ---------------------------------------------------------------------------
// random_forest / extra_trees

ForestModel::ForestModel(const nlohmann::json& hyper, std::uint64_t seed, bool extra_trees)
    : seed_(seed) {
    n_trees_ = hyper::count_at_least(hyper, "n_trees", 100, 1);
    bootstrap_ = hyper::boolean(hyper, "bootstrap", !extra_trees);
    random_thresholds_ = extra_trees;
    tree_params_.max_depth = hyper::count_at_least(hyper, "max_depth", 16, 1);
    tree_params_.min_leaf = hyper::count_at_least(hyper, "min_leaf", 2, 1);
    tree_params_.random_thresholds = random_thresholds_;
    tree_params_.max_features = SIZE_MAX;  // resolved to sqrt(p) at fit time
    if (hyper.contains("max_features")) {
        const auto& mf = hyper.at("max_features");
        if (mf.is_string()) {
            const auto s = mf.get<std::string>();
            if (s == "all")
                tree_params_.max_features = 0;
            else if (s != "sqrt")
                throw ValidationError("hyperparameters.max_features",
                                      "expected a count, \"sqrt\" or \"all\"");
        } else {
            tree_params_.max_features = mf.get<std::size_t>();
        }
    }
}

void ForestModel::fit(const Matrix& X, const std::vector<int>& y, int n_classes) {
    n_classes_ = n_classes;
    TreeParams params = tree_params_;
    if (params.max_features == SIZE_MAX) params.max_features = sqrt_features(X.cols);

    trees_.assign(n_trees_, ClassificationTree());
    parallel_for(n_trees_, [&](std::size_t b) {
        Rng rng(derive_seed(seed_, static_cast<std::uint64_t>(b)));
        if (bootstrap_) {
            std::vector<std::size_t> pick(X.rows);
            for (std::size_t i = 0; i < X.rows; ++i)
                pick[i] = static_cast<std::size_t>(rng.next_below(X.rows));
            Matrix Xb(X.rows, X.cols);
            std::vector<int> yb(X.rows);
            for (std::size_t i = 0; i < X.rows; ++i) {
                for (std::size_t c = 0; c < X.cols; ++c) Xb.at(i, c) = X.at(pick[i], c);
                yb[i] = y[pick[i]];
            }
            trees_[b].fit(Xb, yb, n_classes, params, nullptr, &rng);
        } else {
            trees_[b].fit(X, y, n_classes, params, nullptr, &rng);
        }
    });
}

Matrix ForestModel::predict_proba(const Matrix& X) const {
    if (trees_.empty()) throw UnfittedModelError("forest is not fitted");
    Matrix proba(X.rows, static_cast<std::size_t>(n_classes_));
    parallel_for(X.rows, [&](std::size_t r) {
        for (const ClassificationTree& tree : trees_)
            proba.at(r, static_cast<std::size_t>(tree.predict_row(X.row(r)))) += 1.0;
        for (std::size_t c = 0; c < proba.cols; ++c)
            proba.at(r, c) /= static_cast<double>(trees_.size());
    });
    return proba;
}

nlohmann::ordered_json ForestModel::params_json() const {
    nlohmann::ordered_json j;
    j["n_classes"] = n_classes_;
    auto& trees = j["trees"] = nlohmann::ordered_json::array();
    for (const ClassificationTree& t : trees_) trees.push_back(t.to_json());
    return j;
}

void ForestModel::load_params(const nlohmann::json& j) {
    n_classes_ = j.at("n_classes").get<int>();
    trees_.clear();
    for (const auto& tj : j.at("trees")) {
        ClassificationTree t;
        t.load(tj);
        trees_.push_back(std::move(t));
    }
}

// ---------------------------------------------------------------------------
// adaboost (SAMME)

AdaBoostModel::AdaBoostModel(const nlohmann::json& hyper, std::uint64_t /*seed*/) {
    rounds_ = hyper::count_at_least(hyper, "rounds", 100, 1);
    // Depth-1 stumps only emit two classes per round, which starves most of
    // a 13-class vote; the default weak learner carries 16 leaves instead.
    weak_depth_ = hyper::count_at_least(hyper, "weak_depth", 4, 1);
}

void AdaBoostModel::fit(const Matrix& X, const std::vector<int>& y, int n_classes) {
    n_classes_ = n_classes;
    stumps_.clear();
    alphas_.clear();

    const std::size_t n = X.rows;
    std::vector<double> weight(n, 1.0 / static_cast<double>(n));
    const TreeParams stump_params{weak_depth_, 1, 0, false};
    const double k_term = std::log(static_cast<double>(n_classes - 1));

    for (std::size_t m = 0; m < rounds_; ++m) {
        ClassificationTree stump;
        stump.fit(X, y, n_classes, stump_params, &weight);

        double err = 0.0;
        std::vector<int> pred(n);
        for (std::size_t i = 0; i < n; ++i) {
            pred[i] = stump.predict_row(X.row(i));
            if (pred[i] != y[i]) err += weight[i];
        }

        // SAMME requires the weak learner to beat random guessing.
        if (err >= 1.0 - 1.0 / static_cast<double>(n_classes)) {
            if (stumps_.empty()) {
                stumps_.push_back(std::move(stump));
                alphas_.push_back(0.0);
            }
            break;
        }

        err = std::max(err, 1e-12);
        const double alpha = std::log((1.0 - err) / err) + k_term;
        stumps_.push_back(std::move(stump));
        alphas_.push_back(alpha);
        if (err <= 1e-12) break;  // the stump is already perfect

        double total = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            if (pred[i] != y[i]) weight[i] *= std::exp(alpha);
            total += weight[i];
        }
        for (double& w : weight) w /= total;
    }
}

Matrix AdaBoostModel::predict_proba(const Matrix& X) const {
    if (stumps_.empty()) throw UnfittedModelError("adaboost is not fitted");
    Matrix proba(X.rows, static_cast<std::size_t>(n_classes_));
    parallel_for(X.rows, [&](std::size_t r) {
        for (std::size_t m = 0; m < stumps_.size(); ++m)
            proba.at(r, static_cast<std::size_t>(stumps_[m].predict_row(X.row(r)))) +=
                alphas_[m];
        double total = 0.0;
        for (std::size_t c = 0; c < proba.cols; ++c) total += proba.at(r, c);
        if (total > 0.0) {
            for (std::size_t c = 0; c < proba.cols; ++c) proba.at(r, c) /= total;
        } else {
            for (std::size_t c = 0; c < proba.cols; ++c)
                proba.at(r, c) = 1.0 / static_cast<double>(n_classes_);
        }
    });
    return proba;
}

nlohmann::ordered_json AdaBoostModel::params_json() const {
    nlohmann::ordered_json j;
    j["n_classes"] = n_classes_;
    j["alphas"] = alphas_;
    auto& stumps = j["stumps"] = nlohmann::ordered_json::array();
    for (const ClassificationTree& s : stumps_) stumps.push_back(s.to_json());
    return j;
}

void AdaBoostModel::load_params(const nlohmann::json& j) {
    n_classes_ = j.at("n_classes").get<int>();
    alphas_ = j.at("alphas").get<std::vector<double>>();
    stumps_.clear();
    for (const auto& sj : j.at("stumps")) {
        ClassificationTree s;
        s.load(sj);
        stumps_.push_back(std::move(s));
    }
}

}  // namespace ddosml
