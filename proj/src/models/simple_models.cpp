#include <algorithm>
#include <cmath>

#include "ddosml/errors.hpp"
#include "ddosml/models/classifiers.hpp"
#include "ddosml/parallel.hpp"
#include "hyper.hpp"

namespace ddosml {

// ---------------------------------------------------------------------------
// knn

KnnModel::KnnModel(const nlohmann::json& hyper, std::uint64_t /*seed*/) {
    k_ = hyper::count_at_least(hyper, "k", 5, 1);
}

void KnnModel::fit(const Matrix& X, const std::vector<int>& y, int n_classes) {
    n_classes_ = n_classes;
    train_ = X;
    y_ = y;
}

Matrix KnnModel::predict_proba(const Matrix& X) const {
    if (train_.rows == 0) throw UnfittedModelError("knn is not fitted");
    const std::size_t k = std::min(k_, train_.rows);
    Matrix proba(X.rows, static_cast<std::size_t>(n_classes_));

    parallel_for(X.rows, [&](std::size_t r) {
        std::vector<std::pair<double, std::size_t>> dist(train_.rows);
        const double* q = X.row(r);
        for (std::size_t t = 0; t < train_.rows; ++t) {
            const double* p = train_.row(t);
            double d2 = 0.0;
            for (std::size_t c = 0; c < train_.cols; ++c) {
                const double d = q[c] - p[c];
                d2 += d * d;
            }
            dist[t] = {d2, t};  // index breaks distance ties
        }
        std::partial_sort(dist.begin(), dist.begin() + static_cast<std::ptrdiff_t>(k),
                          dist.end());
        for (std::size_t i = 0; i < k; ++i)
            proba.at(r, static_cast<std::size_t>(y_[dist[i].second])) +=
                1.0 / static_cast<double>(k);
    });
    return proba;
}

nlohmann::ordered_json KnnModel::params_json() const {
    nlohmann::ordered_json j;
    j["n_classes"] = n_classes_;
    j["rows"] = train_.rows;
    j["cols"] = train_.cols;
    j["x"] = train_.data;
    j["y"] = y_;
    return j;
}

void KnnModel::load_params(const nlohmann::json& j) {
    n_classes_ = j.at("n_classes").get<int>();
    train_.rows = j.at("rows").get<std::size_t>();
    train_.cols = j.at("cols").get<std::size_t>();
    train_.data = j.at("x").get<std::vector<double>>();
    y_ = j.at("y").get<std::vector<int>>();
}

// ---------------------------------------------------------------------------
// gaussian_nb

GaussianNbModel::GaussianNbModel(const nlohmann::json& /*hyper*/, std::uint64_t /*seed*/) {}

void GaussianNbModel::fit(const Matrix& X, const std::vector<int>& y, int n_classes) {
    n_classes_ = n_classes;
    const std::size_t p = X.cols;
    const auto K = static_cast<std::size_t>(n_classes);

    mean_.assign(K, std::vector<double>(p, 0.0));
    var_.assign(K, std::vector<double>(p, 0.0));
    log_prior_.assign(K, 0.0);
    std::vector<double> count(K, 0.0);

    for (std::size_t i = 0; i < X.rows; ++i) {
        const auto c = static_cast<std::size_t>(y[i]);
        count[c] += 1.0;
        for (std::size_t f = 0; f < p; ++f) mean_[c][f] += X.at(i, f);
    }
    for (std::size_t c = 0; c < K; ++c)
        for (std::size_t f = 0; f < p; ++f) mean_[c][f] /= count[c];
    for (std::size_t i = 0; i < X.rows; ++i) {
        const auto c = static_cast<std::size_t>(y[i]);
        for (std::size_t f = 0; f < p; ++f) {
            const double d = X.at(i, f) - mean_[c][f];
            var_[c][f] += d * d;
        }
    }

    // Variance floor proportional to the largest overall feature variance.
    std::vector<double> overall_mean(p, 0.0);
    for (std::size_t i = 0; i < X.rows; ++i)
        for (std::size_t f = 0; f < p; ++f) overall_mean[f] += X.at(i, f);
    for (double& m : overall_mean) m /= static_cast<double>(X.rows);
    double max_var = 0.0;
    for (std::size_t f = 0; f < p; ++f) {
        double v = 0.0;
        for (std::size_t i = 0; i < X.rows; ++i) {
            const double d = X.at(i, f) - overall_mean[f];
            v += d * d;
        }
        max_var = std::max(max_var, v / static_cast<double>(X.rows));
    }
    const double floor = std::max(1e-9 * max_var, 1e-12);

    for (std::size_t c = 0; c < K; ++c) {
        log_prior_[c] = std::log(count[c] / static_cast<double>(X.rows));
        for (std::size_t f = 0; f < p; ++f)
            var_[c][f] = std::max(var_[c][f] / count[c], floor);
    }
}

Matrix GaussianNbModel::predict_proba(const Matrix& X) const {
    if (mean_.empty()) throw UnfittedModelError("gaussian_nb is not fitted");
    const auto K = static_cast<std::size_t>(n_classes_);
    Matrix proba(X.rows, K);
    constexpr double kLog2Pi = 1.8378770664093454836;

    parallel_for(X.rows, [&](std::size_t r) {
        std::vector<double> logjoint(K);
        for (std::size_t c = 0; c < K; ++c) {
            double ll = log_prior_[c];
            for (std::size_t f = 0; f < X.cols; ++f) {
                const double d = X.at(r, f) - mean_[c][f];
                ll -= 0.5 * (kLog2Pi + std::log(var_[c][f]) + d * d / var_[c][f]);
            }
            logjoint[c] = ll;
        }
        const double m = *std::max_element(logjoint.begin(), logjoint.end());
        double total = 0.0;
        for (std::size_t c = 0; c < K; ++c) {
            proba.at(r, c) = std::exp(logjoint[c] - m);
            total += proba.at(r, c);
        }
        for (std::size_t c = 0; c < K; ++c) proba.at(r, c) /= total;
    });
    return proba;
}

nlohmann::ordered_json GaussianNbModel::params_json() const {
    nlohmann::ordered_json j;
    j["n_classes"] = n_classes_;
    j["mean"] = mean_;
    j["var"] = var_;
    j["log_prior"] = log_prior_;
    return j;
}

void GaussianNbModel::load_params(const nlohmann::json& j) {
    n_classes_ = j.at("n_classes").get<int>();
    mean_ = j.at("mean").get<std::vector<std::vector<double>>>();
    var_ = j.at("var").get<std::vector<std::vector<double>>>();
    log_prior_ = j.at("log_prior").get<std::vector<double>>();
}

// ---------------------------------------------------------------------------
// logistic_regression

LogisticModel::LogisticModel(const nlohmann::json& hyper, std::uint64_t /*seed*/) {
    learning_rate_ = hyper::positive_real(hyper, "learning_rate", 0.5);
    iterations_ = hyper::count_at_least(hyper, "iterations", 300, 1);
    l2_ = hyper::nonnegative_real(hyper, "l2", 1e-4);
}

void LogisticModel::fit(const Matrix& X, const std::vector<int>& y, int n_classes) {
    n_classes_ = n_classes;
    n_features_ = X.cols;
    const auto K = static_cast<std::size_t>(n_classes);
    const std::size_t n = X.rows;
    weights_.assign(K * n_features_, 0.0);
    bias_.assign(K, 0.0);

    std::vector<double> logits(K);
    std::vector<double> grad_w(K * n_features_);
    std::vector<double> grad_b(K);

    for (std::size_t it = 0; it < iterations_; ++it) {
        std::fill(grad_w.begin(), grad_w.end(), 0.0);
        std::fill(grad_b.begin(), grad_b.end(), 0.0);

        for (std::size_t i = 0; i < n; ++i) {
            const double* x = X.row(i);
            for (std::size_t c = 0; c < K; ++c) {
                double z = bias_[c];
                const double* w = &weights_[c * n_features_];
                for (std::size_t f = 0; f < n_features_; ++f) z += w[f] * x[f];
                logits[c] = z;
            }
            const double m = *std::max_element(logits.begin(), logits.end());
            double total = 0.0;
            for (std::size_t c = 0; c < K; ++c) {
                logits[c] = std::exp(logits[c] - m);
                total += logits[c];
            }
            for (std::size_t c = 0; c < K; ++c) {
                const double p = logits[c] / total;
                const double delta = p - (static_cast<int>(c) == y[i] ? 1.0 : 0.0);
                grad_b[c] += delta;
                double* gw = &grad_w[c * n_features_];
                for (std::size_t f = 0; f < n_features_; ++f) gw[f] += delta * x[f];
            }
        }

        const double scale = learning_rate_ / static_cast<double>(n);
        for (std::size_t j = 0; j < weights_.size(); ++j)
            weights_[j] -= scale * grad_w[j] + learning_rate_ * l2_ * weights_[j];
        for (std::size_t c = 0; c < K; ++c) bias_[c] -= scale * grad_b[c];
    }
}

Matrix LogisticModel::predict_proba(const Matrix& X) const {
    if (weights_.empty()) throw UnfittedModelError("logistic_regression is not fitted");
    const auto K = static_cast<std::size_t>(n_classes_);
    Matrix proba(X.rows, K);
    parallel_for(X.rows, [&](std::size_t r) {
        const double* x = X.row(r);
        std::vector<double> logits(K);
        for (std::size_t c = 0; c < K; ++c) {
            double z = bias_[c];
            const double* w = &weights_[c * n_features_];
            for (std::size_t f = 0; f < n_features_; ++f) z += w[f] * x[f];
            logits[c] = z;
        }
        const double m = *std::max_element(logits.begin(), logits.end());
        double total = 0.0;
        for (std::size_t c = 0; c < K; ++c) {
            proba.at(r, c) = std::exp(logits[c] - m);
            total += proba.at(r, c);
        }
        for (std::size_t c = 0; c < K; ++c) proba.at(r, c) /= total;
    });
    return proba;
}

nlohmann::ordered_json LogisticModel::params_json() const {
    nlohmann::ordered_json j;
    j["n_classes"] = n_classes_;
    j["n_features"] = n_features_;
    j["weights"] = weights_;
    j["bias"] = bias_;
    return j;
}

void LogisticModel::load_params(const nlohmann::json& j) {
    n_classes_ = j.at("n_classes").get<int>();
    n_features_ = j.at("n_features").get<std::size_t>();
    weights_ = j.at("weights").get<std::vector<double>>();
    bias_ = j.at("bias").get<std::vector<double>>();
}

}  // namespace ddosml
