#include <algorithm>
#include <cmath>

#include "ddosml/errors.hpp"
#include "ddosml/models/classifiers.hpp"
#include "hyper.hpp"

namespace ddosml {

// Parameter layout: W1[h*p] (hidden j x input i), b1[h], W2[K*h], b2[K].

NeuralNetModel::NeuralNetModel(const nlohmann::json& hyper, std::uint64_t seed) : seed_(seed) {
    hidden_ = hyper::count_at_least(hyper, "hidden", 64, 1);
    epochs_ = hyper::count_at_least(hyper, "epochs", 20, 1);
    batch_ = hyper::count_at_least(hyper, "batch", 128, 1);
    learning_rate_ = hyper::positive_real(hyper, "learning_rate", 0.05);
    momentum_ = hyper::nonnegative_real(hyper, "momentum", 0.9);
}

std::size_t NeuralNetModel::n_params() const {
    const auto K = static_cast<std::size_t>(n_classes_);
    return hidden_ * n_features_ + hidden_ + K * hidden_ + K;
}

void NeuralNetModel::set_dims(std::size_t n_features, int n_classes) {
    n_features_ = n_features;
    n_classes_ = n_classes;
}

double NeuralNetModel::loss_and_grad(const Matrix& X, const std::vector<int>& y,
                                     const std::vector<double>& params,
                                     std::vector<double>* grad) const {
    const std::size_t p = n_features_;
    const std::size_t h = hidden_;
    const auto K = static_cast<std::size_t>(n_classes_);
    const std::size_t B = X.rows;

    const double* W1 = params.data();
    const double* b1 = W1 + h * p;
    const double* W2 = b1 + h;
    const double* b2 = W2 + K * h;

    double* gW1 = nullptr;
    double* gb1 = nullptr;
    double* gW2 = nullptr;
    double* gb2 = nullptr;
    if (grad != nullptr) {
        grad->assign(params.size(), 0.0);
        gW1 = grad->data();
        gb1 = gW1 + h * p;
        gW2 = gb1 + h;
        gb2 = gW2 + K * h;
    }

    std::vector<double> hidden(h);
    std::vector<double> logits(K);
    std::vector<double> dlogits(K);
    std::vector<double> dhidden(h);

    double loss = 0.0;
    for (std::size_t i = 0; i < B; ++i) {
        const double* x = X.row(i);
        for (std::size_t j = 0; j < h; ++j) {
            double z = b1[j];
            const double* w = W1 + j * p;
            for (std::size_t f = 0; f < p; ++f) z += w[f] * x[f];
            hidden[j] = z > 0.0 ? z : 0.0;
        }
        for (std::size_t c = 0; c < K; ++c) {
            double z = b2[c];
            const double* w = W2 + c * h;
            for (std::size_t j = 0; j < h; ++j) z += w[j] * hidden[j];
            logits[c] = z;
        }
        const double m = *std::max_element(logits.begin(), logits.end());
        double total = 0.0;
        for (std::size_t c = 0; c < K; ++c) total += std::exp(logits[c] - m);
        const double log_total = std::log(total) + m;
        loss += log_total - logits[static_cast<std::size_t>(y[i])];

        if (grad == nullptr) continue;
        for (std::size_t c = 0; c < K; ++c) {
            const double prob = std::exp(logits[c] - log_total);
            dlogits[c] = (prob - (static_cast<int>(c) == y[i] ? 1.0 : 0.0)) /
                         static_cast<double>(B);
        }
        std::fill(dhidden.begin(), dhidden.end(), 0.0);
        for (std::size_t c = 0; c < K; ++c) {
            double* gw = gW2 + c * h;
            for (std::size_t j = 0; j < h; ++j) {
                gw[j] += dlogits[c] * hidden[j];
                dhidden[j] += W2[c * h + j] * dlogits[c];
            }
            gb2[c] += dlogits[c];
        }
        for (std::size_t j = 0; j < h; ++j) {
            if (hidden[j] <= 0.0) continue;  // ReLU gate
            double* gw = gW1 + j * p;
            for (std::size_t f = 0; f < p; ++f) gw[f] += dhidden[j] * x[f];
            gb1[j] += dhidden[j];
        }
    }
    return loss / static_cast<double>(B);
}

void NeuralNetModel::fit(const Matrix& X, const std::vector<int>& y, int n_classes) {
    set_dims(X.cols, n_classes);
    const std::size_t p = n_features_;
    const std::size_t h = hidden_;
    const auto K = static_cast<std::size_t>(n_classes);

    Rng rng(derive_seed(seed_, "feedforward-net"));
    params_.assign(n_params(), 0.0);
    const double s1 = std::sqrt(2.0 / static_cast<double>(p));
    const double s2 = std::sqrt(2.0 / static_cast<double>(h));
    for (std::size_t j = 0; j < h * p; ++j) params_[j] = s1 * rng.next_normal();
    for (std::size_t j = 0; j < K * h; ++j) params_[h * p + h + j] = s2 * rng.next_normal();

    std::vector<double> velocity(params_.size(), 0.0);
    std::vector<double> grad;
    std::vector<std::size_t> order(X.rows);
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;

    for (std::size_t epoch = 0; epoch < epochs_; ++epoch) {
        rng.shuffle(order);
        for (std::size_t start = 0; start < X.rows; start += batch_) {
            const std::size_t size = std::min(batch_, X.rows - start);
            Matrix Xb(size, p);
            std::vector<int> yb(size);
            for (std::size_t i = 0; i < size; ++i) {
                const std::size_t r = order[start + i];
                for (std::size_t f = 0; f < p; ++f) Xb.at(i, f) = X.at(r, f);
                yb[i] = y[r];
            }
            loss_and_grad(Xb, yb, params_, &grad);
            for (std::size_t j = 0; j < params_.size(); ++j) {
                velocity[j] = momentum_ * velocity[j] - learning_rate_ * grad[j];
                params_[j] += velocity[j];
            }
        }
    }
}

Matrix NeuralNetModel::predict_proba(const Matrix& X) const {
    if (params_.empty()) throw UnfittedModelError("feedforward_net is not fitted");
    const std::size_t p = n_features_;
    const std::size_t h = hidden_;
    const auto K = static_cast<std::size_t>(n_classes_);
    const double* W1 = params_.data();
    const double* b1 = W1 + h * p;
    const double* W2 = b1 + h;
    const double* b2 = W2 + K * h;

    Matrix proba(X.rows, K);
    std::vector<double> hidden(h);
    std::vector<double> logits(K);
    for (std::size_t r = 0; r < X.rows; ++r) {
        const double* x = X.row(r);
        for (std::size_t j = 0; j < h; ++j) {
            double z = b1[j];
            const double* w = W1 + j * p;
            for (std::size_t f = 0; f < p; ++f) z += w[f] * x[f];
            hidden[j] = z > 0.0 ? z : 0.0;
        }
        for (std::size_t c = 0; c < K; ++c) {
            double z = b2[c];
            const double* w = W2 + c * h;
            for (std::size_t j = 0; j < h; ++j) z += w[j] * hidden[j];
            logits[c] = z;
        }
        const double m = *std::max_element(logits.begin(), logits.end());
        double total = 0.0;
        for (std::size_t c = 0; c < K; ++c) {
            proba.at(r, c) = std::exp(logits[c] - m);
            total += proba.at(r, c);
        }
        for (std::size_t c = 0; c < K; ++c) proba.at(r, c) /= total;
    }
    return proba;
}

nlohmann::ordered_json NeuralNetModel::params_json() const {
    nlohmann::ordered_json j;
    j["n_classes"] = n_classes_;
    j["n_features"] = n_features_;
    j["hidden"] = hidden_;
    j["params"] = params_;
    return j;
}

void NeuralNetModel::load_params(const nlohmann::json& j) {
    n_classes_ = j.at("n_classes").get<int>();
    n_features_ = j.at("n_features").get<std::size_t>();
    hidden_ = j.at("hidden").get<std::size_t>();
    params_ = j.at("params").get<std::vector<double>>();
}

}  // namespace ddosml
