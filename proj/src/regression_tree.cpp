#include "ddosml/regression_tree.hpp"

#include <algorithm>
#include <cmath>

#include "ddosml/errors.hpp"

namespace ddosml {

namespace {

double sse_of(const std::vector<double>& y, const std::vector<std::size_t>& rows) {
    double sum = 0.0;
    double sumsq = 0.0;
    for (std::size_t r : rows) {
        sum += y[r];
        sumsq += y[r] * y[r];
    }
    const double n = static_cast<double>(rows.size());
    return sumsq - sum * sum / n;
}

}  // namespace

void RegressionTree::fit(const Matrix& X, const std::vector<double>& y,
                         const RegressionTreeParams& params) {
    if (X.rows != y.size())
        throw LengthMismatchError("regression tree: X rows != y length");
    nodes_.clear();
    raw_importance_.assign(X.cols, 0.0);
    std::vector<std::size_t> rows(X.rows);
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
    build(X, y, rows, 0, params);
}

int RegressionTree::build(const Matrix& X, const std::vector<double>& y,
                          std::vector<std::size_t>& rows, std::size_t depth,
                          const RegressionTreeParams& params) {
    const int id = static_cast<int>(nodes_.size());
    nodes_.emplace_back();

    double sum = 0.0;
    for (std::size_t r : rows) sum += y[r];
    nodes_[id].value = sum / static_cast<double>(rows.size());

    if (depth >= params.max_depth || rows.size() < 2 * params.min_leaf) return id;

    const double node_sse = sse_of(y, rows);
    if (node_sse <= 0.0) return id;

    int best_feature = -1;
    double best_threshold = 0.0;
    double best_gain = 0.0;
    std::size_t best_split_at = 0;

    std::vector<std::pair<double, std::size_t>> sorted;
    sorted.reserve(rows.size());
    for (std::size_t f = 0; f < X.cols; ++f) {
        sorted.clear();
        for (std::size_t r : rows) sorted.emplace_back(X.at(r, f), r);
        std::sort(sorted.begin(), sorted.end());

        double left_sum = 0.0;
        double left_sumsq = 0.0;
        double total_sum = 0.0;
        double total_sumsq = 0.0;
        for (const auto& [v, r] : sorted) {
            total_sum += y[r];
            total_sumsq += y[r] * y[r];
        }
        const std::size_t n = sorted.size();
        for (std::size_t i = 0; i + 1 < n; ++i) {
            const double yi = y[sorted[i].second];
            left_sum += yi;
            left_sumsq += yi * yi;
            if (sorted[i].first == sorted[i + 1].first) continue;
            const std::size_t n_left = i + 1;
            const std::size_t n_right = n - n_left;
            if (n_left < params.min_leaf || n_right < params.min_leaf) continue;

            const double right_sum = total_sum - left_sum;
            const double right_sumsq = total_sumsq - left_sumsq;
            const double sse_left = left_sumsq - left_sum * left_sum / static_cast<double>(n_left);
            const double sse_right =
                right_sumsq - right_sum * right_sum / static_cast<double>(n_right);
            const double gain = node_sse - sse_left - sse_right;
            if (gain > best_gain) {
                best_gain = gain;
                best_feature = static_cast<int>(f);
                best_threshold = 0.5 * (sorted[i].first + sorted[i + 1].first);
                best_split_at = n_left;
            }
        }
    }

    if (best_feature < 0 || best_gain <= 0.0) return id;

    std::vector<std::size_t> left_rows;
    std::vector<std::size_t> right_rows;
    left_rows.reserve(best_split_at);
    right_rows.reserve(rows.size() - best_split_at);
    for (std::size_t r : rows) {
        if (X.at(r, static_cast<std::size_t>(best_feature)) < best_threshold)
            left_rows.push_back(r);
        else
            right_rows.push_back(r);
    }
    // Midpoints between distinct values always separate both sides.
    raw_importance_[static_cast<std::size_t>(best_feature)] += best_gain;

    nodes_[id].feature = best_feature;
    nodes_[id].threshold = best_threshold;
    const int left = build(X, y, left_rows, depth + 1, params);
    nodes_[id].left = left;
    const int right = build(X, y, right_rows, depth + 1, params);
    nodes_[id].right = right;
    return id;
}

double RegressionTree::predict_row(const double* row) const {
    if (nodes_.empty()) throw UnfittedModelError("regression tree is not fitted");
    int id = 0;
    while (nodes_[id].feature >= 0)
        id = row[nodes_[id].feature] < nodes_[id].threshold ? nodes_[id].left : nodes_[id].right;
    return nodes_[id].value;
}

std::vector<double> RegressionTree::predict(const Matrix& X) const {
    std::vector<double> out(X.rows);
    for (std::size_t r = 0; r < X.rows; ++r) out[r] = predict_row(X.row(r));
    return out;
}

std::vector<double> RegressionTree::importances(std::size_t n_features) const {
    if (nodes_.empty()) throw UnfittedModelError("regression tree is not fitted");
    std::vector<double> imp(n_features, 0.0);
    for (std::size_t f = 0; f < std::min(n_features, raw_importance_.size()); ++f)
        imp[f] = raw_importance_[f];
    double total = 0.0;
    for (double v : imp) total += v;
    if (total > 0.0)
        for (double& v : imp) v /= total;
    return imp;
}

}  // namespace ddosml
