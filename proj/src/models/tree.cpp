#include "ddosml/models/tree.hpp"

#include <algorithm>
#include <cmath>

#include "ddosml/errors.hpp"

namespace ddosml {

namespace {

double gini_of(const std::vector<double>& class_weight, double total) {
    if (total <= 0.0) return 0.0;
    double sumsq = 0.0;
    for (double w : class_weight) sumsq += w * w;
    return 1.0 - sumsq / (total * total);
}

}  // namespace

struct ClassificationTree::BuildContext {
    const Matrix& X;
    const std::vector<int>& y;
    const std::vector<double>* weight;
    const TreeParams& params;
    Rng* rng;
    int n_classes;

    double w_of(std::size_t row) const { return weight ? (*weight)[row] : 1.0; }

    std::vector<std::size_t> split_candidates() {
        std::vector<std::size_t> features(X.cols);
        for (std::size_t f = 0; f < X.cols; ++f) features[f] = f;
        const std::size_t m = params.max_features;
        if (m == 0 || m >= X.cols || rng == nullptr) return features;
        for (std::size_t i = 0; i < m; ++i) {
            const std::size_t j =
                i + static_cast<std::size_t>(rng->next_below(features.size() - i));
            std::swap(features[i], features[j]);
        }
        features.resize(m);
        std::sort(features.begin(), features.end());  // keeps tie-breaks index-ordered
        return features;
    }
};

void ClassificationTree::fit(const Matrix& X, const std::vector<int>& y, int n_classes,
                             const TreeParams& params, const std::vector<double>* sample_weight,
                             Rng* rng) {
    if (X.rows != y.size()) throw LengthMismatchError("tree: X rows != y length");
    if (X.rows == 0) throw EmptyMatrixError("tree: no training rows");
    nodes_.clear();
    n_classes_ = n_classes;
    BuildContext ctx{X, y, sample_weight, params, rng, n_classes};
    std::vector<std::size_t> rows(X.rows);
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
    build(ctx, rows, 0);
}

int ClassificationTree::build(BuildContext& ctx, std::vector<std::size_t>& rows,
                              std::size_t depth) {
    const int id = static_cast<int>(nodes_.size());
    nodes_.emplace_back();

    std::vector<double> class_weight(static_cast<std::size_t>(ctx.n_classes), 0.0);
    double total = 0.0;
    for (std::size_t r : rows) {
        class_weight[static_cast<std::size_t>(ctx.y[r])] += ctx.w_of(r);
        total += ctx.w_of(r);
    }
    {
        std::vector<double> dist(class_weight);
        if (total > 0.0)
            for (double& d : dist) d /= total;
        else
            dist.assign(dist.size(), 1.0 / static_cast<double>(ctx.n_classes));
        nodes_[id].dist = std::move(dist);
    }

    const double node_gini = gini_of(class_weight, total);
    if (depth >= ctx.params.max_depth || rows.size() < 2 * ctx.params.min_leaf ||
        node_gini <= 0.0)
        return id;

    int best_feature = -1;
    double best_threshold = 0.0;
    double best_child_impurity = total * node_gini;  // must strictly improve

    std::vector<std::pair<double, std::size_t>> sorted;
    for (std::size_t f : ctx.split_candidates()) {
        if (ctx.params.random_thresholds) {
            double lo = 0.0, hi = 0.0;
            bool first = true;
            for (std::size_t r : rows) {
                const double v = ctx.X.at(r, f);
                if (first) { lo = hi = v; first = false; }
                else { lo = std::min(lo, v); hi = std::max(hi, v); }
            }
            if (lo >= hi) continue;
            const double threshold = ctx.rng->uniform(lo, hi);

            std::vector<double> left_w(static_cast<std::size_t>(ctx.n_classes), 0.0);
            double left_total = 0.0;
            std::size_t left_count = 0;
            for (std::size_t r : rows) {
                if (ctx.X.at(r, f) < threshold) {
                    left_w[static_cast<std::size_t>(ctx.y[r])] += ctx.w_of(r);
                    left_total += ctx.w_of(r);
                    ++left_count;
                }
            }
            const std::size_t right_count = rows.size() - left_count;
            if (left_count < ctx.params.min_leaf || right_count < ctx.params.min_leaf) continue;
            std::vector<double> right_w(class_weight);
            for (std::size_t c = 0; c < right_w.size(); ++c) right_w[c] -= left_w[c];
            const double right_total = total - left_total;
            const double child =
                left_total * gini_of(left_w, left_total) + right_total * gini_of(right_w, right_total);
            if (child < best_child_impurity) {
                best_child_impurity = child;
                best_feature = static_cast<int>(f);
                best_threshold = threshold;
            }
            continue;
        }

        sorted.clear();
        sorted.reserve(rows.size());
        for (std::size_t r : rows) sorted.emplace_back(ctx.X.at(r, f), r);
        std::sort(sorted.begin(), sorted.end());

        std::vector<double> left_w(static_cast<std::size_t>(ctx.n_classes), 0.0);
        double left_total = 0.0;
        const std::size_t n = sorted.size();
        for (std::size_t i = 0; i + 1 < n; ++i) {
            const std::size_t r = sorted[i].second;
            left_w[static_cast<std::size_t>(ctx.y[r])] += ctx.w_of(r);
            left_total += ctx.w_of(r);
            if (sorted[i].first == sorted[i + 1].first) continue;
            const std::size_t n_left = i + 1;
            const std::size_t n_right = n - n_left;
            if (n_left < ctx.params.min_leaf || n_right < ctx.params.min_leaf) continue;

            std::vector<double> right_w(class_weight);
            for (std::size_t c = 0; c < right_w.size(); ++c) right_w[c] -= left_w[c];
            const double right_total = total - left_total;
            const double child = left_total * gini_of(left_w, left_total) +
                                 right_total * gini_of(right_w, right_total);
            if (child < best_child_impurity) {
                best_child_impurity = child;
                best_feature = static_cast<int>(f);
                best_threshold = 0.5 * (sorted[i].first + sorted[i + 1].first);
            }
        }
    }

    if (best_feature < 0) return id;

    std::vector<std::size_t> left_rows, right_rows;
    for (std::size_t r : rows) {
        if (ctx.X.at(r, static_cast<std::size_t>(best_feature)) < best_threshold)
            left_rows.push_back(r);
        else
            right_rows.push_back(r);
    }
    if (left_rows.empty() || right_rows.empty()) return id;  // random cut missed

    nodes_[id].feature = best_feature;
    nodes_[id].threshold = best_threshold;
    const int left = build(ctx, left_rows, depth + 1);
    nodes_[id].left = left;
    const int right = build(ctx, right_rows, depth + 1);
    nodes_[id].right = right;
    return id;
}

const std::vector<double>& ClassificationTree::leaf_dist(const double* row) const {
    if (nodes_.empty()) throw UnfittedModelError("classification tree is not fitted");
    int id = 0;
    while (nodes_[id].feature >= 0)
        id = row[nodes_[id].feature] < nodes_[id].threshold ? nodes_[id].left : nodes_[id].right;
    return nodes_[id].dist;
}

int ClassificationTree::predict_row(const double* row) const {
    const std::vector<double>& dist = leaf_dist(row);
    std::size_t best = 0;
    for (std::size_t c = 1; c < dist.size(); ++c)
        if (dist[c] > dist[best]) best = c;
    return static_cast<int>(best);
}

nlohmann::ordered_json ClassificationTree::to_json() const {
    nlohmann::ordered_json j;
    j["n_classes"] = n_classes_;
    auto& nodes = j["nodes"] = nlohmann::ordered_json::array();
    for (const Node& n : nodes_) {
        nodes.push_back({{"feature", n.feature},
                         {"threshold", n.threshold},
                         {"left", n.left},
                         {"right", n.right},
                         {"dist", n.dist}});
    }
    return j;
}

void ClassificationTree::load(const nlohmann::json& j) {
    n_classes_ = j.at("n_classes").get<int>();
    nodes_.clear();
    for (const auto& n : j.at("nodes")) {
        Node node;
        node.feature = n.at("feature").get<int>();
        node.threshold = n.at("threshold").get<double>();
        node.left = n.at("left").get<int>();
        node.right = n.at("right").get<int>();
        node.dist = n.at("dist").get<std::vector<double>>();
        nodes_.push_back(std::move(node));
    }
}

}  // namespace ddosml
