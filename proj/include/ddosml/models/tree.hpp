#pragma once

#include <vector>

#include <json.hpp>

#include "ddosml/matrix.hpp"
#include "ddosml/rng.hpp"

namespace ddosml {

/// CART classification tree with weighted Gini impurity. Thresholds are
/// midpoints of adjacent sorted values; ties in gain break toward the lower
/// feature index then the lower threshold, so fits are platform-stable.
/// With max_features set, each split considers a random subset drawn from
/// the supplied rng; random_thresholds switches to extra-trees style cuts
/// (one uniform threshold per candidate feature).
struct TreeParams {
    std::size_t max_depth = 16;
    std::size_t min_leaf = 2;
    std::size_t max_features = 0;  // 0 = consider every feature
    bool random_thresholds = false;
};

class ClassificationTree {
public:
    struct Node {
        int feature = -1;  // -1 marks a leaf
        double threshold = 0.0;
        int left = -1;
        int right = -1;
        std::vector<double> dist;  // leaf class distribution, sums to 1
    };

    void fit(const Matrix& X, const std::vector<int>& y, int n_classes,
             const TreeParams& params, const std::vector<double>* sample_weight = nullptr,
             Rng* rng = nullptr);

    const std::vector<double>& leaf_dist(const double* row) const;
    int predict_row(const double* row) const;  // argmax, smallest-code ties

    bool fitted() const { return !nodes_.empty(); }
    const std::vector<Node>& nodes() const { return nodes_; }

    nlohmann::ordered_json to_json() const;
    void load(const nlohmann::json& j);

private:
    struct BuildContext;
    int build(BuildContext& ctx, std::vector<std::size_t>& rows, std::size_t depth);

    std::vector<Node> nodes_;
    int n_classes_ = 0;
};

}  // namespace ddosml
