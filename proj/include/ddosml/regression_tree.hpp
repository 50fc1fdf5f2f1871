#pragma once

#include <cstddef>
#include <vector>

#include "ddosml/matrix.hpp"

namespace ddosml {

struct RegressionTreeParams {
    std::size_t max_depth = 8;
    std::size_t min_leaf = 5;
};

/// CART regression tree: splits minimize the sum of squared errors, with
/// midpoint thresholds between adjacent sorted values. Ties in gain break
/// toward the lower feature index then the lower threshold, so a fit is a
/// pure function of its inputs.
class RegressionTree {
public:
    struct Node {
        int feature = -1;  // -1 marks a leaf
        double threshold = 0.0;
        int left = -1;
        int right = -1;
        double value = 0.0;  // leaf prediction (mean)
    };

    void fit(const Matrix& X, const std::vector<double>& y, const RegressionTreeParams& params);

    double predict_row(const double* row) const;
    std::vector<double> predict(const Matrix& X) const;

    /// Per-feature total variance reduction, normalized to sum 1. A tree
    /// with no splits yields all zeros (normalization skipped).
    /// Throws UnfittedModelError before fit().
    std::vector<double> importances(std::size_t n_features) const;

    bool fitted() const { return !nodes_.empty(); }
    const std::vector<Node>& nodes() const { return nodes_; }

private:
    int build(const Matrix& X, const std::vector<double>& y, std::vector<std::size_t>& rows,
              std::size_t depth, const RegressionTreeParams& params);

    std::vector<Node> nodes_;
    std::vector<double> raw_importance_;
};

}  // namespace ddosml
