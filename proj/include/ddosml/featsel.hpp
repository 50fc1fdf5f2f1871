#pragma once

#include <string>
#include <vector>

#include "ddosml/matrix.hpp"
#include "ddosml/regression_tree.hpp"
#include "ddosml/table.hpp"

namespace ddosml {

// F value assigned when a feature correlates perfectly with the target;
// keeps sort comparisons total instead of propagating infinity.
inline constexpr double kPerfectFitSentinel = 1e30;

struct FScore {
    std::string feature;
    double r = 0.0;       // Pearson correlation against the target
    double f_stat = 0.0;  // r^2 / (1 - r^2) * (n - 2)
    bool selected = false;
};

struct RfeTrace {
    struct Elimination {
        std::string feature;
        double importance;  // the feature's importance when eliminated
    };
    std::vector<Elimination> iterations;
    std::vector<std::string> survivors;
};

/// Univariate linear-regression score per feature. Constant columns (or a
/// constant target) score r = 0, F = 0.
std::vector<FScore> f_regression_scores(const FeatureTable& features,
                                        const std::vector<double>& target);

/// Optional one-way ANOVA alternative (off by default in the pipeline):
/// F = between-class / within-class mean square; r is the correlation ratio
/// sqrt(SS_between / SS_total). Perfect separation caps at the sentinel.
std::vector<FScore> anova_f_scores(const FeatureTable& features, const std::vector<int>& labels);

/// The k features with the largest F, ranked descending; ties break toward
/// the earlier column.
std::vector<std::string> select_k_best(const std::vector<FScore>& scores, std::size_t k);

/// Recursive feature elimination with a regression-tree ranker: fit, score
/// importance, drop the single weakest feature (ties toward the earlier
/// column), repeat until final_count remain.
RfeTrace rfe(const FeatureTable& features, const std::vector<double>& target,
             std::size_t final_count, const RegressionTreeParams& ranker = {});

}  // namespace ddosml
