#include "ddosml/featsel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ddosml/errors.hpp"

namespace ddosml {

std::vector<FScore> f_regression_scores(const FeatureTable& features,
                                        const std::vector<double>& target) {
    const std::vector<std::string> names = features.numeric_names();
    const std::size_t n = features.n_rows();
    if (target.size() != n)
        throw LengthMismatchError("f_regression: target length != n_rows");
    for (double v : target)
        if (!std::isfinite(v)) throw NonFiniteError("f_regression: non-finite target value");

    double y_mean = 0.0;
    for (double v : target) y_mean += v;
    y_mean = n > 0 ? y_mean / static_cast<double>(n) : 0.0;
    double syy = 0.0;
    for (double v : target) {
        const double d = v - y_mean;
        syy += d * d;
    }

    std::vector<FScore> scores;
    scores.reserve(names.size());
    for (const std::string& name : names) {
        const auto& x = features.numeric(name);
        double x_mean = 0.0;
        for (double v : x) {
            if (!std::isfinite(v))
                throw NonFiniteError("f_regression: non-finite value in " + name);
            x_mean += v;
        }
        x_mean /= static_cast<double>(n);

        double sxx = 0.0;
        double sxy = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double dx = x[i] - x_mean;
            sxx += dx * dx;
            sxy += dx * (target[i] - y_mean);
        }

        FScore score;
        score.feature = name;
        if (sxx > 0.0 && syy > 0.0) {
            score.r = sxy / std::sqrt(sxx * syy);
            score.r = std::clamp(score.r, -1.0, 1.0);
            const double r2 = score.r * score.r;
            if (n > 2) {
                score.f_stat = r2 >= 1.0 ? kPerfectFitSentinel
                                         : r2 / (1.0 - r2) * static_cast<double>(n - 2);
                score.f_stat = std::min(score.f_stat, kPerfectFitSentinel);
            }
        }
        scores.push_back(std::move(score));
    }
    return scores;
}

std::vector<FScore> anova_f_scores(const FeatureTable& features, const std::vector<int>& labels) {
    const std::vector<std::string> names = features.numeric_names();
    const std::size_t n = features.n_rows();
    if (labels.size() != n) throw LengthMismatchError("anova_f: labels length != n_rows");

    int k = 0;
    for (int code : labels) {
        if (code < 0) throw CodeOutOfRangeError("anova_f: negative class code");
        k = std::max(k, code + 1);
    }
    std::vector<double> count(static_cast<std::size_t>(k), 0.0);
    for (int code : labels) count[static_cast<std::size_t>(code)] += 1.0;

    std::vector<FScore> scores;
    scores.reserve(names.size());
    for (const std::string& name : names) {
        const auto& x = features.numeric(name);
        std::vector<double> class_sum(static_cast<std::size_t>(k), 0.0);
        double total = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            if (!std::isfinite(x[i])) throw NonFiniteError("anova_f: non-finite value in " + name);
            class_sum[static_cast<std::size_t>(labels[i])] += x[i];
            total += x[i];
        }
        const double grand_mean = total / static_cast<double>(n);
        double ss_between = 0.0;
        for (int c = 0; c < k; ++c) {
            if (count[c] == 0.0) continue;
            const double d = class_sum[c] / count[c] - grand_mean;
            ss_between += count[c] * d * d;
        }
        double ss_total = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double d = x[i] - grand_mean;
            ss_total += d * d;
        }
        const double ss_within = std::max(ss_total - ss_between, 0.0);

        FScore score;
        score.feature = name;
        if (ss_total > 0.0 && k > 1 && n > static_cast<std::size_t>(k)) {
            score.r = std::sqrt(std::min(ss_between / ss_total, 1.0));
            const double ms_between = ss_between / static_cast<double>(k - 1);
            const double ms_within = ss_within / static_cast<double>(n - static_cast<std::size_t>(k));
            score.f_stat = ms_within > 0.0 ? std::min(ms_between / ms_within, kPerfectFitSentinel)
                                           : (ms_between > 0.0 ? kPerfectFitSentinel : 0.0);
        }
        scores.push_back(std::move(score));
    }
    return scores;
}

std::vector<std::string> select_k_best(const std::vector<FScore>& scores, std::size_t k) {
    if (k > scores.size())
        throw KTooLargeError("k = " + std::to_string(k) + " exceeds feature count " +
                             std::to_string(scores.size()));
    std::vector<std::size_t> order(scores.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return scores[a].f_stat > scores[b].f_stat;  // stable: ties keep column order
    });
    std::vector<std::string> best;
    best.reserve(k);
    for (std::size_t i = 0; i < k; ++i) best.push_back(scores[order[i]].feature);
    return best;
}

RfeTrace rfe(const FeatureTable& features, const std::vector<double>& target,
             std::size_t final_count, const RegressionTreeParams& ranker) {
    std::vector<std::string> remaining = features.numeric_names();
    if (final_count > remaining.size())
        throw CountTooLargeError("final_count = " + std::to_string(final_count) +
                                 " exceeds feature count " + std::to_string(remaining.size()));
    if (target.size() != features.n_rows())
        throw LengthMismatchError("rfe: target length != n_rows");

    RfeTrace trace;
    while (remaining.size() > final_count) {
        const Matrix X = to_matrix(features, remaining);
        RegressionTree tree;
        tree.fit(X, target, ranker);
        const std::vector<double> imp = tree.importances(remaining.size());

        std::size_t weakest = 0;
        for (std::size_t f = 1; f < imp.size(); ++f)
            if (imp[f] < imp[weakest]) weakest = f;

        trace.iterations.push_back({remaining[weakest], imp[weakest]});
        remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(weakest));
    }
    trace.survivors = std::move(remaining);
    return trace;
}

}  // namespace ddosml
