#include "ddosml/metrics.hpp"

#include "ddosml/errors.hpp"

namespace ddosml {

std::size_t ConfusionMatrix::total() const {
    std::size_t n = 0;
    for (std::size_t v : counts) n += v;
    return n;
}

ConfusionMatrix confusion(const std::vector<int>& y_true, const std::vector<int>& y_pred,
                          std::size_t k) {
    if (y_true.size() != y_pred.size())
        throw LengthMismatchError("confusion: y_true and y_pred lengths differ");
    ConfusionMatrix cm;
    cm.k = k;
    cm.counts.assign(k * k, 0);
    for (std::size_t i = 0; i < y_true.size(); ++i) {
        const int t = y_true[i];
        const int p = y_pred[i];
        if (t < 0 || p < 0 || static_cast<std::size_t>(t) >= k ||
            static_cast<std::size_t>(p) >= k)
            throw CodeOutOfRangeError("confusion: code outside [0, k) at row " +
                                      std::to_string(i));
        ++cm.at(static_cast<std::size_t>(t), static_cast<std::size_t>(p));
    }
    return cm;
}

ScoreSet scores(const ConfusionMatrix& cm) {
    const std::size_t n = cm.total();
    if (cm.k == 0 || n == 0) throw EmptyMatrixError("scores: empty confusion matrix");

    ScoreSet s;
    std::size_t diag = 0;
    double precision_sum = 0.0;
    double recall_sum = 0.0;
    double f1_sum = 0.0;
    for (std::size_t c = 0; c < cm.k; ++c) {
        std::size_t row_total = 0;
        std::size_t col_total = 0;
        for (std::size_t j = 0; j < cm.k; ++j) {
            row_total += cm.at(c, j);
            col_total += cm.at(j, c);
        }
        const std::size_t tp = cm.at(c, c);
        diag += tp;
        const double precision =
            col_total > 0 ? static_cast<double>(tp) / static_cast<double>(col_total) : 0.0;
        const double recall =
            row_total > 0 ? static_cast<double>(tp) / static_cast<double>(row_total) : 0.0;
        precision_sum += precision;
        recall_sum += recall;
        if (precision + recall > 0.0)
            f1_sum += 2.0 * precision * recall / (precision + recall);
    }
    const double k = static_cast<double>(cm.k);
    s.accuracy = static_cast<double>(diag) / static_cast<double>(n);
    s.precision_macro = precision_sum / k;
    s.recall_macro = recall_sum / k;
    s.f1_macro = f1_sum / k;
    return s;
}

}  // namespace ddosml
