#pragma once

#include <cstddef>
#include <vector>

namespace ddosml {

/// k x k counts; rows are the true class, columns the predicted class.
struct ConfusionMatrix {
    std::size_t k = 0;
    std::vector<std::size_t> counts;  // row-major

    std::size_t at(std::size_t truth, std::size_t pred) const { return counts[truth * k + pred]; }
    std::size_t& at(std::size_t truth, std::size_t pred) { return counts[truth * k + pred]; }
    std::size_t total() const;
};

struct ScoreSet {
    double accuracy = 0.0;
    double precision_macro = 0.0;
    double recall_macro = 0.0;
    double f1_macro = 0.0;
};

ConfusionMatrix confusion(const std::vector<int>& y_true, const std::vector<int>& y_pred,
                          std::size_t k);

/// Macro-averaged scores. A class nobody predicted contributes precision 0;
/// a class with no true rows contributes recall 0; f1 is the per-class
/// harmonic mean, macro-averaged.
ScoreSet scores(const ConfusionMatrix& cm);

}  // namespace ddosml
