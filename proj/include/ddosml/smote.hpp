#pragma once

#include <cstdint>
#include <vector>

#include "ddosml/table.hpp"

namespace ddosml {

/// Classic SMOTE: every minority class is oversampled up to the majority
/// count by interpolating between a class member and one of its k nearest
/// same-class neighbors (Euclidean distance).
struct SmoteConfig {
    std::size_t k_neighbors = 5;
    std::uint64_t seed = 0;
};

struct SmoteResult {
    FeatureTable features;
    std::vector<int> labels;
};

/// Componentwise convex combination x + u * (x_nn - x), u in [0,1].
std::vector<double> interpolate(const std::vector<double>& x, const std::vector<double>& x_nn,
                                double u);

/// Balances every class to the pre-call maximum count. Original rows come
/// first, verbatim and in order; synthetic rows follow, grouped by class
/// code then synthesis index. Classes of size <= k use k' = size-1
/// neighbors; singleton classes duplicate their only row.
SmoteResult smote(const FeatureTable& features, const std::vector<int>& labels,
                  const SmoteConfig& cfg);

}  // namespace ddosml
