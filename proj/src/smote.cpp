#include "ddosml/smote.hpp"

#include <algorithm>
#include <cmath>

#include "ddosml/errors.hpp"
#include "ddosml/parallel.hpp"
#include "ddosml/rng.hpp"

namespace ddosml {

std::vector<double> interpolate(const std::vector<double>& x, const std::vector<double>& x_nn,
                                double u) {
    if (x.size() != x_nn.size())
        throw DimensionMismatchError("interpolate: " + std::to_string(x.size()) + " vs " +
                                     std::to_string(x_nn.size()));
    if (u < 0.0 || u > 1.0)
        throw ValidationError("smote.u", "interpolation factor must be in [0,1]");
    std::vector<double> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] + u * (x_nn[i] - x[i]);
    return out;
}

SmoteResult smote(const FeatureTable& features, const std::vector<int>& labels,
                  const SmoteConfig& cfg) {
    if (cfg.k_neighbors < 1) throw ValidationError("smote.k_neighbors", "must be >= 1");
    if (labels.size() != features.n_rows())
        throw LengthMismatchError("smote: labels length != n_rows");
    if (labels.empty()) throw EmptyClassError("smote: no rows");

    const std::vector<std::string> names = features.numeric_names();
    if (names.size() != features.n_columns())
        throw ValidationError("smote.features", "all feature columns must be numeric");
    const std::size_t p = names.size();
    const std::size_t n = features.n_rows();

    // Row-major copy of the feature block for distance math.
    std::vector<double> X(n * p);
    for (std::size_t c = 0; c < p; ++c) {
        const auto& col = features.numeric(names[c]);
        for (std::size_t r = 0; r < n; ++r) {
            if (!std::isfinite(col[r]))
                throw NonFiniteError("smote: non-finite value in column " + names[c]);
            X[r * p + c] = col[r];
        }
    }

    int k_classes = 0;
    for (int code : labels) {
        if (code < 0) throw CodeOutOfRangeError("smote: negative class code");
        k_classes = std::max(k_classes, code + 1);
    }
    std::vector<std::vector<std::size_t>> rows_of(static_cast<std::size_t>(k_classes));
    for (std::size_t i = 0; i < labels.size(); ++i)
        rows_of[static_cast<std::size_t>(labels[i])].push_back(i);

    std::size_t max_count = 0;
    for (int c = 0; c < k_classes; ++c) {
        if (rows_of[c].empty())
            throw EmptyClassError("smote: class " + std::to_string(c) + " has no rows");
        max_count = std::max(max_count, rows_of[c].size());
    }

    struct Plan {
        int class_code;
        std::size_t base;      // index into rows_of[class]
        std::size_t neighbor;  // rank among the base row's k' nearest
        double u;
    };

    // All draws are counter-based per (class, synthetic index), so the plan
    // is fixed before any neighbor search happens.
    std::vector<Plan> plan;
    for (int c = 0; c < k_classes; ++c) {
        const std::size_t n_c = rows_of[c].size();
        const std::size_t n_syn = max_count - n_c;
        const std::size_t k = std::min(cfg.k_neighbors, n_c > 0 ? n_c - 1 : 0);
        const std::uint64_t class_seed =
            derive_seed(derive_seed(cfg.seed, "smote"), static_cast<std::uint64_t>(c));
        for (std::size_t s = 0; s < n_syn; ++s) {
            Rng rng(derive_seed(class_seed, static_cast<std::uint64_t>(s)));
            Plan item;
            item.class_code = c;
            item.base = static_cast<std::size_t>(rng.next_below(n_c));
            item.neighbor = k > 0 ? static_cast<std::size_t>(rng.next_below(k)) : 0;
            item.u = rng.next_double();
            plan.push_back(item);
        }
    }

    // k-nearest same-class neighbors for every base row the plan touches.
    // Exact brute force; minority classes are small by definition.
    std::vector<std::vector<std::size_t>> knn(n);
    std::vector<char> needed(n, 0);
    for (const Plan& item : plan)
        needed[rows_of[item.class_code][item.base]] = 1;

    std::vector<std::size_t> wanted;
    for (std::size_t i = 0; i < n; ++i)
        if (needed[i]) wanted.push_back(i);

    parallel_for(wanted.size(), [&](std::size_t wi) {
        const std::size_t row = wanted[wi];
        const auto& members = rows_of[static_cast<std::size_t>(labels[row])];
        const std::size_t k = std::min(cfg.k_neighbors, members.size() - 1);
        if (k == 0) return;

        std::vector<std::pair<double, std::size_t>> dist;
        dist.reserve(members.size() - 1);
        for (std::size_t other : members) {
            if (other == row) continue;
            double d2 = 0.0;
            const double* a = &X[row * p];
            const double* b = &X[other * p];
            for (std::size_t j = 0; j < p; ++j) {
                const double d = a[j] - b[j];
                d2 += d * d;
            }
            dist.emplace_back(d2, other);
        }
        std::partial_sort(dist.begin(), dist.begin() + static_cast<std::ptrdiff_t>(k),
                          dist.end());
        knn[row].reserve(k);
        for (std::size_t i = 0; i < k; ++i) knn[row].push_back(dist[i].second);
    });

    // Originals verbatim and first, synthetics appended in plan order.
    const std::size_t total = n + plan.size();
    std::vector<FeatureTable::NumericValues> out_cols(p);
    for (std::size_t c = 0; c < p; ++c) {
        out_cols[c].reserve(total);
        const auto& col = features.numeric(names[c]);
        out_cols[c].assign(col.begin(), col.end());
    }
    std::vector<int> out_labels(labels);
    out_labels.reserve(total);

    for (const Plan& item : plan) {
        const std::size_t base_row = rows_of[item.class_code][item.base];
        const std::size_t nn_row =
            knn[base_row].empty() ? base_row : knn[base_row][item.neighbor];
        for (std::size_t c = 0; c < p; ++c) {
            const double a = X[base_row * p + c];
            const double b = X[nn_row * p + c];
            out_cols[c].push_back(a + item.u * (b - a));
        }
        out_labels.push_back(item.class_code);
    }

    SmoteResult result;
    for (std::size_t c = 0; c < p; ++c)
        result.features.add_numeric(names[c], std::move(out_cols[c]));
    result.labels = std::move(out_labels);
    return result;
}

}  // namespace ddosml
