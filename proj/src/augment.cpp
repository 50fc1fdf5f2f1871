#include "ddosml/augment.hpp"

#include <algorithm>
#include <cmath>

#include "ddosml/errors.hpp"
#include "ddosml/rng.hpp"

namespace ddosml {

LatencyQuality quality_label(double latency_ms, double threshold_ms) {
    if (latency_ms <= 0.0)
        throw NonPositiveLatencyError("latency must be positive, got " +
                                      std::to_string(latency_ms));
    return latency_ms < threshold_ms ? LatencyQuality::good : LatencyQuality::bad;
}

const char* to_string(LatencyQuality q) {
    return q == LatencyQuality::good ? "good" : "bad";
}

namespace {

void validate(const AugmentConfig& cfg) {
    auto check = [](const std::pair<double, double>& r, const char* which) {
        if (!(0.0 < r.first && r.first < r.second))
            throw ValidationError(std::string("augment.") + which,
                                  "range must satisfy 0 < low < high");
    };
    check(cfg.benign_latency, "benign_latency");
    check(cfg.attack_latency, "attack_latency");
}

// Rank-based percentile of each value within its column, in [0,1].
std::vector<double> percentiles(const std::vector<double>& values) {
    const std::size_t n = values.size();
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const bool fa = std::isfinite(values[a]);
        const bool fb = std::isfinite(values[b]);
        if (fa != fb) return fb;  // non-finite sorts last
        return values[a] < values[b];
    });
    std::vector<double> pct(n, 0.0);
    const double denom = n > 1 ? static_cast<double>(n - 1) : 1.0;
    for (std::size_t rank = 0; rank < n; ++rank)
        pct[order[rank]] = static_cast<double>(rank) / denom;
    return pct;
}

}  // namespace

FeatureTable augment(const FeatureTable& table, const AugmentConfig& cfg) {
    validate(cfg);
    if (!table.has_column(cfg.label_column))
        throw MissingLabelColumnError(cfg.label_column);

    const auto& labels = table.text(cfg.label_column);
    const std::size_t n = table.n_rows();

    std::vector<double> coupling(n, 0.0);
    if (cfg.coupled && table.has_column(cfg.coupling_column))
        coupling = percentiles(table.numeric(cfg.coupling_column));

    std::vector<double> rsrp(n), rsrq(n), latency(n);
    std::vector<std::string> quality(n);
    for (std::size_t i = 0; i < n; ++i) {
        Rng rng(derive_seed(cfg.seed, static_cast<std::uint64_t>(i)));
        rsrp[i] = rng.uniform(kRsrpMinDbm, kRsrpMaxDbm);
        rsrq[i] = rng.uniform(kRsrqMinDb, kRsrqMaxDb);
        const auto& range = labels[i] == "BENIGN" ? cfg.benign_latency : cfg.attack_latency;
        double ms = rng.uniform(range.first, range.second);
        if (cfg.coupled) ms += cfg.coupling_ms * coupling[i];
        latency[i] = ms;
        quality[i] = to_string(quality_label(ms, cfg.threshold_ms));
    }

    FeatureTable out = table;
    out.add_numeric(kRsrpColumn, std::move(rsrp));
    out.add_numeric(kRsrqColumn, std::move(rsrq));
    out.add_numeric(kLatencyColumn, std::move(latency));
    out.add_text(kLatencyLabelColumn, std::move(quality));
    return out;
}

}  // namespace ddosml
