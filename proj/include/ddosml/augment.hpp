#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "ddosml/table.hpp"

namespace ddosml {

// Valid ranges for the synthetic radio measurements.
inline constexpr double kRsrpMinDbm = -140.0;
inline constexpr double kRsrpMaxDbm = -44.0;
inline constexpr double kRsrqMinDb = -19.5;
inline constexpr double kRsrqMaxDb = -3.0;

inline constexpr const char* kRsrpColumn = "5G_RSRP";
inline constexpr const char* kRsrqColumn = "5G_RSRQ";
inline constexpr const char* kLatencyColumn = "5G_Latency";
inline constexpr const char* kLatencyLabelColumn = "5G_Latency_Label";

enum class LatencyQuality { good, bad };

struct AugmentConfig {
    double threshold_ms = 30.0;
    std::pair<double, double> benign_latency{5.0, 25.0};
    std::pair<double, double> attack_latency{20.0, 120.0};
    std::uint64_t seed = 0;
    std::string label_column = "Label";

    // Coupled mode adds latency proportional to the row's percentile in
    // `coupling_column`, giving the latency target learnable signal from the
    // flow features. Off by default: the synthetic telemetry is independent
    // noise, like the near-chance task it stands in for.
    bool coupled = false;
    double coupling_ms = 40.0;
    std::string coupling_column = "Flow Packets/s";
};

/// good iff latency_ms < threshold_ms (strict: exactly 30 ms is bad).
/// Throws NonPositiveLatencyError when latency_ms <= 0.
LatencyQuality quality_label(double latency_ms, double threshold_ms);

const char* to_string(LatencyQuality q);

/// Appends 5G_RSRP, 5G_RSRQ, 5G_Latency and the derived string label column.
/// Latency is uniform in benign_latency for BENIGN rows and attack_latency
/// otherwise; RSRP/RSRQ are uniform over their physical ranges. Per-row
/// counter-based draws make the result identical however rows are scheduled.
FeatureTable augment(const FeatureTable& table, const AugmentConfig& cfg);

}  // namespace ddosml
