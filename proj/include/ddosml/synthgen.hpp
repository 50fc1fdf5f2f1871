#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ddosml/table.hpp"

namespace ddosml {

/// Per-class generation preset. Port ranges are inclusive and only apply to
/// attack classes; BENIGN rows always draw src/dst ports from {80, 443}.
/// `separability` in [0,1] scales how far this class's feature means sit
/// from the global center: 1.0 gives cleanly separable clusters, 0.0 makes
/// the class indistinguishable noise.
struct ClassProfile {
    std::string label;
    int protocol_code = 17;
    std::pair<int, int> src_port_range{5000, 65535};
    std::pair<int, int> dst_port_range{1, 65535};
    double rate_scale = 1.0;
    double separability = 1.0;
};

struct GenSpec {
    std::vector<ClassProfile> profiles;
    std::map<std::string, std::size_t> rows_per_class;
    std::size_t n_features = 85;  // numeric feature columns besides the two ports
    std::uint64_t seed = 0;

    // Optional fault injection: plants +-inf/NaN in rate columns to mirror
    // divide-by-zero-duration artifacts in the real data.
    double fault_fraction = 0.0;
    std::vector<std::string> fault_columns{"Flow Packets/s", "Flow Bytes/s"};
};

struct FaultSite {
    std::string column;
    std::size_t row;
    double value;  // the planted non-finite value
};

/// The 88 column names of a CIC-DDoS2019 day-1 file, in file order
/// (85 numeric features + Source Port + Destination Port + Label).
const std::vector<std::string>& flow_schema();

/// Generated tables use the ingest schema, draw per-class Gaussian features
/// whose means separate proportionally to the profile's separability, and
/// are byte-identical for a fixed spec. Row order is canonical: classes in
/// lexicographic label order, then generation index.
FeatureTable generate(const GenSpec& spec);

/// Where generate() plants non-finite values for this spec (empty unless
/// fault_fraction > 0). Pure function of the spec, so tests can predict the
/// injected columns exactly.
std::vector<FaultSite> fault_sites(const GenSpec& spec);

/// GenSpec with the published 13-class label distribution of the merged
/// dataset (550,000 rows total).
GenSpec paper_distribution_spec(std::uint64_t seed = 0);

/// Desk-scale variant: every class count divided by 100 (floor, minimum 1).
GenSpec scaled_paper_distribution_spec(std::uint64_t seed = 0);

}  // namespace ddosml
