#include "ddosml/synthgen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ddosml/errors.hpp"
#include "ddosml/rng.hpp"

namespace ddosml {

namespace {

// CIC-DDoS2019 day-1 header, 88 columns. Everything except the ports and the
// label is generated (and ingested) as numeric.
const char* kSchema[] = {
    "Unnamed: 0", "Flow ID", "Source IP", "Source Port", "Destination IP",
    "Destination Port", "Protocol", "Timestamp", "Flow Duration",
    "Total Fwd Packets", "Total Backward Packets", "Total Length of Fwd Packets",
    "Total Length of Bwd Packets", "Fwd Packet Length Max", "Fwd Packet Length Min",
    "Fwd Packet Length Mean", "Fwd Packet Length Std", "Bwd Packet Length Max",
    "Bwd Packet Length Min", "Bwd Packet Length Mean", "Bwd Packet Length Std",
    "Flow Bytes/s", "Flow Packets/s", "Flow IAT Mean", "Flow IAT Std",
    "Flow IAT Max", "Flow IAT Min", "Fwd IAT Total", "Fwd IAT Mean",
    "Fwd IAT Std", "Fwd IAT Max", "Fwd IAT Min", "Bwd IAT Total",
    "Bwd IAT Mean", "Bwd IAT Std", "Bwd IAT Max", "Bwd IAT Min",
    "Fwd PSH Flags", "Bwd PSH Flags", "Fwd URG Flags", "Bwd URG Flags",
    "Fwd Header Length", "Bwd Header Length", "Fwd Packets/s", "Bwd Packets/s",
    "Min Packet Length", "Max Packet Length", "Packet Length Mean",
    "Packet Length Std", "Packet Length Variance", "FIN Flag Count",
    "SYN Flag Count", "RST Flag Count", "PSH Flag Count", "ACK Flag Count",
    "URG Flag Count", "CWE Flag Count", "ECE Flag Count", "Down/Up Ratio",
    "Average Packet Size", "Avg Fwd Segment Size", "Avg Bwd Segment Size",
    "Fwd Header Length.1", "Fwd Avg Bytes/Bulk", "Fwd Avg Packets/Bulk",
    "Fwd Avg Bulk Rate", "Bwd Avg Bytes/Bulk", "Bwd Avg Packets/Bulk",
    "Bwd Avg Bulk Rate", "Subflow Fwd Packets", "Subflow Fwd Bytes",
    "Subflow Bwd Packets", "Subflow Bwd Bytes", "Init_Win_bytes_forward",
    "Init_Win_bytes_backward", "act_data_pkt_fwd", "min_seg_size_forward",
    "Active Mean", "Active Std", "Active Max", "Active Min", "Idle Mean",
    "Idle Std", "Idle Max", "Idle Min", "SimillarHTTP", "Inbound", "Label",
};

constexpr double kOffsetSpread = 6.0;  // class-mean offsets in units of noise sigma

bool is_special(const std::string& name) {
    return name == "Unnamed: 0" || name == "Source Port" ||
           name == "Destination Port" || name == "Protocol" || name == "Label";
}

bool is_rate_column(const std::string& name) {
    return name.find("/s") != std::string::npos;
}

// Class/feature mean offset and per-column magnitude are hash-derived, so the
// cluster geometry is a property of the schema, not of the draw seed.
double pseudo_normal(std::uint64_t key) {
    Rng rng(key);
    return rng.next_normal();
}

double column_magnitude(const std::string& name) {
    Rng rng(derive_seed(fnv1a64("column-magnitude"), name));
    return std::exp(rng.uniform(0.0, std::log(1e4)));
}

std::vector<std::string> feature_columns(std::size_t n_features) {
    std::vector<std::string> names;
    for (const char* name : kSchema) {
        std::string s(name);
        if (s == "Source Port" || s == "Destination Port" || s == "Label") continue;
        names.push_back(std::move(s));
    }
    if (n_features < names.size()) names.resize(n_features);
    for (std::size_t i = names.size(); i < n_features; ++i)
        names.push_back("Extra Feature " + std::to_string(i + 1));
    return names;
}

std::vector<std::string> sorted_labels(const GenSpec& spec) {
    std::vector<std::string> labels;
    for (const auto& [label, n] : spec.rows_per_class) {
        if (n < 1) throw ValidationError("gen.rows_per_class", label + ": must be >= 1");
        labels.push_back(label);
    }
    return labels;  // std::map iterates sorted
}

const ClassProfile& profile_for(const GenSpec& spec, const std::string& label) {
    for (const ClassProfile& p : spec.profiles)
        if (p.label == label) return p;
    throw UnknownLabelProfileError(label);
}

void validate_profile(const ClassProfile& p) {
    auto check_range = [&](const std::pair<int, int>& r, const char* which) {
        if (r.first < 0 || r.second > 65535 || r.first > r.second)
            throw ValidationError("gen.profiles." + p.label,
                                  std::string(which) + " port range invalid");
    };
    check_range(p.src_port_range, "src");
    check_range(p.dst_port_range, "dst");
    if (p.separability < 0.0 || p.separability > 1.0)
        throw ValidationError("gen.profiles." + p.label, "separability must be in [0,1]");
    if (p.rate_scale <= 0.0)
        throw ValidationError("gen.profiles." + p.label, "rate_scale must be positive");
}

}  // namespace

const std::vector<std::string>& flow_schema() {
    static const std::vector<std::string> schema(std::begin(kSchema), std::end(kSchema));
    return schema;
}

std::vector<FaultSite> fault_sites(const GenSpec& spec) {
    std::vector<FaultSite> sites;
    if (spec.fault_fraction <= 0.0) return sites;

    std::size_t n_rows = 0;
    for (const auto& [label, n] : spec.rows_per_class) n_rows += n;
    const std::size_t per_column =
        static_cast<std::size_t>(std::llround(spec.fault_fraction * static_cast<double>(n_rows)));
    if (per_column == 0) return sites;

    const double plants[] = {std::numeric_limits<double>::infinity(),
                             std::numeric_limits<double>::quiet_NaN(),
                             -std::numeric_limits<double>::infinity()};
    for (const std::string& column : spec.fault_columns) {
        Rng rng(derive_seed(derive_seed(spec.seed, "fault-injection"), column));
        std::vector<std::size_t> rows(n_rows);
        for (std::size_t i = 0; i < n_rows; ++i) rows[i] = i;
        rng.shuffle(rows);
        for (std::size_t i = 0; i < std::min(per_column, n_rows); ++i)
            sites.push_back(FaultSite{column, rows[i], plants[i % 3]});
    }
    return sites;
}

FeatureTable generate(const GenSpec& spec) {
    const std::vector<std::string> labels = sorted_labels(spec);
    if (labels.empty()) throw ValidationError("gen.rows_per_class", "must be non-empty");
    for (const std::string& label : labels) validate_profile(profile_for(spec, label));

    const std::vector<std::string> features = feature_columns(spec.n_features);
    std::size_t n_rows = 0;
    for (const auto& [label, n] : spec.rows_per_class) n_rows += n;

    std::vector<std::vector<double>> columns(features.size());
    for (auto& c : columns) c.reserve(n_rows);
    std::vector<double> src_port, dst_port;
    src_port.reserve(n_rows);
    dst_port.reserve(n_rows);
    std::vector<std::string> label_col;
    label_col.reserve(n_rows);

    std::size_t global_row = 0;
    for (const std::string& label : labels) {
        const ClassProfile& profile = profile_for(spec, label);
        const std::size_t count = spec.rows_per_class.at(label);
        const bool benign = label == "BENIGN";
        Rng rng(derive_seed(spec.seed, label));

        // Mean offsets are fixed per (label, feature); separability scales
        // them, the seed only drives the noise.
        std::vector<double> mean(features.size(), 0.0);
        std::vector<double> magnitude(features.size(), 1.0);
        for (std::size_t f = 0; f < features.size(); ++f) {
            if (is_special(features[f])) continue;
            magnitude[f] = column_magnitude(features[f]);
            double offset = kOffsetSpread *
                            pseudo_normal(derive_seed(fnv1a64(label), features[f]));
            if (is_rate_column(features[f])) offset *= profile.rate_scale;
            mean[f] = profile.separability * offset;
        }

        for (std::size_t i = 0; i < count; ++i, ++global_row) {
            for (std::size_t f = 0; f < features.size(); ++f) {
                const std::string& name = features[f];
                if (name == "Unnamed: 0") {
                    columns[f].push_back(static_cast<double>(global_row));
                } else if (name == "Protocol") {
                    columns[f].push_back(static_cast<double>(profile.protocol_code));
                } else {
                    columns[f].push_back(magnitude[f] * (mean[f] + rng.next_normal()));
                }
            }
            if (benign) {
                src_port.push_back(rng.next_below(2) == 0 ? 80.0 : 443.0);
                dst_port.push_back(rng.next_below(2) == 0 ? 80.0 : 443.0);
            } else {
                const auto& [slo, shi] = profile.src_port_range;
                const auto& [dlo, dhi] = profile.dst_port_range;
                src_port.push_back(static_cast<double>(
                    slo + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(shi - slo + 1)))));
                dst_port.push_back(static_cast<double>(
                    dlo + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(dhi - dlo + 1)))));
            }
            label_col.push_back(label);
        }
    }

    for (const FaultSite& site : fault_sites(spec)) {
        for (std::size_t f = 0; f < features.size(); ++f) {
            if (features[f] == site.column) {
                columns[f][site.row] = site.value;
                break;
            }
        }
    }

    // Assemble in schema order: Source Port follows Source IP, Destination
    // Port follows Destination IP, label last. Truncated layouts that lack
    // the IP columns get the ports right after the remaining features.
    FeatureTable table;
    std::size_t fi = 0;
    auto emit_features_until = [&](const char* stop) {
        while (fi < features.size() && features[fi] != stop) {
            table.add_numeric(features[fi], std::move(columns[fi]));
            ++fi;
        }
        if (fi < features.size()) {
            table.add_numeric(features[fi], std::move(columns[fi]));
            ++fi;
        }
    };
    emit_features_until("Source IP");
    table.add_numeric("Source Port", std::move(src_port));
    emit_features_until("Destination IP");
    table.add_numeric("Destination Port", std::move(dst_port));
    emit_features_until("");
    table.add_text("Label", std::move(label_col));
    return table;
}

namespace {

GenSpec paper_spec_impl(std::uint64_t seed, bool scaled) {
    // Label counts as reported for the merged dataset (sum 550,000).
    const std::pair<const char*, std::size_t> counts[] = {
        {"DrDoS_SSDP", 49989}, {"Syn", 49983},          {"DrDoS_SNMP", 49975},
        {"TFTP", 49970},       {"DrDoS_NetBIOS", 49969}, {"DrDoS_UDP", 49964},
        {"DrDoS_MSSQL", 49964}, {"DrDoS_LDAP", 49961},  {"DrDoS_DNS", 49958},
        {"UDP-lag", 49454},    {"DrDoS_NTP", 49409},    {"BENIGN", 1350},
        {"WebDDoS", 54},
    };

    GenSpec spec;
    spec.seed = seed;
    for (const auto& [label, n] : counts) {
        spec.rows_per_class[label] = scaled ? std::max<std::size_t>(1, n / 100) : n;

        ClassProfile p;
        p.label = label;
        if (std::string_view(label) == "BENIGN" || std::string_view(label) == "Syn" ||
            std::string_view(label) == "WebDDoS") {
            p.protocol_code = 6;  // TCP; the reflection attacks ride UDP
        }
        p.src_port_range = {5000, 65535};
        p.dst_port_range = {1, 65535};
        if (std::string_view(label) == "WebDDoS") p.src_port_range = {1024, 65535};
        if (std::string_view(label) == "TFTP") p.rate_scale = 1.5;
        spec.profiles.push_back(std::move(p));
    }
    return spec;
}

}  // namespace

GenSpec paper_distribution_spec(std::uint64_t seed) { return paper_spec_impl(seed, false); }

GenSpec scaled_paper_distribution_spec(std::uint64_t seed) { return paper_spec_impl(seed, true); }

}  // namespace ddosml
