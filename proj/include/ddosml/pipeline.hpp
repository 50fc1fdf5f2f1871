#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ddosml/augment.hpp"
#include "ddosml/ingest.hpp"
#include "ddosml/models.hpp"
#include "ddosml/preprocess.hpp"
#include "ddosml/regression_tree.hpp"
#include "ddosml/report.hpp"
#include "ddosml/smote.hpp"
#include "ddosml/synthgen.hpp"

namespace ddosml {

enum class PipelineMode { default_mode, paper_faithful };

/// Every tunable of a run. Stage seeds left unset derive from the master
/// seed ("augment", "split", "smote", "generate", "model:<task>:<name>"
/// substreams), so one master seed pins the whole run while an explicit
/// stage seed overrides just that stage.
struct PipelineConfig {
    PipelineMode mode = PipelineMode::default_mode;
    std::uint64_t master_seed = 0;
    std::string output_dir = "out";
    std::size_t threads = 0;  // 0 = hardware default
    bool emit_charts = true;

    // Exactly one data source.
    std::optional<IngestSpec> ingest;
    std::optional<GenSpec> generate;
    std::optional<std::uint64_t> generate_seed;

    AugmentConfig augment;
    std::optional<std::uint64_t> augment_seed;

    std::vector<std::string> drop{"Unnamed: 0", "Source Port", "Destination Port"};
    CleanPolicy clean_policy = CleanPolicy::drop_rows;

    SplitSpec split;
    std::optional<std::uint64_t> split_seed;

    SmoteConfig smote;
    std::optional<std::uint64_t> smote_seed;

    std::size_t k_best = 40;
    std::size_t rfe_final = 20;
    RegressionTreeParams rfe_tree{8, 5};
    std::string selection_scoring = "f_regression";  // or "anova_f"

    struct ModelEntry {
        ModelKind kind;
        nlohmann::ordered_json hyper = nlohmann::ordered_json::object();
        std::optional<std::uint64_t> seed;
    };
    std::vector<ModelEntry> models;  // empty = the full eight-model suite
};

/// Parses and validates a config file; error messages carry field paths.
PipelineConfig config_from_json(const nlohmann::json& j);
PipelineConfig load_config(const std::string& path);

/// Snapshot embedded in the manifest. Excludes execution-environment fields
/// (output_dir, threads) so reruns into fresh directories emit identical
/// bytes.
nlohmann::ordered_json config_snapshot(const PipelineConfig& cfg);

/// Rejects invalid configs before any work (field-path messages).
void validate_config(const PipelineConfig& cfg);

/// Runs the full pipeline and writes every artifact under cfg.output_dir:
/// manifest.json, plot_data.csv, charts/, models/, data/ (per-task test
/// sets) and transforms/ (encoders, scaler).
RunManifest run_pipeline(const PipelineConfig& cfg);

}  // namespace ddosml
