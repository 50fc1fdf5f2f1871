#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "ddosml/metrics.hpp"

namespace ddosml {

struct ModelReport {
    std::string name;
    nlohmann::ordered_json hyperparameters;
    std::uint64_t seed_ddos = 0;
    std::uint64_t seed_latency = 0;
    ScoreSet ddos;     // 13-class attack-type task
    ScoreSet latency;  // binary latency-quality task
};

struct TaskSummary {
    std::string task;  // "ddos" or "latency"
    std::vector<std::string> classes;
    std::vector<std::string> k_best;
    std::vector<std::string> survivors;
    std::size_t train_rows = 0;
    std::size_t test_rows = 0;
};

/// Everything a run reports: config snapshot, seeds, mode, selections and
/// per-model scores. Serialization is byte-deterministic for a fixed run, so
/// two runs with one seed diff as identical files.
struct RunManifest {
    std::string mode = "default";
    std::uint64_t master_seed = 0;
    std::string averaging = "macro";
    nlohmann::ordered_json config = nlohmann::ordered_json::object();
    nlohmann::ordered_json stage_seeds = nlohmann::ordered_json::object();
    nlohmann::ordered_json data = nlohmann::ordered_json::object();
    std::vector<std::string> warnings;
    std::vector<TaskSummary> tasks;
    std::vector<ModelReport> models;
};

nlohmann::ordered_json manifest_to_json(const RunManifest& manifest);
RunManifest manifest_from_json(const nlohmann::json& j);

/// Plot-data table behind the comparison charts: model,task,metric,value.
std::string plot_data_csv(const RunManifest& manifest);

/// Static grouped bar chart (SVG) of the four scores per model for one task.
std::string score_chart_svg(const RunManifest& manifest, const std::string& task);

struct EmitOptions {
    bool charts = true;
};

/// Writes manifest.json, plot_data.csv and the two charts under `out_dir`.
/// Throws EmptyManifestError when there are no model reports.
void emit(const RunManifest& manifest, const std::string& out_dir,
          const EmitOptions& options = {});

}  // namespace ddosml
