// ddosml — synthetic-flow generation, the full train/evaluate pipeline,
// model re-scoring and dataset inspection from one binary.

#include <cstdio>
#include <cstdlib>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ddosml/csv.hpp"
#include "ddosml/errors.hpp"
#include "ddosml/ingest.hpp"
#include "ddosml/metrics.hpp"
#include "ddosml/models.hpp"
#include "ddosml/pipeline.hpp"
#include "ddosml/synthgen.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitRuntime = 2;

struct GenerateArgs {
    std::string out;
    std::string preset;
    std::vector<std::string> rows_per_class;
    double separability = -1.0;
    std::uint64_t seed = 0;
    double fault_fraction = 0.0;
};

int run_generate(const GenerateArgs& args) {
    nlohmann::json gen = nlohmann::json::object();
    if (!args.preset.empty()) gen["preset"] = args.preset;
    if (!args.rows_per_class.empty()) {
        nlohmann::json rows = nlohmann::json::object();
        for (const std::string& item : args.rows_per_class) {
            const std::size_t eq = item.find('=');
            if (eq == std::string::npos)
                throw ddosml::ValidationError("--rows-per-class", "expected LABEL=COUNT");
            rows[item.substr(0, eq)] = std::stoull(item.substr(eq + 1));
        }
        gen["rows_per_class"] = rows;
    }
    if (args.separability >= 0.0) gen["separability"] = args.separability;
    if (args.fault_fraction > 0.0) gen["fault_fraction"] = args.fault_fraction;

    nlohmann::json cfg = {{"source", {{"generate", gen}}}};
    ddosml::PipelineConfig parsed = ddosml::config_from_json(cfg);
    ddosml::GenSpec spec = *parsed.generate;
    spec.seed = args.seed;

    const ddosml::FeatureTable table = ddosml::generate(spec);
    ddosml::write_csv(table, args.out);
    std::printf("wrote %zu rows x %zu columns to %s\n", table.n_rows(), table.n_columns(),
                args.out.c_str());
    return kExitOk;
}

void print_scores(const std::string& name, const ddosml::ScoreSet& s) {
    std::printf("%-22s accuracy=%.4f precision=%.4f recall=%.4f f1=%.4f\n", name.c_str(),
                s.accuracy, s.precision_macro, s.recall_macro, s.f1_macro);
}

int run_run(const std::string& config_path, const std::string& mode_override,
            std::uint64_t seed_override, bool seed_set, const std::string& out_override,
            std::size_t threads) {
    ddosml::PipelineConfig cfg = [&] {
        try {
            return ddosml::load_config(config_path);
        } catch (const ddosml::IoError& e) {
            throw ddosml::ValidationError("--config", e.what());
        }
    }();
    if (!mode_override.empty()) {
        if (mode_override == "default")
            cfg.mode = ddosml::PipelineMode::default_mode;
        else if (mode_override == "paper_faithful")
            cfg.mode = ddosml::PipelineMode::paper_faithful;
        else
            throw ddosml::ValidationError("--mode", "expected default or paper_faithful");
    }
    if (seed_set) cfg.master_seed = seed_override;
    if (const char* env = std::getenv("DDOSML_OUTPUT_DIR"); env != nullptr && *env != '\0')
        cfg.output_dir = env;
    if (!out_override.empty()) cfg.output_dir = out_override;
    if (threads > 0) cfg.threads = threads;

    const ddosml::RunManifest manifest = ddosml::run_pipeline(cfg);

    std::printf("mode=%s master_seed=%llu averaging=%s\n", manifest.mode.c_str(),
                static_cast<unsigned long long>(manifest.master_seed),
                manifest.averaging.c_str());
    for (const std::string& w : manifest.warnings) std::printf("warning: %s\n", w.c_str());
    for (const char* task : {"ddos", "latency"}) {
        std::printf("--- %s task ---\n", task);
        for (const ddosml::ModelReport& r : manifest.models)
            print_scores(r.name, std::string(task) == "ddos" ? r.ddos : r.latency);
    }
    std::printf("artifacts under %s\n", cfg.output_dir.c_str());
    return kExitOk;
}

int run_score(const std::string& model_path, const std::string& data_path,
              const std::string& code_column, const std::string& label_column) {
    const ddosml::TrainedModel model = ddosml::TrainedModel::load(model_path);
    const ddosml::FeatureTable data = ddosml::read_csv(data_path, label_column);
    if (!data.has_column(code_column))
        throw ddosml::ValidationError("--code-column",
                                      "column '" + code_column + "' not in " + data_path);

    std::vector<int> y_true;
    for (double v : data.numeric(code_column)) y_true.push_back(static_cast<int>(v));
    const std::vector<int> pred = model.predict(data);
    const ddosml::ScoreSet s =
        ddosml::scores(ddosml::confusion(y_true, pred, model.classes().size()));
    print_scores(model_path, s);
    return kExitOk;
}

int run_inspect(const std::string& data_path, const std::string& label_column,
                std::size_t cap) {
    const ddosml::FeatureTable table = ddosml::load_csv(data_path, cap, label_column);
    const auto counts = ddosml::label_counts(table, label_column);
    std::printf("%zu rows, %zu columns, %zu classes\n", table.n_rows(), table.n_columns(),
                counts.size());
    for (const auto& [label, n] : counts) {
        const double share =
            100.0 * static_cast<double>(n) / static_cast<double>(table.n_rows());
        std::printf("%-18s %10zu  %6.2f%%\n", label.c_str(), n, share);
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"DDoS attack-type and 5G latency-quality classification pipeline"};
    app.require_subcommand(1);

    GenerateArgs gen_args;
    CLI::App* gen = app.add_subcommand("generate", "write a synthetic flow CSV");
    gen->add_option("--out", gen_args.out, "output CSV path")->required();
    gen->add_option("--preset", gen_args.preset, "paper or paper_scaled");
    gen->add_option("--rows-per-class", gen_args.rows_per_class,
                    "LABEL=COUNT (repeatable, overrides the preset counts)");
    gen->add_option("--separability", gen_args.separability, "class separability in [0,1]");
    gen->add_option("--seed", gen_args.seed, "generator seed");
    gen->add_option("--fault-fraction", gen_args.fault_fraction,
                    "fraction of rows given non-finite rate values");

    std::string run_config, run_mode, run_out;
    std::uint64_t run_seed = 0;
    std::size_t run_threads = 0;
    CLI::App* run = app.add_subcommand("run", "run the full pipeline from a config file");
    run->add_option("--config", run_config, "pipeline config (JSON)")->required();
    run->add_option("--mode", run_mode, "default or paper_faithful (overrides config)");
    CLI::Option* seed_opt = run->add_option("--seed", run_seed, "master seed (overrides config)");
    run->add_option("--out", run_out, "output directory (overrides config and env)");
    run->add_option("--threads", run_threads, "worker thread cap");

    std::string score_model, score_data, score_code = "ClassCode", score_label = "Label";
    CLI::App* score = app.add_subcommand("score", "re-score a saved model on a CSV test set");
    score->add_option("--model", score_model, "model JSON path")->required();
    score->add_option("--data", score_data, "test CSV (as written under <out>/data)")->required();
    score->add_option("--code-column", score_code, "numeric column with true class codes");
    score->add_option("--label-column", score_label, "string label column in the CSV");

    std::string inspect_data, inspect_label = "Label";
    std::size_t inspect_cap = std::numeric_limits<std::size_t>::max();
    CLI::App* inspect = app.add_subcommand("inspect", "print the label distribution of a CSV");
    inspect->add_option("--data", inspect_data, "CSV path")->required();
    inspect->add_option("--label-column", inspect_label, "label column name");
    inspect->add_option("--cap", inspect_cap, "read at most this many rows");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (gen->parsed()) return run_generate(gen_args);
        if (run->parsed())
            return run_run(run_config, run_mode, run_seed, !seed_opt->empty(), run_out,
                           run_threads);
        if (score->parsed()) return run_score(score_model, score_data, score_code, score_label);
        if (inspect->parsed()) return run_inspect(inspect_data, inspect_label, inspect_cap);
    } catch (const ddosml::ValidationError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return kExitUsage;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitRuntime;
    }
    return kExitUsage;
}
