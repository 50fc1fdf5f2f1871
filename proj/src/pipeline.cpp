#include "ddosml/pipeline.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>

#include "ddosml/csv.hpp"
#include "ddosml/errors.hpp"
#include "ddosml/featsel.hpp"
#include "ddosml/metrics.hpp"
#include "ddosml/parallel.hpp"
#include "ddosml/rng.hpp"

namespace ddosml {

namespace {

template <typename Fn>
auto with_stage(const std::string& stage, Fn&& fn) {
    try {
        return fn();
    } catch (const Error& e) {
        throw Error(stage + ": " + e.what());
    }
}

std::optional<std::uint64_t> optional_seed(const nlohmann::json& j, const char* key) {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return j.at(key).get<std::uint64_t>();
}

std::pair<double, double> pair_from(const nlohmann::json& j, const std::string& field) {
    if (!j.is_array() || j.size() != 2)
        throw ValidationError(field, "expected [low, high]");
    return {j.at(0).get<double>(), j.at(1).get<double>()};
}

GenSpec resolve_generate(const nlohmann::json& g) {
    GenSpec spec;
    const std::string preset = g.value("preset", "");
    if (preset == "paper") {
        spec = paper_distribution_spec();
    } else if (preset == "paper_scaled") {
        spec = scaled_paper_distribution_spec();
    } else if (!preset.empty()) {
        throw ValidationError("source.generate.preset",
                              "expected \"paper\" or \"paper_scaled\"");
    }

    if (g.contains("rows_per_class")) {
        if (preset.empty()) spec.rows_per_class.clear();
        for (const auto& [label, n] : g.at("rows_per_class").items()) {
            spec.rows_per_class[label] = n.get<std::size_t>();
            bool known = false;
            for (const ClassProfile& p : spec.profiles)
                if (p.label == label) { known = true; break; }
            if (!known) {
                ClassProfile p;
                p.label = label;
                if (label == "BENIGN") p.protocol_code = 6;
                spec.profiles.push_back(std::move(p));
            }
        }
    }
    if (spec.rows_per_class.empty())
        throw ValidationError("source.generate", "needs a preset or rows_per_class");

    if (g.contains("separability")) {
        const double s = g.at("separability").get<double>();
        if (s < 0.0 || s > 1.0)
            throw ValidationError("source.generate.separability", "must be in [0,1]");
        for (ClassProfile& p : spec.profiles) p.separability = s;
    }
    if (g.contains("n_features")) spec.n_features = g.at("n_features").get<std::size_t>();
    if (g.value("faults", false)) spec.fault_fraction = 0.005;
    if (g.contains("fault_fraction")) {
        spec.fault_fraction = g.at("fault_fraction").get<double>();
        if (spec.fault_fraction < 0.0 || spec.fault_fraction > 1.0)
            throw ValidationError("source.generate.fault_fraction", "must be in [0,1]");
    }
    return spec;
}

nlohmann::ordered_json generate_snapshot(const GenSpec& spec) {
    nlohmann::ordered_json j;
    auto& rows = j["rows_per_class"] = nlohmann::ordered_json::object();
    for (const auto& [label, n] : spec.rows_per_class) rows[label] = n;
    j["n_features"] = spec.n_features;
    j["fault_fraction"] = spec.fault_fraction;
    auto& profiles = j["profiles"] = nlohmann::ordered_json::array();
    std::vector<ClassProfile> ordered = spec.profiles;
    std::sort(ordered.begin(), ordered.end(),
              [](const ClassProfile& a, const ClassProfile& b) { return a.label < b.label; });
    for (const ClassProfile& p : ordered) {
        profiles.push_back({{"label", p.label},
                            {"protocol", p.protocol_code},
                            {"src_ports", {p.src_port_range.first, p.src_port_range.second}},
                            {"dst_ports", {p.dst_port_range.first, p.dst_port_range.second}},
                            {"rate_scale", p.rate_scale},
                            {"separability", p.separability}});
    }
    return j;
}

}  // namespace

PipelineConfig config_from_json(const nlohmann::json& j) {
    if (j.contains("format") && j.at("format").get<std::string>() != "ddosml.config/1")
        throw ValidationError("format", "unrecognized config format tag");

    PipelineConfig cfg;
    const std::string mode = j.value("mode", "default");
    if (mode == "default")
        cfg.mode = PipelineMode::default_mode;
    else if (mode == "paper_faithful")
        cfg.mode = PipelineMode::paper_faithful;
    else
        throw ValidationError("mode", "expected \"default\" or \"paper_faithful\"");

    cfg.master_seed = j.value("master_seed", std::uint64_t{0});
    cfg.output_dir = j.value("output_dir", std::string("out"));
    cfg.threads = j.value("threads", std::size_t{0});
    cfg.emit_charts = j.value("emit_charts", true);

    if (!j.contains("source")) throw ValidationError("source", "required");
    const auto& source = j.at("source");
    const bool has_gen = source.contains("generate");
    const bool has_ingest = source.contains("ingest");
    if (has_gen == has_ingest)
        throw ValidationError("source", "exactly one of generate/ingest is required");
    if (has_gen) {
        cfg.generate = resolve_generate(source.at("generate"));
        cfg.generate_seed = optional_seed(source.at("generate"), "seed");
    } else {
        const auto& ing = source.at("ingest");
        IngestSpec spec;
        if (!ing.contains("files") || ing.at("files").empty())
            throw ValidationError("source.ingest.files", "must be non-empty");
        for (const auto& f : ing.at("files"))
            spec.files.push_back({f.at("path").get<std::string>(), f.value("label", "")});
        if (ing.contains("per_file_cap")) {
            spec.per_file_cap = ing.at("per_file_cap").get<std::size_t>();
            if (spec.per_file_cap < 1)
                throw ValidationError("source.ingest.per_file_cap", "must be >= 1");
        }
        spec.label_column = ing.value("label_column", std::string("Label"));
        cfg.ingest = std::move(spec);
    }

    const std::string label_column = cfg.ingest ? cfg.ingest->label_column : "Label";
    cfg.augment.label_column = label_column;
    if (j.contains("augment")) {
        const auto& a = j.at("augment");
        cfg.augment.threshold_ms = a.value("threshold_ms", 30.0);
        if (a.contains("benign_latency"))
            cfg.augment.benign_latency =
                pair_from(a.at("benign_latency"), "augment.benign_latency");
        if (a.contains("attack_latency"))
            cfg.augment.attack_latency =
                pair_from(a.at("attack_latency"), "augment.attack_latency");
        cfg.augment.coupled = a.value("coupled", false);
        cfg.augment.coupling_ms = a.value("coupling_ms", 40.0);
        cfg.augment_seed = optional_seed(a, "seed");
    }

    if (j.contains("clean")) {
        const auto& c = j.at("clean");
        if (c.contains("drop")) cfg.drop = c.at("drop").get<std::vector<std::string>>();
        const std::string policy = c.value("policy", "drop_rows");
        if (policy == "drop_rows")
            cfg.clean_policy = CleanPolicy::drop_rows;
        else if (policy == "median_impute")
            cfg.clean_policy = CleanPolicy::median_impute;
        else
            throw ValidationError("clean.policy", "expected drop_rows or median_impute");
    }

    cfg.split.stratify_on = label_column;
    if (j.contains("split")) {
        const auto& s = j.at("split");
        cfg.split.test_fraction = s.value("test_fraction", 0.2);
        if (!(cfg.split.test_fraction > 0.0 && cfg.split.test_fraction < 1.0))
            throw ValidationError("split.test_fraction", "must be in (0,1)");
        cfg.split.stratify_on = s.value("stratify_on", label_column);
        cfg.split_seed = optional_seed(s, "seed");
    }

    if (j.contains("smote")) {
        const auto& s = j.at("smote");
        cfg.smote.k_neighbors = s.value("k_neighbors", std::size_t{5});
        if (cfg.smote.k_neighbors < 1)
            throw ValidationError("smote.k_neighbors", "must be >= 1");
        cfg.smote_seed = optional_seed(s, "seed");
    }

    if (j.contains("select")) {
        const auto& s = j.at("select");
        cfg.k_best = s.value("k_best", std::size_t{40});
        cfg.rfe_final = s.value("rfe_final", std::size_t{20});
        cfg.selection_scoring = s.value("scoring", std::string("f_regression"));
        if (cfg.selection_scoring != "f_regression" && cfg.selection_scoring != "anova_f")
            throw ValidationError("select.scoring", "expected f_regression or anova_f");
        cfg.rfe_tree.max_depth = s.value("tree_max_depth", std::size_t{8});
        cfg.rfe_tree.min_leaf = s.value("tree_min_leaf", std::size_t{5});
    }

    if (j.contains("models")) {
        for (const auto& mj : j.at("models")) {
            PipelineConfig::ModelEntry entry;
            entry.kind = model_kind_from_string(mj.at("kind").get<std::string>());
            if (mj.contains("hyperparameters")) entry.hyper = mj.at("hyperparameters");
            entry.seed = optional_seed(mj, "seed");
            cfg.models.push_back(std::move(entry));
        }
        if (cfg.models.empty()) throw ValidationError("models", "must be non-empty when given");
    }

    validate_config(cfg);
    return cfg;
}

PipelineConfig load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in.is_open()) throw IoError("cannot open config " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError("config", std::string("invalid JSON: ") + e.what());
    }
    return config_from_json(j);
}

void validate_config(const PipelineConfig& cfg) {
    if (cfg.rfe_final > cfg.k_best)
        throw ValidationError("select.rfe_final",
                              "must be <= select.k_best (" + std::to_string(cfg.rfe_final) +
                                  " > " + std::to_string(cfg.k_best) + ")");
    if (cfg.k_best < 1) throw ValidationError("select.k_best", "must be >= 1");
    if (cfg.rfe_final < 1) throw ValidationError("select.rfe_final", "must be >= 1");
    const bool has_gen = cfg.generate.has_value();
    const bool has_ingest = cfg.ingest.has_value();
    if (has_gen == has_ingest)
        throw ValidationError("source", "exactly one of generate/ingest is required");
}

nlohmann::ordered_json config_snapshot(const PipelineConfig& cfg) {
    nlohmann::ordered_json j;
    j["format"] = "ddosml.config/1";
    j["mode"] = cfg.mode == PipelineMode::default_mode ? "default" : "paper_faithful";
    j["master_seed"] = cfg.master_seed;

    auto& source = j["source"] = nlohmann::ordered_json::object();
    if (cfg.generate) source["generate"] = generate_snapshot(*cfg.generate);
    if (cfg.ingest) {
        auto& ing = source["ingest"] = nlohmann::ordered_json::object();
        auto& files = ing["files"] = nlohmann::ordered_json::array();
        for (const IngestSpec::File& f : cfg.ingest->files)
            files.push_back({{"path", f.path}, {"label", f.expected_label}});
        ing["per_file_cap"] = cfg.ingest->per_file_cap;
        ing["label_column"] = cfg.ingest->label_column;
    }

    j["augment"] = {{"threshold_ms", cfg.augment.threshold_ms},
                    {"benign_latency",
                     {cfg.augment.benign_latency.first, cfg.augment.benign_latency.second}},
                    {"attack_latency",
                     {cfg.augment.attack_latency.first, cfg.augment.attack_latency.second}},
                    {"coupled", cfg.augment.coupled},
                    {"coupling_ms", cfg.augment.coupling_ms}};
    j["clean"] = {{"drop", cfg.drop},
                  {"policy", cfg.clean_policy == CleanPolicy::drop_rows ? "drop_rows"
                                                                        : "median_impute"}};
    j["split"] = {{"test_fraction", cfg.split.test_fraction},
                  {"stratify_on", cfg.split.stratify_on}};
    j["smote"] = {{"k_neighbors", cfg.smote.k_neighbors}};
    j["select"] = {{"k_best", cfg.k_best},
                   {"rfe_final", cfg.rfe_final},
                   {"scoring", cfg.selection_scoring},
                   {"tree_max_depth", cfg.rfe_tree.max_depth},
                   {"tree_min_leaf", cfg.rfe_tree.min_leaf}};

    auto& models = j["models"] = nlohmann::ordered_json::array();
    for (const ModelSpec& spec : [&] {
             std::vector<ModelSpec> out;
             if (cfg.models.empty()) {
                 for (ModelKind kind : all_model_kinds()) out.push_back(ModelSpec{kind, {}, 0});
             } else {
                 for (const auto& entry : cfg.models)
                     out.push_back(ModelSpec{entry.kind, entry.hyper, 0});
             }
             return out;
         }()) {
        models.push_back({{"kind", to_string(spec.kind)},
                          {"hyperparameters", effective_hyperparameters(spec)}});
    }
    return j;
}

namespace {

struct TaskDef {
    std::string name;        // "ddos" | "latency"
    std::string label_col;   // column carrying the class strings
    std::vector<std::string> exclude;  // features hidden from this task
};

struct StageSeeds {
    std::uint64_t generate;
    std::uint64_t augment;
    std::uint64_t split;
    std::uint64_t smote;
};

std::vector<double> as_doubles(const std::vector<int>& codes) {
    std::vector<double> out(codes.size());
    for (std::size_t i = 0; i < codes.size(); ++i) out[i] = static_cast<double>(codes[i]);
    return out;
}

std::vector<std::string> minus(const std::vector<std::string>& names,
                               const std::vector<std::string>& exclude) {
    std::vector<std::string> out;
    for (const std::string& n : names)
        if (std::find(exclude.begin(), exclude.end(), n) == exclude.end()) out.push_back(n);
    return out;
}

struct TaskResult {
    TaskSummary summary;
    std::vector<std::pair<std::string, ScoreSet>> model_scores;
};

void save_test_set(const std::string& path, const FeatureTable& test,
                   const std::vector<std::string>& survivors, const std::vector<int>& y_test,
                   const LabelEncoder& enc) {
    FeatureTable out = test.select_columns(survivors);
    out.add_numeric("ClassCode", as_doubles(y_test));
    out.add_text("Label", enc.decode(y_test));
    write_csv(out, path);
}

std::vector<ModelSpec> resolve_models(const PipelineConfig& cfg, const std::string& task,
                                      std::uint64_t master_seed) {
    std::vector<ModelSpec> specs;
    auto seed_for = [&](ModelKind kind, const std::optional<std::uint64_t>& explicit_seed) {
        return explicit_seed ? *explicit_seed
                             : derive_seed(master_seed, "model:" + task + ":" + to_string(kind));
    };
    if (cfg.models.empty()) {
        for (ModelKind kind : all_model_kinds())
            specs.push_back(ModelSpec{kind, nlohmann::ordered_json::object(),
                                      seed_for(kind, std::nullopt)});
    } else {
        for (const auto& entry : cfg.models)
            specs.push_back(ModelSpec{entry.kind, entry.hyper, seed_for(entry.kind, entry.seed)});
    }
    return specs;
}

TaskResult run_task(const PipelineConfig& cfg, const TaskDef& task, const FeatureTable& train,
                    const FeatureTable& test, const LabelEncoder& enc,
                    const StageSeeds& seeds, const std::string& out_dir) {
    const std::vector<int> y_train =
        with_stage(task.name + ".encode", [&] { return enc.encode(train.text(task.label_col)); });
    const std::vector<int> y_test =
        with_stage(task.name + ".encode", [&] { return enc.encode(test.text(task.label_col)); });

    const std::vector<std::string> features = minus(train.numeric_names(), task.exclude);
    if (cfg.k_best > features.size())
        throw ValidationError("select.k_best",
                              "only " + std::to_string(features.size()) +
                                  " features available for task " + task.name);

    SmoteConfig smote_cfg = cfg.smote;
    smote_cfg.seed = derive_seed(seeds.smote, task.name);
    const SmoteResult balanced = with_stage(task.name + ".smote", [&] {
        return smote(train.select_columns(features), y_train, smote_cfg);
    });

    const std::vector<double> target = as_doubles(balanced.labels);
    const std::vector<std::string> k_best = with_stage(task.name + ".k_best", [&] {
        const std::vector<FScore> scores =
            cfg.selection_scoring == "anova_f"
                ? anova_f_scores(balanced.features, balanced.labels)
                : f_regression_scores(balanced.features, target);
        return select_k_best(scores, cfg.k_best);
    });
    const RfeTrace trace = with_stage(task.name + ".rfe", [&] {
        return rfe(balanced.features.select_columns(k_best), target, cfg.rfe_final,
                   cfg.rfe_tree);
    });
    const std::vector<std::string>& survivors = trace.survivors;

    const Matrix X_train = to_matrix(balanced.features, survivors);
    const Matrix X_test = to_matrix(test, survivors);

    TaskResult result;
    result.summary.task = task.name;
    result.summary.classes = enc.classes();
    result.summary.k_best = k_best;
    result.summary.survivors = survivors;
    result.summary.train_rows = X_train.rows;
    result.summary.test_rows = X_test.rows;

    std::filesystem::create_directories(out_dir + "/models");
    for (const ModelSpec& spec : resolve_models(cfg, task.name, cfg.master_seed)) {
        const std::string name = to_string(spec.kind);
        const TrainedModel model = with_stage(task.name + ".fit." + name, [&] {
            return TrainedModel::fit(spec, X_train, balanced.labels, survivors);
        });
        const std::vector<int> pred = with_stage(task.name + ".predict." + name,
                                                 [&] { return model.predict(X_test); });
        const ScoreSet score_set = scores(confusion(y_test, pred, enc.n_classes()));
        result.model_scores.emplace_back(name, score_set);
        model.save(out_dir + "/models/" + task.name + "__" + name + ".json");
    }

    std::filesystem::create_directories(out_dir + "/data");
    save_test_set(out_dir + "/data/test_" + task.name + ".csv", test, survivors, y_test, enc);
    return result;
}

void write_text(const std::string& path, const std::string& body) {
    std::ofstream out(path, std::ios::binary);
    if (!out.is_open()) throw IoError("cannot open " + path + " for writing");
    out << body;
}

}  // namespace

RunManifest run_pipeline(const PipelineConfig& cfg) {
    validate_config(cfg);
    if (cfg.threads > 0) set_max_threads(cfg.threads);

    const StageSeeds seeds{
        cfg.generate_seed ? *cfg.generate_seed : derive_seed(cfg.master_seed, "generate"),
        cfg.augment_seed ? *cfg.augment_seed : derive_seed(cfg.master_seed, "augment"),
        cfg.split_seed ? *cfg.split_seed : derive_seed(cfg.master_seed, "split"),
        cfg.smote_seed ? *cfg.smote_seed : derive_seed(cfg.master_seed, "smote"),
    };
    const std::string label_col = cfg.ingest ? cfg.ingest->label_column : "Label";
    const std::string out_dir = cfg.output_dir;
    std::filesystem::create_directories(out_dir);

    RunManifest manifest;
    manifest.mode = cfg.mode == PipelineMode::default_mode ? "default" : "paper_faithful";
    manifest.master_seed = cfg.master_seed;
    manifest.config = config_snapshot(cfg);
    manifest.stage_seeds = {{"augment", seeds.augment},
                            {"split", seeds.split},
                            {"smote", seeds.smote}};
    if (cfg.generate) manifest.stage_seeds["generate"] = seeds.generate;
    if (cfg.mode == PipelineMode::paper_faithful)
        manifest.warnings.push_back(
            "paper_faithful mode oversamples and scales before the train/test split; "
            "test scores leak training information");

    // source
    FeatureTable table = with_stage("source", [&] {
        if (cfg.ingest) return run_ingest(*cfg.ingest);
        GenSpec spec = *cfg.generate;
        spec.seed = seeds.generate;
        return generate(spec);
    });
    manifest.data["n_rows_source"] = table.n_rows();
    {
        auto& counts = manifest.data["label_counts"] = nlohmann::ordered_json::object();
        for (const auto& [label, n] : label_counts(table, label_col)) counts[label] = n;
    }

    // augment
    AugmentConfig aug = cfg.augment;
    aug.seed = seeds.augment;
    aug.label_column = label_col;
    table = with_stage("augment", [&] { return augment(table, aug); });
    {
        auto& counts = manifest.data["latency_label_counts"] = nlohmann::ordered_json::object();
        for (const auto& [label, n] : label_counts(table, kLatencyLabelColumn))
            counts[label] = n;
    }

    // encode
    const LabelEncoder ddos_enc =
        with_stage("encode", [&] { return LabelEncoder::fit(table.text(label_col)); });
    const LabelEncoder latency_enc = with_stage(
        "encode", [&] { return LabelEncoder::fit(table.text(kLatencyLabelColumn)); });

    // clean: the configured drop list plus any column that is entirely
    // non-finite (an all-text column in the source data parses to all-NaN
    // and would otherwise wipe every row under drop_rows).
    std::vector<std::string> drop = cfg.drop;
    std::vector<std::string> auto_dropped;
    for (const std::string& name : table.numeric_names()) {
        if (std::find(drop.begin(), drop.end(), name) != drop.end()) continue;
        const ColumnStats s = table.stats(name);
        if (table.n_rows() > 0 && s.n_nonfinite == table.n_rows()) {
            drop.push_back(name);
            auto_dropped.push_back(name);
        }
    }
    table = with_stage("clean",
                       [&] { return drop_and_clean(table, drop, cfg.clean_policy); });
    manifest.data["auto_dropped_all_nonfinite"] = auto_dropped;
    manifest.data["n_rows_after_clean"] = table.n_rows();

    const std::vector<TaskDef> tasks = {
        {"ddos", label_col, {}},
        // The latency label is a threshold on 5G_Latency; the column itself
        // would hand the answer to the latency models.
        {"latency", kLatencyLabelColumn, {kLatencyColumn}},
    };

    std::vector<TaskResult> results;
    std::filesystem::create_directories(out_dir + "/transforms");
    write_text(out_dir + "/transforms/ddos_encoder.json", ddos_enc.to_json() + "\n");
    write_text(out_dir + "/transforms/latency_encoder.json", latency_enc.to_json() + "\n");

    if (cfg.mode == PipelineMode::default_mode) {
        SplitSpec split_spec = cfg.split;
        split_spec.seed = seeds.split;
        const Split split =
            with_stage("split", [&] { return stratified_split(table, split_spec); });
        const Scaler scaler = with_stage("scale", [&] {
            return Scaler::fit(split.train, split.train.numeric_names());
        });
        const FeatureTable train = scaler.apply(split.train);
        const FeatureTable test = scaler.apply(split.test);
        write_text(out_dir + "/transforms/scaler.json", scaler.to_json() + "\n");

        for (const TaskDef& task : tasks) {
            const LabelEncoder& enc = task.name == "ddos" ? ddos_enc : latency_enc;
            results.push_back(run_task(cfg, task, train, test, enc, seeds, out_dir));
        }
    } else {
        for (const TaskDef& task : tasks) {
            const LabelEncoder& enc = task.name == "ddos" ? ddos_enc : latency_enc;
            const std::vector<int> y_full = with_stage(
                task.name + ".encode", [&] { return enc.encode(table.text(task.label_col)); });
            const std::vector<std::string> features =
                minus(table.numeric_names(), task.exclude);

            SmoteConfig smote_cfg = cfg.smote;
            smote_cfg.seed = derive_seed(seeds.smote, task.name);
            const SmoteResult balanced = with_stage(task.name + ".smote", [&] {
                return smote(table.select_columns(features), y_full, smote_cfg);
            });

            const Scaler scaler = with_stage(task.name + ".scale", [&] {
                return Scaler::fit(balanced.features, features);
            });
            write_text(out_dir + "/transforms/scaler_" + task.name + ".json",
                       scaler.to_json() + "\n");

            FeatureTable full = scaler.apply(balanced.features);
            full.add_text(task.label_col, enc.decode(balanced.labels));

            SplitSpec split_spec = cfg.split;
            split_spec.stratify_on = task.label_col;
            split_spec.seed = derive_seed(seeds.split, task.name);
            const Split split =
                with_stage(task.name + ".split", [&] { return stratified_split(full, split_spec); });

            results.push_back(
                run_task(cfg, task, split.train, split.test, enc, seeds, out_dir));
        }
    }

    // assemble per-model reports in suite order
    for (const TaskResult& r : results) manifest.tasks.push_back(r.summary);
    const std::vector<ModelSpec> ddos_suite = resolve_models(cfg, "ddos", cfg.master_seed);
    const std::vector<ModelSpec> latency_suite = resolve_models(cfg, "latency", cfg.master_seed);
    for (std::size_t i = 0; i < ddos_suite.size(); ++i) {
        ModelReport report;
        report.name = to_string(ddos_suite[i].kind);
        report.seed_ddos = ddos_suite[i].seed;
        report.seed_latency = latency_suite[i].seed;
        report.hyperparameters = effective_hyperparameters(ddos_suite[i]);
        for (const TaskResult& r : results) {
            const ScoreSet& s = r.model_scores[i].second;
            if (r.summary.task == "ddos")
                report.ddos = s;
            else
                report.latency = s;
        }
        manifest.models.push_back(std::move(report));
    }

    emit(manifest, out_dir, EmitOptions{cfg.emit_charts});
    return manifest;
}

}  // namespace ddosml
