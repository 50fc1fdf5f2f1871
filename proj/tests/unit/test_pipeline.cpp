#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "ddosml/csv.hpp"
#include "ddosml/errors.hpp"
#include "ddosml/metrics.hpp"
#include "ddosml/pipeline.hpp"

using namespace ddosml;

namespace {

// Small two-class config that exercises every stage quickly.
PipelineConfig tiny_config(const std::string& out_dir, std::uint64_t seed = 3) {
    const nlohmann::json j = {
        {"mode", "default"},
        {"master_seed", seed},
        {"output_dir", out_dir},
        {"source",
         {{"generate",
           {{"rows_per_class", {{"BENIGN", 60}, {"Syn", 90}}}, {"separability", 1.0}}}}},
        {"select", {{"k_best", 12}, {"rfe_final", 6}}},
    };
    return config_from_json(j);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

struct TempDir {
    std::string path;
    explicit TempDir(std::string p) : path(std::move(p)) {}
    ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST_CASE("config validation rejects bad shapes before any work") {
    CHECK_THROWS_AS((void)config_from_json(nlohmann::json{{"mode", "bogus"}}), ValidationError);
    CHECK_THROWS_AS((void)config_from_json(nlohmann::json{{"mode", "default"}}),
                    ValidationError);  // no source

    nlohmann::json both = {{"source",
                            {{"generate", {{"preset", "paper_scaled"}}},
                             {"ingest", {{"files", {{{"path", "x.csv"}}}}}}}}};
    CHECK_THROWS_AS((void)config_from_json(both), ValidationError);

    nlohmann::json bad_select = {{"source", {{"generate", {{"preset", "paper_scaled"}}}}},
                                 {"select", {{"k_best", 10}, {"rfe_final", 20}}}};
    try {
        (void)config_from_json(bad_select);
        FAIL("expected rejection");
    } catch (const ValidationError& e) {
        CHECK(std::string(e.what()).find("select.rfe_final") != std::string::npos);
    }

    nlohmann::json bad_fraction = {{"source", {{"generate", {{"preset", "paper_scaled"}}}}},
                                   {"split", {{"test_fraction", 1.5}}}};
    CHECK_THROWS_AS((void)config_from_json(bad_fraction), ValidationError);
}

TEST_CASE("pipeline produces the full artifact set") {
    TempDir dir("pipeline_test_artifacts");
    const PipelineConfig cfg = tiny_config(dir.path);
    const RunManifest manifest = run_pipeline(cfg);

    // 8 models x 2 tasks x 4 scores
    CHECK(manifest.models.size() == 8);
    CHECK(manifest.tasks.size() == 2);
    for (const ModelReport& r : manifest.models) {
        for (const ScoreSet& s : {r.ddos, r.latency}) {
            CHECK(s.accuracy >= 0.0);
            CHECK(s.accuracy <= 1.0);
            CHECK(s.f1_macro >= 0.0);
            CHECK(s.f1_macro <= 1.0);
        }
    }
    for (const TaskSummary& t : manifest.tasks) {
        CHECK(t.k_best.size() == 12);
        CHECK(t.survivors.size() == 6);
    }

    for (const char* rel :
         {"/manifest.json", "/plot_data.csv", "/charts/ddos_scores.svg",
          "/charts/latency_scores.svg", "/models/ddos__random_forest.json",
          "/models/latency__adaboost.json", "/data/test_ddos.csv", "/data/test_latency.csv",
          "/transforms/ddos_encoder.json", "/transforms/latency_encoder.json",
          "/transforms/scaler.json"}) {
        CAPTURE(rel);
        CHECK(std::filesystem::exists(dir.path + rel));
    }
}

TEST_CASE("separable two-class data is learnable through the whole pipeline") {
    TempDir dir("pipeline_test_learnable");
    const RunManifest manifest = run_pipeline(tiny_config(dir.path));
    double best = 0.0;
    for (const ModelReport& r : manifest.models) {
        CAPTURE(r.name);
        CHECK(r.ddos.accuracy >= 0.9);
        best = std::max(best, r.ddos.accuracy);
    }
    CHECK(best >= 0.99);
}

TEST_CASE("separability zero leaves every model near the coin-flip rate") {
    TempDir dir("pipeline_test_noise");
    // Two attack classes: same protocol and latency band, so separability
    // alone controls learnability. (BENIGN would leak through 5G_Latency,
    // whose benign/attack bands differ by construction.)
    const nlohmann::json j = {
        {"master_seed", 6},
        {"output_dir", dir.path},
        {"emit_charts", false},
        {"source",
         {{"generate",
           {{"rows_per_class", {{"DrDoS_DNS", 400}, {"DrDoS_UDP", 400}}},
            {"separability", 0.0}}}}},
        {"select", {{"k_best", 12}, {"rfe_final", 6}}},
    };
    const RunManifest manifest = run_pipeline(config_from_json(j));
    for (const ModelReport& r : manifest.models) {
        CAPTURE(r.name);
        CHECK(r.ddos.accuracy >= 0.35);
        CHECK(r.ddos.accuracy <= 0.65);
    }
}

TEST_CASE("same config and seed reproduce byte-identical manifests") {
    TempDir dir_a("pipeline_test_det_a");
    TempDir dir_b("pipeline_test_det_b");
    run_pipeline(tiny_config(dir_a.path, 11));
    run_pipeline(tiny_config(dir_b.path, 11));
    const std::string a = slurp(dir_a.path + "/manifest.json");
    CHECK_FALSE(a.empty());
    CHECK(a == slurp(dir_b.path + "/manifest.json"));

    TempDir dir_c("pipeline_test_det_c");
    run_pipeline(tiny_config(dir_c.path, 12));
    CHECK_FALSE(a == slurp(dir_c.path + "/manifest.json"));
}

TEST_CASE("paper_faithful mode runs with a leakage warning") {
    TempDir dir("pipeline_test_faithful");
    nlohmann::json j = {
        {"mode", "paper_faithful"},
        {"master_seed", 5},
        {"output_dir", dir.path},
        {"source",
         {{"generate",
           {{"rows_per_class", {{"BENIGN", 40}, {"Syn", 60}, {"TFTP", 50}}}}}}},
        {"select", {{"k_best", 10}, {"rfe_final", 5}}},
    };
    const RunManifest manifest = run_pipeline(config_from_json(j));
    REQUIRE(manifest.warnings.size() == 1);
    CHECK(manifest.warnings[0].find("leak") != std::string::npos);
    CHECK(manifest.mode == "paper_faithful");
    CHECK(std::filesystem::exists(dir.path + "/transforms/scaler_ddos.json"));
    CHECK(std::filesystem::exists(dir.path + "/transforms/scaler_latency.json"));
}

TEST_CASE("k_best larger than the available features fails with the task name") {
    TempDir dir("pipeline_test_kbest");
    nlohmann::json j = {
        {"master_seed", 1},
        {"output_dir", dir.path},
        {"source", {{"generate", {{"rows_per_class", {{"BENIGN", 30}, {"Syn", 30}}}}}}},
        {"select", {{"k_best", 500}, {"rfe_final", 5}}},
    };
    CHECK_THROWS_AS((void)run_pipeline(config_from_json(j)), ValidationError);
}

TEST_CASE("the faults flag plants the default non-finite fraction") {
    const nlohmann::json j = {
        {"source",
         {{"generate", {{"rows_per_class", {{"Syn", 1000}}}, {"faults", true}}}}},
    };
    const PipelineConfig cfg = config_from_json(j);
    REQUIRE(cfg.generate.has_value());
    CHECK(cfg.generate->fault_fraction == 0.005);
}

TEST_CASE("an explicit stage seed leaves the other stage seeds unchanged") {
    TempDir dir_a("pipeline_test_seeds_a");
    TempDir dir_b("pipeline_test_seeds_b");

    nlohmann::json base = {
        {"master_seed", 9},
        {"output_dir", dir_a.path},
        {"source", {{"generate", {{"rows_per_class", {{"BENIGN", 30}, {"Syn", 40}}}}}}},
        {"select", {{"k_best", 8}, {"rfe_final", 4}}},
    };
    const RunManifest plain = run_pipeline(config_from_json(base));

    base["output_dir"] = dir_b.path;
    base["augment"] = {{"seed", 123456}};
    const RunManifest pinned = run_pipeline(config_from_json(base));

    CHECK(pinned.stage_seeds.at("augment").get<std::uint64_t>() == 123456);
    CHECK(plain.stage_seeds.at("augment").get<std::uint64_t>() != 123456);
    // the other stages keep their master-derived seeds
    for (const char* stage : {"generate", "split", "smote"})
        CHECK(plain.stage_seeds.at(stage) == pinned.stage_seeds.at(stage));
}

TEST_CASE("saved models rescore the saved test set to the manifest numbers") {
    TempDir dir("pipeline_test_score");
    const RunManifest manifest = run_pipeline(tiny_config(dir.path));

    const TrainedModel model = TrainedModel::load(dir.path + "/models/ddos__knn.json");
    const FeatureTable test = read_csv(dir.path + "/data/test_ddos.csv", "Label");
    std::vector<int> y_test;
    for (double v : test.numeric("ClassCode")) y_test.push_back(static_cast<int>(v));

    const std::vector<int> pred = model.predict(test);
    const ScoreSet s = scores(confusion(y_test, pred, model.classes().size()));
    for (const ModelReport& r : manifest.models) {
        if (r.name != "knn") continue;
        CHECK(s.accuracy == doctest::Approx(r.ddos.accuracy));
        CHECK(s.f1_macro == doctest::Approx(r.ddos.f1_macro));
    }
}
