#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "ddosml/csv.hpp"
#include "ddosml/errors.hpp"
#include "ddosml/report.hpp"

using namespace ddosml;

namespace {

RunManifest sample_manifest() {
    RunManifest m;
    m.mode = "default";
    m.master_seed = 42;
    m.config = {{"mode", "default"}};
    m.stage_seeds = {{"split", 7}};
    m.data = {{"n_rows_source", 100}};
    m.warnings = {};

    TaskSummary t;
    t.task = "ddos";
    t.classes = {"BENIGN", "Syn"};
    t.k_best = {"a", "b", "c"};
    t.survivors = {"a", "b"};
    t.train_rows = 80;
    t.test_rows = 20;
    m.tasks.push_back(t);

    ModelReport r;
    r.name = "random_forest";
    r.hyperparameters = {{"n_trees", 100}};
    r.seed_ddos = 1;
    r.seed_latency = 2;
    r.ddos = ScoreSet{0.74, 0.7, 0.69, 0.691};
    r.latency = ScoreSet{0.53, 0.5, 0.52, 0.51};
    m.models.push_back(r);
    return m;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

}  // namespace

TEST_CASE("manifest round-trips through json") {
    const RunManifest m = sample_manifest();
    const auto j = manifest_to_json(m);
    const RunManifest back = manifest_from_json(j);
    CHECK(manifest_to_json(back) == j);
    CHECK(back.models[0].ddos.accuracy == 0.74);
    CHECK(back.tasks[0].survivors == std::vector<std::string>{"a", "b"});
}

TEST_CASE("plot data carries every score with round-trip formatting") {
    const RunManifest m = sample_manifest();
    const std::string csv = plot_data_csv(m);
    CHECK(csv.find("model,task,metric,value") == 0);
    CHECK(csv.find("random_forest,ddos,accuracy,0.74") != std::string::npos);
    CHECK(csv.find("random_forest,latency,accuracy,0.53") != std::string::npos);

    // reload: 1 model x 2 tasks x 4 metrics = 8 rows, values exact
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    std::size_t rows = 0;
    while (std::getline(in, line)) {
        const auto fields = detail::split_record(line);
        REQUIRE(fields.size() == 4);
        const double v = parse_numeric_token(fields[3]);
        if (fields[1] == "ddos" && fields[2] == "accuracy") CHECK(v == 0.74);
        if (fields[1] == "latency" && fields[2] == "f1_macro") CHECK(v == 0.51);
        ++rows;
    }
    CHECK(rows == 8);
}

TEST_CASE("emit writes deterministic artifacts") {
    const RunManifest m = sample_manifest();
    const std::string dir_a = "report_test_a";
    const std::string dir_b = "report_test_b";
    emit(m, dir_a);
    emit(m, dir_b);

    for (const char* rel : {"/manifest.json", "/plot_data.csv", "/charts/ddos_scores.svg",
                            "/charts/latency_scores.svg"}) {
        CAPTURE(rel);
        const std::string a = slurp(dir_a + rel);
        CHECK_FALSE(a.empty());
        CHECK(a == slurp(dir_b + rel));
    }
    const std::string svg = slurp(dir_a + "/charts/ddos_scores.svg");
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("<rect") != std::string::npos);

    std::filesystem::remove_all(dir_a);
    std::filesystem::remove_all(dir_b);
}

TEST_CASE("emit rejects an empty manifest") {
    RunManifest empty;
    CHECK_THROWS_AS(emit(empty, "report_test_empty"), EmptyManifestError);
    std::filesystem::remove_all("report_test_empty");
}
