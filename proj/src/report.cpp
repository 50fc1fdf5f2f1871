#include "ddosml/report.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "ddosml/csv.hpp"
#include "ddosml/errors.hpp"

namespace ddosml {

namespace {

nlohmann::ordered_json scores_json(const ScoreSet& s) {
    return {{"accuracy", s.accuracy},
            {"precision_macro", s.precision_macro},
            {"recall_macro", s.recall_macro},
            {"f1_macro", s.f1_macro}};
}

ScoreSet scores_from_json(const nlohmann::json& j) {
    ScoreSet s;
    s.accuracy = j.at("accuracy").get<double>();
    s.precision_macro = j.at("precision_macro").get<double>();
    s.recall_macro = j.at("recall_macro").get<double>();
    s.f1_macro = j.at("f1_macro").get<double>();
    return s;
}

const char* kMetricNames[] = {"accuracy", "precision_macro", "recall_macro", "f1_macro"};

double metric_of(const ScoreSet& s, std::size_t metric) {
    switch (metric) {
        case 0: return s.accuracy;
        case 1: return s.precision_macro;
        case 2: return s.recall_macro;
        default: return s.f1_macro;
    }
}

void write_file(const std::string& path, const std::string& body) {
    std::ofstream out(path, std::ios::binary);
    if (!out.is_open()) throw IoError("cannot open " + path + " for writing");
    out << body;
    if (!out) throw IoError("write failed: " + path);
}

}  // namespace

nlohmann::ordered_json manifest_to_json(const RunManifest& m) {
    nlohmann::ordered_json j;
    j["format"] = "ddosml.manifest/1";
    j["mode"] = m.mode;
    j["master_seed"] = m.master_seed;
    j["averaging"] = m.averaging;
    j["warnings"] = m.warnings;
    j["config"] = m.config;
    j["stage_seeds"] = m.stage_seeds;
    j["data"] = m.data;

    auto& tasks = j["tasks"] = nlohmann::ordered_json::object();
    for (const TaskSummary& t : m.tasks) {
        tasks[t.task] = {{"classes", t.classes},
                         {"k_best", t.k_best},
                         {"rfe_survivors", t.survivors},
                         {"train_rows", t.train_rows},
                         {"test_rows", t.test_rows}};
    }

    auto& models = j["models"] = nlohmann::ordered_json::array();
    for (const ModelReport& r : m.models) {
        models.push_back({{"name", r.name},
                          {"seeds", {{"ddos", r.seed_ddos}, {"latency", r.seed_latency}}},
                          {"hyperparameters", r.hyperparameters},
                          {"scores", {{"ddos", scores_json(r.ddos)},
                                      {"latency", scores_json(r.latency)}}}});
    }
    return j;
}

RunManifest manifest_from_json(const nlohmann::json& j) {
    if (j.value("format", "") != "ddosml.manifest/1")
        throw ValidationError("manifest", "unrecognized format tag");
    RunManifest m;
    m.mode = j.at("mode").get<std::string>();
    m.master_seed = j.at("master_seed").get<std::uint64_t>();
    m.averaging = j.at("averaging").get<std::string>();
    m.warnings = j.at("warnings").get<std::vector<std::string>>();
    m.config = j.at("config");
    m.stage_seeds = j.at("stage_seeds");
    m.data = j.at("data");
    for (const auto& [task, tj] : j.at("tasks").items()) {
        TaskSummary t;
        t.task = task;
        t.classes = tj.at("classes").get<std::vector<std::string>>();
        t.k_best = tj.at("k_best").get<std::vector<std::string>>();
        t.survivors = tj.at("rfe_survivors").get<std::vector<std::string>>();
        t.train_rows = tj.at("train_rows").get<std::size_t>();
        t.test_rows = tj.at("test_rows").get<std::size_t>();
        m.tasks.push_back(std::move(t));
    }
    for (const auto& rj : j.at("models")) {
        ModelReport r;
        r.name = rj.at("name").get<std::string>();
        r.seed_ddos = rj.at("seeds").at("ddos").get<std::uint64_t>();
        r.seed_latency = rj.at("seeds").at("latency").get<std::uint64_t>();
        r.hyperparameters = rj.at("hyperparameters");
        r.ddos = scores_from_json(rj.at("scores").at("ddos"));
        r.latency = scores_from_json(rj.at("scores").at("latency"));
        m.models.push_back(std::move(r));
    }
    return m;
}

std::string plot_data_csv(const RunManifest& manifest) {
    std::ostringstream out;
    out << "model,task,metric,value\n";
    for (const ModelReport& r : manifest.models) {
        for (std::size_t metric = 0; metric < 4; ++metric)
            out << r.name << ",ddos," << kMetricNames[metric] << ','
                << format_numeric(metric_of(r.ddos, metric)) << '\n';
        for (std::size_t metric = 0; metric < 4; ++metric)
            out << r.name << ",latency," << kMetricNames[metric] << ','
                << format_numeric(metric_of(r.latency, metric)) << '\n';
    }
    return out.str();
}

std::string score_chart_svg(const RunManifest& manifest, const std::string& task) {
    const std::size_t n_models = manifest.models.size();
    if (n_models == 0) throw EmptyManifestError("chart: no model reports");

    const double width = 980.0;
    const double height = 440.0;
    const double left = 60.0, right = 30.0, top = 50.0, bottom = 90.0;
    const double plot_w = width - left - right;
    const double plot_h = height - top - bottom;
    const double group_w = plot_w / static_cast<double>(n_models);
    const double bar_w = group_w / 5.0;
    const char* fills[] = {"#4878cf", "#6acc65", "#d65f5f", "#b47cc7"};

    std::ostringstream svg;
    svg.setf(std::ios::fixed);
    svg.precision(1);
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    svg << "<rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";
    svg << "<text x=\"" << width / 2 << "\" y=\"28\" text-anchor=\"middle\" "
        << "font-family=\"sans-serif\" font-size=\"18\">"
        << (task == "ddos" ? "DDoS attack classifier comparison"
                           : "5G latency label classifier comparison")
        << "</text>\n";

    for (int grid = 0; grid <= 5; ++grid) {
        const double frac = static_cast<double>(grid) / 5.0;
        const double y = top + plot_h * (1.0 - frac);
        svg << "<line x1=\"" << left << "\" y1=\"" << y << "\" x2=\"" << left + plot_w
            << "\" y2=\"" << y << "\" stroke=\"#dddddd\"/>\n";
        svg << "<text x=\"" << left - 8 << "\" y=\"" << y + 4
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" << frac
            << "</text>\n";
    }

    for (std::size_t i = 0; i < n_models; ++i) {
        const ModelReport& r = manifest.models[i];
        const ScoreSet& s = task == "ddos" ? r.ddos : r.latency;
        const double gx = left + group_w * static_cast<double>(i);
        for (std::size_t metric = 0; metric < 4; ++metric) {
            const double v = metric_of(s, metric);
            const double h = plot_h * v;
            svg << "<rect x=\"" << gx + bar_w * (0.5 + static_cast<double>(metric))
                << "\" y=\"" << top + plot_h - h << "\" width=\"" << bar_w * 0.9
                << "\" height=\"" << h << "\" fill=\"" << fills[metric] << "\"/>\n";
        }
        svg << "<text x=\"" << gx + group_w / 2 << "\" y=\"" << top + plot_h + 16
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\" "
            << "transform=\"rotate(-30 " << gx + group_w / 2 << " " << top + plot_h + 16
            << ")\">" << r.name << "</text>\n";
    }

    for (std::size_t metric = 0; metric < 4; ++metric) {
        const double lx = left + 170.0 * static_cast<double>(metric);
        const double ly = height - 22.0;
        svg << "<rect x=\"" << lx << "\" y=\"" << ly - 10 << "\" width=\"12\" height=\"12\" "
            << "fill=\"" << fills[metric] << "\"/>\n";
        svg << "<text x=\"" << lx + 18 << "\" y=\"" << ly
            << "\" font-family=\"sans-serif\" font-size=\"12\">" << kMetricNames[metric]
            << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

void emit(const RunManifest& manifest, const std::string& out_dir, const EmitOptions& options) {
    if (manifest.models.empty()) throw EmptyManifestError("emit: no model reports");
    std::filesystem::create_directories(out_dir);
    write_file(out_dir + "/manifest.json", manifest_to_json(manifest).dump(2) + "\n");
    write_file(out_dir + "/plot_data.csv", plot_data_csv(manifest));
    if (options.charts) {
        std::filesystem::create_directories(out_dir + "/charts");
        write_file(out_dir + "/charts/ddos_scores.svg", score_chart_svg(manifest, "ddos"));
        write_file(out_dir + "/charts/latency_scores.svg",
                   score_chart_svg(manifest, "latency"));
    }
}

}  // namespace ddosml
