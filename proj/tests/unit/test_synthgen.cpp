#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <set>

#include "ddosml/csv.hpp"
#include "ddosml/errors.hpp"
#include "ddosml/ingest.hpp"
#include "ddosml/preprocess.hpp"
#include "ddosml/synthgen.hpp"

using namespace ddosml;

namespace {

GenSpec tiny_spec(std::uint64_t seed = 1) {
    GenSpec spec;
    spec.seed = seed;
    ClassProfile benign;
    benign.label = "BENIGN";
    benign.protocol_code = 6;
    ClassProfile attack;
    attack.label = "Syn";
    attack.src_port_range = {5000, 60000};
    spec.profiles = {benign, attack};
    spec.rows_per_class = {{"BENIGN", 20}, {"Syn", 30}};
    return spec;
}

}  // namespace

TEST_CASE("schema has 88 columns with ports and label in place") {
    const auto& schema = flow_schema();
    CHECK(schema.size() == 88);
    CHECK(schema.front() == "Unnamed: 0");
    CHECK(schema.back() == "Label");

    const FeatureTable t = generate(tiny_spec());
    CHECK(t.n_columns() == 88);
    CHECK(t.column_names() == schema);
    CHECK(t.numeric_names().size() == 87);  // everything but the label
    CHECK(t.n_rows() == 50);
}

TEST_CASE("rows are labeled and ordered by class") {
    GenSpec spec;
    spec.seed = 3;
    ClassProfile p;
    p.label = "A";
    spec.profiles = {p};
    spec.rows_per_class = {{"A", 10}};
    const FeatureTable t = generate(spec);
    CHECK(t.n_rows() == 10);
    for (const std::string& label : t.text("Label")) CHECK(label == "A");

    // unknown label -> error
    spec.rows_per_class["B"] = 5;
    CHECK_THROWS_AS((void)generate(spec), UnknownLabelProfileError);
}

TEST_CASE("benign ports come from {80, 443}, attack ports from the profile range") {
    const FeatureTable t = generate(tiny_spec());
    const auto& labels = t.text("Label");
    const auto& src = t.numeric("Source Port");
    const auto& dst = t.numeric("Destination Port");
    bool saw_attack_above_5000 = false;
    for (std::size_t i = 0; i < t.n_rows(); ++i) {
        if (labels[i] == "BENIGN") {
            CHECK((src[i] == 80.0 || src[i] == 443.0));
            CHECK((dst[i] == 80.0 || dst[i] == 443.0));
        } else {
            CHECK(src[i] >= 5000.0);
            CHECK(src[i] <= 60000.0);
            if (src[i] > 5000.0) saw_attack_above_5000 = true;
        }
    }
    CHECK(saw_attack_above_5000);
}

TEST_CASE("same seed gives a byte-identical table, different seed does not") {
    const FeatureTable a = generate(tiny_spec(9));
    const FeatureTable b = generate(tiny_spec(9));
    const FeatureTable c = generate(tiny_spec(10));
    CHECK(a == b);
    CHECK_FALSE(a == c);
}

TEST_CASE("generated tables are finite unless faults are requested") {
    const FeatureTable clean = generate(tiny_spec());
    CHECK(find_nonfinite_columns(clean).empty());

    GenSpec faulty = tiny_spec();
    faulty.fault_fraction = 0.1;
    const FeatureTable t = generate(faulty);
    const auto bad = find_nonfinite_columns(t);
    CHECK(bad == std::vector<std::string>{"Flow Bytes/s", "Flow Packets/s"});

    const auto sites = fault_sites(faulty);
    CHECK(sites.size() == 2 * 5);  // 10% of 50 rows in each of two columns
    for (const FaultSite& site : sites) {
        const double v = t.numeric(site.column)[site.row];
        CHECK_FALSE(std::isfinite(v));
    }
}

TEST_CASE("generated csv re-ingests with the same schema") {
    const FeatureTable t = generate(tiny_spec());
    write_csv(t, "synthgen_io.csv");
    const FeatureTable back = load_csv("synthgen_io.csv", 1000);
    std::remove("synthgen_io.csv");
    CHECK(back == t);
    CHECK_NOTHROW((void)merge({t, back}));
}

TEST_CASE("paper distribution reproduces the reported label counts") {
    const GenSpec full = paper_distribution_spec();
    CHECK(full.rows_per_class.size() == 13);
    CHECK(full.rows_per_class.at("DrDoS_SSDP") == 49989);
    CHECK(full.rows_per_class.at("WebDDoS") == 54);
    CHECK(full.rows_per_class.at("BENIGN") == 1350);
    std::size_t total = 0;
    for (const auto& [label, n] : full.rows_per_class) total += n;
    CHECK(total == 550000);

    const GenSpec scaled = scaled_paper_distribution_spec();
    CHECK(scaled.rows_per_class.at("DrDoS_SSDP") == 499);
    CHECK(scaled.rows_per_class.at("WebDDoS") == 1);
    CHECK(scaled.rows_per_class.at("BENIGN") == 13);
}

TEST_CASE("merged per-class tables match the preset counts at desk scale") {
    const GenSpec scaled = scaled_paper_distribution_spec(5);
    const FeatureTable t = generate(scaled);
    const auto counts = label_counts(t);
    for (const auto& [label, want] : scaled.rows_per_class)
        CHECK(counts.at(label) == want);
    CHECK(t.n_rows() == 5493);
}

TEST_CASE("one table per class merges to the same distribution") {
    const GenSpec scaled = scaled_paper_distribution_spec(6);
    std::vector<FeatureTable> per_class;
    for (const auto& [label, count] : scaled.rows_per_class) {
        GenSpec one = scaled;
        one.rows_per_class = {{label, count}};
        per_class.push_back(generate(one));
    }
    const FeatureTable merged = merge(per_class);
    CHECK(merged.n_rows() == 5493);
    const auto counts = label_counts(merged);
    CHECK(counts.size() == 13);
    for (const auto& [label, want] : scaled.rows_per_class)
        CHECK(counts.at(label) == want);
}
