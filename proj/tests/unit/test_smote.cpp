#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>

#include "ddosml/errors.hpp"
#include "ddosml/rng.hpp"
#include "ddosml/smote.hpp"

using namespace ddosml;

namespace {

FeatureTable table_from(const std::vector<std::vector<double>>& rows) {
    FeatureTable t;
    const std::size_t p = rows.empty() ? 0 : rows[0].size();
    for (std::size_t c = 0; c < p; ++c) {
        FeatureTable::NumericValues col;
        for (const auto& row : rows) col.push_back(row[c]);
        t.add_numeric("f" + std::to_string(c), std::move(col));
    }
    return t;
}

std::map<int, std::size_t> histogram(const std::vector<int>& labels) {
    std::map<int, std::size_t> h;
    for (int l : labels) ++h[l];
    return h;
}

}  // namespace

TEST_CASE("interpolate is the componentwise convex combination") {
    CHECK(interpolate({2.0, 0.0}, {0.0, 4.0}, 0.0) == std::vector<double>{2.0, 0.0});
    CHECK(interpolate({2.0, 0.0}, {0.0, 4.0}, 1.0) == std::vector<double>{0.0, 4.0});
    CHECK(interpolate({2.0, 0.0}, {0.0, 4.0}, 0.25) == std::vector<double>{1.5, 1.0});
    CHECK(interpolate({0.0, 0.0}, {1.0, 1.0}, 0.5) == std::vector<double>{0.5, 0.5});
    CHECK_THROWS_AS((void)interpolate({1.0}, {1.0, 2.0}, 0.5), DimensionMismatchError);
    CHECK_THROWS_AS((void)interpolate({1.0}, {2.0}, 1.5), ValidationError);
}

TEST_CASE("smote equalizes counts at the pre-call maximum") {
    Rng rng(100);
    std::vector<std::vector<double>> rows;
    std::vector<int> labels;
    for (int i = 0; i < 100; ++i) {
        rows.push_back({rng.next_normal(), rng.next_normal()});
        labels.push_back(0);
    }
    for (int i = 0; i < 10; ++i) {
        rows.push_back({5.0 + rng.next_normal(), 5.0 + rng.next_normal()});
        labels.push_back(1);
    }

    const SmoteResult out = smote(table_from(rows), labels, SmoteConfig{5, 42});
    const auto h = histogram(out.labels);
    CHECK(h.at(0) == 100);
    CHECK(h.at(1) == 100);
    CHECK(out.features.n_rows() == 200);

    // originals verbatim and first
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(out.features.numeric("f0")[i] == rows[i][0]);
        CHECK(out.features.numeric("f1")[i] == rows[i][1]);
        CHECK(out.labels[i] == labels[i]);
    }
}

TEST_CASE("already balanced input is returned unchanged") {
    const std::vector<std::vector<double>> rows = {{0, 0}, {1, 1}, {5, 5}, {6, 6}};
    const std::vector<int> labels = {0, 0, 1, 1};
    const SmoteResult out = smote(table_from(rows), labels, SmoteConfig{5, 1});
    CHECK(out.features == table_from(rows));
    CHECK(out.labels == labels);
}

TEST_CASE("synthetics stay inside the class bounding box") {
    Rng rng(7);
    std::vector<std::vector<double>> rows;
    std::vector<int> labels;
    for (int i = 0; i < 60; ++i) {
        rows.push_back({rng.uniform(-3, 3), rng.uniform(10, 20), rng.next_normal()});
        labels.push_back(0);
    }
    for (int i = 0; i < 7; ++i) {
        rows.push_back({rng.uniform(5, 6), rng.uniform(-2, -1), 4 + rng.next_double()});
        labels.push_back(1);
    }

    const SmoteResult out = smote(table_from(rows), labels, SmoteConfig{3, 9});

    std::vector<double> lo(3, 1e300), hi(3, -1e300);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (labels[i] != 1) continue;
        for (std::size_t c = 0; c < 3; ++c) {
            lo[c] = std::min(lo[c], rows[i][c]);
            hi[c] = std::max(hi[c], rows[i][c]);
        }
    }
    for (std::size_t i = rows.size(); i < out.features.n_rows(); ++i) {
        REQUIRE(out.labels[i] == 1);  // only class 1 was oversampled
        for (std::size_t c = 0; c < 3; ++c) {
            const double v = out.features.numeric("f" + std::to_string(c))[i];
            CHECK(v >= lo[c]);
            CHECK(v <= hi[c]);
        }
    }
}

TEST_CASE("degenerate classes still synthesize") {
    SUBCASE("singleton class duplicates its only row") {
        const std::vector<std::vector<double>> rows = {{0, 0}, {1, 1}, {2, 2}, {9, 9}};
        const std::vector<int> labels = {0, 0, 0, 1};
        const SmoteResult out = smote(table_from(rows), labels, SmoteConfig{5, 3});
        CHECK(histogram(out.labels).at(1) == 3);
        for (std::size_t i = 4; i < out.features.n_rows(); ++i) {
            CHECK(out.features.numeric("f0")[i] == 9.0);
            CHECK(out.features.numeric("f1")[i] == 9.0);
        }
    }

    SUBCASE("class smaller than k uses k' = size - 1") {
        std::vector<std::vector<double>> rows;
        std::vector<int> labels;
        for (int i = 0; i < 50; ++i) {
            rows.push_back({static_cast<double>(i)});
            labels.push_back(0);
        }
        rows.push_back({100.0});
        rows.push_back({101.0});
        rows.push_back({102.0});
        labels.insert(labels.end(), {1, 1, 1});

        const SmoteResult out = smote(table_from(rows), labels, SmoteConfig{5, 3});
        CHECK(histogram(out.labels).at(1) == 50);
        for (std::size_t i = rows.size(); i < out.features.n_rows(); ++i) {
            const double v = out.features.numeric("f0")[i];
            CHECK(v >= 100.0);
            CHECK(v <= 102.0);
        }
    }
}

TEST_CASE("smote validates its inputs") {
    const std::vector<std::vector<double>> rows = {{0.0}, {1.0}};
    CHECK_THROWS_AS((void)smote(table_from(rows), {0}, SmoteConfig{}), LengthMismatchError);
    CHECK_THROWS_AS((void)smote(table_from(rows), {0, 2}, SmoteConfig{}), EmptyClassError);

    FeatureTable bad = table_from({{0.0}, {std::numeric_limits<double>::infinity()}});
    CHECK_THROWS_AS((void)smote(bad, {0, 1}, SmoteConfig{}), NonFiniteError);
}

TEST_CASE("smote is deterministic under seed") {
    Rng rng(55);
    std::vector<std::vector<double>> rows;
    std::vector<int> labels;
    for (int i = 0; i < 40; ++i) {
        rows.push_back({rng.next_normal(), rng.next_normal()});
        labels.push_back(i < 30 ? 0 : 1);
    }
    const SmoteResult a = smote(table_from(rows), labels, SmoteConfig{5, 77});
    const SmoteResult b = smote(table_from(rows), labels, SmoteConfig{5, 77});
    CHECK(a.features == b.features);
    CHECK(a.labels == b.labels);

    const SmoteResult c = smote(table_from(rows), labels, SmoteConfig{5, 78});
    CHECK_FALSE(a.features == c.features);
}
