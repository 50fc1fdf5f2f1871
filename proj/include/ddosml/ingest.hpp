#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "ddosml/table.hpp"

namespace ddosml {

/// One CSV per attack type, merged into a single table. The per-file cap
/// takes the head of the file (not a random sample) so ingestion is
/// reproducible without a seed.
struct IngestSpec {
    struct File {
        std::string path;
        std::string expected_label;  // empty = accept any label
    };
    std::vector<File> files;
    std::size_t per_file_cap = std::numeric_limits<std::size_t>::max();
    std::string label_column = "Label";
};

/// Loads one file per IngestSpec semantics (head cap, trimmed headers,
/// non-numeric tokens to NaN/inf, label kept as a string column).
FeatureTable load_csv(const std::string& path, std::size_t cap,
                      const std::string& label_column = "Label");

/// Concatenates tables that share an identical column-name sequence, rows in
/// input order. Throws SchemaMismatchError listing the differing columns.
FeatureTable merge(const std::vector<FeatureTable>& tables);

/// Exact multiset counts of the label column, iteration order sorted by label.
std::map<std::string, std::size_t> label_counts(const FeatureTable& table,
                                                const std::string& label_column = "Label");

/// Full ingest: load every file (validating expected labels when given),
/// then merge.
FeatureTable run_ingest(const IngestSpec& spec);

}  // namespace ddosml
