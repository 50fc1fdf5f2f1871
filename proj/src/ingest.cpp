#include "ddosml/ingest.hpp"

#include <sstream>

#include "ddosml/csv.hpp"
#include "ddosml/errors.hpp"

namespace ddosml {

FeatureTable load_csv(const std::string& path, std::size_t cap, const std::string& label_column) {
    return read_csv(path, label_column, cap);
}

FeatureTable merge(const std::vector<FeatureTable>& tables) {
    if (tables.empty()) throw ValidationError("merge", "no tables given");
    const std::vector<std::string> schema = tables.front().column_names();
    for (std::size_t t = 1; t < tables.size(); ++t) {
        const std::vector<std::string> other = tables[t].column_names();
        if (other != schema) {
            std::ostringstream msg;
            msg << "schema mismatch at table " << t << ":";
            for (const std::string& name : other) {
                bool known = false;
                for (const std::string& s : schema)
                    if (s == name) { known = true; break; }
                if (!known) msg << " +" << name;
            }
            for (const std::string& name : schema) {
                bool present = false;
                for (const std::string& o : other)
                    if (o == name) { present = true; break; }
                if (!present) msg << " -" << name;
            }
            throw SchemaMismatchError(msg.str());
        }
    }

    FeatureTable out;
    for (const std::string& name : schema) {
        if (tables.front().is_numeric(name)) {
            FeatureTable::NumericValues values;
            for (const FeatureTable& t : tables) {
                const auto& v = t.numeric(name);
                values.insert(values.end(), v.begin(), v.end());
            }
            out.add_numeric(name, std::move(values));
        } else {
            FeatureTable::TextValues values;
            for (const FeatureTable& t : tables) {
                const auto& v = t.text(name);
                values.insert(values.end(), v.begin(), v.end());
            }
            out.add_text(name, std::move(values));
        }
    }
    return out;
}

std::map<std::string, std::size_t> label_counts(const FeatureTable& table,
                                                const std::string& label_column) {
    if (!table.has_column(label_column)) throw MissingLabelColumnError(label_column);
    std::map<std::string, std::size_t> counts;
    for (const std::string& label : table.text(label_column)) ++counts[label];
    return counts;
}

FeatureTable run_ingest(const IngestSpec& spec) {
    if (spec.files.empty()) throw ValidationError("ingest.files", "must be non-empty");
    if (spec.per_file_cap < 1) throw ValidationError("ingest.per_file_cap", "must be >= 1");

    std::vector<FeatureTable> tables;
    tables.reserve(spec.files.size());
    for (const IngestSpec::File& f : spec.files) {
        FeatureTable t = load_csv(f.path, spec.per_file_cap, spec.label_column);
        if (!f.expected_label.empty()) {
            for (const std::string& label : t.text(spec.label_column)) {
                if (label != f.expected_label)
                    throw ValidationError("ingest.files",
                                          f.path + ": found label '" + label +
                                              "', expected '" + f.expected_label + "'");
            }
        }
        tables.push_back(std::move(t));
    }
    return merge(tables);
}

}  // namespace ddosml
