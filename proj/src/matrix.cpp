#include "ddosml/matrix.hpp"

namespace ddosml {

Matrix to_matrix(const FeatureTable& table, const std::vector<std::string>& names) {
    Matrix m(table.n_rows(), names.size());
    for (std::size_t c = 0; c < names.size(); ++c) {
        const auto& col = table.numeric(names[c]);
        for (std::size_t r = 0; r < col.size(); ++r) m.at(r, c) = col[r];
    }
    return m;
}

}  // namespace ddosml
