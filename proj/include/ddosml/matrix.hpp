#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ddosml/table.hpp"

namespace ddosml {

/// Dense row-major matrix; the numeric block the learners train on.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c, double fill = 0.0) : rows(r), cols(c), data(r * c, fill) {}

    double& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    double at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
    const double* row(std::size_t r) const { return data.data() + r * cols; }
    double* row(std::size_t r) { return data.data() + r * cols; }
};

/// Extracts the named numeric columns into a matrix, in the given order.
Matrix to_matrix(const FeatureTable& table, const std::vector<std::string>& names);

}  // namespace ddosml
