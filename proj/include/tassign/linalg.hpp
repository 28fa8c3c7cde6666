#pragma once

// Exact linear algebra over Q. Elimination runs fraction-free on integer
// rows (with content removal) and only the final normalization divides.

#include "tassign/poly.hpp"

#include <cstddef>
#include <vector>

namespace tassign::linalg {

using Row = std::vector<Rational>;
using Matrix = std::vector<Row>;

struct Echelon {
    Matrix rows;                      ///< reduced row echelon form, zero rows dropped
    std::vector<std::size_t> pivots;  ///< pivot column of each row
};

/// Reduced row echelon form with leftmost pivots. `cols` is needed when the
/// matrix has no rows.
Echelon row_reduce(const Matrix& m, std::size_t cols);

std::size_t rank(const Matrix& m, std::size_t cols);

/// Basis of {v : m v = 0}, returned as the rows of a matrix in reduced row
/// echelon form.
Matrix nullspace(const Matrix& m, std::size_t cols);

} // namespace tassign::linalg
