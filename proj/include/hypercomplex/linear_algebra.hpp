#pragma once

#include <cstddef>
#include <vector>

#include "hypercomplex/field.hpp"

namespace hypercomplex {

/// Dense row-major matrix over one field; rows may be empty only when the
/// matrix has no columns.
using Matrix = std::vector<std::vector<Scalar>>;

/// Reduced row echelon form in place; returns the pivot column of each
/// nonzero row.
std::vector<std::size_t> row_reduce(Matrix& m);

[[nodiscard]] std::size_t rank(Matrix m);

/// Basis of { v : m v = 0 } for a matrix with `columns` columns.
[[nodiscard]] std::vector<std::vector<Scalar>> kernel(Matrix m, const Field& field, std::size_t columns);

}  // namespace hypercomplex
