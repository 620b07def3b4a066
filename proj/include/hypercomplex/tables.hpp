#pragma once

#include "hypercomplex/cd_algebra.hpp"
#include "hypercomplex/clifford.hpp"
#include "hypercomplex/report.hpp"

namespace hypercomplex {

/// {"dim", "field", "gammas": [...], "table": [[{"k", "beta"}, ...], ...]}
[[nodiscard]] Json cd_table_json(const CdAlgebra& algebra);

/// {"n", "r", "mu", "field", "dim", "monomials": [...],
///  "table": [[{"k": "e1^2*e2", "beta": "..."}, ...], ...]}
[[nodiscard]] Json clifford_table_json(const CliffordAlgebra& algebra);

}  // namespace hypercomplex
