#include "hypercomplex/tables.hpp"

namespace hypercomplex {

Json cd_table_json(const CdAlgebra& algebra) {
  Json out;
  out["dim"] = algebra.dim();
  out["field"] = algebra.field().name();
  Json gammas = Json::array();
  for (const auto& g : algebra.gammas()) gammas.push_back(g.to_string());
  out["gammas"] = std::move(gammas);
  const StructureTable& t = algebra.table();
  Json rows = Json::array();
  for (std::size_t i = 0; i < t.dim(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < t.dim(); ++j) {
      Json entry;
      entry["k"] = t(i, j).k;
      entry["beta"] = t(i, j).beta.to_string();
      row.push_back(std::move(entry));
    }
    rows.push_back(std::move(row));
  }
  out["table"] = std::move(rows);
  return out;
}

Json clifford_table_json(const CliffordAlgebra& algebra) {
  Json out;
  out["n"] = algebra.order();
  out["r"] = algebra.generators();
  out["mu"] = algebra.mu();
  out["field"] = algebra.field().name();
  out["dim"] = algebra.dim();
  Json names = Json::array();
  for (std::size_t m = 0; m < algebra.dim(); ++m) names.push_back(algebra.monomial_name(m));
  out["monomials"] = names;
  Json rows = Json::array();
  for (std::size_t a = 0; a < algebra.dim(); ++a) {
    Json row = Json::array();
    for (std::size_t b = 0; b < algebra.dim(); ++b) {
      const auto [k, beta] = algebra.monomial_product(a, b);
      Json entry;
      entry["k"] = names[k];
      entry["beta"] = beta.to_string();
      row.push_back(std::move(entry));
    }
    rows.push_back(std::move(row));
  }
  out["table"] = std::move(rows);
  return out;
}

}  // namespace hypercomplex
