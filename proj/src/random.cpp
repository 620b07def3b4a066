#include "hypercomplex/random.hpp"

namespace hypercomplex {

Scalar random_scalar(const Field& field, SplitMix64& rng) {
  switch (field.kind()) {
    case FieldKind::rationals: return field.from_int(rng.between(-5, 5));
    case FieldKind::prime_field: return field.from_int(static_cast<long long>(rng.below(field.characteristic())));
    case FieldKind::cyclotomic: {
      std::vector<mpq_class> poly(field.degree());
      for (auto& c : poly) c = static_cast<long>(rng.between(-5, 5));
      return field.from_polynomial(std::move(poly));
    }
  }
  return field.zero();
}

CdElement random_element(const CdAlgebra& algebra, SplitMix64& rng) {
  std::vector<Scalar> coeffs;
  coeffs.reserve(algebra.dim());
  for (std::size_t i = 0; i < algebra.dim(); ++i) coeffs.push_back(random_scalar(algebra.field(), rng));
  return algebra.element(std::move(coeffs));
}

}  // namespace hypercomplex
