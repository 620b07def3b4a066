#pragma once

#include <initializer_list>
#include <vector>

#include "hypercomplex/cd_algebra.hpp"
#include "hypercomplex/error.hpp"

namespace test_support {

inline hypercomplex::CdAlgebra cd(const hypercomplex::Field& field, std::initializer_list<long long> gammas) {
  std::vector<hypercomplex::Scalar> g;
  for (long long v : gammas) g.push_back(field.from_int(v));
  return hypercomplex::CdAlgebra::make(field, std::move(g));
}

inline hypercomplex::CdAlgebra cdq(std::initializer_list<long long> gammas) {
  return cd(hypercomplex::Field::rationals(), gammas);
}

template <class Fn>
hypercomplex::ErrorCode error_code_of(Fn&& fn) {
  try {
    fn();
  } catch (const hypercomplex::Error& e) {
    return e.code();
  }
  throw std::logic_error("expected a hypercomplex::Error");
}

}  // namespace test_support
