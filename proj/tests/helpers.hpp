#pragma once

#include "wittsupport/supports.hpp"

#include <doctest.h>

namespace witt::test {

inline RationalVector Q(std::initializer_list<long> v) {
  RationalVector out;
  for (long x : v) out.emplace_back(x);
  return out;
}

inline ScalarVector S(std::initializer_list<const char*> v) {
  ScalarVector out;
  for (const char* s : v) out.push_back(Scalar::parse(s));
  return out;
}

/// Window over the cube [-r, r]^n with dim 1 everywhere except the listed holes.
inline SupportWindow synthetic(std::size_t n, std::int64_t r, const std::vector<LatticeVector>& holes,
                               ScalarVector coset = {}) {
  SupportWindow w;
  w.box = Box::cube(n, r);
  w.coset = coset.empty() ? ScalarVector(n, Scalar(Rational(1, 2))) : coset;
  for (const auto& x : w.box.points()) w.dims[x] = 1;
  for (const auto& h : holes) w.dims[h] = 0;
  bool integral = true;
  for (const auto& s : w.coset) integral = integral && s.is_rational() && is_integer(s.rational());
  if (integral) {
    LatticeVector z(n);
    for (std::size_t i = 0; i < n; ++i) z[i] = -to_int64(w.coset[i].rational());
    w.zero_weight_offset = z;
  }
  return w;
}

}  // namespace witt::test
