#pragma once

#include <random>

#include "coxstrata/cyclotomic.hpp"
#include "coxstrata/poly.hpp"

namespace gen {

// Fixed seeds keep the property runs reproducible.
inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(20260415);
  return engine;
}

inline int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

inline coxstrata::Rational rational(int bound = 9) {
  return coxstrata::fraction(integer(-bound, bound), integer(1, bound));
}

inline coxstrata::CycRat cyc(int conductor, int bound = 5) {
  std::vector<coxstrata::Rational> powers(conductor);
  for (auto& c : powers) c = integer(0, 2) ? coxstrata::Rational(0) : rational(bound);
  return coxstrata::CycRat::from_powers(conductor, std::move(powers));
}

inline coxstrata::PolyU poly(int max_degree, int conductor = 1) {
  std::vector<coxstrata::CycRat> c(integer(0, max_degree) + 1);
  for (auto& x : c) x = conductor == 1 ? coxstrata::CycRat(rational()) : cyc(conductor);
  return coxstrata::PolyU(std::move(c));
}

}  // namespace gen
