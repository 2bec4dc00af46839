#pragma once

#include <cmath>
#include <random>

#include "uepframe/laurent.hpp"

namespace uep::testing {

inline const double kSqrt3 = std::sqrt(3.0);

inline LaurentPoly mono(std::initializer_list<std::int64_t> e, Complex c = 1.0) {
  return LaurentPoly::monomial(MultiIndex(e), c);
}

inline LaurentPoly one(std::size_t dim) { return LaurentPoly::constant(dim, 1.0); }

/// (1/8)(1 + z1)(1 + z2)(1 + z1 z2)
inline LaurentPoly box_spline_symbol() {
  return 0.125 * ((one(2) + mono({1, 0})) * (one(2) + mono({0, 1})) * (one(2) + mono({1, 1})));
}

/// (1/8)[1+sqrt3, 3+sqrt3, 3-sqrt3, 1-sqrt3] at exponents 0..3
inline LaurentPoly daubechies_symbol() {
  const double c[4] = {1 + kSqrt3, 3 + kSqrt3, 3 - kSqrt3, 1 - kSqrt3};
  std::vector<Term> t;
  for (std::int64_t k = 0; k < 4; ++k) t.push_back({MultiIndex{k}, c[k] / 8.0});
  return LaurentPoly(1, std::move(t));
}

/// Random polynomial with exponents in [-spread, spread]^dim.
inline LaurentPoly random_poly(std::mt19937_64& rng, std::size_t dim, std::size_t terms, std::int64_t spread,
                               bool real = false) {
  std::uniform_int_distribution<std::int64_t> e(-spread, spread);
  std::uniform_real_distribution<double> c(-1.0, 1.0);
  std::vector<Term> t;
  for (std::size_t k = 0; k < terms; ++k) {
    MultiIndex a(dim);
    for (std::size_t i = 0; i < dim; ++i) a[i] = e(rng);
    t.push_back({a, Complex(c(rng), real ? 0.0 : c(rng))});
  }
  return LaurentPoly(dim, std::move(t));
}

inline TorusPoint random_point(std::mt19937_64& rng, std::size_t dim) {
  std::uniform_real_distribution<double> u(0.0, 2.0 * M_PI);
  TorusPoint w(dim);
  for (auto& x : w) x = u(rng);
  return w;
}

}  // namespace uep::testing
