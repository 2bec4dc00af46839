#include <doctest.h>

#include "helpers.hpp"

using namespace uep;
using namespace uep::testing;

TEST_CASE("add merges terms and sweeps cancellations") {
  const LaurentPoly s = mono({1}) + mono({-1});
  CHECK(s.num_terms() == 2);
  CHECK(s.coeff(MultiIndex{1}) == Complex(1.0));
  CHECK(s.coeff(MultiIndex{-1}) == Complex(1.0));

  const LaurentPoly p = box_spline_symbol();
  CHECK(max_abs_diff(p + LaurentPoly(2), p) == 0.0);
  CHECK(std::abs(p.coeff(MultiIndex{1, 1}) - 0.25) < 1e-15);
  CHECK(p.num_terms() == 7);

  CHECK((mono({2}) - mono({2})).is_zero());
  CHECK_THROWS_AS(mono({1}) + mono({1, 0}), DimensionError);
}

TEST_CASE("mul is a convolution of exponent maps") {
  const LaurentPoly u = mono({1}) * mono({-1});
  CHECK(u.num_terms() == 1);
  CHECK(u.coeff(MultiIndex{0}) == Complex(1.0));

  const LaurentPoly d = (one(1) + mono({1})) * (one(1) - mono({1}));
  CHECK(d.num_terms() == 2);
  CHECK(std::abs(d.coeff(MultiIndex{0}) - 1.0) < 1e-15);
  CHECK(std::abs(d.coeff(MultiIndex{2}) + 1.0) < 1e-15);

  const LaurentPoly p = daubechies_symbol();
  CHECK(std::abs((involution(p) * p).coeff(MultiIndex{0}) - 0.5) < 1e-15);

  CHECK_THROWS_AS(mono({1}) * mono({1, 0}), DimensionError);
}

TEST_CASE("involution conjugates and reflects") {
  const LaurentPoly a = mono({2, -1}, Complex(1.0, 2.0));
  const LaurentPoly s = involution(a);
  CHECK(s.num_terms() == 1);
  CHECK(s.coeff(MultiIndex{-2, 1}) == Complex(1.0, -2.0));

  const LaurentPoly c = cos_poly(MultiIndex{1, 2}) + 0.3 * cos_poly(MultiIndex{0, 1});
  CHECK(max_abs_diff(involution(c), c) < 1e-16);

  const LaurentPoly p = daubechies_symbol();
  CHECK(std::abs(involution(p).coeff(MultiIndex{0}) - (1 + kSqrt3) / 8) < 1e-15);
  CHECK(max_abs_diff(involution(involution(p)), p) == 0.0);
}

TEST_CASE("is_hermitian") {
  // (1/4)(sin^2 w1 + sin^2 w2 + sin^2(w1 + w2))
  const LaurentPoly s1 = sin_poly(MultiIndex{1, 0}), s2 = sin_poly(MultiIndex{0, 1}), s3 = sin_poly(MultiIndex{1, 1});
  const LaurentPoly f = 0.25 * (s1 * s1 + s2 * s2 + s3 * s3);
  CHECK(is_hermitian(f, 1e-14));
  CHECK_FALSE(is_hermitian(mono({1}), 1e-12));
  const LaurentPoly q = mono({2, 1}, Complex(0.5, -1.5)) + mono({0, -3}, 2.0);
  CHECK(is_hermitian(q + involution(q), 0.0));
  CHECK_THROWS_AS(is_hermitian(q, -1.0), std::invalid_argument);
}

TEST_CASE("evaluate") {
  CHECK(std::abs(evaluate(daubechies_symbol(), {0.0}) - 1.0) < 1e-15);
  CHECK(std::abs(evaluate(box_spline_symbol(), {M_PI, M_PI})) < 1e-15);
  CHECK(evaluate(LaurentPoly::constant(3, Complex(2.0, -1.0)), {0.3, 1.1, -4.0}) == Complex(2.0, -1.0));
  // z = exp(-i w)
  const Complex v = evaluate(mono({1}), {0.7});
  CHECK(std::abs(v - std::exp(Complex(0.0, -0.7))) < 1e-15);
  CHECK_THROWS_AS(evaluate(mono({1}), {0.0, 0.0}), DimensionError);
}

TEST_CASE("derivative_eval") {
  const LaurentPoly p = box_spline_symbol();
  const TorusPoint w{0.4, -1.3};
  CHECK(derivative_eval(p, MultiIndex{0, 0}, w) == evaluate(p, w));
  const Complex d1 = derivative_eval(p, MultiIndex{1, 0}, {0.0, 0.0});
  CHECK(std::abs(d1 - Complex(0.0, -1.0)) < 1e-15);
  const Complex d2 = derivative_eval(p, MultiIndex{2, 0}, {0.0, 0.0});
  CHECK(std::abs(d2 - Complex(-1.5, 0.0)) < 1e-15);
  CHECK_THROWS_AS(derivative_eval(p, MultiIndex{-1, 0}, w), std::invalid_argument);
}

TEST_CASE("evaluate_grid matches pointwise evaluation") {
  const LaurentPoly p = box_spline_symbol() * mono({-3, 2});
  const std::size_t n = 8;
  const auto vals = evaluate_grid(p, n);
  REQUIRE(vals.size() == n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const TorusPoint w{2 * M_PI * i / n, 2 * M_PI * k / n};
      CHECK(std::abs(vals[i * n + k] - evaluate(p, w)) < 1e-14);
    }
}

TEST_CASE("substitute_monomial") {
  const LaurentPoly p = box_spline_symbol() + mono({-2, 3}, Complex(0.0, 1.0));
  CHECK(max_abs_diff(substitute_monomial(p, IntMatrix::identity(2)), p) == 0.0);

  // Swap of the two variables: p10 of the butterfly becomes p01.
  const IntMatrix swap{{0, 1}, {1, 0}};
  const LaurentPoly p10 = mono({1, 0}, 0.125) + mono({-1, 0}, 0.125) + mono({1, 2}, -1.0 / 64);
  const LaurentPoly p01 = mono({0, 1}, 0.125) + mono({0, -1}, 0.125) + mono({2, 1}, -1.0 / 64);
  CHECK(max_abs_diff(substitute_monomial(p10, swap), p01) == 0.0);

  // Columns are the images (z1 z2 z3, z1^-1, z2^-1).
  const IntMatrix B{{1, -1, 0}, {1, 0, -1}, {1, 0, 0}};
  const LaurentPoly img = substitute_monomial(mono({1, 0, 0}), B);
  CHECK(img.coeff(MultiIndex{1, 1, 1}) == Complex(1.0));
  CHECK(substitute_monomial(mono({0, 1, 0}), B).coeff(MultiIndex{-1, 0, 0}) == Complex(1.0));

  // Output dimension follows B.rows().
  const IntMatrix embed{{1}, {0}, {2}};
  const LaurentPoly e = substitute_monomial(mono({3}), embed);
  CHECK(e.dim() == 3);
  CHECK(e.coeff(MultiIndex{3, 0, 6}) == Complex(1.0));
  CHECK_THROWS_AS(substitute_monomial(p, embed), DimensionError);
}

TEST_CASE("sin_poly and cos_poly") {
  CHECK(max_abs_diff(cos_poly(MultiIndex{0, 0}), one(2)) == 0.0);
  CHECK(sin_poly(MultiIndex{0, 0}).is_zero());
  const LaurentPoly s = sin_poly(MultiIndex{1, 0}), c = cos_poly(MultiIndex{1, 0});
  CHECK(max_abs_diff(s * s + c * c, one(2)) < 1e-16);
  CHECK(std::abs(evaluate(sin_poly(MultiIndex{1, 1}), {M_PI / 4, M_PI / 4}) - 1.0) < 1e-15);
  const TorusPoint w{0.37, -2.1};
  CHECK(std::abs(evaluate(sin_poly(MultiIndex{2, -1}), w) - std::sin(2 * 0.37 + 2.1)) < 1e-15);
  CHECK(std::abs(evaluate(cos_poly(MultiIndex{2, -1}), w) - std::cos(2 * 0.37 + 2.1)) < 1e-15);
}

TEST_CASE("canonicalize_phase and exponent_spread") {
  const LaurentPoly p = mono({-1}, Complex(0.0, -2.0)) + mono({3}, 1.0);
  const LaurentPoly c = canonicalize_phase(p);
  CHECK(std::abs(c.coeff(MultiIndex{-1}) - 2.0) < 1e-15);
  CHECK(std::abs(c.coeff(MultiIndex{3}) - Complex(0.0, 1.0)) < 1e-15);
  CHECK(exponent_spread(p) == 4);
  CHECK(exponent_spread(box_spline_symbol()) == 2);
  CHECK(canonicalize_phase(LaurentPoly(1)).is_zero());
}

TEST_CASE("terms stay sorted, unique and above the drop tolerance") {
  std::vector<Term> t{{MultiIndex{2, 0}, 1.0}, {MultiIndex{0, 1}, 2.0}, {MultiIndex{2, 0}, -1.0},
                      {MultiIndex{-1, 5}, kDropTolerance / 2}, {MultiIndex{0, 1}, 1.0}};
  const LaurentPoly p(2, t);
  REQUIRE(p.num_terms() == 1);
  CHECK(p.terms()[0].exponent == MultiIndex{0, 1});
  CHECK(p.terms()[0].coeff == Complex(3.0));
  const LaurentPoly q = box_spline_symbol() * mono({-5, 1}) + mono({3, -3});
  for (std::size_t k = 1; k < q.num_terms(); ++k) CHECK(q.terms()[k - 1].exponent < q.terms()[k].exponent);
  CHECK_THROWS_AS(LaurentPoly(2, std::vector<Term>{{MultiIndex{1}, 1.0}}), DimensionError);
}

TEST_CASE("dense and sparse multiplication agree") {
  std::mt19937_64 rng(7);
  // A wide exponent range forces the sorted-merge path.
  const LaurentPoly a = random_poly(rng, 2, 6, 3000), b = random_poly(rng, 2, 6, 3000);
  const LaurentPoly c = random_poly(rng, 2, 6, 3), d = random_poly(rng, 2, 6, 3);
  auto naive = [](const LaurentPoly& x, const LaurentPoly& y) {
    std::vector<Term> t;
    for (const auto& s : x.terms())
      for (const auto& u : y.terms()) t.push_back({s.exponent + u.exponent, s.coeff * u.coeff});
    return LaurentPoly(x.dim(), std::move(t));
  };
  CHECK(max_abs_diff(a * b, naive(a, b)) < 1e-15);
  CHECK(max_abs_diff(c * d, naive(c, d)) < 1e-15);
}
