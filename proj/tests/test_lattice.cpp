#include <doctest.h>

#include <Eigen/Dense>
#include <set>

#include "helpers.hpp"
#include "uepframe/lattice.hpp"

using namespace uep;
using namespace uep::testing;

namespace {

std::set<std::vector<std::int64_t>> as_set(const std::vector<MultiIndex>& v) {
  std::set<std::vector<std::int64_t>> s;
  for (const auto& a : v) s.insert(a.values());
  return s;
}

bool same_angle(double a, double b) {
  const double d = std::remainder(a - b, 2 * M_PI);
  return std::abs(d) < 1e-12;
}

}  // namespace

TEST_CASE("determinant and adjugate") {
  CHECK(determinant(IntMatrix{{2}}) == 2);
  CHECK(determinant(IntMatrix{{1, 2}, {-2, -1}}) == 3);
  CHECK(determinant(IntMatrix{{1, 1}, {1, -1}}) == -2);
  CHECK(determinant(IntMatrix::scalar(3, 2)) == 8);
  CHECK(determinant(IntMatrix{{2, 4}, {1, 2}}) == 0);
  const IntMatrix M{{3, 1, 0}, {-1, 2, 5}, {4, 0, 1}};
  const IntMatrix A = adjugate(M);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t k = 0; k < 3; ++k) {
      std::int64_t s = 0;
      for (std::size_t l = 0; l < 3; ++l) s += A(i, l) * M(l, k);
      CHECK(s == (i == k ? determinant(M) : 0));
    }
  CHECK_THROWS_AS(determinant(IntMatrix(2, 3)), DimensionError);
}

TEST_CASE("is_expansive") {
  CHECK(is_expansive(IntMatrix{{2}}));
  CHECK(is_expansive(IntMatrix{{1, 2}, {-2, -1}}));
  CHECK(is_expansive(IntMatrix{{1, 1}, {1, -1}}));
  CHECK_FALSE(is_expansive(IntMatrix{{1, 0}, {0, 2}}));
  CHECK_FALSE(is_expansive(IntMatrix::identity(2)));
}

TEST_CASE("build_context: M = 2 I_2") {
  const DilationContext ctx(IntMatrix::scalar(2, 2));
  CHECK(ctx.m() == 4);
  CHECK(as_set(ctx.coset_reps()) == std::set<std::vector<std::int64_t>>{{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  std::set<std::vector<std::int64_t>> g;
  for (std::size_t i = 0; i < 4; ++i) g.insert(ctx.sigma_numerators(i));
  // sigma = 2 pi n / 4, so {0, pi}^2 has numerators {0, 2}^2.
  CHECK(g == std::set<std::vector<std::int64_t>>{{0, 0}, {0, 2}, {2, 0}, {2, 2}});
  for (const auto& s : ctx.G())
    for (double x : s) CHECK((same_angle(x, 0.0) || same_angle(x, M_PI)));
}

TEST_CASE("build_context: sqrt3 matrix and d = 1") {
  const DilationContext c3(IntMatrix{{1, 2}, {-2, -1}});
  CHECK(c3.m() == 3);
  CHECK(c3.coset_reps().size() == 3);
  // Lexicographically smallest representatives in the scanned box.
  CHECK(c3.coset_rep(0) == MultiIndex{0, 0});
  CHECK(c3.coset_rep(1) == MultiIndex{0, 1});
  CHECK(c3.coset_rep(2) == MultiIndex{0, 2});

  const DilationContext c1(IntMatrix{{2}});
  CHECK(c1.m() == 2);
  CHECK(as_set(c1.coset_reps()) == std::set<std::vector<std::int64_t>>{{0}, {1}});
  std::vector<double> g{c1.sigma(0)[0], c1.sigma(1)[0]};
  std::sort(g.begin(), g.end());
  CHECK(same_angle(g[0], 0.0));
  CHECK(same_angle(g[1], M_PI));

  CHECK_THROWS_AS(DilationContext(IntMatrix{{2, 4}, {1, 2}}), SingularMatrixError);
  CHECK_THROWS_AS(DilationContext(IntMatrix(2, 3)), DimensionError);
}

TEST_CASE("group elements and coset representatives are distinct") {
  for (const IntMatrix& M : {IntMatrix{{1, 2}, {-2, -1}}, IntMatrix{{1, 1}, {1, -1}}, IntMatrix{{2, 1}, {0, 3}},
                             IntMatrix::scalar(3, 2), IntMatrix{{-3}}}) {
    const DilationContext ctx(M);
    const auto m = ctx.m();
    CHECK(m == static_cast<std::size_t>(std::abs(determinant(M))));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t k = i + 1; k < m; ++k) {
        CHECK(ctx.sigma_numerators(i) != ctx.sigma_numerators(k));
        CHECK(ctx.class_of(ctx.coset_rep(i)) != ctx.class_of(ctx.coset_rep(k)));
      }
    for (std::size_t k = 0; k < m; ++k) CHECK(ctx.class_of(ctx.coset_rep(k)) == k);
    // alpha and alpha + M beta share a class.
    const MultiIndex a = MultiIndex(std::vector<std::int64_t>(ctx.dim(), 5));
    MultiIndex beta(ctx.dim());
    beta[0] = -2;
    CHECK(ctx.class_of(a) == ctx.class_of(a + M.apply(beta)));
    // Each sigma pairs trivially with M Z^d.
    for (std::size_t s = 0; s < m; ++s) CHECK(std::abs(ctx.phase(M.apply(beta), s) - 1.0) < 1e-15);
  }
}

TEST_CASE("pairing") {
  const DilationContext c1(IntMatrix{{2}});
  const std::size_t pi = c1.sigma_numerators(0)[0] == 1 ? 0 : 1;
  const std::size_t odd = c1.coset_rep(0)[0] == 1 ? 0 : 1;
  CHECK(std::abs(c1.pairing(pi, odd) + 1.0) < 1e-15);
  const DilationContext ctx(IntMatrix{{1, 2}, {-2, -1}});
  for (std::size_t s = 0; s < ctx.m(); ++s)
    for (std::size_t k = 0; k < ctx.m(); ++k) {
      CHECK(std::abs(std::abs(ctx.pairing(s, k)) - 1.0) < 1e-15);
      if (ctx.coset_rep(k).is_zero()) CHECK(std::abs(ctx.pairing(s, k) - 1.0) < 1e-15);
      const Complex w = std::pow(ctx.pairing(s, k), 3);
      CHECK(std::abs(w - 1.0) < 1e-14);
    }
  CHECK_THROWS_AS(ctx.pairing(3, 0), std::out_of_range);
}

TEST_CASE("pairing table is a scaled unitary") {
  for (const IntMatrix& M : {IntMatrix::scalar(2, 2), IntMatrix{{1, 2}, {-2, -1}}, IntMatrix::scalar(3, 2)}) {
    const DilationContext ctx(M);
    const auto m = static_cast<Eigen::Index>(ctx.m());
    Eigen::MatrixXcd A(m, m);
    for (Eigen::Index s = 0; s < m; ++s)
      for (Eigen::Index k = 0; k < m; ++k) A(s, k) = ctx.pairing(s, k);
    const Eigen::MatrixXcd I = A * A.adjoint() / static_cast<double>(m);
    CHECK((I - Eigen::MatrixXcd::Identity(m, m)).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("shift_action") {
  const DilationContext c1(IntMatrix{{2}});
  const LaurentPoly z = mono({1});
  for (std::size_t s = 0; s < 2; ++s) {
    const LaurentPoly zs = shift_action(c1, z, s);
    if (c1.sigma_numerators(s)[0] == 0)
      CHECK(max_abs_diff(zs, z) == 0.0);
    else
      CHECK(std::abs(zs.coeff(MultiIndex{1}) + 1.0) < 1e-15);
  }

  const DilationContext c2(IntMatrix::scalar(2, 2));
  const LaurentPoly p = box_spline_symbol();
  for (std::size_t s = 0; s < 4; ++s) {
    const Complex a = evaluate(shift_action(c2, p, s), {0.0, 0.0});
    const Complex b = evaluate(p, c2.sigma(s));
    CHECK(std::abs(a - b) < 1e-15);
    if (c2.sigma_numerators(s) == std::vector<std::int64_t>{2, 2}) CHECK(std::abs(a) < 1e-15);
  }
  CHECK_THROWS_AS(shift_action(c2, mono({1}), 0), DimensionError);
}

TEST_CASE("is_g_invariant") {
  const DilationContext c1(IntMatrix{{2}});
  CHECK(is_g_invariant(c1, LaurentPoly::constant(1, 3.0), 0.0));
  CHECK(is_g_invariant(c1, mono({2}), 1e-15));
  CHECK_FALSE(is_g_invariant(c1, mono({1}), 1e-12));

  const DilationContext c2(IntMatrix::scalar(2, 2));
  const LaurentPoly p00 = 0.125 * (one(2) + mono({2, 2}));
  CHECK(is_g_invariant(c2, p00, 1e-15));
  CHECK_FALSE(is_g_invariant(c2, box_spline_symbol(), 1e-12));

  // Invariance means exponents in M Z^d.
  const DilationContext c3(IntMatrix{{1, 2}, {-2, -1}});
  CHECK(is_g_invariant(c3, mono({1, -2}) + mono({2, -1}), 1e-14));
  CHECK_FALSE(is_g_invariant(c3, mono({1, 0}), 1e-12));
}

TEST_CASE("group_add") {
  const DilationContext ctx(IntMatrix{{1, 2}, {-2, -1}});
  for (std::size_t i = 0; i < ctx.m(); ++i)
    for (std::size_t k = 0; k < ctx.m(); ++k) {
      const auto s = ctx.group_add(i, k);
      for (std::size_t a = 0; a < 2; ++a)
        CHECK(same_angle(ctx.sigma(s)[a], ctx.sigma(i)[a] + ctx.sigma(k)[a]));
    }
}
