#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <random>

#include "uepframe/hermitian_eigen.hpp"
#include "uepframe/laurent.hpp"

using namespace uep;

namespace {

Eigen::MatrixXcd random_hermitian(std::mt19937_64& rng, Eigen::Index n) {
  std::normal_distribution<double> g;
  Eigen::MatrixXcd A(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index k = 0; k < n; ++k) A(i, k) = {g(rng), g(rng)};
  return (A + A.adjoint()) / 2.0;
}

Eigen::MatrixXd random_symmetric(std::mt19937_64& rng, Eigen::Index n) {
  std::normal_distribution<double> g;
  Eigen::MatrixXd A(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index k = 0; k < n; ++k) A(i, k) = g(rng);
  return (A + A.transpose()) / 2.0;
}

}  // namespace

TEST_CASE("hermitian_eigen matches the library solver") {
  std::mt19937_64 rng(3);
  for (Eigen::Index n : {1, 2, 3, 5, 8, 13, 24}) {
    const Eigen::MatrixXcd A = random_hermitian(rng, n);
    const auto e = hermitian_eigen(A);
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> ref(A);
    CHECK((e.values - ref.eigenvalues()).cwiseAbs().maxCoeff() < 1e-12);
    const Eigen::MatrixXcd& V = e.vectors;
    CHECK((V.adjoint() * V - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((A * V - V * e.values.asDiagonal()).cwiseAbs().maxCoeff() < 1e-11);
    for (Eigen::Index k = 1; k < n; ++k) CHECK(e.values(k - 1) <= e.values(k));
  }
}

TEST_CASE("symmetric_eigen matches the library solver, including negative off-diagonals") {
  std::mt19937_64 rng(5);
  for (Eigen::Index n : {2, 4, 7, 16}) {
    const Eigen::MatrixXd A = random_symmetric(rng, n);
    const auto e = symmetric_eigen(A);
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ref(A);
    CHECK((e.values - ref.eigenvalues()).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((A * e.vectors - e.vectors * e.values.asDiagonal()).cwiseAbs().maxCoeff() < 1e-11);
  }
  Eigen::MatrixXd B(2, 2);
  B << 1, -1, -1, 1;
  const auto e = symmetric_eigen(B);
  CHECK(std::abs(e.values(0)) < 1e-15);
  CHECK(std::abs(e.values(1) - 2.0) < 1e-15);
}

TEST_CASE("degenerate and trivial inputs") {
  const auto z = hermitian_eigen(Eigen::MatrixXcd::Zero(3, 3));
  CHECK(z.values.cwiseAbs().maxCoeff() == 0.0);
  CHECK(z.sweeps == 0);
  const auto i = hermitian_eigen(Eigen::MatrixXcd::Identity(4, 4));
  CHECK((i.values.array() - 1.0).abs().maxCoeff() == 0.0);
  // Rank one with repeated zero eigenvalues.
  Eigen::VectorXcd v(3);
  v << Complex(1, 1), Complex(0, -2), 0.5;
  const auto r = hermitian_eigen(v * v.adjoint());
  CHECK(std::abs(r.values(2) - v.squaredNorm()) < 1e-13);
  CHECK(std::abs(r.values(0)) < 1e-14);
  CHECK_THROWS_AS(hermitian_eigen(Eigen::MatrixXcd::Zero(2, 3)), std::invalid_argument);
}

TEST_CASE("only the hermitian part is used") {
  Eigen::MatrixXcd A(2, 2);
  A << 2.0, Complex(1, 1), Complex(3, 0), -1.0;
  const Eigen::MatrixXcd H = (A + A.adjoint()) / 2.0;
  const auto a = hermitian_eigen(A), h = hermitian_eigen(H);
  CHECK((a.values - h.values).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("sweep cap and non-finite input") {
  std::mt19937_64 rng(9);
  const Eigen::MatrixXcd A = random_hermitian(rng, 12);
  CHECK_THROWS_AS(hermitian_eigen(A, 1), EigenNonConvergence);
  Eigen::MatrixXcd B = Eigen::MatrixXcd::Identity(2, 2);
  B(0, 1) = B(1, 0) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(hermitian_eigen(B), EigenNonConvergence);
  CHECK(hermitian_eigen(A).sweeps <= kJacobiMaxSweeps);
}
