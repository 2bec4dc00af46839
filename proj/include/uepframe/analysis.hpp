#pragma once

// Zeros of f on the torus, Hessians, and the Hessian criterion for frame existence.

#include <Eigen/Core>
#include <iosfwd>

#include "uepframe/verify.hpp"

namespace uep {

enum class Verdict { SufficientHolds, NecessaryViolated, Inconclusive };

std::string to_string(Verdict v);

struct ZeroReport {
  std::vector<TorusPoint> zeros;
  std::vector<Eigen::MatrixXd> hessians;
  std::vector<double> minEigenvalues;
  Verdict verdict = Verdict::Inconclusive;
  double gridMin = 0.0;
  TorusPoint gridArgmin;
  std::size_t gridPointsPerAxis = 0;
  std::vector<std::string> warnings;
};

/// Gradient of omega -> q(e^{-i omega}).
Eigen::VectorXcd gradient_at(const LaurentPoly& q, const TorusPoint& w);
/// Matrix of second partials of omega -> q(e^{-i omega}).
Eigen::MatrixXcd hessian_at(const LaurentPoly& q, const TorusPoint& w);

/// -2 Hess(p)(1) - 2 grad p(1)^* grad p(1). Requires real coefficients and
/// sum rules of order at least 2; throws std::domain_error otherwise.
Eigen::MatrixXd hessian_f_via_lemma(const Mask& mask);

/// Zeros of f located from the grid (points with f < 100 tol and grid local
/// minima) and refined by damped Newton on grad f. Returned points lie in
/// [0, 2 pi)^d, are pairwise at least 1e-6 apart (1e-3 when either has a singular
/// Hessian) and satisfy |f| <= tol.
std::vector<TorusPoint> find_zeros_f(const Mask& mask, std::size_t gridPointsPerAxis, double tol = 1e-9,
                                     std::vector<std::string>* warnings = nullptr);

/// Grid check, zeros, Hessians at zeros and the resulting verdict.
ZeroReport existence_verdict(const Mask& mask, std::size_t gridPointsPerAxis = 0, double tol = 1e-9);

/// Writes "omega_1,...,omega_d,f" rows of f on the uniform grid.
void write_grid_csv(const Mask& mask, std::size_t gridPointsPerAxis, std::ostream& out);

}  // namespace uep
