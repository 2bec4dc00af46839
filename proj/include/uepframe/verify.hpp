#pragma once

// UEP identity checkers (group, polyphase and matrix forms), the sub-QMF grid
// check and sum-rule order.

#include <optional>

#include "uepframe/isotypical.hpp"

namespace uep {

inline constexpr double kDefaultVerifyTolerance = 1e-9;

/// A constructed frame failed its own post-verification, or a constructor precondition failed.
class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct FrameSystem {
  Mask mask;
  std::vector<LaurentPoly> generators;
};

struct VerificationReport {
  std::optional<double> maxResidualUEP;
  std::optional<double> maxResidualPolyphase;
  std::optional<double> maxResidualMatrix;
  double vanishingMomentMax = 0.0;  // max_j |q_j(1)|
  double tolerance = kDefaultVerifyTolerance;
  bool passed = false;              // every computed residual <= tolerance
};

/// delta_{sigma,0} - p^{sigma*} p = sum_j q_j^{sigma*} q_j for every sigma.
VerificationReport check_uep(const FrameSystem& frame, double tol = kDefaultVerifyTolerance);
/// p~_chi^* p~_eta + sum_j q~_{j,chi}^* q~_{j,eta} = delta_{chi,eta}/m on polyphase components.
VerificationReport check_uep_polyphase(const FrameSystem& frame, double tol = kDefaultVerifyTolerance);
/// U^* U = I_m with U the (N+1) x m matrix of shifted symbols.
VerificationReport check_uep_matrix(const FrameSystem& frame, double tol = kDefaultVerifyTolerance);
/// Runs all three checkers.
VerificationReport check_all(const FrameSystem& frame, double tol = kDefaultVerifyTolerance);

struct SubQmfResult {
  double minValue = 0.0;
  TorusPoint argmin;
  double maxImag = 0.0;  // largest |Im f| on the grid
};

/// Default grid: 64 points per axis for d <= 2, otherwise 32.
std::size_t default_grid_points(std::size_t dim);

/// Minimum of f = 1 - sum |p^sigma|^2 on the uniform grid.
SubQmfResult check_subqmf_grid(const Mask& mask, std::size_t gridPointsPerAxis);

/// All multi-indices mu >= 0 with |mu| = order.
std::vector<MultiIndex> multi_indices_of_order(std::size_t dim, std::size_t order);

/// Largest k <= maxOrder with |D^mu p(e^{-i sigma})| <= tol for |mu| < k and sigma != 0.
std::size_t sum_rules_order(const Mask& mask, std::size_t maxOrder, double tol = 1e-9);

}  // namespace uep
