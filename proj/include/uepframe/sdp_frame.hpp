#pragma once

// Gram-matrix route to frame generators: find a null matrix O such that
// S = R + O is positive semidefinite, with R = diag(Re p) - p^* p over a
// support set, then factor S = sum_j q_j^* q_j.

#include <Eigen/Core>
#include <functional>

#include "uepframe/verify.hpp"

namespace uep {

/// Ordered (lexicographic), duplicate-free list of exponents.
class SupportSet {
 public:
  SupportSet() = default;
  explicit SupportSet(std::vector<MultiIndex> points);
  /// Every lattice point of prod_k [lo_k, hi_k].
  static SupportSet box(const std::vector<std::pair<std::int64_t, std::int64_t>>& bounds);
  static SupportSet of(const LaurentPoly& p);

  std::size_t size() const { return points_.size(); }
  const MultiIndex& operator[](std::size_t i) const { return points_[i]; }
  const std::vector<MultiIndex>& points() const { return points_; }
  /// Index of alpha or -1 when absent.
  std::ptrdiff_t index_of(const MultiIndex& alpha) const;
  /// Bounding box enlarged by `by` in every coordinate, filled.
  SupportSet dilated(std::int64_t by) const;

 private:
  std::vector<MultiIndex> points_;
};

struct GramProblem {
  SupportSet support;
  Eigen::MatrixXcd R;
  /// Index pairs (i, j) sharing class(support[i]) and lag support[j] - support[i].
  std::vector<std::vector<std::pair<Eigen::Index, Eigen::Index>>> groups;
  bool real = false;  // R and every group real
};

class SupportError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// requirePartitionOfUnity may be switched off to study masks such as p = 1.
GramProblem build_gram_seed(const Mask& mask, const SupportSet& support, bool requirePartitionOfUnity = true);

/// Orthogonal projection onto {R + O : every group of O sums to zero}.
Eigen::MatrixXcd project_affine(const Eigen::MatrixXcd& S, const GramProblem& prob);
/// max over groups of |sum of (S - R) over the group|.
double affine_deviation(const Eigen::MatrixXcd& S, const GramProblem& prob);
/// Nearest PSD matrix in Frobenius norm (negative eigenvalues clipped).
Eigen::MatrixXcd project_psd(const Eigen::MatrixXcd& S);
/// Nearest PSD matrix of rank at most r.
Eigen::MatrixXcd project_psd_rank(const Eigen::MatrixXcd& S, std::size_t r);
/// Smallest eigenvalue of the hermitian part.
double min_eigenvalue(const Eigen::MatrixXcd& S);

struct SolveOptions {
  int maxIterations = 20000;
  double residualTol = 1e-10;
  double rankTol = 1e-9;
  int stallWindow = 500;
  /// After the Dykstra phase, alternate the affine projection with rank-r
  /// PSD projections for r = 1, 2, ... .
  bool rankSweep = true;
};

enum class SolveStatus { Feasible, Stalled };

struct SolveResult {
  SolveStatus status = SolveStatus::Stalled;
  Eigen::MatrixXcd S;
  int iterations = 0;
  double affineResidual = 0.0;
  double minEigenvalue = 0.0;
  std::string phase;  // "dykstra" or "rank-<r>"
};

/// Called after every Dykstra iteration with the PSD iterate.
using IterationObserver = std::function<void(int, const Eigen::MatrixXcd&)>;

SolveResult solve_feasibility(const GramProblem& prob, const SolveOptions& opts = {},
                              const IterationObserver& observer = {});

/// Rows sqrt(lambda_j) conj(v_j)^T for eigenvalues above rankTol * lambda_max,
/// in descending eigenvalue order.
std::vector<Eigen::RowVectorXcd> factor_psd(const Eigen::MatrixXcd& S, double rankTol);

/// sum_alpha row[alpha] z^alpha
LaurentPoly row_to_poly(const Eigen::RowVectorXcd& row, const SupportSet& support);

struct SdpFrameResult {
  SolveStatus status = SolveStatus::Stalled;
  bool verified = false;
  FrameSystem frame;
  VerificationReport report;
  SupportSet support;  // support actually used
  int iterations = 0;  // summed over attempts
  std::size_t rank = 0;
  std::string phase;
};

/// build_gram_seed -> solve_feasibility -> factor_psd -> check_uep at 1e-8.
/// A stalled solve is retried once on support.dilated(1). Throws
/// ConstructionError when a feasible solve fails verification.
SdpFrameResult construct_frame_sdp(const Mask& mask, const SupportSet& support, const SolveOptions& opts = {});

}  // namespace uep
