#pragma once

// Cyclic Jacobi eigensolver for dense hermitian and real symmetric matrices.

#include <Eigen/Core>
#include <stdexcept>

namespace uep {

class EigenNonConvergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kJacobiMaxSweeps = 100;

struct HermitianEigen {
  Eigen::VectorXd values;    // ascending
  Eigen::MatrixXcd vectors;  // column k belongs to values(k)
  int sweeps = 0;
};

struct SymmetricEigen {
  Eigen::VectorXd values;
  Eigen::MatrixXd vectors;
  int sweeps = 0;
};

/// A must be square; only the hermitian part (A + A^*)/2 is used.
HermitianEigen hermitian_eigen(const Eigen::MatrixXcd& A, int maxSweeps = kJacobiMaxSweeps);
SymmetricEigen symmetric_eigen(const Eigen::MatrixXd& A, int maxSweeps = kJacobiMaxSweeps);

}  // namespace uep
