#include "uepframe/hermitian_eigen.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <vector>

namespace uep {

namespace {

template <class T>
double abs2(const T& x) {
  return std::norm(x);
}

template <class T>
T conj_of(const T& x) {
  if constexpr (std::is_same_v<T, double>) {
    return x;
  } else {
    return std::conj(x);
  }
}

template <class T>
void jacobi(Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>& a, Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>& v,
            int maxSweeps, int& sweepsOut) {
  const Eigen::Index n = a.rows();
  v.setIdentity(n, n);
  if (!a.allFinite()) throw EigenNonConvergence("eigensolver: matrix has non-finite entries");
  double total = 0.0;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) total += abs2(a(i, j));
  const double target = total * 1e-30;

  for (int sweep = 0; sweep <= maxSweeps; ++sweep) {
    double off = 0.0;
    for (Eigen::Index p = 0; p < n; ++p)
      for (Eigen::Index q = p + 1; q < n; ++q) off += abs2(a(p, q));
    if (off <= target || off == 0.0) {
      sweepsOut = sweep;
      return;
    }
    if (sweep == maxSweeps) break;
    for (Eigen::Index p = 0; p < n; ++p)
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const double mag = std::abs(a(p, q));
        if (mag == 0.0) continue;
        if (sweep > 3 && mag < 1e-18 * (std::abs(std::real(a(p, p))) + std::abs(std::real(a(q, q))))) {
          a(p, q) = T(0);
          a(q, p) = T(0);
          continue;
        }
        if constexpr (!std::is_same_v<T, double>) {
          // Rotate the phase of column/row q so that a(p,q) becomes real.
          const T u = a(p, q) / mag;  // e^{i phi}
          const T uc = std::conj(u);
          for (Eigen::Index r = 0; r < n; ++r) {
            a(r, q) *= uc;
            v(r, q) *= uc;
          }
          for (Eigen::Index r = 0; r < n; ++r) a(q, r) *= u;
          a(p, q) = mag;
          a(q, p) = mag;
        }
        const double apq = std::real(a(p, q));
        const double app = std::real(a(p, p)), aqq = std::real(a(q, q));
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (Eigen::Index r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const T arp = a(r, p), arq = a(r, q);
          a(r, p) = c * arp - s * arq;
          a(r, q) = s * arp + c * arq;
          a(p, r) = conj_of(a(r, p));
          a(q, r) = conj_of(a(r, q));
        }
        a(p, p) = app - t * apq;
        a(q, q) = aqq + t * apq;
        a(p, q) = T(0);
        a(q, p) = T(0);
        for (Eigen::Index r = 0; r < n; ++r) {
          const T vrp = v(r, p), vrq = v(r, q);
          v(r, p) = c * vrp - s * vrq;
          v(r, q) = s * vrp + c * vrq;
        }
      }
  }
  throw EigenNonConvergence("Jacobi eigensolver did not converge within " + std::to_string(maxSweeps) + " sweeps");
}

template <class T, class Out>
Out solve(const Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>& A, int maxSweeps) {
  if (A.rows() != A.cols()) throw std::invalid_argument("eigensolver: matrix must be square");
  using Mat = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;
  Mat a = (A + A.adjoint()) / 2.0;
  for (Eigen::Index i = 0; i < a.rows(); ++i) a(i, i) = std::real(a(i, i));
  Mat v;
  Out out;
  jacobi<T>(a, v, maxSweeps, out.sweeps);
  const Eigen::Index n = a.rows();
  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index i, Eigen::Index j) { return std::real(a(i, i)) < std::real(a(j, j)); });
  out.values.resize(n);
  out.vectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    out.values(k) = std::real(a(order[k], order[k]));
    out.vectors.col(k) = v.col(order[k]);
  }
  return out;
}

}  // namespace

HermitianEigen hermitian_eigen(const Eigen::MatrixXcd& A, int maxSweeps) {
  return solve<std::complex<double>, HermitianEigen>(A, maxSweeps);
}

SymmetricEigen symmetric_eigen(const Eigen::MatrixXd& A, int maxSweeps) {
  return solve<double, SymmetricEigen>(A, maxSweeps);
}

}  // namespace uep
