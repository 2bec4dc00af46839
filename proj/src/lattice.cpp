#include "uepframe/lattice.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <numbers>

namespace uep {

namespace {

std::int64_t floor_mod(std::int64_t a, std::int64_t n) {
  const std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

IntMatrix minor_of(const IntMatrix& M, std::size_t skipRow, std::size_t skipCol) {
  const std::size_t n = M.rows();
  IntMatrix out(n - 1, n - 1);
  for (std::size_t i = 0, oi = 0; i < n; ++i) {
    if (i == skipRow) continue;
    for (std::size_t j = 0, oj = 0; j < n; ++j) {
      if (j == skipCol) continue;
      out(oi, oj++) = M(i, j);
    }
    ++oi;
  }
  return out;
}

Complex root_of_unity(std::int64_t r, std::int64_t m) {
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(floor_mod(r, m)) / static_cast<double>(m));
}

// Calls fn(k) for every k in [0, L)^d, first axis slowest.
template <class Fn>
void scan_box(std::size_t d, std::int64_t L, Fn&& fn) {
  MultiIndex k(d);
  while (true) {
    fn(k);
    std::size_t axis = d;
    while (axis-- > 0) {
      if (++k[axis] < L) break;
      k[axis] = 0;
    }
    if (axis == static_cast<std::size_t>(-1)) return;
  }
}

}  // namespace

std::int64_t determinant(const IntMatrix& M) {
  if (M.rows() != M.cols()) throw DimensionError("determinant: matrix must be square");
  const std::size_t n = M.rows();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination; every division is exact.
  std::vector<__int128> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = M(i, j);
  __int128 prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k * n + k] == 0) {
      std::size_t piv = k + 1;
      while (piv < n && a[piv * n + k] == 0) ++piv;
      if (piv == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[piv * n + j]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a[i * n + j] = (a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j]) / prev;
    prev = a[k * n + k];
  }
  return sign * static_cast<std::int64_t>(a[n * n - 1]);
}

IntMatrix adjugate(const IntMatrix& M) {
  if (M.rows() != M.cols()) throw DimensionError("adjugate: matrix must be square");
  const std::size_t n = M.rows();
  IntMatrix adj(n, n);
  if (n == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::int64_t c = determinant(minor_of(M, j, i));
      adj(i, j) = ((i + j) % 2 == 0) ? c : -c;
    }
  return adj;
}

bool is_expansive(const IntMatrix& M) {
  const std::size_t n = M.rows();
  Eigen::MatrixXd A(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) A(i, j) = static_cast<double>(M(i, j));
  Eigen::EigenSolver<Eigen::MatrixXd> es(A, false);
  for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k)
    if (std::abs(es.eigenvalues()(k)) <= 1.0) return false;
  return true;
}

DilationContext::DilationContext(IntMatrix M) : M_(std::move(M)) {
  if (M_.rows() != M_.cols() || M_.rows() == 0) throw DimensionError("DilationContext: M must be a nonempty square matrix");
  det_ = determinant(M_);
  if (det_ == 0) throw SingularMatrixError("DilationContext: det(M) = 0");
  m_ = static_cast<std::size_t>(det_ < 0 ? -det_ : det_);
  adj_ = adjugate(M_);
  const std::size_t d = dim();
  const auto mm = static_cast<std::int64_t>(m_);
  const std::int64_t L = mm * std::max<std::int64_t>(M_.max_abs(), 1);

  // Coset representatives: first vector of each class in a lexicographic scan.
  scan_box(d, L, [&](const MultiIndex& k) {
    if (reps_.size() == m_) return;
    auto key = class_key(k);
    if (classIndex_.emplace(key, reps_.size()).second) reps_.push_back(k);
  });

  // Group points: sigma = 2*pi*M^{-T}k = 2*pi*sign(det)*adj^T k / m.
  const IntMatrix adjT = adj_.transposed();
  const std::int64_t sgn = det_ < 0 ? -1 : 1;
  scan_box(d, L, [&](const MultiIndex& k) {
    if (Gnum_.size() == m_) return;
    MultiIndex n = adjT.apply(k);
    std::vector<std::int64_t> num(d);
    for (std::size_t c = 0; c < d; ++c) num[c] = floor_mod(sgn * n[c], mm);
    if (sigmaIndex_.emplace(num, Gnum_.size()).second) {
      TorusPoint s(d);
      for (std::size_t c = 0; c < d; ++c)
        s[c] = 2.0 * std::numbers::pi * static_cast<double>(num[c]) / static_cast<double>(mm);
      Gnum_.push_back(std::move(num));
      G_.push_back(std::move(s));
    }
  });
  if (reps_.size() != m_ || Gnum_.size() != m_)
    throw std::logic_error("DilationContext: enumeration did not find m classes");

  pairing_.resize(m_ * m_);
  for (std::size_t i = 0; i < m_; ++i)
    for (std::size_t k = 0; k < m_; ++k) pairing_[i * m_ + k] = root_of_unity(residue(reps_[k], i), mm);
}

std::vector<std::int64_t> DilationContext::class_key(const MultiIndex& alpha) const {
  const MultiIndex y = adj_.apply(alpha);
  const auto mm = static_cast<std::int64_t>(m_);
  std::vector<std::int64_t> key(y.size());
  for (std::size_t c = 0; c < y.size(); ++c) key[c] = floor_mod(y[c], mm);
  return key;
}

std::size_t DilationContext::class_of(const MultiIndex& alpha) const {
  if (alpha.size() != dim()) throw DimensionError("class_of: dimension mismatch");
  return classIndex_.at(class_key(alpha));
}

std::int64_t DilationContext::residue(const MultiIndex& alpha, std::size_t sigmaIndex) const {
  const auto& n = Gnum_[sigmaIndex];
  const auto mm = static_cast<std::int64_t>(m_);
  std::int64_t r = 0;
  for (std::size_t c = 0; c < n.size(); ++c) r = floor_mod(r + floor_mod(alpha[c], mm) * n[c], mm);
  return r;
}

Complex DilationContext::pairing(std::size_t sigmaIndex, std::size_t chiIndex) const {
  if (sigmaIndex >= m_ || chiIndex >= m_) throw std::out_of_range("pairing: index out of range");
  return pairing_[sigmaIndex * m_ + chiIndex];
}

Complex DilationContext::phase(const MultiIndex& alpha, std::size_t sigmaIndex) const {
  if (alpha.size() != dim()) throw DimensionError("phase: dimension mismatch");
  return root_of_unity(-residue(alpha, sigmaIndex), static_cast<std::int64_t>(m_));
}

std::size_t DilationContext::group_add(std::size_t i, std::size_t j) const {
  const auto mm = static_cast<std::int64_t>(m_);
  std::vector<std::int64_t> s(dim());
  for (std::size_t c = 0; c < dim(); ++c) s[c] = floor_mod(Gnum_[i][c] + Gnum_[j][c], mm);
  return sigmaIndex_.at(s);
}

LaurentPoly shift_action(const DilationContext& ctx, const LaurentPoly& p, std::size_t sigmaIndex) {
  if (p.dim() != ctx.dim()) throw DimensionError("shift_action: dimension mismatch");
  if (sigmaIndex >= ctx.m()) throw std::out_of_range("shift_action: sigma index out of range");
  if (sigmaIndex == 0) return p;
  return p.map_coeffs([&](const MultiIndex& a, Complex c) { return c * ctx.phase(a, sigmaIndex); });
}

bool is_g_invariant(const DilationContext& ctx, const LaurentPoly& p, double tol) {
  for (std::size_t i = 1; i < ctx.m(); ++i)
    for (const auto& t : p.terms())
      if (std::abs(t.coeff * ctx.phase(t.exponent, i) - t.coeff) > tol) return false;
  return true;
}

}  // namespace uep
