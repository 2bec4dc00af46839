#pragma once

// Dilation-matrix machinery: the group G = 2*pi*M^{-T}Z^d / 2*pi*Z^d, coset
// representatives of Z^d / M Z^d, the character pairing and the shift action.

#include <map>
#include <string>
#include <vector>

#include "uepframe/laurent.hpp"

namespace uep {

class SingularMatrixError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exact integer determinant (fraction-free elimination).
std::int64_t determinant(const IntMatrix& M);
/// Integer adjugate, adj(M) * M = det(M) * I.
IntMatrix adjugate(const IntMatrix& M);
/// True iff every eigenvalue of M has modulus > 1.
bool is_expansive(const IntMatrix& M);

class DilationContext {
 public:
  /// Throws SingularMatrixError when det(M) == 0, DimensionError when M is not square.
  explicit DilationContext(IntMatrix M);

  std::size_t dim() const { return M_.rows(); }
  const IntMatrix& M() const { return M_; }
  std::size_t m() const { return m_; }

  /// Group element sigma_i with components in [0, 2*pi).
  const TorusPoint& sigma(std::size_t i) const { return G_[i]; }
  const std::vector<TorusPoint>& G() const { return G_; }
  /// Integer numerators n with sigma = 2*pi*n/m, entries in [0, m).
  const std::vector<std::int64_t>& sigma_numerators(std::size_t i) const { return Gnum_[i]; }

  const MultiIndex& coset_rep(std::size_t k) const { return reps_[k]; }
  const std::vector<MultiIndex>& coset_reps() const { return reps_; }

  /// Index of the coset of alpha in coset_reps().
  std::size_t class_of(const MultiIndex& alpha) const;

  /// <sigma_i, chi_k> = exp(i sigma_i . chi_k).
  Complex pairing(std::size_t sigmaIndex, std::size_t chiIndex) const;
  const std::vector<Complex>& pairing_table() const { return pairing_; }

  /// exp(-i alpha . sigma_i), computed from the exact residue.
  Complex phase(const MultiIndex& alpha, std::size_t sigmaIndex) const;

  /// Index of sigma_i + sigma_j mod 2*pi.
  std::size_t group_add(std::size_t i, std::size_t j) const;

 private:
  std::vector<std::int64_t> class_key(const MultiIndex& alpha) const;
  std::int64_t residue(const MultiIndex& alpha, std::size_t sigmaIndex) const;

  IntMatrix M_;
  IntMatrix adj_;
  std::int64_t det_ = 0;
  std::size_t m_ = 0;
  std::vector<std::vector<std::int64_t>> Gnum_;
  std::vector<TorusPoint> G_;
  std::vector<MultiIndex> reps_;
  std::map<std::vector<std::int64_t>, std::size_t> classIndex_;
  std::map<std::vector<std::int64_t>, std::size_t> sigmaIndex_;
  std::vector<Complex> pairing_;
};

/// p^sigma: coefficients p(alpha) * exp(-i alpha . sigma).
LaurentPoly shift_action(const DilationContext& ctx, const LaurentPoly& p, std::size_t sigmaIndex);

/// max over sigma of the coefficient distance between p^sigma and p is <= tol.
bool is_g_invariant(const DilationContext& ctx, const LaurentPoly& p, double tol);

}  // namespace uep
