#pragma once

// Masks, isotypical / polyphase decompositions and the sub-QMF polynomial
// f = 1 - sum_sigma p^{sigma*} p^sigma.

#include <memory>

#include "uepframe/lattice.hpp"

namespace uep {

class NormalizationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Mask {
  std::shared_ptr<const DilationContext> ctx;
  LaurentPoly p;

  /// Checks dim agreement and |p(1) - 1| <= 1e-10 unless normalized is false.
  static Mask make(IntMatrix M, LaurentPoly p, bool normalized = true);
  static Mask make(std::shared_ptr<const DilationContext> ctx, LaurentPoly p, bool normalized = true);

  std::size_t dim() const { return p.dim(); }
  std::size_t m() const { return ctx->m(); }
};

struct IsotypicalSplit {
  std::vector<LaurentPoly> components;      // p_chi, indexed like coset_reps()
  std::vector<MultiIndex> liftExponents;    // alpha_chi
};

/// Partitions the terms of p by the coset of their exponent.
IsotypicalSplit split(const DilationContext& ctx, const LaurentPoly& p);
inline IsotypicalSplit split(const Mask& mask) { return split(*mask.ctx, mask.p); }

/// z^{-alpha_chi} p_chi, which is G-invariant.
LaurentPoly polyphase_component(const IsotypicalSplit& s, std::size_t chiIndex);

/// |p_chi(1) - 1/m| <= tol for every chi.
bool check_partition_of_unity(const Mask& mask, double tol = 1e-10);

/// sum_sigma p^{sigma*} p^sigma computed over the group.
LaurentPoly shifted_square_sum(const DilationContext& ctx, const LaurentPoly& p);
/// m * sum_chi p_chi^* p_chi computed from the isotypical split.
LaurentPoly isotypical_square_sum(const DilationContext& ctx, const LaurentPoly& p);

/// f via the isotypical route.
LaurentPoly subqmf_poly(const Mask& mask);
/// f via the group route; used as a cross-check.
LaurentPoly subqmf_poly_group(const Mask& mask);

}  // namespace uep
