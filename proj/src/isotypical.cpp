#include "uepframe/isotypical.hpp"

#include <cmath>

namespace uep {

Mask Mask::make(IntMatrix M, LaurentPoly p, bool normalized) {
  return make(std::make_shared<const DilationContext>(std::move(M)), std::move(p), normalized);
}

Mask Mask::make(std::shared_ptr<const DilationContext> ctx, LaurentPoly p, bool normalized) {
  if (!ctx) throw std::invalid_argument("Mask: null dilation context");
  if (p.dim() != ctx->dim())
    throw DimensionError("Mask: polynomial dimension " + std::to_string(p.dim()) +
                         " differs from dilation dimension " + std::to_string(ctx->dim()));
  if (normalized) {
    const Complex at_one = evaluate(p, TorusPoint(p.dim(), 0.0));
    if (std::abs(at_one - 1.0) > 1e-10)
      throw NormalizationError("Mask: p(1) = " + std::to_string(at_one.real()) + (at_one.imag() != 0 ? "+i" + std::to_string(at_one.imag()) : "") + ", expected 1");
  }
  return Mask{std::move(ctx), std::move(p)};
}

IsotypicalSplit split(const DilationContext& ctx, const LaurentPoly& p) {
  if (p.dim() != ctx.dim()) throw DimensionError("split: dimension mismatch");
  std::vector<std::vector<Term>> buckets(ctx.m());
  for (const auto& t : p.terms()) buckets[ctx.class_of(t.exponent)].push_back(t);
  IsotypicalSplit s;
  s.liftExponents = ctx.coset_reps();
  s.components.reserve(ctx.m());
  for (auto& b : buckets) s.components.emplace_back(p.dim(), std::move(b));
  return s;
}

LaurentPoly polyphase_component(const IsotypicalSplit& s, std::size_t chiIndex) {
  return LaurentPoly::monomial(-s.liftExponents.at(chiIndex)) * s.components.at(chiIndex);
}

bool check_partition_of_unity(const Mask& mask, double tol) {
  const auto s = split(mask);
  const TorusPoint zero(mask.dim(), 0.0);
  const double target = 1.0 / static_cast<double>(mask.m());
  for (const auto& c : s.components)
    if (std::abs(evaluate(c, zero) - target) > tol) return false;
  return true;
}

LaurentPoly shifted_square_sum(const DilationContext& ctx, const LaurentPoly& p) {
  LaurentPoly acc(p.dim());
  for (std::size_t i = 0; i < ctx.m(); ++i) {
    const LaurentPoly ps = shift_action(ctx, p, i);
    acc += involution(ps) * ps;
  }
  return acc;
}

LaurentPoly isotypical_square_sum(const DilationContext& ctx, const LaurentPoly& p) {
  const auto s = split(ctx, p);
  LaurentPoly acc(p.dim());
  for (const auto& c : s.components)
    if (!c.is_zero()) acc += involution(c) * c;
  return acc * static_cast<double>(ctx.m());
}

LaurentPoly subqmf_poly(const Mask& mask) {
  return 1.0 - isotypical_square_sum(*mask.ctx, mask.p);
}

LaurentPoly subqmf_poly_group(const Mask& mask) {
  return 1.0 - shifted_square_sum(*mask.ctx, mask.p);
}

}  // namespace uep
