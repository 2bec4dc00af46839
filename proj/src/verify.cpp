#include "uepframe/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace uep {

namespace {

void require_dims(const FrameSystem& frame) {
  for (const auto& q : frame.generators)
    if (q.dim() != frame.mask.dim()) throw DimensionError("frame: generator dimension differs from mask dimension");
}

double vanishing_moment_max(const FrameSystem& frame) {
  const TorusPoint zero(frame.mask.dim(), 0.0);
  double v = 0.0;
  for (const auto& q : frame.generators) v = std::max(v, std::abs(evaluate(q, zero)));
  return v;
}

VerificationReport make_report(const FrameSystem& frame, double tol) {
  if (tol < 0) throw std::invalid_argument("verification tolerance must be nonnegative");
  require_dims(frame);
  VerificationReport r;
  r.tolerance = tol;
  r.vanishingMomentMax = vanishing_moment_max(frame);
  return r;
}

void finish(VerificationReport& r) {
  r.passed = true;
  for (const auto& v : {r.maxResidualUEP, r.maxResidualPolyphase, r.maxResidualMatrix})
    if (v && !(*v <= r.tolerance)) r.passed = false;
}

std::vector<const LaurentPoly*> rows_of(const FrameSystem& frame) {
  std::vector<const LaurentPoly*> rows{&frame.mask.p};
  for (const auto& q : frame.generators) rows.push_back(&q);
  return rows;
}

}  // namespace

VerificationReport check_uep(const FrameSystem& frame, double tol) {
  auto r = make_report(frame, tol);
  const auto& ctx = *frame.mask.ctx;
  const std::size_t d = frame.mask.dim();
  // Only tau = 0 is needed; the remaining columns follow by shifting.
  double worst = 0.0;
  for (std::size_t s = 0; s < ctx.m(); ++s) {
    LaurentPoly acc = s == 0 ? LaurentPoly::constant(d, 1.0) : LaurentPoly(d);
    for (const LaurentPoly* q : rows_of(frame)) acc -= involution(shift_action(ctx, *q, s)) * (*q);
    worst = std::max(worst, acc.max_abs_coeff());
  }
  r.maxResidualUEP = worst;
  finish(r);
  return r;
}

VerificationReport check_uep_polyphase(const FrameSystem& frame, double tol) {
  auto r = make_report(frame, tol);
  const auto& ctx = *frame.mask.ctx;
  const std::size_t d = frame.mask.dim();
  const std::size_t m = ctx.m();
  std::vector<std::vector<LaurentPoly>> comps;  // comps[row][chi]
  for (const LaurentPoly* q : rows_of(frame)) {
    const auto s = split(ctx, *q);
    std::vector<LaurentPoly> row;
    for (std::size_t k = 0; k < m; ++k) row.push_back(polyphase_component(s, k));
    comps.push_back(std::move(row));
  }
  double worst = 0.0;
  for (std::size_t chi = 0; chi < m; ++chi)
    for (std::size_t eta = chi; eta < m; ++eta) {
      LaurentPoly acc = chi == eta ? LaurentPoly::constant(d, 1.0 / static_cast<double>(m)) : LaurentPoly(d);
      for (const auto& row : comps)
        if (!row[chi].is_zero() && !row[eta].is_zero()) acc -= involution(row[chi]) * row[eta];
      worst = std::max(worst, acc.max_abs_coeff());
    }
  r.maxResidualPolyphase = worst;
  finish(r);
  return r;
}

VerificationReport check_uep_matrix(const FrameSystem& frame, double tol) {
  auto r = make_report(frame, tol);
  const auto& ctx = *frame.mask.ctx;
  const std::size_t d = frame.mask.dim();
  const std::size_t m = ctx.m();
  // U[j][sigma] = q_j^sigma, row 0 holding p.
  std::vector<std::vector<LaurentPoly>> U;
  std::vector<std::vector<LaurentPoly>> Ustar;
  for (const LaurentPoly* q : rows_of(frame)) {
    std::vector<LaurentPoly> row, rowStar;
    for (std::size_t s = 0; s < m; ++s) {
      row.push_back(shift_action(ctx, *q, s));
      rowStar.push_back(involution(row.back()));
    }
    U.push_back(std::move(row));
    Ustar.push_back(std::move(rowStar));
  }
  double worst = 0.0;
  for (std::size_t s = 0; s < m; ++s)
    for (std::size_t t = s; t < m; ++t) {
      LaurentPoly acc = s == t ? LaurentPoly::constant(d, 1.0) : LaurentPoly(d);
      for (std::size_t j = 0; j < U.size(); ++j) acc -= Ustar[j][s] * U[j][t];
      worst = std::max(worst, acc.max_abs_coeff());
    }
  r.maxResidualMatrix = worst;
  finish(r);
  return r;
}

VerificationReport check_all(const FrameSystem& frame, double tol) {
  auto r = check_uep(frame, tol);
  r.maxResidualPolyphase = check_uep_polyphase(frame, tol).maxResidualPolyphase;
  r.maxResidualMatrix = check_uep_matrix(frame, tol).maxResidualMatrix;
  finish(r);
  return r;
}

std::size_t default_grid_points(std::size_t dim) { return dim <= 2 ? 64 : 32; }

SubQmfResult check_subqmf_grid(const Mask& mask, std::size_t n) {
  if (n < 2) throw std::invalid_argument("check_subqmf_grid: need at least 2 grid points per axis");
  const LaurentPoly f = subqmf_poly(mask);
  const auto vals = evaluate_grid(f, n);
  const std::size_t d = mask.dim();
  SubQmfResult res;
  res.minValue = std::numeric_limits<double>::infinity();
  std::size_t best = 0;
  for (std::size_t i = 0; i < vals.size(); ++i) {
    res.maxImag = std::max(res.maxImag, std::abs(vals[i].imag()));
    if (vals[i].real() < res.minValue) {
      res.minValue = vals[i].real();
      best = i;
    }
  }
  res.argmin.assign(d, 0.0);
  for (std::size_t k = d; k-- > 0;) {
    res.argmin[k] = 2.0 * std::acos(-1.0) * static_cast<double>(best % n) / static_cast<double>(n);
    best /= n;
  }
  return res;
}

std::vector<MultiIndex> multi_indices_of_order(std::size_t dim, std::size_t order) {
  std::vector<MultiIndex> out;
  MultiIndex mu(dim);
  auto rec = [&](auto&& self, std::size_t axis, std::int64_t left) -> void {
    if (axis + 1 == dim) {
      mu[axis] = left;
      out.push_back(mu);
      return;
    }
    for (std::int64_t k = left; k >= 0; --k) {
      mu[axis] = k;
      self(self, axis + 1, left - k);
    }
  };
  if (dim == 0) return out;
  rec(rec, 0, static_cast<std::int64_t>(order));
  return out;
}

std::size_t sum_rules_order(const Mask& mask, std::size_t maxOrder, double tol) {
  if (maxOrder < 1) throw std::invalid_argument("sum_rules_order: maxOrder must be >= 1");
  const auto& ctx = *mask.ctx;
  const std::size_t d = mask.dim();
  // Multiplying by a monomial leaves the vanishing order unchanged and keeps
  // the derivative weights small.
  MultiIndex center(d);
  for (std::size_t k = 0; k < d; ++k) {
    const auto [lo, hi] = mask.p.bounding_box()[k];
    center[k] = lo + (hi - lo) / 2;
  }
  const LaurentPoly q = LaurentPoly::monomial(-center) * mask.p;
  for (std::size_t k = 1; k <= maxOrder; ++k) {
    for (const auto& mu : multi_indices_of_order(d, k - 1))
      for (std::size_t s = 1; s < ctx.m(); ++s) {
        Complex v = 0.0;
        for (const auto& t : q.terms()) {
          Complex w = t.coeff * ctx.phase(t.exponent, s);
          for (std::size_t a = 0; a < d; ++a)
            for (std::int64_t e = 0; e < mu[a]; ++e) w *= Complex(0.0, -static_cast<double>(t.exponent[a]));
          v += w;
        }
        if (std::abs(v) > tol) return k - 1;
      }
  }
  return maxOrder;
}

}  // namespace uep
