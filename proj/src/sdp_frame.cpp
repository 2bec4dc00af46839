#include "uepframe/sdp_frame.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "uepframe/hermitian_eigen.hpp"

namespace uep {

// ---------------------------------------------------------------- SupportSet

SupportSet::SupportSet(std::vector<MultiIndex> points) : points_(std::move(points)) {
  std::sort(points_.begin(), points_.end());
  if (std::adjacent_find(points_.begin(), points_.end()) != points_.end())
    throw SupportError("support set contains duplicate points");
  for (const auto& p : points_)
    if (!points_.empty() && p.size() != points_.front().size()) throw DimensionError("support set: mixed dimensions");
}

SupportSet SupportSet::box(const std::vector<std::pair<std::int64_t, std::int64_t>>& bounds) {
  const std::size_t d = bounds.size();
  for (const auto& [lo, hi] : bounds)
    if (hi < lo) throw SupportError("support box: upper bound below lower bound");
  std::vector<MultiIndex> pts;
  MultiIndex k(d);
  for (std::size_t a = 0; a < d; ++a) k[a] = bounds[a].first;
  while (true) {
    pts.push_back(k);
    std::size_t axis = d;
    while (axis-- > 0) {
      if (++k[axis] <= bounds[axis].second) break;
      k[axis] = bounds[axis].first;
    }
    if (axis == static_cast<std::size_t>(-1)) break;
  }
  return SupportSet(std::move(pts));
}

SupportSet SupportSet::of(const LaurentPoly& p) {
  std::vector<MultiIndex> pts;
  for (const auto& t : p.terms()) pts.push_back(t.exponent);
  return SupportSet(std::move(pts));
}

std::ptrdiff_t SupportSet::index_of(const MultiIndex& alpha) const {
  auto it = std::lower_bound(points_.begin(), points_.end(), alpha);
  if (it != points_.end() && *it == alpha) return it - points_.begin();
  return -1;
}

SupportSet SupportSet::dilated(std::int64_t by) const {
  if (points_.empty()) return *this;
  const std::size_t d = points_.front().size();
  std::vector<std::pair<std::int64_t, std::int64_t>> b(d, {points_[0][0], points_[0][0]});
  for (std::size_t a = 0; a < d; ++a) b[a] = {points_[0][a], points_[0][a]};
  for (const auto& p : points_)
    for (std::size_t a = 0; a < d; ++a) b[a] = {std::min(b[a].first, p[a]), std::max(b[a].second, p[a])};
  for (auto& [lo, hi] : b) {
    lo -= by;
    hi += by;
  }
  return box(b);
}

// --------------------------------------------------------------- Gram seed

GramProblem build_gram_seed(const Mask& mask, const SupportSet& support, bool requirePartitionOfUnity) {
  if (requirePartitionOfUnity && !check_partition_of_unity(mask))
    throw ConstructionError("build_gram_seed: isotypical components do not form a partition of unity");
  for (const auto& t : mask.p.terms())
    if (support.index_of(t.exponent) < 0) throw SupportError("build_gram_seed: support misses an exponent of p");
  for (const auto& a : support.points())
    if (a.size() != mask.dim()) throw DimensionError("build_gram_seed: support dimension differs from mask");

  const auto n = static_cast<Eigen::Index>(support.size());
  GramProblem prob;
  prob.support = support;
  Eigen::VectorXcd pv(n);
  for (Eigen::Index i = 0; i < n; ++i) pv(i) = mask.p.coeff(support[static_cast<std::size_t>(i)]);
  prob.R = -(pv.conjugate() * pv.transpose());
  for (Eigen::Index i = 0; i < n; ++i) prob.R(i, i) += pv(i).real();

  std::map<std::pair<std::size_t, MultiIndex>, std::vector<std::pair<Eigen::Index, Eigen::Index>>> keyed;
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& a = support[static_cast<std::size_t>(i)];
    const std::size_t cls = mask.ctx->class_of(a);
    for (Eigen::Index j = 0; j < n; ++j) keyed[{cls, support[static_cast<std::size_t>(j)] - a}].push_back({i, j});
  }
  for (auto& [key, g] : keyed) prob.groups.push_back(std::move(g));
  prob.real = prob.R.imag().cwiseAbs().maxCoeff() == 0.0;
  return prob;
}

Eigen::MatrixXcd project_affine(const Eigen::MatrixXcd& S, const GramProblem& prob) {
  if (S.rows() != prob.R.rows() || S.cols() != prob.R.cols()) throw DimensionError("project_affine: shape mismatch");
  // Groups are disjoint, so each one is shifted independently by its mean.
  // The transpose of a group is again a group, which keeps the result hermitian.
  Eigen::MatrixXcd out = S;
  for (const auto& g : prob.groups) {
    Complex mean = 0.0;
    for (const auto& [i, j] : g) mean += S(i, j) - prob.R(i, j);
    mean /= static_cast<double>(g.size());
    for (const auto& [i, j] : g) out(i, j) -= mean;
  }
  return out;
}

double affine_deviation(const Eigen::MatrixXcd& S, const GramProblem& prob) {
  double worst = 0.0;
  for (const auto& g : prob.groups) {
    Complex sum = 0.0;
    for (const auto& [i, j] : g) sum += S(i, j) - prob.R(i, j);
    worst = std::max(worst, std::abs(sum));
  }
  return worst;
}

namespace {

bool is_real(const Eigen::MatrixXcd& S) { return S.size() == 0 || S.imag().cwiseAbs().maxCoeff() == 0.0; }

// Eigenpairs of the hermitian part, ascending, through the real path when possible.
HermitianEigen eigen_of(const Eigen::MatrixXcd& S) {
  if (is_real(S)) {
    const auto e = symmetric_eigen(S.real());
    return HermitianEigen{e.values, e.vectors.cast<Complex>(), e.sweeps};
  }
  return hermitian_eigen(S);
}

Eigen::MatrixXcd assemble(const HermitianEigen& e, const Eigen::VectorXd& w) {
  Eigen::MatrixXcd out = e.vectors * w.asDiagonal() * e.vectors.adjoint();
  return (out + out.adjoint()) / 2.0;
}

}  // namespace

Eigen::MatrixXcd project_psd(const Eigen::MatrixXcd& S) {
  const auto e = eigen_of(S);
  return assemble(e, e.values.cwiseMax(0.0));
}

Eigen::MatrixXcd project_psd_rank(const Eigen::MatrixXcd& S, std::size_t r) {
  const auto e = eigen_of(S);
  Eigen::VectorXd w = e.values.cwiseMax(0.0);
  const auto n = w.size();
  for (Eigen::Index k = 0; k + static_cast<Eigen::Index>(r) < n; ++k) w(k) = 0.0;
  return assemble(e, w);
}

double min_eigenvalue(const Eigen::MatrixXcd& S) {
  if (S.size() == 0) return 0.0;
  return eigen_of(S).values(0);
}

// ------------------------------------------------------------------- solver

SolveResult solve_feasibility(const GramProblem& prob, const SolveOptions& opts, const IterationObserver& observer) {
  if (opts.maxIterations <= 0 || opts.residualTol <= 0 || opts.rankTol <= 0 || opts.stallWindow <= 0)
    throw std::invalid_argument("solve_feasibility: options must be positive");
  const double tol = opts.residualTol;
  SolveResult res;
  auto accept = [&](const Eigen::MatrixXcd& S, int it, std::string phase) {
    res.S = S;
    res.iterations = it;
    res.affineResidual = affine_deviation(S, prob);
    res.minEigenvalue = min_eigenvalue(S);
    res.phase = std::move(phase);
    res.status = (res.affineResidual <= tol && res.minEigenvalue >= -tol) ? SolveStatus::Feasible : SolveStatus::Stalled;
    return res.status == SolveStatus::Feasible;
  };

  // Dykstra between the PSD cone and the affine set, starting from R.
  const Eigen::Index n = prob.R.rows();
  Eigen::MatrixXcd X = prob.R, P = Eigen::MatrixXcd::Zero(n, n), Q = Eigen::MatrixXcd::Zero(n, n), Y = X;
  const int dykstraBudget = opts.rankSweep ? std::min(opts.stallWindow, opts.maxIterations) : opts.maxIterations;
  int it = 0;
  double best = std::numeric_limits<double>::infinity(), checkpoint = best;
  while (it < dykstraBudget) {
    Y = project_psd(X + P);
    P = X + P - Y;
    Eigen::MatrixXcd Xn = project_affine(Y + Q, prob);
    Q = Y + Q - Xn;
    X = std::move(Xn);
    ++it;
    if (observer) observer(it, Y);
    const double dev = affine_deviation(Y, prob);
    best = std::min(best, dev);
    if (dev <= tol) {
      accept(Y, it, "dykstra");
      return res;
    }
    if (it % opts.stallWindow == 0) {
      if (checkpoint - best < tol / 100) break;
      checkpoint = best;
    }
  }
  if (!opts.rankSweep) {
    accept(Y, it, "dykstra");
    return res;
  }

  // Rank sweep: alternating projections onto the affine set and the rank-r PSD matrices.
  const Eigen::MatrixXcd start = Y;
  for (std::size_t r = 1; r <= static_cast<std::size_t>(n) && it < opts.maxIterations; ++r) {
    Eigen::MatrixXcd Z = start;
    double rbest = std::numeric_limits<double>::infinity(), rcheck = rbest;
    for (int k = 1; k <= 4 * opts.stallWindow && it < opts.maxIterations; ++k) {
      Z = project_psd_rank(project_affine(Z, prob), r);
      ++it;
      const double dev = affine_deviation(Z, prob);
      rbest = std::min(rbest, dev);
      if (dev <= tol) {
        if (accept(Z, it, "rank-" + std::to_string(r))) return res;
        break;
      }
      if (k % opts.stallWindow == 0) {
        if (rcheck - rbest < tol / 100) break;
        rcheck = rbest;
      }
    }
  }
  accept(Y, it, "stalled");
  return res;
}

std::vector<Eigen::RowVectorXcd> factor_psd(const Eigen::MatrixXcd& S, double rankTol) {
  std::vector<Eigen::RowVectorXcd> rows;
  if (S.size() == 0) return rows;
  const auto e = eigen_of(S);
  const Eigen::Index n = e.values.size();
  const double lmax = e.values(n - 1);
  if (lmax <= 0.0) return rows;
  for (Eigen::Index k = n - 1; k >= 0; --k) {
    const double l = e.values(k);
    if (!(l > rankTol * lmax)) break;
    rows.push_back(std::sqrt(l) * e.vectors.col(k).adjoint());
  }
  return rows;
}

LaurentPoly row_to_poly(const Eigen::RowVectorXcd& row, const SupportSet& support) {
  if (static_cast<std::size_t>(row.size()) != support.size()) throw DimensionError("row_to_poly: length mismatch");
  std::vector<Term> t;
  for (std::size_t i = 0; i < support.size(); ++i) t.push_back({support[i], row(static_cast<Eigen::Index>(i))});
  return LaurentPoly(support.points().empty() ? 1 : support[0].size(), std::move(t));
}

SdpFrameResult construct_frame_sdp(const Mask& mask, const SupportSet& support, const SolveOptions& opts) {
  if (!check_partition_of_unity(mask))
    throw ConstructionError("construct_frame_sdp: isotypical components do not form a partition of unity");
  SdpFrameResult out;
  out.frame.mask = mask;
  SupportSet sup = support;
  SolveResult sol;
  for (int attempt = 0; attempt < 2; ++attempt) {
    const GramProblem prob = build_gram_seed(mask, sup);
    sol = solve_feasibility(prob, opts);
    out.iterations += sol.iterations;
    out.support = sup;
    if (sol.status == SolveStatus::Feasible) break;
    sup = sup.dilated(1);
  }
  out.status = sol.status;
  out.phase = sol.phase;
  if (sol.status != SolveStatus::Feasible) return out;

  for (const auto& row : factor_psd(sol.S, opts.rankTol)) {
    LaurentPoly q = canonicalize_phase(row_to_poly(row, out.support));
    if (q.max_abs_coeff() > 1e-13) out.frame.generators.push_back(std::move(q));
  }
  out.rank = out.frame.generators.size();
  out.report = check_uep(out.frame, 1e-8);
  out.verified = out.report.passed;
  if (!out.verified)
    throw ConstructionError("construct_frame_sdp: factored generators fail the UEP identities (residual " +
                            std::to_string(*out.report.maxResidualUEP) + "); retry with a smaller rankTol");
  return out;
}

}  // namespace uep
