#include "uepframe/analysis.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <ostream>

#include "uepframe/hermitian_eigen.hpp"

namespace uep {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kZeroMergeRadius = 1e-6;
constexpr double kDegenerateMergeRadius = 1e-3;

double wrap(double x) {
  double r = std::fmod(x, kTwoPi);
  if (r < 0) r += kTwoPi;
  if (kTwoPi - r < 1e-12) r = 0.0;
  return r;
}

double angular_distance(const TorusPoint& a, const TorusPoint& b) {
  double worst = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double d = std::abs(wrap(a[k] - b[k]));
    worst = std::max(worst, std::min(d, kTwoPi - d));
  }
  return worst;
}

Eigen::VectorXd real_gradient(const LaurentPoly& f, const TorusPoint& w) { return gradient_at(f, w).real(); }
Eigen::MatrixXd real_hessian(const LaurentPoly& f, const TorusPoint& w) { return hessian_at(f, w).real(); }

TorusPoint grid_point(std::size_t flat, std::size_t n, std::size_t d) {
  TorusPoint w(d);
  for (std::size_t k = d; k-- > 0;) {
    w[k] = kTwoPi * static_cast<double>(flat % n) / static_cast<double>(n);
    flat /= n;
  }
  return w;
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::SufficientHolds: return "SUFFICIENT_HOLDS";
    case Verdict::NecessaryViolated: return "NECESSARY_VIOLATED";
    case Verdict::Inconclusive: return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

Eigen::VectorXcd gradient_at(const LaurentPoly& q, const TorusPoint& w) {
  const std::size_t d = q.dim();
  Eigen::VectorXcd g(static_cast<Eigen::Index>(d));
  for (std::size_t i = 0; i < d; ++i) g(static_cast<Eigen::Index>(i)) = derivative_eval(q, MultiIndex::unit(d, i), w);
  return g;
}

Eigen::MatrixXcd hessian_at(const LaurentPoly& q, const TorusPoint& w) {
  const std::size_t d = q.dim();
  Eigen::MatrixXcd H(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      const Complex v = derivative_eval(q, MultiIndex::unit(d, i) + MultiIndex::unit(d, j), w);
      H(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = v;
      H(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = v;
    }
  return H;
}

Eigen::MatrixXd hessian_f_via_lemma(const Mask& mask) {
  for (const auto& t : mask.p.terms())
    if (std::abs(t.coeff.imag()) > 1e-12) throw std::domain_error("hessian_f_via_lemma: mask coefficients must be real");
  if (sum_rules_order(mask, 2) < 2) throw std::domain_error("hessian_f_via_lemma: mask must satisfy sum rules of order 2");
  const TorusPoint zero(mask.dim(), 0.0);
  const Eigen::RowVectorXcd v = gradient_at(mask.p, zero).transpose();
  const Eigen::MatrixXcd H = -2.0 * hessian_at(mask.p, zero) - 2.0 * (v.adjoint() * v);
  if (H.imag().cwiseAbs().maxCoeff() > 1e-10) throw std::domain_error("hessian_f_via_lemma: result is not real");
  return H.real();
}

std::vector<TorusPoint> find_zeros_f(const Mask& mask, std::size_t n, double tol, std::vector<std::string>* warnings) {
  const std::size_t d = mask.dim();
  const LaurentPoly f = subqmf_poly(mask);
  const auto vals = evaluate_grid(f, n);
  double fmax = 0.0;
  for (const auto& v : vals) fmax = std::max(fmax, v.real());

  // Candidates: near-zero grid values, plus grid local minima that are small
  // relative to the range of f (zeros between grid points).
  std::vector<std::size_t> stride(d);
  for (std::size_t k = d, s = 1; k-- > 0; s *= n) stride[k] = s;
  std::vector<std::pair<std::size_t, bool>> candidates;  // flat index, strict candidate
  for (std::size_t i = 0; i < vals.size(); ++i) {
    const double v = vals[i].real();
    if (v < 100 * tol) {
      candidates.push_back({i, true});
      continue;
    }
    if (v > 1e-2 * fmax) continue;
    bool isMin = true;
    for (std::size_t k = 0; k < d && isMin; ++k) {
      const std::size_t c = (i / stride[k]) % n;
      for (std::size_t nb : {(c + 1) % n, (c + n - 1) % n})
        if (vals[i - c * stride[k] + nb * stride[k]].real() < v) isMin = false;
    }
    if (isMin) candidates.push_back({i, false});
  }

  // Near a zero where the Hessian is singular the gradient is only resolved
  // to about eps^(1/3), so such zeros are merged within a wider radius.
  struct Found {
    TorusPoint x;
    double gnorm;
    bool degenerate;
  };
  std::vector<Found> found;
  for (const auto& [flat, strict] : candidates) {
    TorusPoint x = grid_point(flat, n, d);
    Eigen::VectorXd g = real_gradient(f, x);
    for (int step = 0; step < 50 && g.norm() > 1e-14; ++step) {
      const Eigen::MatrixXd H = real_hessian(f, x);
      const Eigen::VectorXd dx = -H.completeOrthogonalDecomposition().solve(g);
      bool moved = false;
      for (double t = 1.0; t > 1e-10; t *= 0.5) {
        TorusPoint xn = x;
        for (std::size_t k = 0; k < d; ++k) xn[k] += t * dx(static_cast<Eigen::Index>(k));
        const Eigen::VectorXd gn = real_gradient(f, xn);
        if (gn.norm() < g.norm()) {
          x = std::move(xn);
          g = gn;
          moved = true;
          break;
        }
      }
      if (!moved) break;
    }
    for (auto& c : x) c = wrap(c);
    const double fx = evaluate(f, x).real();
    if (!(std::abs(fx) <= tol) || !(g.norm() <= std::sqrt(tol))) {
      if (strict && warnings)
        warnings->push_back("Newton refinement did not reach a zero from a grid candidate; candidate dropped");
      continue;
    }
    Eigen::MatrixXd H = real_hessian(f, x);
    H = (H + H.transpose()) / 2.0;
    const bool degenerate = !(symmetric_eigen(H).values(0) > 1e-8);
    bool merged = false;
    for (auto& z : found) {
      const double radius = (degenerate || z.degenerate) ? kDegenerateMergeRadius : kZeroMergeRadius;
      if (angular_distance(z.x, x) < radius) {
        if (g.norm() < z.gnorm) z = {x, g.norm(), degenerate};
        merged = true;
        break;
      }
    }
    if (!merged) found.push_back({std::move(x), g.norm(), degenerate});
  }
  std::vector<TorusPoint> zeros;
  for (auto& z : found) zeros.push_back(std::move(z.x));
  std::sort(zeros.begin(), zeros.end());
  return zeros;
}

ZeroReport existence_verdict(const Mask& mask, std::size_t n, double tol) {
  ZeroReport rep;
  rep.gridPointsPerAxis = n == 0 ? default_grid_points(mask.dim()) : n;
  const auto grid = check_subqmf_grid(mask, rep.gridPointsPerAxis);
  rep.gridMin = grid.minValue;
  rep.gridArgmin = grid.argmin;
  if (grid.minValue < -tol) {
    rep.verdict = Verdict::NecessaryViolated;
    return rep;
  }
  rep.zeros = find_zeros_f(mask, rep.gridPointsPerAxis, tol, &rep.warnings);
  const LaurentPoly f = subqmf_poly(mask);
  bool allPositive = !rep.zeros.empty();
  for (const auto& z : rep.zeros) {
    Eigen::MatrixXd H = real_hessian(f, z);
    H = (H + H.transpose()) / 2.0;
    const double lmin = symmetric_eigen(H).values(0);
    rep.hessians.push_back(H);
    rep.minEigenvalues.push_back(lmin);
    if (!(lmin > 1e-8)) allPositive = false;
  }
  rep.verdict = allPositive ? Verdict::SufficientHolds : Verdict::Inconclusive;
  return rep;
}

void write_grid_csv(const Mask& mask, std::size_t n, std::ostream& out) {
  const std::size_t d = mask.dim();
  const auto vals = evaluate_grid(subqmf_poly(mask), n);
  for (std::size_t k = 0; k < d; ++k) out << "omega_" << (k + 1) << ',';
  out << "f\n";
  out.precision(17);
  for (std::size_t i = 0; i < vals.size(); ++i) {
    for (double c : grid_point(i, n, d)) out << c << ',';
    out << vals[i].real() << '\n';
  }
}

}  // namespace uep
