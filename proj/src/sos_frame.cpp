#include "uepframe/sos_frame.hpp"

#include <cmath>

#include "uepframe/catalog.hpp"

namespace uep {

double sos_residual(const LaurentPoly& target, const SosCertificate& cert) {
  LaurentPoly acc = target;
  for (const auto& h : cert.hs) {
    if (h.dim() != target.dim()) throw DimensionError("sos certificate: dimension mismatch");
    acc -= involution(h) * h;
  }
  return acc.max_abs_coeff();
}

double verify_sos(const Mask& mask, const SosCertificate& cert) { return sos_residual(subqmf_poly(mask), cert); }

SosCertificate polyphase_lift_cert(const Mask& mask, const SosCertificate& cert, double tol) {
  const double res = verify_sos(mask, cert);
  if (!(res <= tol))
    throw CertificateError("certificate does not reproduce f: residual " + std::to_string(res));
  SosCertificate out;
  for (const auto& h : cert.hs) {
    const auto s = split(*mask.ctx, h);
    for (std::size_t k = 0; k < mask.m(); ++k)
      if (s.components[k].max_abs_coeff() > kPruneTolerance) out.hs.push_back(polyphase_component(s, k));
  }
  return out;
}

FrameSystem construct_from_sos(const Mask& mask, const SosCertificate& lifted, double verifyTol) {
  if (!check_partition_of_unity(mask))
    throw ConstructionError("construct_from_sos: isotypical components do not form a partition of unity");
  const auto& ctx = *mask.ctx;
  for (const auto& h : lifted.hs)
    if (!is_g_invariant(ctx, h, 1e-12))
      throw ConstructionError("construct_from_sos: certificate is not polyphase-lifted");
  const double res = verify_sos(mask, lifted);
  if (!(res <= 1e-9))
    throw CertificateError("construct_from_sos: certificate residual " + std::to_string(res));

  const double m = static_cast<double>(ctx.m());
  const auto s = split(mask);
  FrameSystem frame{mask, {}};
  auto keep = [&](LaurentPoly q) {
    if (q.max_abs_coeff() > kPruneTolerance) frame.generators.push_back(std::move(q));
  };
  for (std::size_t k = 0; k < ctx.m(); ++k) {
    LaurentPoly inner = 1.0 - m * (mask.p * involution(s.components[k]));
    keep(LaurentPoly::monomial(s.liftExponents[k], 1.0 / std::sqrt(m)) * inner);
  }
  for (const auto& h : lifted.hs) keep(mask.p * involution(h));

  const auto report = check_uep(frame, verifyTol);
  if (!report.passed)
    throw ConstructionError("construct_from_sos: frame fails the UEP identities, residual " +
                            std::to_string(*report.maxResidualUEP));
  return frame;
}

std::vector<std::string> builtin_certificate_names() {
  return {"boxspline111", "butterfly", "interp3d", "sqrt3-partial"};
}

namespace {

LaurentPoly S(std::initializer_list<std::int64_t> l) { return sin_poly(MultiIndex(l)); }
LaurentPoly C(std::initializer_list<std::int64_t> l) { return cos_poly(MultiIndex(l)); }

SosCertificate boxspline_cert() {
  return {{0.5 * S({1, 0}), 0.5 * S({0, 1}), 0.5 * S({1, 1})}};
}

SosCertificate butterfly_cert() {
  const auto u1 = S({1, 0}), u2 = S({0, 1}), v = S({1, 1}), vp = S({1, -1});
  const auto w = S({1, 2}), wp = S({2, 1});
  return {{0.5 * (u1 * u2), 0.5 * (u1 * v), 0.5 * (u2 * v), 0.25 * (u1 * w), 0.25 * (u2 * wp), 0.25 * (v * vp),
           0.25 * (u1 * (u2 * u2 + v * v)), 0.25 * (u2 * (u1 * u1 + v * v)), 0.25 * (v * (u1 * u1 + u2 * u2))}};
}

SosCertificate interp3d_cert(double lambda) {
  std::vector<LaurentPoly> hs;
  // Squares for 1/64 - |p_110|^2, applied to each image of p_110.
  {
    const auto u = C({1, 1, 0}), v = C({1, 0, 1}), w = C({0, 1, 1}), ut = S({1, 1, 0});
    const double r = std::sqrt(1.0 / 16.0 - lambda);
    const double c0 = (r + 0.25) / 2.0, c1 = (r - 0.25) / 2.0;
    const auto a = c0 + LaurentPoly::monomial({2, 0, 2}, c1);
    const auto b = c0 + LaurentPoly::monomial({0, 2, 2}, c1);
    const double sl = std::sqrt(lambda);
    const std::vector<LaurentPoly> X{std::sqrt(1.0 / 8.0) * ut, sl * (v - u * w), sl * (w - u * v)};
    std::vector<LaurentPoly> family{lambda * (v * v - w * w)};
    for (const auto& x : X) family.push_back(a * x);
    for (const auto& x : X) family.push_back(b * x);
    for (const char* img : {"110", "101", "011"})
      for (const auto& h : family) hs.push_back(substitute_monomial(h, interp3d_image_from_110(img)));
  }
  // Squares for 1/16 - sum of |p_100 images|^2, applied to each image of p_100.
  {
    const auto A = S({2, 2, 2}) - S({0, 2, 0}) - S({0, 0, 2});
    const auto s1 = S({1, 0, 0}), c1 = C({1, 0, 0});
    const std::vector<LaurentPoly> family{
        std::sqrt(3.0 * lambda / 16.0) * (s1 * s1),
        std::sqrt(lambda / 64.0) * (2.0 * s1 - A * c1),
        std::sqrt((1.0 - 16.0 * lambda) / 64.0) * (s1 * (1.0 + Complex(0.0, std::sqrt(lambda)) * A))};
    for (const char* img : {"100", "010", "001", "111"})
      for (const auto& h : family) hs.push_back(substitute_monomial(h, interp3d_image_from_100(img)));
  }
  SosCertificate cert;
  for (auto& h : hs)
    if (h.max_abs_coeff() > kPruneTolerance) cert.hs.push_back(std::sqrt(8.0) * h);
  return cert;
}

}  // namespace

SosCertificate builtin_certificate(const std::string& name, const Params& params) {
  if (name == "boxspline111") return boxspline_cert();
  if (name == "butterfly") return butterfly_cert();
  if (name == "interp3d") {
    const double lambda = param(params, "lambda").value_or(kInterp3dDefaultLambda);
    if (!(lambda >= 0.0 && lambda <= 1.0 / 16.0))
      throw std::out_of_range("interp3d: lambda must lie in [0, 1/16]");
    return interp3d_cert(lambda);
  }
  if (name == "sqrt3-partial")
    throw CertificateError(
        "sqrt3-partial: no finite sum-of-squares certificate is available; only grid nonnegativity is checked");
  throw std::invalid_argument("unknown certificate: " + name);
}

}  // namespace uep
