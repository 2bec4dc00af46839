#pragma once

// Frame generators from a sum-of-hermitian-squares certificate f = sum h_j^* h_j,
// and the hand-derived certificates for the built-in masks.

#include "uepframe/params.hpp"
#include "uepframe/verify.hpp"

namespace uep {

struct SosCertificate {
  std::vector<LaurentPoly> hs;
};

class CertificateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Generators with every coefficient below this are dropped.
inline constexpr double kPruneTolerance = 1e-13;

/// max coefficient of target - sum_j h_j^* h_j.
double sos_residual(const LaurentPoly& target, const SosCertificate& cert);
/// sos_residual against f of the mask.
double verify_sos(const Mask& mask, const SosCertificate& cert);

/// Replaces each h_j by its nonzero lifted polyphase components z^{-alpha_chi} h_{j,chi}.
/// Throws CertificateError when the certificate does not reproduce f within tol.
SosCertificate polyphase_lift_cert(const Mask& mask, const SosCertificate& cert, double tol = 1e-9);

/// q_k = m^{-1/2} z^{alpha_k}(1 - m p p_{chi_k}^*) and p h~^* for every lifted term,
/// pruned and checked against the group identity at verifyTol.
FrameSystem construct_from_sos(const Mask& mask, const SosCertificate& liftedCert, double verifyTol = 1e-9);

/// Names accepted by builtin_certificate.
std::vector<std::string> builtin_certificate_names();

/// Certificates for boxspline111, butterfly and interp3d (parameter "lambda").
/// "sqrt3-partial" is recognised but throws CertificateError: no finite
/// certificate is known for it.
SosCertificate builtin_certificate(const std::string& name, const Params& params = {});

}  // namespace uep
