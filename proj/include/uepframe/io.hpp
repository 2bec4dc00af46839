#pragma once

// JSON serialization of polynomials, masks, frames, certificates and reports.

#include <json.hpp>

#include "uepframe/analysis.hpp"
#include "uepframe/sdp_frame.hpp"
#include "uepframe/sos_frame.hpp"

namespace uep {

using json = nlohmann::json;

inline constexpr const char* kMaskFormatVersion = "uepframe/1";

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// [{"exp": [...], "re": x, "im": y}, ...] in lexicographic exponent order.
json poly_to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const json& j, std::size_t dim);

/// {"version", "dim", "M", "coefficients", "meta"}. A meta flag
/// "unnormalized": true skips the p(1) = 1 check on reading.
json mask_to_json(const Mask& mask, const json& meta = json::object());
Mask mask_from_json(const json& j);

json report_to_json(const VerificationReport& r);

/// {"mask", "generators", "report"}.
json frame_to_json(const FrameSystem& frame, const VerificationReport& report, const json& meta = json::object());
FrameSystem frame_from_json(const json& j);

json certificate_to_json(const SosCertificate& cert);
SosCertificate certificate_from_json(const json& j, std::size_t dim);

json torus_point_to_json(const TorusPoint& w);
json subqmf_to_json(const SubQmfResult& r);
json zero_report_to_json(const ZeroReport& r);

/// Parses text, reporting failures as InputError.
json parse_json(const std::string& text, const std::string& what);

}  // namespace uep
