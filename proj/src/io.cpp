#include "uepframe/io.hpp"

namespace uep {

namespace {

const json& require(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw InputError(where + ": missing field '" + key + "'");
  return j.at(key);
}

IntMatrix matrix_from_json(const json& j, std::size_t dim) {
  if (!j.is_array() || j.size() != dim) throw InputError("mask: M must be a " + std::to_string(dim) + "x" + std::to_string(dim) + " array");
  IntMatrix M(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const json& row = j[i];
    if (!row.is_array() || row.size() != dim) throw InputError("mask: M row " + std::to_string(i) + " has the wrong length");
    for (std::size_t k = 0; k < dim; ++k) {
      if (!row[k].is_number_integer()) throw InputError("mask: M entries must be integers");
      M(i, k) = row[k].get<std::int64_t>();
    }
  }
  return M;
}

}  // namespace

json parse_json(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(what + ": invalid JSON (" + e.what() + ")");
  }
}

json poly_to_json(const LaurentPoly& p) {
  json arr = json::array();
  for (const auto& t : p.terms())
    arr.push_back({{"exp", t.exponent.values()}, {"re", t.coeff.real()}, {"im", t.coeff.imag()}});
  return arr;
}

LaurentPoly poly_from_json(const json& j, std::size_t dim) {
  if (!j.is_array()) throw InputError("polynomial: expected an array of terms");
  std::vector<Term> terms;
  for (const auto& t : j) {
    const json& e = require(t, "exp", "polynomial term");
    if (!e.is_array() || e.size() != dim) throw InputError("polynomial term: exponent length must be " + std::to_string(dim));
    std::vector<std::int64_t> ex;
    for (const auto& x : e) {
      if (!x.is_number_integer()) throw InputError("polynomial term: exponents must be integers");
      ex.push_back(x.get<std::int64_t>());
    }
    const json& re = require(t, "re", "polynomial term");
    if (!re.is_number()) throw InputError("polynomial term: 're' must be a number");
    double im = 0.0;
    if (t.contains("im")) {
      if (!t["im"].is_number()) throw InputError("polynomial term: 'im' must be a number");
      im = t["im"].get<double>();
    }
    terms.push_back({MultiIndex(std::move(ex)), Complex(re.get<double>(), im)});
  }
  return LaurentPoly(dim, std::move(terms));
}

json mask_to_json(const Mask& mask, const json& meta) {
  const IntMatrix& M = mask.ctx->M();
  json rows = json::array();
  for (std::size_t i = 0; i < M.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < M.cols(); ++k) row.push_back(M(i, k));
    rows.push_back(row);
  }
  return {{"version", kMaskFormatVersion}, {"dim", mask.dim()}, {"M", rows}, {"coefficients", poly_to_json(mask.p)},
          {"meta", meta.is_null() ? json::object() : meta}};
}

Mask mask_from_json(const json& j) {
  const json& v = require(j, "version", "mask");
  if (!v.is_string() || v.get<std::string>() != kMaskFormatVersion)
    throw InputError(std::string("mask: unsupported version, expected ") + kMaskFormatVersion);
  const json& d = require(j, "dim", "mask");
  if (!d.is_number_integer() || d.get<std::int64_t>() <= 0) throw InputError("mask: dim must be a positive integer");
  const auto dim = d.get<std::size_t>();
  IntMatrix M = matrix_from_json(require(j, "M", "mask"), dim);
  LaurentPoly p = poly_from_json(require(j, "coefficients", "mask"), dim);
  bool normalized = true;
  if (j.contains("meta") && j["meta"].is_object() && j["meta"].value("unnormalized", false)) normalized = false;
  try {
    return Mask::make(std::move(M), std::move(p), normalized);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

json report_to_json(const VerificationReport& r) {
  auto opt = [](const std::optional<double>& x) { return x ? json(*x) : json(nullptr); };
  return {{"maxResidualUEP", opt(r.maxResidualUEP)},
          {"maxResidualPolyphase", opt(r.maxResidualPolyphase)},
          {"maxResidualMatrix", opt(r.maxResidualMatrix)},
          {"vanishingMomentMax", r.vanishingMomentMax},
          {"tolerance", r.tolerance},
          {"passed", r.passed}};
}

json frame_to_json(const FrameSystem& frame, const VerificationReport& report, const json& meta) {
  json gens = json::array();
  for (const auto& q : frame.generators) gens.push_back(poly_to_json(q));
  return {{"mask", mask_to_json(frame.mask, meta)}, {"generators", gens}, {"report", report_to_json(report)}};
}

FrameSystem frame_from_json(const json& j) {
  FrameSystem f{mask_from_json(require(j, "mask", "frame")), {}};
  const json& g = require(j, "generators", "frame");
  if (!g.is_array()) throw InputError("frame: generators must be an array");
  for (const auto& q : g) f.generators.push_back(poly_from_json(q, f.mask.dim()));
  return f;
}

json certificate_to_json(const SosCertificate& cert) {
  json arr = json::array();
  for (const auto& h : cert.hs) arr.push_back(poly_to_json(h));
  return arr;
}

SosCertificate certificate_from_json(const json& j, std::size_t dim) {
  if (!j.is_array()) throw InputError("certificate: expected an array of polynomials");
  SosCertificate c;
  for (const auto& h : j) c.hs.push_back(poly_from_json(h, dim));
  return c;
}

json torus_point_to_json(const TorusPoint& w) { return json(w); }

json subqmf_to_json(const SubQmfResult& r) {
  return {{"minValue", r.minValue}, {"argmin", torus_point_to_json(r.argmin)}, {"maxImag", r.maxImag}};
}

json zero_report_to_json(const ZeroReport& r) {
  json zeros = json::array(), hs = json::array();
  for (const auto& z : r.zeros) zeros.push_back(torus_point_to_json(z));
  for (const auto& H : r.hessians) {
    json m = json::array();
    for (Eigen::Index i = 0; i < H.rows(); ++i) {
      json row = json::array();
      for (Eigen::Index k = 0; k < H.cols(); ++k) row.push_back(H(i, k));
      m.push_back(row);
    }
    hs.push_back(m);
  }
  return {{"zeros", zeros},
          {"hessians", hs},
          {"minEigenvalues", r.minEigenvalues},
          {"verdict", to_string(r.verdict)},
          {"gridMin", r.gridMin},
          {"gridArgmin", torus_point_to_json(r.gridArgmin)},
          {"gridPointsPerAxis", r.gridPointsPerAxis},
          {"warnings", r.warnings}};
}

}  // namespace uep
