#include "uepframe/catalog.hpp"

#include <cmath>
#include <mutex>
#include <sstream>

#include "uepframe/verify.hpp"

namespace uep {

namespace {

LaurentPoly mono(std::initializer_list<std::int64_t> e, Complex c = 1.0) { return LaurentPoly::monomial(MultiIndex(e), c); }
LaurentPoly C(std::initializer_list<std::int64_t> l) { return cos_poly(MultiIndex(l)); }

LaurentPoly power(const LaurentPoly& x, int n) {
  LaurentPoly r = LaurentPoly::constant(x.dim(), 1.0);
  for (int i = 0; i < n; ++i) r = r * x;
  return r;
}

Mask build_daubechies4(const Params&) {
  const double s3 = std::sqrt(3.0);
  const double c[4] = {(1 + s3) / 8, (3 + s3) / 8, (3 - s3) / 8, (1 - s3) / 8};
  std::vector<Term> t;
  for (std::int64_t k = 0; k < 4; ++k) t.push_back({MultiIndex{k}, c[k]});
  return Mask::make(IntMatrix{{2}}, LaurentPoly(1, std::move(t)));
}

Mask build_boxspline111(const Params&) {
  const auto z1 = mono({1, 0}), z2 = mono({0, 1});
  return Mask::make(IntMatrix::scalar(2, 2), 0.125 * ((1.0 + z1) * (1.0 + z2) * (1.0 + z1 * z2)));
}

Mask build_butterfly(const Params&) {
  std::vector<Term> t{{MultiIndex{0, 0}, 0.25}};
  for (auto e : {MultiIndex{1, 0}, MultiIndex{0, 1}, MultiIndex{1, 1}, MultiIndex{-1, 0}, MultiIndex{0, -1}, MultiIndex{-1, -1}})
    t.push_back({e, 1.0 / 8});
  for (auto e : {MultiIndex{2, 1}, MultiIndex{1, 2}, MultiIndex{1, -1}, MultiIndex{-1, 1}, MultiIndex{-2, -1}, MultiIndex{-1, -2}})
    t.push_back({e, 1.0 / 32});
  for (auto e : {MultiIndex{3, 1}, MultiIndex{3, 2}, MultiIndex{2, 3}, MultiIndex{1, 3}, MultiIndex{2, -1}, MultiIndex{1, -2},
                 MultiIndex{-1, 2}, MultiIndex{-2, 1}, MultiIndex{-3, -1}, MultiIndex{-3, -2}, MultiIndex{-2, -3}, MultiIndex{-1, -3}})
    t.push_back({e, -1.0 / 64});
  return Mask::make(IntMatrix::scalar(2, 2), LaurentPoly(2, std::move(t)));
}

Mask build_interp3d(const Params& ps) {
  const double lambda = ps.at("lambda");
  const auto p100 = interp3d_p100(lambda);
  const auto p110 = interp3d_p110(lambda);
  LaurentPoly p = LaurentPoly::constant(3, 1.0 / 8);
  for (const char* img : {"100", "010", "001", "111"}) p += substitute_monomial(p100, interp3d_image_from_100(img));
  for (const char* img : {"110", "101", "011"}) p += substitute_monomial(p110, interp3d_image_from_110(img));
  return Mask::make(IntMatrix::scalar(3, 2), std::move(p));
}

Mask build_sqrt3(const Params&) {
  const auto p01 = sqrt3_p01();
  const auto p10 = substitute_monomial(p01, IntMatrix{{0, 1}, {1, 0}});
  return Mask::make(IntMatrix{{1, 2}, {-2, -1}}, (1.0 / 3.0) + p01 + p10);
}

Mask build_motzkin(const Params& ps) {
  const double c = ps.at("c");
  const auto y1 = sin_poly({1, 0, 0}), y2 = sin_poly({0, 1, 0}), y3 = sin_poly({0, 0, 1});
  const auto y1s = y1 * y1, y2s = y2 * y2, y3s = y3 * y3;
  const LaurentPoly motz = y1s * y1s * y2s + y1s * y2s * y2s + y3s * y3s * y3s - 3.0 * (y1s * y2s * y3s);

  const auto& h = daubechies8_coefficients();
  std::vector<Term> t1, t2, t3;
  for (std::size_t k = 0; k < h.size(); ++k) {
    const auto e = static_cast<std::int64_t>(k);
    t1.push_back({MultiIndex{e, 0, 0}, h[k]});
    t2.push_back({MultiIndex{0, e, 0}, h[k]});
    t3.push_back({MultiIndex{0, 0, e}, h[k]});
  }
  const LaurentPoly a = LaurentPoly(3, std::move(t1)) * LaurentPoly(3, std::move(t2)) * LaurentPoly(3, std::move(t3));

  auto ctx = std::make_shared<const DilationContext>(IntMatrix::scalar(3, 2));
  // The tensor symbol must vanish to order 8 at every nonzero group point.
  const Mask am = Mask::make(ctx, a);
  if (sum_rules_order(am, 8) < 8) throw CatalogError("motzkin: tensor symbol fails its zero conditions of order 8");
  return Mask::make(ctx, (1.0 - c * motz) * a);
}

Mask build_nosubqmf3d(const Params&) {
  const auto z1 = mono({1, 0, 0}), z2 = mono({0, 1, 0}), z3 = mono({0, 0, 1});
  const auto zz = z1 * z2 * z3;
  auto h = [](const LaurentPoly& x) { return 0.5 * (1.0 + x); };
  const auto h1 = h(z1), h2 = h(z2), h3 = h(z3), h4 = h(zz);
  LaurentPoly p = 6.0 * (zz * power(h1, 2) * power(h2, 2) * power(h3, 2) * power(h4, 2));
  p -= 1.25 * (z1 * h1 * power(h2, 3) * power(h3, 3) * power(h4, 3));
  p -= 1.25 * (z2 * power(h1, 3) * h2 * power(h3, 3) * power(h4, 3));
  p -= 1.25 * (z3 * power(h1, 3) * power(h2, 3) * h3 * power(h4, 3));
  p -= 1.25 * (zz * power(h1, 3) * power(h2, 3) * power(h3, 3) * h4);
  return Mask::make(IntMatrix::scalar(3, 2), std::move(p));
}

void check_m8() {
  const auto& h = daubechies8_coefficients();
  std::vector<Term> t;
  for (std::size_t k = 0; k < h.size(); ++k) t.push_back({MultiIndex{static_cast<std::int64_t>(k)}, h[k]});
  const LaurentPoly m8(1, std::move(t));
  if (std::abs(evaluate(m8, {0.0}) - 1.0) > 1e-10) throw CatalogError("m_8 literals: m_8(1) != 1");
  const DilationContext ctx(IntMatrix{{2}});
  const double qmf = (shifted_square_sum(ctx, m8) - 1.0).max_abs_coeff();
  if (qmf > 1e-8) throw CatalogError("m_8 literals: QMF identity fails, residual " + std::to_string(qmf));
}

std::vector<CatalogEntry> make_entries() {
  std::vector<CatalogEntry> e;
  e.push_back({"daubechies4", 1, IntMatrix{{2}}, std::nullopt, "orthonormal univariate symbol with two vanishing moments",
               build_daubechies4});
  e.push_back({"boxspline111", 2, IntMatrix::scalar(2, 2), std::nullopt, "three-directional piecewise linear box spline",
               build_boxspline111});
  e.push_back({"butterfly", 2, IntMatrix::scalar(2, 2), std::nullopt, "interpolatory butterfly subdivision", build_butterfly});
  e.push_back({"interp3d", 3, IntMatrix::scalar(3, 2), ParamSpec{"lambda", 0.0, 1.0 / 16, false, kInterp3dDefaultLambda},
               "interpolatory trivariate scheme with tension parameter lambda", build_interp3d});
  e.push_back({"sqrt3", 2, IntMatrix{{1, 2}, {-2, -1}}, std::nullopt, "interpolatory sqrt(3) subdivision", build_sqrt3});
  e.push_back({"motzkin", 3, IntMatrix::scalar(3, 2), ParamSpec{"c", 0.0, 1.0 / 3, true, kMotzkinDefaultC},
               "(1 - c m) a with m the trigonometric Motzkin form and a a tensor orthonormal symbol", build_motzkin});
  e.push_back({"nosubqmf3d", 3, IntMatrix::scalar(3, 2), std::nullopt, "refinable mask violating the sub-QMF condition",
               build_nosubqmf3d});
  return e;
}

std::string cache_key(const std::string& name, const Params& ps) {
  std::ostringstream os;
  os.precision(17);
  os << name;
  for (const auto& [k, v] : ps) os << ';' << k << '=' << v;
  return os.str();
}

}  // namespace

const std::vector<double>& daubechies8_coefficients() {
  static const std::vector<double> h{
      0.03847781105407623658612,   0.2212336235761249198616,    0.4777430752138736955814,
      0.4139082662111958929084,    -0.0111928676668802177411,   -0.2008293163904890504202,
      0.0003340970462201187804735, 0.09103817842365774543126,   -0.01228195052284840925597,
      -0.03117510332513942813559,  0.00988607964835075897813,   0.006184422409815922367447,
      -0.003443859628441809083912, -0.0002770022744793893223766, 0.0004776148556496261549022,
      -0.00008306863068661269061618};
  return h;
}

IntMatrix interp3d_image_from_100(const std::string& label) {
  if (label == "100") return IntMatrix::identity(3);
  if (label == "010") return IntMatrix{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}};    // p_100(z2, z1, z3)
  if (label == "001") return IntMatrix{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}};    // p_100(z3, z1, z2)
  if (label == "111") return IntMatrix{{1, -1, 0}, {1, 0, -1}, {1, 0, 0}};  // p_100(z1 z2 z3, 1/z1, 1/z2)
  throw std::invalid_argument("interp3d_image_from_100: unknown label " + label);
}

IntMatrix interp3d_image_from_110(const std::string& label) {
  if (label == "110") return IntMatrix::identity(3);
  if (label == "101") return IntMatrix{{1, 0, 0}, {0, 0, 1}, {0, 1, 0}};  // p_110(z1, z3, z2)
  if (label == "011") return IntMatrix{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}};  // p_110(z2, z3, z1)
  throw std::invalid_argument("interp3d_image_from_110: unknown label " + label);
}

LaurentPoly interp3d_p100(double lambda) {
  return (1.0 / 8) * C({1, 0, 0}) + (lambda / 4) * (C({1, 2, 0}) + C({1, 0, 2}) + C({1, 2, 2})) -
         (lambda / 4) * (C({1, -2, 0}) + C({1, 0, -2}) + C({3, 2, 2}));
}

LaurentPoly interp3d_p110(double lambda) {
  return (1.0 / 8 - lambda) * C({1, 1, 0}) + lambda * (C({1, -1, 0}) + C({1, 1, 2})) -
         (lambda / 4) * (C({1, -1, 2}) + C({1, -1, -2}) + C({3, 1, 2}) + C({1, 3, 2}));
}

LaurentPoly sqrt3_p01() {
  return (4.0 / 27) * (mono({0, 1}) + mono({-1, 0}) + mono({1, -1})) -
         (1.0 / 27) * (mono({-2, 2}) + mono({2, 0}) + mono({0, -2}));
}

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = make_entries();
  return entries;
}

const CatalogEntry& catalog_entry(const std::string& name) {
  for (const auto& e : catalog_entries())
    if (e.name == name) return e;
  throw CatalogError("unknown catalog entry: " + name);
}

Mask catalog_get(const std::string& name, const Params& params) {
  const CatalogEntry& entry = catalog_entry(name);
  Params full;
  for (const auto& [k, v] : params) {
    if (!entry.paramSpec || entry.paramSpec->name != k)
      throw CatalogError(name + ": unknown parameter '" + k + "'");
    full[k] = v;
  }
  if (entry.paramSpec) {
    const ParamSpec& s = *entry.paramSpec;
    const double v = full.emplace(s.name, s.defaultValue).first->second;
    const bool lo_ok = s.loOpen ? v > s.lo : v >= s.lo;
    if (!lo_ok || !(v <= s.hi)) {
      std::ostringstream os;
      os << name << ": " << s.name << " = " << v << " outside " << (s.loOpen ? "(" : "[") << s.lo << ", " << s.hi << "]";
      throw CatalogError(os.str());
    }
  }

  static std::mutex mu;
  static std::map<std::string, Mask> cache;
  const std::string key = cache_key(name, full);
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  if (name == "motzkin") check_m8();
  Mask mask = entry.build(full);
  if (!is_hermitian(subqmf_poly(mask), 1e-10)) throw CatalogError(name + ": f is not hermitian");
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, std::move(mask)).first->second;
}

}  // namespace uep
