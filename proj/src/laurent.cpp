#include "uepframe/laurent.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace uep {

namespace {

void require_same_dim(const LaurentPoly& a, const LaurentPoly& b, const char* op) {
  if (a.dim() != b.dim())
    throw DimensionError(std::string(op) + ": dimension mismatch (" + std::to_string(a.dim()) +
                         " vs " + std::to_string(b.dim()) + ")");
}

// Sorts, merges duplicates and drops small coefficients in place.
void normalize(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& x, const Term& y) { return x.exponent < y.exponent; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    Complex sum = 0.0;
    std::size_t j = i;
    while (j < terms.size() && terms[j].exponent == terms[i].exponent) sum += terms[j++].coeff;
    if (std::abs(sum) >= kDropTolerance) {
      if (out != i) terms[out].exponent = std::move(terms[i].exponent);
      terms[out].coeff = sum;
      ++out;
    }
    i = j;
  }
  terms.resize(out);
}

Complex ipow_neg_i(std::int64_t a, std::int64_t k) {
  // (-i a)^k
  Complex r = 1.0;
  const Complex f(0.0, -static_cast<double>(a));
  for (std::int64_t j = 0; j < k; ++j) r *= f;
  return r;
}

constexpr std::size_t kDenseLimit = std::size_t{1} << 22;

}  // namespace

// ---------------------------------------------------------------- MultiIndex

MultiIndex MultiIndex::unit(std::size_t dim, std::size_t k) {
  MultiIndex e(dim);
  e[k] = 1;
  return e;
}

bool MultiIndex::is_zero() const {
  return std::all_of(v_.begin(), v_.end(), [](std::int64_t x) { return x == 0; });
}

std::int64_t MultiIndex::total_degree() const {
  std::int64_t s = 0;
  for (auto x : v_) s += x;
  return s;
}

double MultiIndex::dot(const TorusPoint& w) const {
  if (w.size() != v_.size()) throw DimensionError("MultiIndex::dot: dimension mismatch");
  double s = 0.0;
  for (std::size_t k = 0; k < v_.size(); ++k) s += static_cast<double>(v_[k]) * w[k];
  return s;
}

MultiIndex MultiIndex::operator-() const {
  MultiIndex r = *this;
  for (auto& x : r.v_) x = -x;
  return r;
}

MultiIndex& MultiIndex::operator+=(const MultiIndex& o) {
  if (o.size() != size()) throw DimensionError("MultiIndex: dimension mismatch");
  for (std::size_t k = 0; k < v_.size(); ++k) v_[k] += o.v_[k];
  return *this;
}

MultiIndex& MultiIndex::operator-=(const MultiIndex& o) {
  if (o.size() != size()) throw DimensionError("MultiIndex: dimension mismatch");
  for (std::size_t k = 0; k < v_.size(); ++k) v_[k] -= o.v_[k];
  return *this;
}

// ----------------------------------------------------------------- IntMatrix

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  a_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("IntMatrix: ragged initializer");
    a_.insert(a_.end(), r.begin(), r.end());
  }
}

IntMatrix IntMatrix::identity(std::size_t n) { return scalar(n, 1); }

IntMatrix IntMatrix::scalar(std::size_t n, std::int64_t s) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = s;
  return m;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

MultiIndex IntMatrix::apply(const MultiIndex& x) const {
  if (x.size() != cols_) throw DimensionError("IntMatrix::apply: shape mismatch");
  MultiIndex y(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < cols_; ++j) s += (*this)(i, j) * x[j];
    y[i] = s;
  }
  return y;
}

std::int64_t IntMatrix::max_abs() const {
  std::int64_t m = 0;
  for (auto x : a_) m = std::max(m, x < 0 ? -x : x);
  return m;
}

// --------------------------------------------------------------- LaurentPoly

LaurentPoly::LaurentPoly(std::size_t dim, std::vector<Term> terms) : dim_(dim), terms_(std::move(terms)) {
  for (const auto& t : terms_)
    if (t.exponent.size() != dim_) throw DimensionError("LaurentPoly: exponent length differs from dim");
  normalize(terms_);
}

LaurentPoly LaurentPoly::constant(std::size_t dim, Complex c) {
  return LaurentPoly(dim, {{MultiIndex(dim), c}});
}

LaurentPoly LaurentPoly::monomial(MultiIndex exponent, Complex c) {
  const std::size_t d = exponent.size();
  return LaurentPoly(d, {{std::move(exponent), c}});
}

Complex LaurentPoly::coeff(const MultiIndex& alpha) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), alpha,
                             [](const Term& t, const MultiIndex& a) { return t.exponent < a; });
  if (it != terms_.end() && it->exponent == alpha) return it->coeff;
  return 0.0;
}

double LaurentPoly::max_abs_coeff() const {
  double m = 0.0;
  for (const auto& t : terms_) m = std::max(m, std::abs(t.coeff));
  return m;
}

std::vector<std::pair<std::int64_t, std::int64_t>> LaurentPoly::bounding_box() const {
  std::vector<std::pair<std::int64_t, std::int64_t>> box(dim_, {0, 0});
  if (terms_.empty()) return box;
  for (std::size_t k = 0; k < dim_; ++k) box[k] = {terms_[0].exponent[k], terms_[0].exponent[k]};
  for (const auto& t : terms_)
    for (std::size_t k = 0; k < dim_; ++k) {
      box[k].first = std::min(box[k].first, t.exponent[k]);
      box[k].second = std::max(box[k].second, t.exponent[k]);
    }
  return box;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  require_same_dim(*this, o, "add");
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() || (i < terms_.size() && terms_[i].exponent < o.terms_[j].exponent)) {
      merged.push_back(std::move(terms_[i++]));
    } else if (i == terms_.size() || o.terms_[j].exponent < terms_[i].exponent) {
      merged.push_back(o.terms_[j++]);
    } else {
      Complex c = terms_[i].coeff + o.terms_[j].coeff;
      if (std::abs(c) >= kDropTolerance) merged.push_back({std::move(terms_[i].exponent), c});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly& LaurentPoly::operator*=(Complex s) {
  *this = map_coeffs([s](const MultiIndex&, Complex c) { return c * s; });
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  return map_coeffs([](const MultiIndex&, Complex c) { return -c; });
}

LaurentPoly operator+(LaurentPoly a, Complex c) { return a += LaurentPoly::constant(a.dim(), c); }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  require_same_dim(a, b, "mul");
  const std::size_t d = a.dim();
  if (a.is_zero() || b.is_zero()) return LaurentPoly(d);

  const auto ba = a.bounding_box();
  const auto bb = b.bounding_box();
  std::vector<std::int64_t> lo(d), ext(d);
  std::size_t volume = 1;
  bool dense = true;
  for (std::size_t k = 0; k < d; ++k) {
    lo[k] = ba[k].first + bb[k].first;
    ext[k] = (ba[k].second - ba[k].first) + (bb[k].second - bb[k].first) + 1;
    if (volume > kDenseLimit / static_cast<std::size_t>(ext[k])) dense = false;
    volume *= static_cast<std::size_t>(ext[k]);
  }

  if (!dense) {
    std::vector<Term> prod;
    prod.reserve(a.num_terms() * b.num_terms());
    for (const auto& s : a.terms())
      for (const auto& t : b.terms()) prod.push_back({s.exponent + t.exponent, s.coeff * t.coeff});
    return LaurentPoly(d, std::move(prod));
  }

  // Dense accumulation over the product bounding box; iterating the box in
  // row-major order reproduces lexicographic exponent order.
  std::vector<std::size_t> stride(d);
  std::size_t s = 1;
  for (std::size_t k = d; k-- > 0;) {
    stride[k] = s;
    s *= static_cast<std::size_t>(ext[k]);
  }
  auto offset = [&](const MultiIndex& e, const std::vector<std::pair<std::int64_t, std::int64_t>>& box) {
    std::size_t o = 0;
    for (std::size_t k = 0; k < d; ++k) o += static_cast<std::size_t>(e[k] - box[k].first) * stride[k];
    return o;
  };
  std::vector<std::size_t> oa(a.num_terms()), ob(b.num_terms());
  for (std::size_t i = 0; i < a.num_terms(); ++i) oa[i] = offset(a.terms()[i].exponent, ba);
  for (std::size_t j = 0; j < b.num_terms(); ++j) ob[j] = offset(b.terms()[j].exponent, bb);

  std::vector<Complex> acc(volume, Complex(0.0));
  std::vector<char> touched(volume, 0);
  for (std::size_t i = 0; i < a.num_terms(); ++i) {
    const Complex ca = a.terms()[i].coeff;
    for (std::size_t j = 0; j < b.num_terms(); ++j) {
      acc[oa[i] + ob[j]] += ca * b.terms()[j].coeff;
      touched[oa[i] + ob[j]] = 1;
    }
  }

  LaurentPoly r(d);
  std::vector<Term> out;
  MultiIndex e(d);
  for (std::size_t idx = 0; idx < volume; ++idx) {
    if (!touched[idx] || std::abs(acc[idx]) < kDropTolerance) continue;
    std::size_t rem = idx;
    for (std::size_t k = 0; k < d; ++k) {
      e[k] = lo[k] + static_cast<std::int64_t>(rem / stride[k]);
      rem %= stride[k];
    }
    out.push_back({e, acc[idx]});
  }
  r.terms_ = std::move(out);
  return r;
}

LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b) { return a + b; }
LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }

LaurentPoly involution(const LaurentPoly& p) {
  // Negating every exponent reverses lexicographic order.
  LaurentPoly r(p.dim());
  r.terms_.reserve(p.terms_.size());
  for (auto it = p.terms_.rbegin(); it != p.terms_.rend(); ++it)
    r.terms_.push_back({-it->exponent, std::conj(it->coeff)});
  return r;
}

double max_abs_diff(const LaurentPoly& a, const LaurentPoly& b) { return (a - b).max_abs_coeff(); }

bool is_hermitian(const LaurentPoly& p, double tol) {
  if (tol < 0) throw std::invalid_argument("is_hermitian: negative tolerance");
  for (const auto& t : p.terms())
    if (std::abs(p.coeff(-t.exponent) - std::conj(t.coeff)) > tol) return false;
  return true;
}

Complex evaluate(const LaurentPoly& p, const TorusPoint& w) {
  if (w.size() != p.dim()) throw DimensionError("evaluate: dimension mismatch");
  Complex s = 0.0;
  for (const auto& t : p.terms()) s += t.coeff * std::polar(1.0, -t.exponent.dot(w));
  return s;
}

Complex derivative_eval(const LaurentPoly& p, const MultiIndex& mu, const TorusPoint& w) {
  if (mu.size() != p.dim() || w.size() != p.dim()) throw DimensionError("derivative_eval: dimension mismatch");
  for (auto m : mu)
    if (m < 0) throw std::invalid_argument("derivative_eval: negative derivative order");
  Complex s = 0.0;
  for (const auto& t : p.terms()) {
    Complex f = t.coeff;
    for (std::size_t k = 0; k < mu.size(); ++k)
      if (mu[k] > 0) f *= ipow_neg_i(t.exponent[k], mu[k]);
    s += f * std::polar(1.0, -t.exponent.dot(w));
  }
  return s;
}

std::vector<Complex> evaluate_grid(const LaurentPoly& p, std::size_t n) {
  const std::size_t d = p.dim();
  if (n == 0) throw std::invalid_argument("evaluate_grid: n must be positive");
  std::size_t total = 1;
  for (std::size_t k = 0; k < d; ++k) total *= n;
  if (p.is_zero()) return std::vector<Complex>(total, 0.0);

  // Separable contraction: replace one axis at a time by its grid values.
  const auto box = p.bounding_box();
  std::vector<std::size_t> shape(d);
  for (std::size_t k = 0; k < d; ++k) shape[k] = static_cast<std::size_t>(box[k].second - box[k].first + 1);
  auto volume = [](const std::vector<std::size_t>& sh) {
    std::size_t v = 1;
    for (auto x : sh) v *= x;
    return v;
  };
  std::vector<Complex> cur(volume(shape), 0.0);
  {
    std::vector<std::size_t> stride(d);
    std::size_t s = 1;
    for (std::size_t k = d; k-- > 0;) {
      stride[k] = s;
      s *= shape[k];
    }
    for (const auto& t : p.terms()) {
      std::size_t o = 0;
      for (std::size_t k = 0; k < d; ++k) o += static_cast<std::size_t>(t.exponent[k] - box[k].first) * stride[k];
      cur[o] += t.coeff;
    }
  }
  for (std::size_t axis = 0; axis < d; ++axis) {
    const std::size_t len = shape[axis];
    std::size_t outer = 1, inner = 1;
    for (std::size_t k = 0; k < axis; ++k) outer *= shape[k];
    for (std::size_t k = axis + 1; k < d; ++k) inner *= shape[k];
    // phase[j][a] = exp(-i (lo + a) * 2 pi j / n), computed from the exact residue.
    std::vector<Complex> phase(n * len);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t a = 0; a < len; ++a) {
        const std::int64_t e = box[axis].first + static_cast<std::int64_t>(a);
        const std::int64_t nn = static_cast<std::int64_t>(n);
        const std::int64_t r = ((e * static_cast<std::int64_t>(j)) % nn + nn) % nn;
        phase[j * len + a] = std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(n));
      }
    std::vector<Complex> next(outer * n * inner, 0.0);
    for (std::size_t o = 0; o < outer; ++o)
      for (std::size_t j = 0; j < n; ++j) {
        Complex* dst = &next[(o * n + j) * inner];
        for (std::size_t a = 0; a < len; ++a) {
          const Complex ph = phase[j * len + a];
          const Complex* src = &cur[(o * len + a) * inner];
          for (std::size_t i = 0; i < inner; ++i) dst[i] += ph * src[i];
        }
      }
    shape[axis] = n;
    cur = std::move(next);
  }
  return cur;
}

LaurentPoly substitute_monomial(const LaurentPoly& p, const IntMatrix& B) {
  if (B.cols() != p.dim()) throw DimensionError("substitute_monomial: matrix columns must equal input dimension");
  std::vector<Term> out;
  out.reserve(p.num_terms());
  for (const auto& t : p.terms()) out.push_back({B.apply(t.exponent), t.coeff});
  return LaurentPoly(B.rows(), std::move(out));
}

LaurentPoly sin_poly(const MultiIndex& l) {
  const std::size_t d = l.size();
  if (l.is_zero()) return LaurentPoly(d);
  const Complex half_over_i = Complex(0.0, -0.5);  // 1/(2i)
  return LaurentPoly(d, {{-l, half_over_i}, {l, -half_over_i}});
}

LaurentPoly cos_poly(const MultiIndex& l) {
  const std::size_t d = l.size();
  if (l.is_zero()) return LaurentPoly::constant(d, 1.0);
  return LaurentPoly(d, {{-l, 0.5}, {l, 0.5}});
}

LaurentPoly canonicalize_phase(const LaurentPoly& p) {
  const double scale = p.max_abs_coeff();
  for (const auto& t : p.terms()) {
    if (std::abs(t.coeff) > 1e-12 * std::max(scale, 1.0)) {
      const Complex u = std::conj(t.coeff) / std::abs(t.coeff);
      return p * u;
    }
  }
  return p;
}

std::int64_t exponent_spread(const LaurentPoly& p) {
  std::int64_t s = 0;
  for (const auto& [lo, hi] : p.bounding_box()) s = std::max(s, hi - lo);
  return s;
}

}  // namespace uep
