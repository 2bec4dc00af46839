#pragma once

// Sparse complex Laurent polynomials in d variables, identified with
// trigonometric polynomials through z = exp(-i omega).

#include <compare>
#include <complex>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

namespace uep {

using Complex = std::complex<double>;

/// Coefficients with magnitude below this are never stored.
inline constexpr double kDropTolerance = 1e-20;

/// Point of the real torus, in radians; components are read modulo 2*pi.
using TorusPoint = std::vector<double>;

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Integer exponent vector alpha in Z^d.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::size_t dim) : v_(dim, 0) {}
  explicit MultiIndex(std::vector<std::int64_t> v) : v_(std::move(v)) {}
  MultiIndex(std::initializer_list<std::int64_t> v) : v_(v) {}

  static MultiIndex unit(std::size_t dim, std::size_t k);

  std::size_t size() const { return v_.size(); }
  std::int64_t operator[](std::size_t k) const { return v_[k]; }
  std::int64_t& operator[](std::size_t k) { return v_[k]; }
  auto begin() const { return v_.begin(); }
  auto end() const { return v_.end(); }
  const std::vector<std::int64_t>& values() const { return v_; }

  bool is_zero() const;
  std::int64_t total_degree() const;  // sum of entries
  double dot(const TorusPoint& w) const;

  MultiIndex operator-() const;
  MultiIndex& operator+=(const MultiIndex& o);
  MultiIndex& operator-=(const MultiIndex& o);
  friend MultiIndex operator+(MultiIndex a, const MultiIndex& b) { return a += b; }
  friend MultiIndex operator-(MultiIndex a, const MultiIndex& b) { return a -= b; }

  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;
  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

 private:
  std::vector<std::int64_t> v_;
};

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);
  static IntMatrix identity(std::size_t n);
  static IntMatrix scalar(std::size_t n, std::int64_t s);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  std::int64_t& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }

  IntMatrix transposed() const;
  MultiIndex apply(const MultiIndex& x) const;
  std::int64_t max_abs() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<std::int64_t> a_;
};

struct Term {
  MultiIndex exponent;
  Complex coeff;
};

/// Immutable-by-convention sparse Laurent polynomial. Terms are kept sorted
/// lexicographically by exponent with no duplicates and no coefficient below
/// kDropTolerance.
class LaurentPoly {
 public:
  explicit LaurentPoly(std::size_t dim = 1) : dim_(dim) {}
  /// Builds from arbitrary terms; duplicates are summed and the result swept.
  LaurentPoly(std::size_t dim, std::vector<Term> terms);

  static LaurentPoly constant(std::size_t dim, Complex c);
  static LaurentPoly monomial(MultiIndex exponent, Complex c = 1.0);

  std::size_t dim() const { return dim_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t num_terms() const { return terms_.size(); }
  std::span<const Term> terms() const { return terms_; }
  Complex coeff(const MultiIndex& alpha) const;
  double max_abs_coeff() const;

  /// Per-axis [min, max] of the exponents; empty polynomial gives zero-width boxes.
  std::vector<std::pair<std::int64_t, std::int64_t>> bounding_box() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(Complex s);
  LaurentPoly operator-() const;

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, Complex s) { return a *= s; }
  friend LaurentPoly operator*(Complex s, LaurentPoly a) { return a *= s; }
  friend LaurentPoly operator+(LaurentPoly a, Complex c);
  friend LaurentPoly operator+(Complex c, LaurentPoly a) { return std::move(a) + c; }
  friend LaurentPoly operator-(LaurentPoly a, Complex c) { return std::move(a) + (-c); }
  friend LaurentPoly operator-(Complex c, const LaurentPoly& a) { return (-a) + c; }

  /// Applies fn to each coefficient (exponent unchanged) and re-sweeps.
  template <class Fn>
  LaurentPoly map_coeffs(Fn&& fn) const {
    LaurentPoly r(dim_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
      Complex c = fn(t.exponent, t.coeff);
      if (std::abs(c) >= kDropTolerance) r.terms_.push_back({t.exponent, c});
    }
    return r;
  }

 private:
  friend LaurentPoly involution(const LaurentPoly& p);
  std::size_t dim_;
  std::vector<Term> terms_;
};

LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b);

/// p* : z_j -> z_j^{-1}, coefficients conjugated.
LaurentPoly involution(const LaurentPoly& p);

/// max over alpha of |p(-alpha) - conj(p(alpha))| <= tol.
bool is_hermitian(const LaurentPoly& p, double tol);

/// Maximum coefficientwise distance between two polynomials.
double max_abs_diff(const LaurentPoly& a, const LaurentPoly& b);

/// sum_alpha p(alpha) exp(-i alpha . omega)
Complex evaluate(const LaurentPoly& p, const TorusPoint& w);

/// Partial derivative D^mu of omega -> p(exp(-i omega)), evaluated at w.
Complex derivative_eval(const LaurentPoly& p, const MultiIndex& mu, const TorusPoint& w);

/// Values of p on the uniform grid omega_k = 2*pi*k/n in every axis. The
/// result is ordered lexicographically with the last axis fastest.
std::vector<Complex> evaluate_grid(const LaurentPoly& p, std::size_t n);

/// Monomial substitution: each term c*w^alpha becomes c*z^{B alpha}; the
/// columns of B are the images of the input variables. Output dimension is
/// B.rows().
LaurentPoly substitute_monomial(const LaurentPoly& p, const IntMatrix& B);

/// sin(l . omega) = (z^{-l} - z^{l}) / (2i)
LaurentPoly sin_poly(const MultiIndex& l);
/// cos(l . omega) = (z^{-l} + z^{l}) / 2
LaurentPoly cos_poly(const MultiIndex& l);

/// Multiplies by a unimodular scalar so the first nonzero coefficient (in
/// lexicographic exponent order) is real and nonnegative.
LaurentPoly canonicalize_phase(const LaurentPoly& p);

/// Largest per-axis exponent spread (max - min) over all axes.
std::int64_t exponent_spread(const LaurentPoly& p);

}  // namespace uep
