#pragma once

// Built-in masks with exact constructors.

#include <functional>
#include <optional>

#include "uepframe/isotypical.hpp"
#include "uepframe/params.hpp"

namespace uep {

inline constexpr double kInterp3dDefaultLambda = 1.0 / 32.0;
inline constexpr double kMotzkinDefaultC = 1.0 / 3.0;

struct ParamSpec {
  std::string name;
  double lo = 0.0;
  double hi = 0.0;
  bool loOpen = false;  // true when lo itself is excluded
  double defaultValue = 0.0;
};

struct CatalogEntry {
  std::string name;
  std::size_t dim = 0;
  IntMatrix M;
  std::optional<ParamSpec> paramSpec;
  std::string description;
  std::function<Mask(const Params&)> build;
};

class CatalogError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// All entries in a fixed order.
const std::vector<CatalogEntry>& catalog_entries();
const CatalogEntry& catalog_entry(const std::string& name);

/// Builds (or returns the cached) mask; parameters outside their range throw CatalogError.
/// Every mask is checked at load for p(1) = 1 and hermitian f.
Mask catalog_get(const std::string& name, const Params& params = {});

/// Sixteen coefficients of the orthonormal univariate symbol with eight
/// vanishing moments, exponents 0..15, summing to 1.
const std::vector<double>& daubechies8_coefficients();

/// Exponent maps sending p_100 to the component named by a binary label
/// ("100", "010", "001", "111") of the interpolatory 3D mask.
IntMatrix interp3d_image_from_100(const std::string& label);
/// Exponent maps sending p_110 to "110", "101" or "011".
IntMatrix interp3d_image_from_110(const std::string& label);

/// Isotypical component p_100 and p_110 of the interpolatory 3D mask.
LaurentPoly interp3d_p100(double lambda);
LaurentPoly interp3d_p110(double lambda);

/// The (0,1) component of the interpolatory sqrt(3) mask.
LaurentPoly sqrt3_p01();

}  // namespace uep
