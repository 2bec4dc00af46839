#pragma once

#include <map>
#include <optional>
#include <string>

namespace uep {

/// Named real parameters, e.g. {"lambda", 1/32}.
using Params = std::map<std::string, double>;

inline std::optional<double> param(const Params& ps, const std::string& key) {
  auto it = ps.find(key);
  if (it == ps.end()) return std::nullopt;
  return it->second;
}

}  // namespace uep
