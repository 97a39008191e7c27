#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>

#include "vknot/diagram_sum.hpp"
#include "vknot/gauss_diagram.hpp"
#include "vknot/laurent_poly.hpp"

namespace vknot {

/// A named invariant candidate with values in V (std::int64_t or LaurentPoly),
/// extended linearly to DiagramSum. The rule must be a pure function.
template <class V>
struct Functional {
  std::string name;
  std::function<V(const GaussDiagram&)> eval;

  V operator()(const GaussDiagram& d) const { return eval(d); }
  V operator()(const DiagramSum& s) const {
    V total{};
    for (const auto& [d, c] : s.terms()) total += eval(d) * c;
    return total;
  }
};

inline std::string format_value(std::int64_t v) { return std::to_string(v); }
inline std::string format_value(const LaurentPoly& p) { return p.to_string(); }

}  // namespace vknot
