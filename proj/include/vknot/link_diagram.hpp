#pragma once

#include <map>
#include <string>
#include <vector>

#include "vknot/gauss_diagram.hpp"

namespace vknot {

/// Gauss diagram on several oriented circles; produced by smoothing knot
/// diagrams. A circle may carry no endpoints (a crossingless loop).
struct LinkDiagram {
  std::vector<std::vector<Endpoint>> circles;
  std::map<int, int> signs;

  int component_count() const { return static_cast<int>(circles.size()); }
  int chord_count() const { return static_cast<int>(signs.size()); }
  /// Exact (non-canonical) encoding, usable as a memo key.
  std::string key() const;
};

LinkDiagram to_link(const GaussDiagram& d);

/// Reverses over/under at the chord: both roles flip, and so does the sign.
LinkDiagram crossing_change(const LinkDiagram& l, int chord);

/// Orientation-respecting smoothing; splits a circle or merges two.
LinkDiagram oriented_smoothing(const LinkDiagram& l, int chord);

/// The other smoothing. It reverses one arc (or one whole circle), which
/// flips the sign of every chord with exactly one endpoint on the reversed part.
LinkDiagram unoriented_smoothing(const LinkDiagram& l, int chord);

}  // namespace vknot
