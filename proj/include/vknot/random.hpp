#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "vknot/diagram_sum.hpp"
#include "vknot/gauss_diagram.hpp"

namespace vknot {

using Rng = std::mt19937_64;

/// Uniformly shuffled endpoints, ids 1..n, independent random signs.
inline GaussDiagram random_diagram(Rng& rng, int chords, DiagramKind kind) {
  std::vector<Endpoint> eps;
  std::vector<std::pair<int, int>> signs;
  for (int id = 1; id <= chords; ++id) {
    eps.push_back({id, Role::tail});
    eps.push_back({id, Role::head});
    signs.emplace_back(id, std::bernoulli_distribution(0.5)(rng) ? 1 : -1);
  }
  std::shuffle(eps.begin(), eps.end(), rng);
  return GaussDiagram(kind, std::move(eps), signs);
}

inline GaussDiagram random_diagram(Rng& rng, int min_chords, int max_chords, DiagramKind kind) {
  return random_diagram(rng, std::uniform_int_distribution<int>(min_chords, max_chords)(rng), kind);
}

/// `terms` random diagrams of 1..max_chords chords with coefficients in [-3, 3].
inline DiagramSum random_formula(Rng& rng, int terms, int max_chords, DiagramKind kind) {
  DiagramSum s;
  for (int i = 0; i < terms; ++i)
    s.add(random_diagram(rng, 1, max_chords, kind), std::uniform_int_distribution<int>(-3, 3)(rng));
  return s;
}

}  // namespace vknot
