#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "vknot/braid.hpp"
#include "vknot/diagram_sum.hpp"
#include "vknot/functional.hpp"
#include "vknot/gauss_diagram.hpp"
#include "vknot/laurent_poly.hpp"
#include "vknot/link_diagram.hpp"
#include "vknot/search.hpp"

namespace vknot {

/// Largest chord count the 2^n state sum accepts by default.
inline constexpr int kStateSumCap = 22;

int writhe(const GaussDiagram& d);

/// d = -A^2 - A^-2, the value of an extra loop.
LaurentPoly loop_value();

/// State sum over chords. The A-smoothing of a positive chord is the
/// orientation-respecting one; of a negative chord, the other one.
/// Long diagrams are read through their closure.
LaurentPoly kauffman_bracket(const GaussDiagram& d, int cap = kStateSumCap);
LaurentPoly kauffman_bracket(const LinkDiagram& l, int cap = kStateSumCap);

/// (-A^3)^(-writhe) <D>.
LaurentPoly f_polynomial(const GaussDiagram& d, int cap = kStateSumCap);

/// Bracket of a 2-strand braid closure by transfer over the basis
/// {identity, transposition, cup-cap}; linear in the word length.
LaurentPoly kauffman_bracket(const BraidWord& w, ClosureMode mode = ClosureMode::plain);
LaurentPoly f_polynomial(const BraidWord& w, ClosureMode mode = ClosureMode::plain);

/// f of family_member(k, n, l): the state sum of k times the transfer value
/// of the twisted commutator closure (f is multiplicative under #).
LaurentPoly family_f_polynomial(const GaussDiagram& k, int n, int l, const BlockConfig& cfg = {});

/// The degree-2 formula: based diagram U1 O2 O1 U2 summed over the four
/// sign choices, weighted by the product of the signs.
DiagramSum c2_formula();

/// gauss_formula(c2_formula(), D); closed diagrams are cut before index 0.
std::int64_t c2(const GaussDiagram& d);

struct ConwayBudget {
  int max_chords = 16;
  std::size_t max_calls = 1000000;
};

/// Conway polynomial (variable z) of a classical knot code by the skein
/// relation, changing crossings toward a descending diagram.
/// Throws CapError when the budget runs out.
LaurentPoly conway_polynomial(const GaussDiagram& d, const ConwayBudget& budget = {});

struct FuzzOptions {
  int trials = 100;
  std::uint64_t seed = 1;
  int moves_per_trial = 4;
  /// Insertions stop at the input's chord count plus this.
  int extra_chords = 3;
};

template <class V>
struct FuzzVerdict {
  bool pass = true;
  std::size_t moves = 0;
  std::optional<MoveTrace> violation;
  V expected{};
  V found{};
};

/// Applies random Reidemeister sequences and compares v after every move.
template <class V>
FuzzVerdict<V> invariance_fuzz(const Functional<V>& v, const GaussDiagram& d, const FuzzOptions& opts = {});

extern template FuzzVerdict<std::int64_t> invariance_fuzz(const Functional<std::int64_t>&, const GaussDiagram&,
                                                          const FuzzOptions&);
extern template FuzzVerdict<LaurentPoly> invariance_fuzz(const Functional<LaurentPoly>&, const GaussDiagram&,
                                                         const FuzzOptions&);

Functional<std::int64_t> writhe_functional();
Functional<std::int64_t> c2_functional();
Functional<LaurentPoly> bracket_functional();
Functional<LaurentPoly> f_functional();

}  // namespace vknot
