#pragma once

#include "vknot/braid.hpp"
#include "vknot/finite_type.hpp"

namespace vknot {

/// GPV_k witness on the cut-open closure of b(k): set i holds the real
/// crossings of the level-i blocks. Virtualizing any nonempty subfamily
/// collapses the commutator, leaving an unknot diagram.
SimilarityWitness commutator_witness(int k, const BlockConfig& cfg = {});

/// A stored F_2 witness: two single forbidden sites on a 4-chord long
/// diagram whose three images are Reidemeister-equivalent to one another
/// but not to the base (their f-polynomials differ).
SimilarityWitness stored_f2_witness();

}  // namespace vknot
