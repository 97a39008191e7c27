#include "vknot/witnesses.hpp"

namespace vknot {

SimilarityWitness commutator_witness(int k, const BlockConfig& cfg) {
  const BraidWord w = commutator_braid(k, cfg);
  const auto levels = commutator_levels(k, cfg);
  SimilarityWitness out;
  out.base = cut_open(w, ClosureMode::knot);
  out.mode = SimilarityMode::gpv;
  out.chord_family.assign(k, {});
  int chord = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] != BraidLetter::virt) out.chord_family[levels[i] - 1].push_back(++chord);
  return out;
}

SimilarityWitness stored_f2_witness() {
  SimilarityWitness out;
  out.base = parse_gauss_code("@ U3+ O2+ O4+ O1- O3+ U1- U2+ U4+");
  out.mode = SimilarityMode::f;
  out.site_family = {{Triangle{1, Role::tail, triangle_sign(out.base, 1)}},
                     {Triangle{5, Role::head, triangle_sign(out.base, 5)}}};
  return out;
}

}  // namespace vknot
