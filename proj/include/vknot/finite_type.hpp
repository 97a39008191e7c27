#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "vknot/diagram_sum.hpp"
#include "vknot/functional.hpp"
#include "vknot/gauss_diagram.hpp"
#include "vknot/laurent_poly.hpp"
#include "vknot/moves.hpp"
#include "vknot/search.hpp"

namespace vknot {

class FiniteTypeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Sum over subsets of `chords` of (-1)^|subset| v(D with the subset virtualized).
template <class V>
V gpv_alternating_sum(const Functional<V>& v, const GaussDiagram& d, const std::vector<int>& chords);

/// Sum over subsets of `sites` of (-1)^|subset| v(D with forbidden moves at the subset).
/// The sites must be pairwise disjoint.
template <class V>
V f_alternating_sum(const Functional<V>& v, const GaussDiagram& d, const std::vector<Triangle>& sites);

/// Each marked chord becomes (real) - (virtualized).
DiagramSum expand_semi_virtual(const GaussDiagram& d, const std::vector<int>& marked);

enum class TriangleConvention { standard, flipped };

/// Each marked site becomes (positive configuration) - (negative
/// configuration), reading each site's sign on D itself.
DiagramSum expand_semi_triple(const GaussDiagram& d, const std::vector<Triangle>& marked,
                              TriangleConvention convention = TriangleConvention::standard);

/// Applies forbidden moves at the given disjoint sites.
GaussDiagram apply_forbidden_set(const GaussDiagram& d, const std::vector<Triangle>& sites);
bool pairwise_disjoint(const GaussDiagram& d, const std::vector<Triangle>& sites);

/// Where order checks draw diagrams from. The corpus is used first, then
/// random diagrams until `trials` diagrams have been examined.
struct Sampler {
  std::vector<GaussDiagram> corpus;
  int trials = 100;
  int min_chords = 1;
  int max_chords = 6;
  DiagramKind kind = DiagramKind::based;
  std::uint64_t seed = 1;
  /// Diagrams up to this size get every site subset; larger ones get
  /// `subsets_per_diagram` random subsets.
  int exhaustive_up_to = 6;
  int subsets_per_diagram = 8;
};

struct OrderCounterexample {
  GaussDiagram diagram;
  std::vector<int> chords;
  std::vector<Triangle> sites;
  std::string value;
};

struct OrderVerdict {
  bool pass = true;
  std::size_t sums_checked = 0;
  std::size_t diagrams_skipped = 0;
  std::optional<OrderCounterexample> counterexample;
};

template <class V>
OrderVerdict check_gpv_order_at_most(const Functional<V>& v, int n, const Sampler& sampler);

/// Forbidden-move analogue. `convention` only selects how sums are formed
/// (through expand_semi_triple); a verdict never depends on it.
template <class V>
OrderVerdict check_f_order_at_most(const Functional<V>& v, int n, const Sampler& sampler,
                                   TriangleConvention convention = TriangleConvention::standard);

struct LemmaReport {
  GaussDiagram moved;
  int chord1 = 0;  ///< A1: the chord at the site position
  int chord2 = 0;  ///< A2: the chord at the next position
  /// A1, A2, A1 and A2 together.
  std::array<bool, 3> confirmed{false, false, false};
  std::array<std::optional<MoveTrace>, 3> traces;

  bool all() const { return confirmed[0] && confirmed[1] && confirmed[2]; }
};

/// For the forbidden move D -> D' at t, checks that virtualizing A in D and
/// in D' gives Reidemeister-equivalent diagrams, for A = A1, A2, A1 u A2.
LemmaReport verify_lemma_f2gpv(const GaussDiagram& d, const Triangle& t, const SearchBudget& budget = {});

enum class SimilarityMode { gpv, f };

struct SimilarityWitness {
  GaussDiagram base;
  SimilarityMode mode = SimilarityMode::gpv;
  std::vector<std::vector<int>> chord_family;       ///< mode gpv
  std::vector<std::vector<Triangle>> site_family;   ///< mode f

  int size() const {
    return static_cast<int>(mode == SimilarityMode::gpv ? chord_family.size() : site_family.size());
  }
};

/// Throws FiniteTypeError unless the sets are nonempty, valid on the base
/// and pairwise disjoint (as chords, or as endpoint pairs).
void validate(const SimilarityWitness& w);

/// Applies every set whose bit is set in `mask`.
GaussDiagram apply_subfamily(const SimilarityWitness& w, std::uint32_t mask);

/// (base, base with every set applied).
std::pair<GaussDiagram, GaussDiagram> build_similar_pair(const SimilarityWitness& w);

/// The 2^n - 1 nonempty-subfamily images; entry i is mask i + 1.
std::vector<GaussDiagram> subfamily_images(const SimilarityWitness& w);

template <class V>
struct SimilarityVerdict {
  bool pass = true;
  V base_value{};
  std::vector<V> image_values;
};

/// v on the base and on every image; passes iff all agree.
template <class V>
SimilarityVerdict<V> verify_similarity_consequence(const SimilarityWitness& w, const Functional<V>& v, int m);

Functional<std::int64_t> constant_functional(std::int64_t c);
Functional<std::int64_t> chord_count_functional();
/// C(chords, k).
Functional<std::int64_t> chord_choose_functional(int k);
Functional<std::int64_t> gauss_formula_functional(const DiagramSum& a);

}  // namespace vknot
