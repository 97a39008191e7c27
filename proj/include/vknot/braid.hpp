#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "vknot/gauss_diagram.hpp"

namespace vknot {

class BraidError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Letters of the 2-strand virtual braid alphabet; text form s, S, v.
enum class BraidLetter : std::uint8_t { real_pos, real_neg, virt };

using BraidWord = std::vector<BraidLetter>;

inline constexpr std::size_t kBraidLengthCap = 512;

BraidWord parse_braid(std::string_view text);
std::string to_string(const BraidWord& w);

BraidLetter inverse(BraidLetter l);
/// Reversed and letterwise inverted.
BraidWord inverse(const BraidWord& w);
BraidWord concat(const BraidWord& a, const BraidWord& b);
/// Cancels adjacent s S, S s and v v until none remain.
BraidWord free_reduce(const BraidWord& w);
int real_letter_count(const BraidWord& w);

struct BlockConfig {
  BraidWord a{BraidLetter::real_pos, BraidLetter::virt};
  BraidWord b{BraidLetter::virt, BraidLetter::real_pos};
};

enum class BlockName { A, Ainv, B, Binv };

BraidWord block(BlockName name, const BlockConfig& cfg = {});

/// b(1) = A, b(k) = [X, b(k-1)] with [x, y] = x y x^-1 y^-1, where X = B
/// for k = 2, 3 (mod 4) and X = A for k = 0, 1 (mod 4).
BraidWord commutator_braid(int k, const BlockConfig& cfg = {}, std::size_t cap = kBraidLengthCap);

/// Level of each letter of commutator_braid(k): 1 for the outermost
/// commutator's X and X^-1 blocks, k for the copies of b(1).
std::vector<int> commutator_levels(int k, const BlockConfig& cfg = {}, std::size_t cap = kBraidLengthCap);

/// Appends l copies of the full twist s s.
BraidWord full_twists(const BraidWord& w, int l);

/// Components of the plain 2-strand closure: 1 for odd length, else 2.
int component_count(const BraidWord& w);

/// plain: the usual closure (must be a knot). knot: plain when that is a
/// knot, otherwise one virtual crossing is added on the return arcs.
enum class ClosureMode { plain, knot };

/// Whether the closure in this mode carries the extra virtual crossing.
bool needs_return_crossing(const BraidWord& w, ClosureMode mode);

/// Closed Gauss diagram of the closure. Chord i is the i-th real letter.
/// Throws BraidError (naming the component count) for plain multi-component closures.
GaussDiagram braid_closure(const BraidWord& w, ClosureMode mode = ClosureMode::plain);

/// Long diagram of the closure, base point on strand 1's return arc right
/// after the last letter. Same chord ids as braid_closure.
GaussDiagram cut_open(const BraidWord& w, ClosureMode mode = ClosureMode::knot);

/// Concatenation of long diagrams; d2's chords are renumbered after d1's.
GaussDiagram connected_sum(const GaussDiagram& d1, const GaussDiagram& d2);

/// K # (cut-open closure of full_twists(b(n), l)).
GaussDiagram family_member(const GaussDiagram& k, int n, int l, const BlockConfig& cfg = {});

}  // namespace vknot
