#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "vknot/gauss_diagram.hpp"

namespace vknot {

class MoveError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class MoveKind {
  r1_insert,
  r1_delete,
  r2_insert,
  r2_delete,
  r3,
  virtualize,
  forbidden_of,
  forbidden_lf,
};

std::string_view to_string(MoveKind k);

/// An adjacent endpoint pair of two distinct chords sharing a role: two
/// tails (OF site) or two heads (LF site).
struct Triangle {
  int position = 0;  ///< left endpoint; the pair is (position, next(position))
  Role role = Role::tail;
  int sign = 1;

  MoveKind kind() const { return role == Role::tail ? MoveKind::forbidden_of : MoveKind::forbidden_lf; }
  friend bool operator==(const Triangle&, const Triangle&) = default;
};

/// Where and how a move applies.
///
/// Parameter use by kind:
///   r1_delete, virtualize : chords[0]
///   r2_delete             : chords[0], chords[1]
///   r1_insert             : pos[0] = gap; sign; variant 1 = head first
///   r2_insert             : pos[0] <= pos[1] gaps; sign of the first new
///                           chord (the second gets -sign); variant bit 0 =
///                           first block holds heads, bit 1 = second block
///                           in reversed chord order
///   r3                    : pos[0..2] = segment starts, ascending
///   forbidden_*           : pos[0] = triangle position; sign
/// A gap g inserts before position g (gap length() appends, based only).
struct MoveSite {
  MoveKind kind = MoveKind::r1_delete;
  std::array<int, 3> pos{-1, -1, -1};
  std::array<int, 2> chords{0, 0};
  int sign = 1;
  int variant = 0;

  static MoveSite r1_delete(int chord);
  static MoveSite r1_insert(int gap, int sign, bool head_first);
  static MoveSite r2_delete(int a, int b);
  static MoveSite r2_insert(int gap1, int gap2, int sign, bool first_heads, bool reversed);
  static MoveSite r3(int s1, int s2, int s3);
  static MoveSite virtualize(int chord);
  static MoveSite forbidden(const Triangle& t);

  bool is_forbidden() const { return kind == MoveKind::forbidden_of || kind == MoveKind::forbidden_lf; }
  bool is_reidemeister() const {
    return kind != MoveKind::virtualize && !is_forbidden();
  }
  friend bool operator==(const MoveSite&, const MoveSite&) = default;
};

/// `<kind> <key=value ...>`; parse_site accepts exactly what format_site prints.
std::string format_site(const MoveSite& s);
MoveSite parse_site(std::string_view text);

struct EnumerateOptions {
  bool r1_insertions = true;
  bool r2_insertions = true;
  /// Insertions that would exceed this chord count are skipped (-1: no limit).
  int max_chords = -1;
};

/// Reidemeister sites of `d`: R1/R2 deletions, R3 triangles and, per
/// options, every R1/R2 insertion. Virtual moves are identities on Gauss
/// diagrams and do not appear.
std::vector<MoveSite> enumerate_reidemeister(const GaussDiagram& d, const EnumerateOptions& opts = {});

/// Applies any site kind. Throws MoveError when the site does not fit `d`.
/// Untouched chords keep their ids; inserted chords get max_chord_id()+1, +2.
GaussDiagram apply_move(const GaussDiagram& d, const MoveSite& site);

/// Deletes the chord (a real crossing made virtual).
GaussDiagram virtualize(const GaussDiagram& d, int chord_id);

/// +1 when the chord at `position` has its other endpoint before the other
/// endpoint of the chord at next(position); -1 otherwise.
int triangle_sign(const GaussDiagram& d, int position);

std::vector<Triangle> forbidden_sites(const GaussDiagram& d);

/// Transposes the two endpoints of the site.
GaussDiagram apply_forbidden(const GaussDiagram& d, const Triangle& t);

/// True when the triangles share no endpoint position.
bool disjoint(const GaussDiagram& d, const Triangle& a, const Triangle& b);

/// Six-bit R3 pattern key of the three segments, or nullopt when they do not
/// form a top/middle/bottom triangle. Bits: 0 top starts with the
/// top-middle tail, 1 middle starts with the head, 2 bottom starts with the
/// top-bottom head, 3..5 signs of the top-middle, top-bottom and
/// middle-bottom chords are positive.
std::optional<int> r3_pattern(const GaussDiagram& d, const std::array<int, 3>& segment_starts);

/// Whether a pattern key is a realizable R3 configuration.
bool r3_valid(int key);

}  // namespace vknot
