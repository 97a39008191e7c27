#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace vknot {

/// Thrown for malformed Gauss codes and diagrams that violate the chord invariants.
class GaussError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when an enumeration or search would exceed a configured size cap.
class CapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Largest chord count accepted by the 2^n subdiagram enumerations.
inline constexpr int kDefaultEnumerationCap = 20;

/// O token = arrow tail (over pass), U token = arrow head (under pass).
enum class Role : std::uint8_t { tail = 0, head = 1 };

/// Closed diagrams are defined up to rotation; based (long) diagrams carry a
/// base point before index 0 and are never rotated.
enum class DiagramKind : std::uint8_t { closed = 0, based = 1 };

struct Endpoint {
  int chord = 0;
  Role role = Role::tail;

  friend bool operator==(const Endpoint&, const Endpoint&) = default;
};

struct Chord {
  int id = 0;
  int sign = 1;
  int head_pos = -1;
  int tail_pos = -1;
};

constexpr Role opposite(Role r) { return r == Role::tail ? Role::head : Role::tail; }

/// Signed, directed chords on a circle or a based line.
///
/// Chord ids are arbitrary positive labels; canonicalize() makes them dense
/// (1..n in order of first appearance). Values are immutable once built.
class GaussDiagram {
 public:
  /// Empty based diagram.
  GaussDiagram() = default;

  /// Validates the chord invariants: every id in `signs` appears exactly
  /// twice in `endpoints`, once as head and once as tail; signs are +-1.
  GaussDiagram(DiagramKind kind, std::vector<Endpoint> endpoints,
               const std::vector<std::pair<int, int>>& signs);

  static GaussDiagram empty(DiagramKind kind);

  DiagramKind kind() const { return kind_; }
  bool is_closed() const { return kind_ == DiagramKind::closed; }
  bool is_based() const { return kind_ == DiagramKind::based; }

  const std::vector<Endpoint>& endpoints() const { return endpoints_; }
  /// Chords sorted by id.
  const std::vector<Chord>& chords() const { return chords_; }

  int chord_count() const { return static_cast<int>(chords_.size()); }
  int length() const { return static_cast<int>(endpoints_.size()); }
  bool empty() const { return chords_.empty(); }

  bool has_chord(int id) const;
  const Chord& chord(int id) const;
  int sign(int id) const { return chord(id).sign; }
  int sign_at(int pos) const { return chord(endpoints_[pos].chord).sign; }
  int max_chord_id() const { return chords_.empty() ? 0 : chords_.back().id; }

  /// Position of the other endpoint of the chord at `pos`.
  int partner(int pos) const;

  /// Successor / predecessor positions. For based diagrams these return -1
  /// at the ends (moves never cross the base point).
  int next(int pos) const;
  int prev(int pos) const;
  bool adjacent(int p, int q) const { return next(p) == q || next(q) == p; }

  /// (id, sign) pairs sorted by id.
  std::vector<std::pair<int, int>> sign_list() const;

  /// Token order (role, id, sign) with O < U and + < -, lexicographic over
  /// the endpoint sequence; kinds compare first.
  friend std::strong_ordering operator<=>(const GaussDiagram& a, const GaussDiagram& b);
  friend bool operator==(const GaussDiagram& a, const GaussDiagram& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }

  /// Encoded token of endpoint `pos` under the ordering above.
  std::uint32_t token(int pos) const;

 private:
  DiagramKind kind_ = DiagramKind::based;
  std::vector<Endpoint> endpoints_;
  std::vector<Chord> chords_;
};

/// Parses `[@] O<k><s> U<k><s> ...`; a leading `@` selects a based diagram.
GaussDiagram parse_gauss_code(std::string_view text);

/// Inverse of parse_gauss_code (ids are printed as stored).
std::string to_string(const GaussDiagram& d);

/// Based: relabel chords by first appearance. Closed: relabel every
/// rotation and keep the lexicographically smallest token sequence.
GaussDiagram canonicalize(const GaussDiagram& d);

/// Compact byte string identifying canonicalize(d); equal keys iff
/// canonically equal diagrams.
std::string canonical_key(const GaussDiagram& d);

/// Keeps only the chords whose ids satisfy `keep`, preserving endpoint order.
template <class Pred>
GaussDiagram induced(const GaussDiagram& d, Pred keep) {
  std::vector<Endpoint> eps;
  eps.reserve(d.endpoints().size());
  for (const auto& e : d.endpoints())
    if (keep(e.chord)) eps.push_back(e);
  std::vector<std::pair<int, int>> signs;
  for (const auto& c : d.chords())
    if (keep(c.id)) signs.emplace_back(c.id, c.sign);
  return GaussDiagram(d.kind(), std::move(eps), signs);
}

/// Subdiagram keeping the chords whose index (in id order) is set in `mask`.
GaussDiagram subdiagram(const GaussDiagram& d, std::uint64_t mask);

/// All 2^n subdiagrams, ordered by bitmask over chords in id order
/// (empty first, `d` itself last). Throws CapError above `cap` chords.
std::vector<GaussDiagram> sub_diagrams(const GaussDiagram& d, int cap = kDefaultEnumerationCap);

/// Reads a based copy of a closed diagram, base point before index 0.
GaussDiagram as_based(const GaussDiagram& d);
GaussDiagram as_closed(const GaussDiagram& d);

}  // namespace vknot
