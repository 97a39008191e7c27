#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "vknot/gauss_diagram.hpp"

namespace vknot {

/// Finitely supported integer combination of canonical Gauss diagrams.
class DiagramSum {
 public:
  using Terms = std::map<GaussDiagram, std::int64_t>;

  DiagramSum() = default;
  explicit DiagramSum(const GaussDiagram& d, std::int64_t coeff = 1) { add(d, coeff); }

  /// Adds coeff * canonicalize(d); zero coefficients are dropped.
  void add(const GaussDiagram& d, std::int64_t coeff = 1);

  const Terms& terms() const { return terms_; }
  std::int64_t coefficient(const GaussDiagram& d) const;
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  std::int64_t total() const;
  /// Largest chord count among the terms (0 when empty).
  int max_chords() const;

  DiagramSum& operator+=(const DiagramSum& other);
  DiagramSum& operator-=(const DiagramSum& other);
  DiagramSum& operator*=(std::int64_t k);
  friend DiagramSum operator+(DiagramSum a, const DiagramSum& b) { return a += b; }
  friend DiagramSum operator-(DiagramSum a, const DiagramSum& b) { return a -= b; }
  friend DiagramSum operator*(DiagramSum a, std::int64_t k) { return a *= k; }
  friend bool operator==(const DiagramSum&, const DiagramSum&) = default;

 private:
  Terms terms_;
};

/// J(D): every subdiagram, canonicalized and counted.
DiagramSum j_map(const GaussDiagram& d, int cap = kDefaultEnumerationCap);

/// Bilinear extension of the Kronecker pairing on canonical diagrams.
std::int64_t pair(const DiagramSum& a, const DiagramSum& b);

/// <A, D> = (A, J(D)). Only subdiagrams whose size occurs in A are built.
std::int64_t gauss_formula(const DiagramSum& a, const GaussDiagram& d, int cap = kDefaultEnumerationCap);

/// One term per line: `<coeff> <gauss code>`; blank lines and `#` comments
/// are skipped.
DiagramSum parse_diagram_sum(std::string_view text);
std::string to_string(const DiagramSum& s);

}  // namespace vknot
