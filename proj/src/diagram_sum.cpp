#include "vknot/diagram_sum.hpp"

#include <bit>
#include <set>
#include <sstream>
#include <vector>

namespace vknot {

void DiagramSum::add(const GaussDiagram& d, std::int64_t coeff) {
  if (coeff == 0) return;
  auto [it, fresh] = terms_.try_emplace(canonicalize(d), coeff);
  if (!fresh) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

std::int64_t DiagramSum::coefficient(const GaussDiagram& d) const {
  auto it = terms_.find(canonicalize(d));
  return it == terms_.end() ? 0 : it->second;
}

std::int64_t DiagramSum::total() const {
  std::int64_t t = 0;
  for (const auto& [d, c] : terms_) t += c;
  return t;
}

int DiagramSum::max_chords() const {
  int m = 0;
  for (const auto& [d, c] : terms_) m = std::max(m, d.chord_count());
  return m;
}

DiagramSum& DiagramSum::operator+=(const DiagramSum& other) {
  for (const auto& [d, c] : other.terms_) add(d, c);
  return *this;
}

DiagramSum& DiagramSum::operator-=(const DiagramSum& other) {
  for (const auto& [d, c] : other.terms_) add(d, -c);
  return *this;
}

DiagramSum& DiagramSum::operator*=(std::int64_t k) {
  if (k == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [d, c] : terms_) c *= k;
  return *this;
}

DiagramSum j_map(const GaussDiagram& d, int cap) {
  DiagramSum out;
  for (const auto& sub : sub_diagrams(d, cap)) out.add(sub);
  return out;
}

std::int64_t pair(const DiagramSum& a, const DiagramSum& b) {
  const auto& small = a.size() <= b.size() ? a : b;
  const auto& large = a.size() <= b.size() ? b : a;
  std::int64_t total = 0;
  for (const auto& [d, c] : small.terms()) {
    auto it = large.terms().find(d);
    if (it != large.terms().end()) total += c * it->second;
  }
  return total;
}

std::int64_t gauss_formula(const DiagramSum& a, const GaussDiagram& d, int cap) {
  if (d.chord_count() > cap)
    throw CapError("Gauss diagram formula over " + std::to_string(d.chord_count()) +
                     " chords exceeds the cap of " + std::to_string(cap));
  std::set<int> sizes;
  for (const auto& [term, c] : a.terms())
    if (term.kind() == d.kind() && term.chord_count() <= d.chord_count()) sizes.insert(term.chord_count());
  std::int64_t total = 0;
  const std::uint64_t limit = std::uint64_t{1} << d.chord_count();
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    if (!sizes.count(std::popcount(mask))) continue;
    auto it = a.terms().find(canonicalize(subdiagram(d, mask)));
    if (it != a.terms().end()) total += it->second;
  }
  return total;
}

DiagramSum parse_diagram_sum(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  DiagramSum out;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream row(line);
    long long coeff = 0;
    if (!(row >> coeff))
      throw GaussError("line " + std::to_string(lineno) + ": expected an integer coefficient");
    std::string rest;
    std::getline(row, rest);
    out.add(parse_gauss_code(rest), coeff);
  }
  return out;
}

std::string to_string(const DiagramSum& s) {
  std::string out;
  for (const auto& [d, c] : s.terms()) {
    out += std::to_string(c);
    out += ' ';
    out += to_string(d);
    out += '\n';
  }
  return out;
}

}  // namespace vknot
