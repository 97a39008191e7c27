#include "vknot/link_diagram.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace vknot {

namespace {

struct Location {
  int circle = -1;
  int pos = -1;
};

std::pair<Location, Location> locate(const LinkDiagram& l, int chord) {
  std::pair<Location, Location> out;
  int found = 0;
  for (int c = 0; c < l.component_count(); ++c)
    for (int p = 0; p < static_cast<int>(l.circles[c].size()); ++p)
      if (l.circles[c][p].chord == chord) (found++ == 0 ? out.first : out.second) = {c, p};
  if (found != 2) throw GaussError("unknown chord " + std::to_string(chord));
  return out;
}

std::vector<Endpoint> slice(const std::vector<Endpoint>& v, int from, int to) {
  return {v.begin() + from, v.begin() + to};
}

// Endpoints of circle c starting just after position p, wrapping, without p.
std::vector<Endpoint> rotated_after(const std::vector<Endpoint>& v, int p) {
  std::vector<Endpoint> out(v.begin() + p + 1, v.end());
  out.insert(out.end(), v.begin(), v.begin() + p);
  return out;
}

LinkDiagram rebuilt(const LinkDiagram& l, int chord, std::vector<std::vector<Endpoint>> replaced,
                    std::set<int> skip_circles) {
  LinkDiagram out;
  for (int c = 0; c < l.component_count(); ++c)
    if (!skip_circles.count(c)) out.circles.push_back(l.circles[c]);
  for (auto& r : replaced) out.circles.push_back(std::move(r));
  out.signs = l.signs;
  out.signs.erase(chord);
  return out;
}

void flip_half_chords(LinkDiagram& l, const std::vector<Endpoint>& reversed) {
  std::map<int, int> count;
  for (const auto& e : reversed) ++count[e.chord];
  for (auto [id, n] : count)
    if (n == 1) l.signs[id] = -l.signs[id];
}

}  // namespace

std::string LinkDiagram::key() const {
  std::string out;
  for (const auto& c : circles) {
    out += '|';
    for (const auto& e : c) {
      out += e.role == Role::tail ? 'O' : 'U';
      out += std::to_string(e.chord);
      out += signs.at(e.chord) > 0 ? '+' : '-';
    }
  }
  return out;
}

LinkDiagram to_link(const GaussDiagram& d) {
  LinkDiagram l;
  l.circles.push_back(d.endpoints());
  for (auto [id, s] : d.sign_list()) l.signs[id] = s;
  return l;
}

LinkDiagram crossing_change(const LinkDiagram& l, int chord) {
  if (!l.signs.count(chord)) throw GaussError("unknown chord " + std::to_string(chord));
  LinkDiagram out = l;
  for (auto& c : out.circles)
    for (auto& e : c)
      if (e.chord == chord) e.role = opposite(e.role);
  out.signs[chord] = -out.signs[chord];
  return out;
}

LinkDiagram oriented_smoothing(const LinkDiagram& l, int chord) {
  auto [a, b] = locate(l, chord);
  if (a.circle == b.circle) {
    const auto& v = l.circles[a.circle];
    auto inner = slice(v, a.pos + 1, b.pos);
    auto outer = slice(v, b.pos + 1, static_cast<int>(v.size()));
    auto head = slice(v, 0, a.pos);
    outer.insert(outer.end(), head.begin(), head.end());
    return rebuilt(l, chord, {std::move(inner), std::move(outer)}, {a.circle});
  }
  auto merged = rotated_after(l.circles[a.circle], a.pos);
  auto tail = rotated_after(l.circles[b.circle], b.pos);
  merged.insert(merged.end(), tail.begin(), tail.end());
  return rebuilt(l, chord, {std::move(merged)}, {a.circle, b.circle});
}

LinkDiagram unoriented_smoothing(const LinkDiagram& l, int chord) {
  auto [a, b] = locate(l, chord);
  if (a.circle == b.circle) {
    const auto& v = l.circles[a.circle];
    auto middle = slice(v, a.pos + 1, b.pos);
    std::reverse(middle.begin(), middle.end());
    auto joined = slice(v, 0, a.pos);
    joined.insert(joined.end(), middle.begin(), middle.end());
    auto rest = slice(v, b.pos + 1, static_cast<int>(v.size()));
    joined.insert(joined.end(), rest.begin(), rest.end());
    auto out = rebuilt(l, chord, {std::move(joined)}, {a.circle});
    flip_half_chords(out, middle);
    return out;
  }
  auto merged = rotated_after(l.circles[a.circle], a.pos);
  auto other = rotated_after(l.circles[b.circle], b.pos);
  std::reverse(other.begin(), other.end());
  merged.insert(merged.end(), other.begin(), other.end());
  auto out = rebuilt(l, chord, {std::move(merged)}, {a.circle, b.circle});
  flip_half_chords(out, other);
  return out;
}

}  // namespace vknot
