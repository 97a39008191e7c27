#include "vknot/gauss_diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace vknot {

namespace {

constexpr std::uint32_t kRoleBit = 1u << 24;

std::uint32_t encode_token(Role role, int id, int sign) {
  return (role == Role::head ? kRoleBit : 0u) | (static_cast<std::uint32_t>(id) << 1) |
         (sign < 0 ? 1u : 0u);
}

// Relabeled token sequence of `d` read from rotation `r`.
std::vector<std::uint32_t> relabeled_tokens(const GaussDiagram& d, int r) {
  const int len = d.length();
  std::vector<std::uint32_t> out;
  out.reserve(len);
  std::map<int, int> relabel;
  for (int i = 0; i < len; ++i) {
    const auto& e = d.endpoints()[(r + i) % len];
    auto [it, fresh] = relabel.try_emplace(e.chord, static_cast<int>(relabel.size()) + 1);
    out.push_back(encode_token(e.role, it->second, d.sign(e.chord)));
  }
  return out;
}

// Smallest relabeled rotation; rotation 0 for based diagrams.
std::pair<std::vector<std::uint32_t>, int> canonical_tokens(const GaussDiagram& d) {
  auto best = relabeled_tokens(d, 0);
  int best_r = 0;
  if (d.is_closed()) {
    for (int r = 1; r < d.length(); ++r) {
      auto cand = relabeled_tokens(d, r);
      if (cand < best) {
        best = std::move(cand);
        best_r = r;
      }
    }
  }
  return {std::move(best), best_r};
}

}  // namespace

GaussDiagram::GaussDiagram(DiagramKind kind, std::vector<Endpoint> endpoints,
                           const std::vector<std::pair<int, int>>& signs)
    : kind_(kind), endpoints_(std::move(endpoints)) {
  chords_.reserve(signs.size());
  for (auto [id, sign] : signs) {
    if (id <= 0) throw GaussError("chord id must be positive: " + std::to_string(id));
    if (sign != 1 && sign != -1)
      throw GaussError("chord " + std::to_string(id) + " has sign " + std::to_string(sign));
    chords_.push_back(Chord{id, sign, -1, -1});
  }
  std::sort(chords_.begin(), chords_.end(), [](const Chord& a, const Chord& b) { return a.id < b.id; });
  for (std::size_t i = 1; i < chords_.size(); ++i)
    if (chords_[i].id == chords_[i - 1].id)
      throw GaussError("duplicate chord id " + std::to_string(chords_[i].id));
  if (endpoints_.size() != 2 * chords_.size())
    throw GaussError("endpoint count must be twice the chord count");
  for (int pos = 0; pos < static_cast<int>(endpoints_.size()); ++pos) {
    const auto& e = endpoints_[pos];
    auto it = std::lower_bound(chords_.begin(), chords_.end(), e.chord,
                               [](const Chord& c, int id) { return c.id < id; });
    if (it == chords_.end() || it->id != e.chord)
      throw GaussError("endpoint refers to unknown chord " + std::to_string(e.chord));
    int& slot = e.role == Role::head ? it->head_pos : it->tail_pos;
    if (slot != -1)
      throw GaussError("chord " + std::to_string(e.chord) + " has two endpoints with the same role");
    slot = pos;
  }
}

GaussDiagram GaussDiagram::empty(DiagramKind kind) { return GaussDiagram(kind, {}, {}); }

bool GaussDiagram::has_chord(int id) const {
  auto it = std::lower_bound(chords_.begin(), chords_.end(), id,
                             [](const Chord& c, int v) { return c.id < v; });
  return it != chords_.end() && it->id == id;
}

const Chord& GaussDiagram::chord(int id) const {
  auto it = std::lower_bound(chords_.begin(), chords_.end(), id,
                             [](const Chord& c, int v) { return c.id < v; });
  if (it == chords_.end() || it->id != id) throw GaussError("unknown chord id " + std::to_string(id));
  return *it;
}

int GaussDiagram::partner(int pos) const {
  const auto& e = endpoints_.at(pos);
  const auto& c = chord(e.chord);
  return e.role == Role::head ? c.tail_pos : c.head_pos;
}

int GaussDiagram::next(int pos) const {
  const int len = length();
  if (pos + 1 < len) return pos + 1;
  return is_closed() && len > 0 ? 0 : -1;
}

int GaussDiagram::prev(int pos) const {
  if (pos > 0) return pos - 1;
  return is_closed() && length() > 0 ? length() - 1 : -1;
}

std::vector<std::pair<int, int>> GaussDiagram::sign_list() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(chords_.size());
  for (const auto& c : chords_) out.emplace_back(c.id, c.sign);
  return out;
}

std::uint32_t GaussDiagram::token(int pos) const {
  const auto& e = endpoints_[pos];
  return encode_token(e.role, e.chord, sign(e.chord));
}

std::strong_ordering operator<=>(const GaussDiagram& a, const GaussDiagram& b) {
  if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
  const int n = std::min(a.length(), b.length());
  for (int i = 0; i < n; ++i)
    if (auto c = a.token(i) <=> b.token(i); c != 0) return c;
  return a.length() <=> b.length();
}

GaussDiagram parse_gauss_code(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string tok;
  DiagramKind kind = DiagramKind::closed;
  bool first = true;
  std::vector<Endpoint> eps;
  std::map<int, int> signs;
  std::map<int, int> seen;
  while (in >> tok) {
    if (first && tok == "@") {
      kind = DiagramKind::based;
      first = false;
      continue;
    }
    first = false;
    if (tok.size() < 3 || (tok[0] != 'O' && tok[0] != 'U'))
      throw GaussError("bad token '" + tok + "'");
    const char s = tok.back();
    if (s != '+' && s != '-') throw GaussError("bad token '" + tok + "': missing sign");
    const std::string digits = tok.substr(1, tok.size() - 2);
    if (digits.empty() || digits.size() > 7 ||
        !std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); }))
      throw GaussError("bad token '" + tok + "': chord id");
    const int id = std::stoi(digits);
    if (id <= 0) throw GaussError("bad token '" + tok + "': chord ids start at 1");
    const int sign = s == '+' ? 1 : -1;
    if (auto [it, fresh] = signs.try_emplace(id, sign); !fresh && it->second != sign)
      throw GaussError("chord " + std::to_string(id) + " has mismatched signs");
    if (++seen[id] > 2) throw GaussError("chord " + std::to_string(id) + " appears more than twice");
    eps.push_back(Endpoint{id, tok[0] == 'O' ? Role::tail : Role::head});
  }
  for (auto [id, count] : seen)
    if (count != 2) throw GaussError("chord " + std::to_string(id) + " appears once");
  return GaussDiagram(kind, std::move(eps), {signs.begin(), signs.end()});
}

std::string to_string(const GaussDiagram& d) {
  std::string out = d.is_based() ? "@" : "";
  for (const auto& e : d.endpoints()) {
    if (!out.empty()) out += ' ';
    out += e.role == Role::tail ? 'O' : 'U';
    out += std::to_string(e.chord);
    out += d.sign(e.chord) > 0 ? '+' : '-';
  }
  return out;
}

GaussDiagram canonicalize(const GaussDiagram& d) {
  auto [tokens, r] = canonical_tokens(d);
  std::vector<Endpoint> eps;
  eps.reserve(tokens.size());
  std::vector<std::pair<int, int>> signs;
  for (auto t : tokens) {
    const Role role = (t & kRoleBit) ? Role::head : Role::tail;
    const int id = static_cast<int>((t & (kRoleBit - 1)) >> 1);
    eps.push_back(Endpoint{id, role});
    if (static_cast<int>(signs.size()) < id) signs.emplace_back(id, (t & 1u) ? -1 : 1);
  }
  return GaussDiagram(d.kind(), std::move(eps), signs);
}

std::string canonical_key(const GaussDiagram& d) {
  auto tokens = canonical_tokens(d).first;
  std::string key;
  key.reserve(1 + 3 * tokens.size());
  key.push_back(d.is_based() ? 'b' : 'c');
  for (auto t : tokens) {
    // ids stay below 2^15 in practice; three bytes per token is enough.
    const std::uint32_t packed = ((t & kRoleBit) ? 1u << 23 : 0u) | (t & ((1u << 23) - 1));
    key.push_back(static_cast<char>(packed & 0xff));
    key.push_back(static_cast<char>((packed >> 8) & 0xff));
    key.push_back(static_cast<char>((packed >> 16) & 0xff));
  }
  return key;
}

GaussDiagram subdiagram(const GaussDiagram& d, std::uint64_t mask) {
  std::vector<char> keep(static_cast<std::size_t>(d.max_chord_id()) + 1, 0);
  for (int i = 0; i < d.chord_count(); ++i)
    if (mask >> i & 1u) keep[d.chords()[i].id] = 1;
  return induced(d, [&](int id) { return keep[id] != 0; });
}

std::vector<GaussDiagram> sub_diagrams(const GaussDiagram& d, int cap) {
  if (d.chord_count() > cap)
    throw CapError("subdiagram enumeration over " + std::to_string(d.chord_count()) +
                     " chords exceeds the cap of " + std::to_string(cap));
  const std::uint64_t total = std::uint64_t{1} << d.chord_count();
  std::vector<GaussDiagram> out;
  out.reserve(total);
  for (std::uint64_t mask = 0; mask < total; ++mask) out.push_back(subdiagram(d, mask));
  return out;
}

GaussDiagram as_based(const GaussDiagram& d) {
  return GaussDiagram(DiagramKind::based, d.endpoints(), d.sign_list());
}

GaussDiagram as_closed(const GaussDiagram& d) {
  return GaussDiagram(DiagramKind::closed, d.endpoints(), d.sign_list());
}

}  // namespace vknot
