#include "vknot/braid.hpp"

#include <utility>

namespace vknot {

namespace {

using L = BraidLetter;

struct Traced {
  std::vector<Endpoint> endpoints;
  std::vector<std::pair<int, int>> signs;
};

// Walks the closure upward from the bottom of `start_pos`, strand positions
// 0 and 1. In s the strand at 0 passes over; in S the strand at 1 does.
Traced trace_closure(const BraidWord& w, bool return_crossing, int start_pos) {
  Traced out;
  std::vector<int> chord_of(w.size(), 0);
  int next_id = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] != L::virt) {
      chord_of[i] = ++next_id;
      out.signs.emplace_back(next_id, w[i] == L::real_pos ? 1 : -1);
    }
  int pos = start_pos;
  do {
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i] != L::virt) {
        const int over_pos = w[i] == L::real_pos ? 0 : 1;
        out.endpoints.push_back(Endpoint{chord_of[i], pos == over_pos ? Role::tail : Role::head});
      }
      pos = 1 - pos;
    }
    if (return_crossing) pos = 1 - pos;
  } while (pos != start_pos);
  return out;
}

}  // namespace

BraidWord parse_braid(std::string_view text) {
  BraidWord w;
  for (char c : text) {
    switch (c) {
      case 's': w.push_back(L::real_pos); break;
      case 'S': w.push_back(L::real_neg); break;
      case 'v': w.push_back(L::virt); break;
      case ' ': break;
      default: throw BraidError(std::string("bad braid letter '") + c + "'");
    }
  }
  return w;
}

std::string to_string(const BraidWord& w) {
  std::string out;
  for (L l : w) out += l == L::real_pos ? 's' : l == L::real_neg ? 'S' : 'v';
  return out;
}

BraidLetter inverse(BraidLetter l) {
  if (l == L::real_pos) return L::real_neg;
  if (l == L::real_neg) return L::real_pos;
  return L::virt;
}

BraidWord inverse(const BraidWord& w) {
  BraidWord out(w.rbegin(), w.rend());
  for (auto& l : out) l = inverse(l);
  return out;
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
  BraidWord out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

BraidWord free_reduce(const BraidWord& w) {
  BraidWord out;
  for (L l : w) {
    if (!out.empty() && out.back() == inverse(l)) out.pop_back();
    else out.push_back(l);
  }
  return out;
}

int real_letter_count(const BraidWord& w) {
  int n = 0;
  for (L l : w) n += l != L::virt;
  return n;
}

BraidWord block(BlockName name, const BlockConfig& cfg) {
  switch (name) {
    case BlockName::A: return cfg.a;
    case BlockName::Ainv: return inverse(cfg.a);
    case BlockName::B: return cfg.b;
    case BlockName::Binv: return inverse(cfg.b);
  }
  return {};
}

std::vector<int> commutator_levels(int k, const BlockConfig& cfg, std::size_t cap) {
  if (k < 1) throw BraidError("commutator index must be positive");
  // level values are filled in relative to the innermost copy, then flipped
  std::vector<int> depth(cfg.a.size(), 1);
  std::size_t len = cfg.a.size();
  for (int j = 2; j <= k; ++j) {
    const std::size_t x_len = (j % 4 == 2 || j % 4 == 3) ? cfg.b.size() : cfg.a.size();
    len = 2 * len + 2 * x_len;
    if (len > cap) throw CapError("b(" + std::to_string(k) + ") exceeds the braid length cap");
    std::vector<int> next;
    next.insert(next.end(), x_len, j);
    next.insert(next.end(), depth.begin(), depth.end());
    next.insert(next.end(), x_len, j);
    next.insert(next.end(), depth.rbegin(), depth.rend());
    depth = std::move(next);
  }
  for (auto& d : depth) d = k - d + 1;
  return depth;
}

BraidWord commutator_braid(int k, const BlockConfig& cfg, std::size_t cap) {
  if (k < 1) throw BraidError("commutator index must be positive");
  BraidWord w = cfg.a;
  for (int j = 2; j <= k; ++j) {
    const BraidWord& x = (j % 4 == 2 || j % 4 == 3) ? cfg.b : cfg.a;
    if (2 * w.size() + 2 * x.size() > cap)
      throw CapError("b(" + std::to_string(k) + ") exceeds the braid length cap");
    w = concat(concat(x, w), concat(inverse(x), inverse(w)));
  }
  if (w.size() > cap) throw CapError("b(" + std::to_string(k) + ") exceeds the braid length cap");
  return w;
}

BraidWord full_twists(const BraidWord& w, int l) {
  if (l < 0) throw BraidError("twist count must be nonnegative");
  BraidWord out = w;
  for (int i = 0; i < l; ++i) out.insert(out.end(), {L::real_pos, L::real_pos});
  return out;
}

int component_count(const BraidWord& w) { return w.size() % 2 == 1 ? 1 : 2; }

bool needs_return_crossing(const BraidWord& w, ClosureMode mode) {
  return mode == ClosureMode::knot && component_count(w) == 2;
}

GaussDiagram braid_closure(const BraidWord& w, ClosureMode mode) {
  if (mode == ClosureMode::plain && component_count(w) != 1)
    throw BraidError("closure has " + std::to_string(component_count(w)) + " components");
  auto t = trace_closure(w, needs_return_crossing(w, mode), 0);
  return GaussDiagram(DiagramKind::closed, std::move(t.endpoints), t.signs);
}

GaussDiagram cut_open(const BraidWord& w, ClosureMode mode) {
  if (mode == ClosureMode::plain && component_count(w) != 1)
    throw BraidError("closure has " + std::to_string(component_count(w)) + " components");
  const bool ret = needs_return_crossing(w, mode);
  // strand 1's return arc leaves the top of position 0
  auto t = trace_closure(w, ret, ret ? 1 : 0);
  return GaussDiagram(DiagramKind::based, std::move(t.endpoints), t.signs);
}

GaussDiagram connected_sum(const GaussDiagram& d1, const GaussDiagram& d2) {
  if (!d1.is_based() || !d2.is_based()) throw GaussError("connected sum needs long diagrams");
  const int shift = d1.max_chord_id();
  auto eps = d1.endpoints();
  auto signs = d1.sign_list();
  for (auto e : d2.endpoints()) eps.push_back(Endpoint{e.chord + shift, e.role});
  for (auto [id, s] : d2.sign_list()) signs.emplace_back(id + shift, s);
  return GaussDiagram(DiagramKind::based, std::move(eps), signs);
}

GaussDiagram family_member(const GaussDiagram& k, int n, int l, const BlockConfig& cfg) {
  return connected_sum(k, cut_open(full_twists(commutator_braid(n, cfg), l), ClosureMode::knot));
}

}  // namespace vknot
