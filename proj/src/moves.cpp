#include "vknot/moves.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace vknot {

namespace {

constexpr std::array<unsigned char, 64> kR3Table = {
#include "r3_table.inc"
};

std::vector<int> gaps(const GaussDiagram& d) {
  std::vector<int> out;
  const int len = d.length();
  const int last = d.is_based() ? len : std::max(len - 1, 0);
  for (int g = 0; g <= last; ++g) out.push_back(g);
  return out;
}

void check_gap(const GaussDiagram& d, int gap) {
  if (gap < 0 || gap > d.length()) throw MoveError("gap " + std::to_string(gap) + " out of range");
}

GaussDiagram without_chord(const GaussDiagram& d, int id) {
  return induced(d, [id](int c) { return c != id; });
}

GaussDiagram with_endpoints(const GaussDiagram& d, std::vector<Endpoint> eps,
                            std::vector<std::pair<int, int>> signs) {
  return GaussDiagram(d.kind(), std::move(eps), signs);
}

GaussDiagram swapped(const GaussDiagram& d, std::initializer_list<std::pair<int, int>> swaps) {
  auto eps = d.endpoints();
  for (auto [p, q] : swaps) std::swap(eps[p], eps[q]);
  return with_endpoints(d, std::move(eps), d.sign_list());
}

bool chords_valid_r2(const GaussDiagram& d, int a, int b) {
  if (a == b || !d.has_chord(a) || !d.has_chord(b)) return false;
  const auto& ca = d.chord(a);
  const auto& cb = d.chord(b);
  return ca.sign == -cb.sign && d.adjacent(ca.tail_pos, cb.tail_pos) && d.adjacent(ca.head_pos, cb.head_pos);
}

// All ways to split `positions` into three adjacent pairs of distinct chords.
void r3_matchings(const GaussDiagram& d, std::vector<int>& remaining, std::vector<int>& starts,
                  std::set<std::array<int, 3>>& out) {
  if (remaining.empty()) {
    std::array<int, 3> s{starts[0], starts[1], starts[2]};
    std::sort(s.begin(), s.end());
    out.insert(s);
    return;
  }
  const int p = remaining.front();
  for (int q : {d.next(p), d.prev(p)}) {
    if (q < 0 || q == p) continue;
    auto it = std::find(remaining.begin(), remaining.end(), q);
    if (it == remaining.end()) continue;
    if (d.endpoints()[p].chord == d.endpoints()[q].chord) continue;
    std::vector<int> rest;
    for (int r : remaining)
      if (r != p && r != q) rest.push_back(r);
    starts.push_back(q == d.next(p) ? p : q);
    r3_matchings(d, rest, starts, out);
    starts.pop_back();
  }
}

std::string sign_char(int s) { return s > 0 ? "+" : "-"; }

}  // namespace

std::string_view to_string(MoveKind k) {
  switch (k) {
    case MoveKind::r1_insert: return "R1_insert";
    case MoveKind::r1_delete: return "R1_delete";
    case MoveKind::r2_insert: return "R2_insert";
    case MoveKind::r2_delete: return "R2_delete";
    case MoveKind::r3: return "R3";
    case MoveKind::virtualize: return "VIRTUALIZE";
    case MoveKind::forbidden_of: return "FORBIDDEN_OF";
    case MoveKind::forbidden_lf: return "FORBIDDEN_LF";
  }
  return "?";
}

MoveSite MoveSite::r1_delete(int chord) {
  MoveSite s;
  s.kind = MoveKind::r1_delete;
  s.chords[0] = chord;
  return s;
}

MoveSite MoveSite::r1_insert(int gap, int sign, bool head_first) {
  MoveSite s;
  s.kind = MoveKind::r1_insert;
  s.pos[0] = gap;
  s.sign = sign;
  s.variant = head_first ? 1 : 0;
  return s;
}

MoveSite MoveSite::r2_delete(int a, int b) {
  MoveSite s;
  s.kind = MoveKind::r2_delete;
  s.chords = {std::min(a, b), std::max(a, b)};
  return s;
}

MoveSite MoveSite::r2_insert(int gap1, int gap2, int sign, bool first_heads, bool reversed) {
  MoveSite s;
  s.kind = MoveKind::r2_insert;
  s.pos[0] = gap1;
  s.pos[1] = gap2;
  s.sign = sign;
  s.variant = (first_heads ? 1 : 0) | (reversed ? 2 : 0);
  return s;
}

MoveSite MoveSite::r3(int s1, int s2, int s3) {
  MoveSite s;
  s.kind = MoveKind::r3;
  s.pos = {s1, s2, s3};
  std::sort(s.pos.begin(), s.pos.end());
  return s;
}

MoveSite MoveSite::virtualize(int chord) {
  MoveSite s;
  s.kind = MoveKind::virtualize;
  s.chords[0] = chord;
  return s;
}

MoveSite MoveSite::forbidden(const Triangle& t) {
  MoveSite s;
  s.kind = t.kind();
  s.pos[0] = t.position;
  s.sign = t.sign;
  return s;
}

std::string format_site(const MoveSite& s) {
  std::ostringstream out;
  out << to_string(s.kind);
  switch (s.kind) {
    case MoveKind::r1_delete:
    case MoveKind::virtualize: out << " chord=" << s.chords[0]; break;
    case MoveKind::r2_delete: out << " chords=" << s.chords[0] << ',' << s.chords[1]; break;
    case MoveKind::r1_insert:
      out << " gap=" << s.pos[0] << " sign=" << sign_char(s.sign) << " order=" << (s.variant & 1 ? "UO" : "OU");
      break;
    case MoveKind::r2_insert:
      out << " gaps=" << s.pos[0] << ',' << s.pos[1] << " sign=" << sign_char(s.sign)
          << " first=" << (s.variant & 1 ? "heads" : "tails") << " order=" << (s.variant & 2 ? "reversed" : "same");
      break;
    case MoveKind::r3: out << " segments=" << s.pos[0] << ',' << s.pos[1] << ',' << s.pos[2]; break;
    case MoveKind::forbidden_of:
    case MoveKind::forbidden_lf: out << " pos=" << s.pos[0] << " sign=" << sign_char(s.sign); break;
  }
  return out.str();
}

MoveSite parse_site(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string kind_name;
  if (!(in >> kind_name)) throw MoveError("empty move");
  static const std::map<std::string, MoveKind, std::less<>> kinds = {
      {"R1_insert", MoveKind::r1_insert},   {"R1_delete", MoveKind::r1_delete},
      {"R2_insert", MoveKind::r2_insert},   {"R2_delete", MoveKind::r2_delete},
      {"R3", MoveKind::r3},                 {"VIRTUALIZE", MoveKind::virtualize},
      {"FORBIDDEN_OF", MoveKind::forbidden_of}, {"FORBIDDEN_LF", MoveKind::forbidden_lf}};
  auto kit = kinds.find(kind_name);
  if (kit == kinds.end()) throw MoveError("unknown move kind '" + kind_name + "'");
  std::map<std::string, std::string> kv;
  std::string field;
  while (in >> field) {
    auto eq = field.find('=');
    if (eq == std::string::npos) throw MoveError("bad move field '" + field + "'");
    kv[field.substr(0, eq)] = field.substr(eq + 1);
  }
  auto get = [&](const char* key) -> const std::string& {
    auto it = kv.find(key);
    if (it == kv.end()) throw MoveError(std::string("move is missing '") + key + "'");
    return it->second;
  };
  auto ints = [&](const char* key) {
    std::vector<int> v;
    std::istringstream list(get(key));
    std::string item;
    while (std::getline(list, item, ',')) v.push_back(std::stoi(item));
    return v;
  };
  auto sign = [&]() {
    const auto& s = get("sign");
    if (s != "+" && s != "-") throw MoveError("bad sign '" + s + "'");
    return s == "+" ? 1 : -1;
  };
  try {
    switch (kit->second) {
      case MoveKind::r1_delete: return MoveSite::r1_delete(ints("chord").at(0));
      case MoveKind::virtualize: return MoveSite::virtualize(ints("chord").at(0));
      case MoveKind::r2_delete: {
        auto c = ints("chords");
        return MoveSite::r2_delete(c.at(0), c.at(1));
      }
      case MoveKind::r1_insert: return MoveSite::r1_insert(ints("gap").at(0), sign(), get("order") == "UO");
      case MoveKind::r2_insert: {
        auto g = ints("gaps");
        return MoveSite::r2_insert(g.at(0), g.at(1), sign(), get("first") == "heads", get("order") == "reversed");
      }
      case MoveKind::r3: {
        auto s = ints("segments");
        return MoveSite::r3(s.at(0), s.at(1), s.at(2));
      }
      case MoveKind::forbidden_of:
      case MoveKind::forbidden_lf: {
        Triangle t{ints("pos").at(0), kit->second == MoveKind::forbidden_of ? Role::tail : Role::head, sign()};
        return MoveSite::forbidden(t);
      }
    }
  } catch (const std::out_of_range&) {
    throw MoveError("move '" + std::string(text) + "' has too few parameters");
  } catch (const std::invalid_argument& e) {
    if (dynamic_cast<const MoveError*>(&e)) throw;
    throw MoveError("move '" + std::string(text) + "' has a malformed number");
  }
  throw MoveError("unreachable");
}

bool r3_valid(int key) { return key >= 0 && key < 64 && kR3Table[key] != 0; }

std::optional<int> r3_pattern(const GaussDiagram& d, const std::array<int, 3>& starts) {
  struct Segment {
    int first, second;
  };
  std::array<Segment, 3> seg{};
  std::set<int> used;
  for (int i = 0; i < 3; ++i) {
    const int p = starts[i];
    if (p < 0 || p >= d.length()) return std::nullopt;
    const int q = d.next(p);
    if (q < 0) return std::nullopt;
    seg[i] = {p, q};
    used.insert(p);
    used.insert(q);
  }
  if (used.size() != 6) return std::nullopt;
  const auto& eps = d.endpoints();
  auto chord_of = [&](int pos) { return eps[pos].chord; };
  int top = -1, bottom = -1, middle = -1;
  for (int i = 0; i < 3; ++i) {
    const Role r1 = eps[seg[i].first].role, r2 = eps[seg[i].second].role;
    if (chord_of(seg[i].first) == chord_of(seg[i].second)) return std::nullopt;
    if (r1 == Role::tail && r2 == Role::tail) {
      if (top >= 0) return std::nullopt;
      top = i;
    } else if (r1 == Role::head && r2 == Role::head) {
      if (bottom >= 0) return std::nullopt;
      bottom = i;
    } else {
      if (middle >= 0) return std::nullopt;
      middle = i;
    }
  }
  if (top < 0 || bottom < 0 || middle < 0) return std::nullopt;
  const Segment t = seg[top], m = seg[middle], b = seg[bottom];
  const int m_head_pos = eps[m.first].role == Role::head ? m.first : m.second;
  const int m_tail_pos = eps[m.first].role == Role::head ? m.second : m.first;
  const int tm = chord_of(m_head_pos);
  const int mb = chord_of(m_tail_pos);
  // top holds the tails of tm and tb; bottom the heads of tb and mb
  int tb = 0;
  if (chord_of(t.first) == tm) tb = chord_of(t.second);
  else if (chord_of(t.second) == tm) tb = chord_of(t.first);
  else return std::nullopt;
  if (tb == mb) return std::nullopt;
  const bool bottom_ok = (chord_of(b.first) == tb && chord_of(b.second) == mb) ||
                         (chord_of(b.first) == mb && chord_of(b.second) == tb);
  if (!bottom_ok) return std::nullopt;
  int key = 0;
  if (chord_of(t.first) == tm) key |= 1;
  if (eps[m.first].role == Role::head) key |= 2;
  if (chord_of(b.first) == tb) key |= 4;
  if (d.sign(tm) > 0) key |= 8;
  if (d.sign(tb) > 0) key |= 16;
  if (d.sign(mb) > 0) key |= 32;
  return key;
}

std::vector<MoveSite> enumerate_reidemeister(const GaussDiagram& d, const EnumerateOptions& opts) {
  std::vector<MoveSite> out;
  const auto& chords = d.chords();
  for (const auto& c : chords)
    if (d.adjacent(c.head_pos, c.tail_pos)) out.push_back(MoveSite::r1_delete(c.id));
  for (std::size_t i = 0; i < chords.size(); ++i)
    for (std::size_t j = i + 1; j < chords.size(); ++j)
      if (chords_valid_r2(d, chords[i].id, chords[j].id))
        out.push_back(MoveSite::r2_delete(chords[i].id, chords[j].id));

  std::set<std::array<int, 3>> r3_sites;
  for (std::size_t i = 0; i < chords.size(); ++i)
    for (std::size_t j = i + 1; j < chords.size(); ++j)
      for (std::size_t k = j + 1; k < chords.size(); ++k) {
        std::vector<int> positions;
        for (const Chord* c : {&chords[i], &chords[j], &chords[k]}) {
          positions.push_back(c->head_pos);
          positions.push_back(c->tail_pos);
        }
        std::sort(positions.begin(), positions.end());
        std::set<std::array<int, 3>> matchings;
        std::vector<int> starts;
        r3_matchings(d, positions, starts, matchings);
        for (const auto& m : matchings) {
          auto key = r3_pattern(d, m);
          if (key && r3_valid(*key)) r3_sites.insert(m);
        }
      }
  for (const auto& s : r3_sites) out.push_back(MoveSite::r3(s[0], s[1], s[2]));

  const int n = d.chord_count();
  const auto gs = gaps(d);
  if (opts.r1_insertions && (opts.max_chords < 0 || n + 1 <= opts.max_chords))
    for (int g : gs)
      for (int sign : {1, -1})
        for (bool head_first : {false, true}) out.push_back(MoveSite::r1_insert(g, sign, head_first));
  if (opts.r2_insertions && (opts.max_chords < 0 || n + 2 <= opts.max_chords))
    for (std::size_t i = 0; i < gs.size(); ++i)
      for (std::size_t j = i; j < gs.size(); ++j)
        for (int sign : {1, -1})
          for (bool first_heads : {false, true})
            for (bool reversed : {false, true})
              out.push_back(MoveSite::r2_insert(gs[i], gs[j], sign, first_heads, reversed));
  return out;
}

GaussDiagram virtualize(const GaussDiagram& d, int chord_id) {
  if (!d.has_chord(chord_id)) throw MoveError("cannot virtualize unknown chord " + std::to_string(chord_id));
  return without_chord(d, chord_id);
}

int triangle_sign(const GaussDiagram& d, int position) {
  const int q = d.next(position);
  if (q < 0) throw MoveError("triangle position at the end of a based diagram");
  return d.partner(position) < d.partner(q) ? 1 : -1;
}

std::vector<Triangle> forbidden_sites(const GaussDiagram& d) {
  std::vector<Triangle> out;
  const auto& eps = d.endpoints();
  for (int p = 0; p < d.length(); ++p) {
    const int q = d.next(p);
    if (q < 0 || q == p) continue;
    if (eps[p].role != eps[q].role || eps[p].chord == eps[q].chord) continue;
    out.push_back(Triangle{p, eps[p].role, triangle_sign(d, p)});
  }
  return out;
}

GaussDiagram apply_forbidden(const GaussDiagram& d, const Triangle& t) {
  const int p = t.position;
  if (p < 0 || p >= d.length()) throw MoveError("stale forbidden site: position out of range");
  const int q = d.next(p);
  if (q < 0) throw MoveError("stale forbidden site: crosses the base point");
  const auto& eps = d.endpoints();
  if (eps[p].role != t.role || eps[q].role != t.role || eps[p].chord == eps[q].chord)
    throw MoveError("stale forbidden site at position " + std::to_string(p));
  return swapped(d, {{p, q}});
}

bool disjoint(const GaussDiagram& d, const Triangle& a, const Triangle& b) {
  const int a2 = d.next(a.position), b2 = d.next(b.position);
  return a.position != b.position && a.position != b2 && a2 != b.position && a2 != b2;
}

GaussDiagram apply_move(const GaussDiagram& d, const MoveSite& s) {
  switch (s.kind) {
    case MoveKind::virtualize: return virtualize(d, s.chords[0]);
    case MoveKind::forbidden_of:
    case MoveKind::forbidden_lf:
      return apply_forbidden(d, Triangle{s.pos[0], s.kind == MoveKind::forbidden_of ? Role::tail : Role::head, s.sign});
    case MoveKind::r1_delete: {
      const int id = s.chords[0];
      if (!d.has_chord(id)) throw MoveError("stale R1 site: no chord " + std::to_string(id));
      const auto& c = d.chord(id);
      if (!d.adjacent(c.head_pos, c.tail_pos))
        throw MoveError("stale R1 site: chord " + std::to_string(id) + " endpoints not adjacent");
      return without_chord(d, id);
    }
    case MoveKind::r2_delete: {
      if (!chords_valid_r2(d, s.chords[0], s.chords[1])) throw MoveError("stale R2 site");
      const int a = s.chords[0], b = s.chords[1];
      return induced(d, [a, b](int c) { return c != a && c != b; });
    }
    case MoveKind::r1_insert: {
      check_gap(d, s.pos[0]);
      if (s.sign != 1 && s.sign != -1) throw MoveError("bad R1 sign");
      const int id = d.max_chord_id() + 1;
      auto eps = d.endpoints();
      const Role first = s.variant & 1 ? Role::head : Role::tail;
      eps.insert(eps.begin() + s.pos[0], {Endpoint{id, first}, Endpoint{id, opposite(first)}});
      auto signs = d.sign_list();
      signs.emplace_back(id, s.sign);
      return with_endpoints(d, std::move(eps), std::move(signs));
    }
    case MoveKind::r2_insert: {
      const int g1 = s.pos[0], g2 = s.pos[1];
      check_gap(d, g1);
      check_gap(d, g2);
      if (g1 > g2) throw MoveError("R2 insertion gaps must be ordered");
      if (s.sign != 1 && s.sign != -1) throw MoveError("bad R2 sign");
      const int a = d.max_chord_id() + 1, b = a + 1;
      const Role r1 = s.variant & 1 ? Role::head : Role::tail;
      const std::array<Endpoint, 2> first{Endpoint{a, r1}, Endpoint{b, r1}};
      std::array<Endpoint, 2> second{Endpoint{a, opposite(r1)}, Endpoint{b, opposite(r1)}};
      if (s.variant & 2) std::swap(second[0], second[1]);
      std::vector<Endpoint> eps;
      eps.reserve(d.endpoints().size() + 4);
      for (int i = 0; i <= d.length(); ++i) {
        if (i == g1) eps.insert(eps.end(), first.begin(), first.end());
        if (i == g2) eps.insert(eps.end(), second.begin(), second.end());
        if (i < d.length()) eps.push_back(d.endpoints()[i]);
      }
      auto signs = d.sign_list();
      signs.emplace_back(a, s.sign);
      signs.emplace_back(b, -s.sign);
      return with_endpoints(d, std::move(eps), std::move(signs));
    }
    case MoveKind::r3: {
      auto key = r3_pattern(d, s.pos);
      if (!key || !r3_valid(*key)) throw MoveError("stale R3 site");
      return swapped(d, {{s.pos[0], d.next(s.pos[0])}, {s.pos[1], d.next(s.pos[1])}, {s.pos[2], d.next(s.pos[2])}});
    }
  }
  throw MoveError("unknown move kind");
}

}  // namespace vknot
