#include "vknot/search.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace vknot {

namespace {

struct Node {
  GaussDiagram raw;
  std::string parent;
  MoveSite site;
};

using Tree = std::unordered_map<std::string, Node>;

std::vector<MoveSite> neighbor_sites(const GaussDiagram& d, int max_chords, bool allow_forbidden) {
  EnumerateOptions opts;
  opts.max_chords = max_chords;
  auto sites = enumerate_reidemeister(d, opts);
  if (allow_forbidden)
    for (const auto& t : forbidden_sites(d)) sites.push_back(MoveSite::forbidden(t));
  return sites;
}

std::optional<MoveSite> first_deletion(const GaussDiagram& d) {
  EnumerateOptions opts;
  opts.r1_insertions = opts.r2_insertions = false;
  for (const auto& s : enumerate_reidemeister(d, opts))
    if (s.kind == MoveKind::r1_delete || s.kind == MoveKind::r2_delete) return s;
  return std::nullopt;
}

// Appends steps so that trace.end() passes through each target in turn.
void walk_through(MoveTrace& trace, const std::vector<GaussDiagram>& targets, bool allow_forbidden) {
  for (const auto& target : targets) {
    if (canonical_key(trace.end()) == canonical_key(target)) continue;
    auto site = find_step(trace.end(), target, allow_forbidden);
    if (!site) throw MoveError("no single move reaches " + to_string(target));
    trace.push(*site);
  }
}

std::vector<GaussDiagram> chain_to_root(const Tree& tree, std::string key) {
  std::vector<GaussDiagram> out;
  while (true) {
    const Node& n = tree.at(key);
    out.push_back(n.raw);
    if (n.parent.empty()) break;
    key = n.parent;
  }
  return out;
}

// Bidirectional BFS over canonical keys. The returned trace starts at d1.
std::optional<MoveTrace> bidirectional(const GaussDiagram& d1, const GaussDiagram& d2, int max_depth,
                                       int max_chords, std::size_t max_states, bool allow_forbidden) {
  const std::string k1 = canonical_key(d1), k2 = canonical_key(d2);
  if (k1 == k2) return MoveTrace{d1, {}};
  if (max_states == 0) return std::nullopt;
  std::array<Tree, 2> trees;
  trees[0].emplace(k1, Node{d1, "", {}});
  trees[1].emplace(k2, Node{d2, "", {}});
  std::array<std::vector<std::string>, 2> frontier{std::vector<std::string>{k1}, std::vector<std::string>{k2}};
  std::array<int, 2> depth{0, 0};
  std::string meet;
  while (meet.empty() && depth[0] + depth[1] < max_depth) {
    const int side = frontier[0].size() <= frontier[1].size() ? 0 : 1;
    if (frontier[side].empty()) return std::nullopt;
    Tree& tree = trees[side];
    const Tree& other = trees[1 - side];
    std::vector<std::string> next;
    for (const auto& key : frontier[side]) {
      const GaussDiagram parent = tree.at(key).raw;
      for (const auto& site : neighbor_sites(parent, max_chords, allow_forbidden)) {
        GaussDiagram child = apply_move(parent, site);
        std::string ck = canonical_key(child);
        if (tree.count(ck)) continue;
        tree.emplace(ck, Node{std::move(child), key, site});
        if (other.count(ck)) {
          meet = ck;
          break;
        }
        next.push_back(std::move(ck));
        if (trees[0].size() + trees[1].size() > max_states) return std::nullopt;
      }
      if (!meet.empty()) break;
    }
    frontier[side] = std::move(next);
    ++depth[side];
  }
  if (meet.empty()) return std::nullopt;

  auto forward = chain_to_root(trees[0], meet);
  std::reverse(forward.begin(), forward.end());
  MoveTrace trace{d1, {}};
  walk_through(trace, forward, allow_forbidden);
  auto backward = chain_to_root(trees[1], meet);
  walk_through(trace, backward, allow_forbidden);
  return trace;
}

MoveTrace greedy_reduce(const GaussDiagram& d) {
  MoveTrace t{d, {}};
  while (auto s = first_deletion(t.end())) t.push(*s);
  return t;
}

int segment_start(const GaussDiagram& d, int p, int q) {
  if (d.next(p) == q) return p;
  if (d.next(q) == p) return q;
  throw MoveError("gadget endpoints not adjacent");
}

// Swaps the adjacent tail/head pair at (p, next(p)) with Reidemeister and
// forbidden moves only: an R2 pair g, g' supplies the third strand of an R3,
// then forbidden moves return g' next to g so the pair cancels.
bool mixed_swap(MoveTrace& trace, int p) {
  const GaussDiagram cur = trace.end();
  const int q = cur.next(p);
  const auto& eps = cur.endpoints();
  const int T = eps[p].role == Role::tail ? eps[p].chord : eps[q].chord;
  const int H = eps[p].role == Role::head ? eps[p].chord : eps[q].chord;
  const int tH = cur.chord(H).tail_pos, hT = cur.chord(T).head_pos;
  for (bool tails_after : {true, false})
    for (bool heads_after : {true, false})
      for (int gsign : {1, -1}) {
        const int gap_t = tails_after ? tH + 1 : tH;
        const int gap_h = heads_after ? hT + 1 : hT;
        const bool tails_first = gap_t != gap_h ? gap_t < gap_h : tails_after;
        const int a = cur.max_chord_id() + 1, b = a + 1;
        const int g_first_idx = tails_first ? (tails_after ? 0 : 1) : (heads_after ? 0 : 1);
        const int g = g_first_idx == 0 ? a : b;
        const int g2 = g == a ? b : a;
        const int g_second_idx = tails_first ? (heads_after ? 0 : 1) : (tails_after ? 0 : 1);
        const bool reversed = g_second_idx != (g == a ? 0 : 1);
        const int sign_a = g == a ? gsign : -gsign;
        MoveTrace t{cur, {}};
        try {
          t.push(MoveSite::r2_insert(std::min(gap_t, gap_h), std::max(gap_t, gap_h), sign_a, !tails_first, reversed));
          const GaussDiagram& d1 = t.end();
          std::array<int, 3> segs{segment_start(d1, d1.chord(H).tail_pos, d1.chord(g).tail_pos),
                                  segment_start(d1, d1.chord(T).tail_pos, d1.chord(H).head_pos),
                                  segment_start(d1, d1.chord(g).head_pos, d1.chord(T).head_pos)};
          auto key = r3_pattern(d1, segs);
          if (!key || !r3_valid(*key)) continue;
          t.push(MoveSite::r3(segs[0], segs[1], segs[2]));
          const GaussDiagram d2 = t.end();
          const int of = segment_start(d2, d2.chord(H).tail_pos, d2.chord(g2).tail_pos);
          t.push(MoveSite::forbidden(Triangle{of, Role::tail, triangle_sign(d2, of)}));
          const GaussDiagram d3 = t.end();
          const int lf = segment_start(d3, d3.chord(T).head_pos, d3.chord(g2).head_pos);
          t.push(MoveSite::forbidden(Triangle{lf, Role::head, triangle_sign(d3, lf)}));
          t.push(MoveSite::r2_delete(g, g2));
        } catch (const MoveError&) {
          continue;
        }
        trace.steps.insert(trace.steps.end(), t.steps.begin(), t.steps.end());
        return true;
      }
  return false;
}

std::optional<MoveTrace> greedy_unknot(const GaussDiagram& d) {
  MoveTrace t{d, {}};
  while (!t.end().empty()) {
    if (auto s = first_deletion(t.end())) {
      t.push(*s);
      continue;
    }
    const GaussDiagram& cur = t.end();
    const int len = cur.length();
    int best = -1, best_dist = len + 1;
    Role walker = Role::tail;
    for (const auto& c : cur.chords()) {
      for (Role r : {Role::tail, Role::head}) {
        const int from = r == Role::tail ? c.tail_pos : c.head_pos;
        const int to = r == Role::tail ? c.head_pos : c.tail_pos;
        int dist = to - from;
        if (cur.is_closed()) dist = (dist + len) % len;
        if (dist <= 0) continue;
        if (dist < best_dist) {
          best_dist = dist;
          best = c.id;
          walker = r;
        }
      }
    }
    while (true) {
      const GaussDiagram& now = t.end();
      const auto& c = now.chord(best);
      const int p = walker == Role::tail ? c.tail_pos : c.head_pos;
      const int q = now.next(p);
      if (now.endpoints()[q].chord == best) {
        t.push(MoveSite::r1_delete(best));
        break;
      }
      if (now.endpoints()[q].role == walker) {
        t.push(MoveSite::forbidden(Triangle{p, walker, triangle_sign(now, p)}));
      } else if (!mixed_swap(t, p)) {
        return std::nullopt;
      }
    }
  }
  return t;
}

int default_max_chords(const SearchBudget& b, const GaussDiagram& d1, const GaussDiagram& d2) {
  return b.max_chords >= 0 ? b.max_chords : std::max(d1.chord_count(), d2.chord_count()) + 2;
}

}  // namespace

bool replays(const MoveTrace& trace) {
  GaussDiagram cur = trace.start;
  for (const auto& step : trace.steps) {
    try {
      cur = apply_move(cur, step.site);
    } catch (const std::invalid_argument&) {
      return false;
    }
    if (!(cur == step.result)) return false;
  }
  return true;
}

std::string format_trace(const MoveTrace& trace) {
  std::string out = "start " + to_string(trace.start) + "\n";
  for (const auto& s : trace.steps) out += format_site(s.site) + " -> " + to_string(s.result) + "\n";
  return out;
}

MoveTrace parse_trace(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<MoveTrace> trace;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos || line[0] == '#') continue;
    if (!trace) {
      if (line.rfind("start", 0) != 0) throw MoveError("trace must begin with a 'start' line");
      trace = MoveTrace{parse_gauss_code(line.substr(5)), {}};
      continue;
    }
    const auto arrow = line.find("->");
    if (arrow == std::string::npos) throw MoveError("trace line without '->': " + line);
    trace->steps.push_back({parse_site(line.substr(0, arrow)), parse_gauss_code(line.substr(arrow + 2))});
  }
  if (!trace) throw MoveError("empty trace");
  return *trace;
}

std::optional<MoveSite> find_step(const GaussDiagram& from, const GaussDiagram& target, bool allow_forbidden) {
  const std::string key = canonical_key(target);
  const int delta = target.chord_count() - from.chord_count();
  EnumerateOptions opts;
  opts.r1_insertions = delta == 1;
  opts.r2_insertions = delta == 2;
  std::vector<MoveSite> sites = enumerate_reidemeister(from, opts);
  if (allow_forbidden && delta == 0)
    for (const auto& t : forbidden_sites(from)) sites.push_back(MoveSite::forbidden(t));
  for (const auto& s : sites)
    if (canonical_key(apply_move(from, s)) == key) return s;
  return std::nullopt;
}

MoveTrace reverse_trace(const MoveTrace& trace) {
  std::vector<GaussDiagram> targets;
  for (std::size_t i = trace.steps.size(); i-- > 0;) {
    if (trace.steps[i].site.kind == MoveKind::virtualize) throw MoveError("virtualization has no inverse move");
    targets.push_back(i == 0 ? trace.start : trace.steps[i - 1].result);
  }
  MoveTrace out{trace.end(), {}};
  walk_through(out, targets, true);
  return out;
}

std::optional<MoveTrace> equivalent_search(const GaussDiagram& d1, const GaussDiagram& d2, const SearchBudget& budget) {
  if (d1.kind() != d2.kind() || budget.max_states == 0) return std::nullopt;
  if (canonical_key(d1) == canonical_key(d2)) return MoveTrace{d1, {}};
  const int max_chords = default_max_chords(budget, d1, d2);
  if (budget.max_depth <= 0) return std::nullopt;
  const std::string k2 = canonical_key(d2);
  for (const auto& s : neighbor_sites(d1, max_chords, false))
    if (canonical_key(apply_move(d1, s)) == k2) {
      MoveTrace t{d1, {}};
      t.push(s);
      return t;
    }

  MoveTrace down1 = greedy_reduce(d1);
  MoveTrace down2 = greedy_reduce(d2);
  auto middle = bidirectional(down1.end(), down2.end(), budget.max_depth, max_chords, budget.max_states, false);
  if (!middle) return std::nullopt;
  MoveTrace out = down1;
  out.steps.insert(out.steps.end(), middle->steps.begin(), middle->steps.end());
  std::vector<GaussDiagram> back;
  for (std::size_t i = down2.steps.size(); i-- > 0;) back.push_back(i == 0 ? down2.start : down2.steps[i - 1].result);
  walk_through(out, back, false);
  return out;
}

std::optional<MoveTrace> unknot_by_forbidden(const GaussDiagram& d, const SearchBudget& budget) {
  if (auto t = greedy_unknot(d)) return t;
  const GaussDiagram goal = GaussDiagram::empty(d.kind());
  return bidirectional(d, goal, budget.max_depth, default_max_chords(budget, d, goal), budget.max_states, true);
}

}  // namespace vknot
