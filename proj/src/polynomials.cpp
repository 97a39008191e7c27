#include "vknot/polynomials.hpp"

#include <array>
#include <bit>
#include <map>
#include <numeric>
#include <random>

namespace vknot {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

struct Crossing {
  int sign;
  int in_p, out_p, in_q, out_q;  // arc indices around the two endpoints
};

// Basis of the 2-strand connectivity algebra: identity, transposition, cup-cap.
using Tangle = std::array<LaurentPoly, 3>;

Tangle times_p(const Tangle& x) { return {x[1], x[0], x[2]}; }
Tangle times_c(const Tangle& x) { return {LaurentPoly{}, LaurentPoly{}, x[0] + x[1] + x[2] * loop_value()}; }

LaurentPoly conway_rec(const LinkDiagram& l, const ConwayBudget& budget, std::size_t& calls,
                       std::map<std::string, LaurentPoly>& memo) {
  if (++calls > budget.max_calls) throw CapError("Conway recursion budget exceeded");
  const std::string key = l.key();
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  std::map<int, bool> seen;
  int bad = 0;
  for (const auto& circle : l.circles) {
    for (const auto& e : circle) {
      if (seen.count(e.chord)) continue;
      seen[e.chord] = true;
      if (e.role == Role::head) {
        bad = e.chord;
        break;
      }
    }
    if (bad) break;
  }
  LaurentPoly out;
  if (!bad) {
    out = l.component_count() == 1 ? LaurentPoly(1) : LaurentPoly{};
  } else {
    const LaurentPoly z = LaurentPoly::monomial(1, 1);
    const LaurentPoly changed = conway_rec(crossing_change(l, bad), budget, calls, memo);
    const LaurentPoly smoothed = conway_rec(oriented_smoothing(l, bad), budget, calls, memo);
    out = l.signs.at(bad) > 0 ? changed + z * smoothed : changed - z * smoothed;
  }
  memo.emplace(key, out);
  return out;
}

}  // namespace

int writhe(const GaussDiagram& d) {
  int w = 0;
  for (const auto& c : d.chords()) w += c.sign;
  return w;
}

LaurentPoly loop_value() { return LaurentPoly::monomial(-1, 2) + LaurentPoly::monomial(-1, -2); }

LaurentPoly kauffman_bracket(const LinkDiagram& l, int cap) {
  const int n = l.chord_count();
  if (n > cap) throw CapError("state sum over " + std::to_string(n) + " chords exceeds the cap of " + std::to_string(cap));
  int arcs = 0, free_loops = 0;
  std::map<int, std::vector<std::pair<int, int>>> ends;  // chord -> (in arc, out arc)
  for (const auto& circle : l.circles) {
    const int m = static_cast<int>(circle.size());
    if (m == 0) {
      ++free_loops;
      continue;
    }
    for (int p = 0; p < m; ++p) ends[circle[p].chord].emplace_back(arcs + (p + m - 1) % m, arcs + p);
    arcs += m;
  }
  std::vector<Crossing> xs;
  for (const auto& [id, e] : ends) xs.push_back({l.signs.at(id), e[0].first, e[0].second, e[1].first, e[1].second});

  // counts[b][loops]: states with b B-smoothings
  std::vector<std::vector<std::int64_t>> counts(n + 1, std::vector<std::int64_t>(arcs + 2, 0));
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    UnionFind uf(arcs);
    int components = arcs;
    for (int i = 0; i < n; ++i) {
      const bool b_smoothing = (mask >> i) & 1;
      const bool oriented = (xs[i].sign > 0) != b_smoothing;
      if (oriented) {
        components -= uf.unite(xs[i].in_p, xs[i].out_q);
        components -= uf.unite(xs[i].in_q, xs[i].out_p);
      } else {
        components -= uf.unite(xs[i].in_p, xs[i].in_q);
        components -= uf.unite(xs[i].out_p, xs[i].out_q);
      }
    }
    ++counts[std::popcount(mask)][components];
  }
  std::vector<LaurentPoly> d_pow{LaurentPoly(1)};
  const int max_loops = arcs + free_loops;
  for (int i = 1; i <= max_loops; ++i) d_pow.push_back(d_pow.back() * loop_value());
  LaurentPoly out;
  for (int b = 0; b <= n; ++b)
    for (int c = 0; c <= arcs; ++c)
      if (counts[b][c]) {
        const int loops = c + free_loops;
        out += LaurentPoly::monomial(counts[b][c], n - 2 * b) * d_pow[loops - 1];
      }
  return out;
}

LaurentPoly kauffman_bracket(const GaussDiagram& d, int cap) { return kauffman_bracket(to_link(d), cap); }

LaurentPoly f_polynomial(const GaussDiagram& d, int cap) {
  const int w = writhe(d);
  return LaurentPoly::monomial(w % 2 == 0 ? 1 : -1, -3 * w) * kauffman_bracket(d, cap);
}

LaurentPoly kauffman_bracket(const BraidWord& w, ClosureMode mode) {
  if (mode == ClosureMode::plain && component_count(w) != 1)
    throw BraidError("closure has " + std::to_string(component_count(w)) + " components");
  const LaurentPoly a = LaurentPoly::monomial(1, 1), a_inv = LaurentPoly::monomial(1, -1);
  Tangle x{LaurentPoly(1), LaurentPoly{}, LaurentPoly{}};
  for (BraidLetter l : w) {
    if (l == BraidLetter::virt) {
      x = times_p(x);
      continue;
    }
    const Tangle c = times_c(x);
    const LaurentPoly& smooth = l == BraidLetter::real_pos ? a : a_inv;
    const LaurentPoly& cup = l == BraidLetter::real_pos ? a_inv : a;
    for (int i = 0; i < 3; ++i) x[i] = smooth * x[i] + cup * c[i];
  }
  if (needs_return_crossing(w, mode)) x = times_p(x);
  return x[0] * loop_value() + x[1] + x[2];
}

LaurentPoly f_polynomial(const BraidWord& w, ClosureMode mode) {
  int wr = 0;
  for (BraidLetter l : w) wr += l == BraidLetter::real_pos ? 1 : l == BraidLetter::real_neg ? -1 : 0;
  return LaurentPoly::monomial(wr % 2 == 0 ? 1 : -1, -3 * wr) * kauffman_bracket(w, mode);
}

LaurentPoly family_f_polynomial(const GaussDiagram& k, int n, int l, const BlockConfig& cfg) {
  return f_polynomial(k) * f_polynomial(full_twists(commutator_braid(n, cfg), l), ClosureMode::knot);
}

DiagramSum c2_formula() {
  DiagramSum s;
  for (int s1 : {1, -1})
    for (int s2 : {1, -1}) {
      GaussDiagram d(DiagramKind::based,
                     {Endpoint{1, Role::head}, Endpoint{2, Role::tail}, Endpoint{1, Role::tail}, Endpoint{2, Role::head}},
                     {{1, s1}, {2, s2}});
      s.add(d, s1 * s2);
    }
  return s;
}

std::int64_t c2(const GaussDiagram& d) { return gauss_formula(c2_formula(), d.is_based() ? d : as_based(d)); }

LaurentPoly conway_polynomial(const GaussDiagram& d, const ConwayBudget& budget) {
  if (d.chord_count() > budget.max_chords)
    throw CapError("Conway oracle accepts at most " + std::to_string(budget.max_chords) + " chords");
  std::size_t calls = 0;
  std::map<std::string, LaurentPoly> memo;
  return conway_rec(to_link(d), budget, calls, memo);
}

template <class V>
FuzzVerdict<V> invariance_fuzz(const Functional<V>& v, const GaussDiagram& d, const FuzzOptions& opts) {
  FuzzVerdict<V> out;
  out.expected = v(d);
  std::mt19937_64 rng(opts.seed);
  EnumerateOptions eo;
  eo.max_chords = d.chord_count() + opts.extra_chords;
  for (int t = 0; t < opts.trials; ++t) {
    MoveTrace trace{d, {}};
    for (int m = 0; m < opts.moves_per_trial; ++m) {
      auto sites = enumerate_reidemeister(trace.end(), eo);
      // pick a move kind first so insertions do not swamp the rest
      std::map<MoveKind, std::vector<MoveSite>> by_kind;
      for (const auto& s : sites) by_kind[s.kind].push_back(s);
      auto it = by_kind.begin();
      std::advance(it, std::uniform_int_distribution<std::size_t>(0, by_kind.size() - 1)(rng));
      const auto& pool = it->second;
      trace.push(pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)]);
      ++out.moves;
      V now = v(trace.end());
      if (!(now == out.expected)) {
        out.pass = false;
        out.found = std::move(now);
        out.violation = std::move(trace);
        return out;
      }
    }
  }
  return out;
}

template FuzzVerdict<std::int64_t> invariance_fuzz(const Functional<std::int64_t>&, const GaussDiagram&,
                                                   const FuzzOptions&);
template FuzzVerdict<LaurentPoly> invariance_fuzz(const Functional<LaurentPoly>&, const GaussDiagram&,
                                                  const FuzzOptions&);

Functional<std::int64_t> writhe_functional() {
  return {"writhe", [](const GaussDiagram& d) { return std::int64_t{writhe(d)}; }};
}
Functional<std::int64_t> c2_functional() { return {"c2", [](const GaussDiagram& d) { return c2(d); }}; }
Functional<LaurentPoly> bracket_functional() {
  return {"bracket", [](const GaussDiagram& d) { return kauffman_bracket(d); }};
}
Functional<LaurentPoly> f_functional() {
  return {"f", [](const GaussDiagram& d) { return f_polynomial(d); }};
}

}  // namespace vknot
