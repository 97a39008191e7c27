#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "vknot/random.hpp"
#include "vknot/search.hpp"

using namespace vknot;

namespace {

const GaussDiagram kTrefoil = parse_gauss_code("O1+ U2+ O3+ U1+ O2+ U3+");
const GaussDiagram kVirtualTrefoil = parse_gauss_code("O1+ U2+ U1+ O2+");
const GaussDiagram kLongVirtualTrefoil = parse_gauss_code("@ O1+ O2+ U1+ U2+");

// Independent replay check: every step is a legal move and ends where it says.
bool trace_ok(const MoveTrace& t, bool allow_forbidden) {
  GaussDiagram cur = t.start;
  for (const auto& s : t.steps) {
    if (!allow_forbidden && !s.site.is_reidemeister()) return false;
    cur = apply_move(cur, s.site);
    if (!(cur == s.result)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("one-step equivalences") {
  const auto kink = parse_gauss_code("@ O1+ U1+");
  const auto empty = GaussDiagram::empty(DiagramKind::based);
  const auto t = equivalent_search(kink, empty);
  REQUIRE(t);
  CHECK(t->size() == 1);
  CHECK(t->end().empty());
  CHECK(trace_ok(*t, false));

  const auto back = equivalent_search(empty, kink);
  REQUIRE(back);
  CHECK(back->size() == 1);
  CHECK(oracle::same_diagram(back->end(), kink));
}

TEST_CASE("equal diagrams need no moves") {
  const auto t = equivalent_search(kTrefoil, parse_gauss_code("O2+ U3+ O1+ U2+ O3+ U1+"));
  REQUIRE(t);
  CHECK(t->size() == 0);
}

TEST_CASE("kinds never match") {
  CHECK_FALSE(equivalent_search(GaussDiagram::empty(DiagramKind::based), GaussDiagram::empty(DiagramKind::closed)));
}

TEST_CASE("empty state budget finds nothing") {
  SearchBudget b;
  b.max_states = 0;
  CHECK_FALSE(equivalent_search(kVirtualTrefoil, kVirtualTrefoil, b));
}

TEST_CASE("virtual trefoil is not reachable from the unknot by Reidemeister moves") {
  SearchBudget b;
  b.max_depth = 6;
  CHECK_FALSE(equivalent_search(kVirtualTrefoil, GaussDiagram::empty(DiagramKind::closed), b));
  CHECK_FALSE(equivalent_search(kLongVirtualTrefoil, GaussDiagram::empty(DiagramKind::based), b));
}

TEST_CASE("scrambled diagrams are found again") {
  Rng rng(21);
  for (int i = 0; i < 30; ++i) {
    const auto d = random_diagram(rng, 1, 4, i % 2 ? DiagramKind::based : DiagramKind::closed);
    MoveTrace scramble{d, {}};
    for (int k = 0; k < 3; ++k) {
      const auto sites = enumerate_reidemeister(scramble.end(), {true, true, d.chord_count() + 2});
      scramble.push(sites[rng() % sites.size()]);
    }
    const auto found = equivalent_search(d, scramble.end(), {6, -1, 200000});
    REQUIRE(found);
    CHECK(trace_ok(*found, false));
    CHECK(canonical_key(found->end()) == canonical_key(scramble.end()));
    CHECK(found->start == d);
  }
}

TEST_CASE("reverse traces") {
  Rng rng(22);
  for (int i = 0; i < 30; ++i) {
    const auto d = random_diagram(rng, 0, 4, DiagramKind::based);
    MoveTrace t{d, {}};
    for (int k = 0; k < 4; ++k) {
      const auto sites = enumerate_reidemeister(t.end());
      t.push(sites[rng() % sites.size()]);
    }
    const auto r = reverse_trace(t);
    CHECK(r.size() == t.size());
    CHECK(trace_ok(r, false));
    CHECK(canonical_key(r.start) == canonical_key(t.end()));
    CHECK(canonical_key(r.end()) == canonical_key(t.start));
  }
  MoveTrace v{kTrefoil, {}};
  v.push(MoveSite::virtualize(1));
  CHECK_THROWS_AS(reverse_trace(v), MoveError);
}

TEST_CASE("trace text round trip and tamper detection") {
  MoveTrace t{parse_gauss_code("@ O1+ U1+"), {}};
  t.push(MoveSite::r1_insert(2, -1, false));
  t.push(MoveSite::r2_insert(0, 4, 1, true, false));
  t.push(MoveSite::r1_delete(1));
  CHECK(replays(t));
  const auto text = format_trace(t);
  CHECK(text.rfind("start @ O1+ U1+\n", 0) == 0);
  const auto back = parse_trace(text);
  CHECK(format_trace(back) == text);
  CHECK(replays(back));

  auto bad = t;
  bad.steps[1].result = parse_gauss_code("@ O1+ U1+");
  CHECK_FALSE(replays(bad));
  CHECK_THROWS(parse_trace("start @ O1+\n"));
  CHECK_THROWS(parse_trace("R1_delete chord=1 -> @\n"));
}

TEST_CASE("unknotting with forbidden moves") {
  const auto e = unknot_by_forbidden(GaussDiagram::empty(DiagramKind::based));
  REQUIRE(e);
  CHECK(e->size() == 0);

  for (const auto& d : {kVirtualTrefoil, kLongVirtualTrefoil, kTrefoil, parse_gauss_code("@ U1- O2+ U2+ O1-")}) {
    const auto t = unknot_by_forbidden(d);
    REQUIRE(t);
    CHECK(trace_ok(*t, true));
    CHECK(t->end().empty());
  }
}

TEST_CASE("unknotting random diagrams") {
  Rng rng(23);
  for (int i = 0; i < 60; ++i) {
    const auto d = random_diagram(rng, 1, 7, i % 2 ? DiagramKind::based : DiagramKind::closed);
    const auto t = unknot_by_forbidden(d);
    REQUIRE(t);
    CHECK(trace_ok(*t, true));
    CHECK(t->end().empty());
  }
}

TEST_CASE("find_step") {
  const auto d = parse_gauss_code("@ O1+ O2+ U1+ U2+");
  CHECK_FALSE(find_step(d, parse_gauss_code("@ O2+ O1+ U1+ U2+"), false));
  const auto s = find_step(d, parse_gauss_code("@ O2+ O1+ U1+ U2+"), true);
  REQUIRE(s);
  CHECK(s->kind == MoveKind::forbidden_of);
}
