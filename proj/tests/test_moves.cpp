#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>

#include "oracles.hpp"
#include "vknot/moves.hpp"
#include "vknot/polynomials.hpp"
#include "vknot/random.hpp"

using namespace vknot;

namespace {

const GaussDiagram kTrefoil = parse_gauss_code("O1+ U2+ O3+ U1+ O2+ U3+");

int count_kind(const std::vector<MoveSite>& sites, MoveKind k) {
  return static_cast<int>(std::count_if(sites.begin(), sites.end(), [k](const MoveSite& s) { return s.kind == k; }));
}

// Chord pairs whose tails are adjacent, heads adjacent, signs opposite.
int scan_r2(const GaussDiagram& d) {
  int n = 0;
  for (const auto& a : d.chords())
    for (const auto& b : d.chords())
      if (a.id < b.id && a.sign != b.sign && d.adjacent(a.tail_pos, b.tail_pos) && d.adjacent(a.head_pos, b.head_pos))
        ++n;
  return n;
}

}  // namespace

TEST_CASE("enumeration on small diagrams") {
  const auto kink = enumerate_reidemeister(parse_gauss_code("@ O1+ U1+"));
  CHECK(count_kind(kink, MoveKind::r1_delete) == 1);
  const auto empty = enumerate_reidemeister(GaussDiagram::empty(DiagramKind::based));
  CHECK(std::all_of(empty.begin(), empty.end(), [](const MoveSite& s) {
    return s.kind == MoveKind::r1_insert || s.kind == MoveKind::r2_insert;
  }));
  CHECK(count_kind(empty, MoveKind::r1_insert) == 4);
  const auto tre = enumerate_reidemeister(kTrefoil);
  CHECK(count_kind(tre, MoveKind::r1_delete) == 0);
  CHECK(count_kind(tre, MoveKind::r2_delete) == 0);
  CHECK(scan_r2(kTrefoil) == 0);
}

TEST_CASE("deletion sites agree with an adjacency scan") {
  Rng rng(2);
  for (int i = 0; i < 200; ++i) {
    const auto d = random_diagram(rng, 1, 5, i % 2 ? DiagramKind::based : DiagramKind::closed);
    const auto sites = enumerate_reidemeister(d, {false, false, -1});
    int r1 = 0;
    for (const auto& c : d.chords()) r1 += d.adjacent(c.head_pos, c.tail_pos);
    CHECK(count_kind(sites, MoveKind::r1_delete) == r1);
    CHECK(count_kind(sites, MoveKind::r2_delete) == scan_r2(d));
  }
}

TEST_CASE("R1 examples") {
  const auto kink = parse_gauss_code("@ O1+ U1+");
  CHECK(apply_move(kink, MoveSite::r1_delete(1)).empty());
  CHECK(apply_move(GaussDiagram::empty(DiagramKind::based), MoveSite::r1_insert(0, 1, false)) == kink);
  CHECK(to_string(apply_move(kink, MoveSite::r1_insert(2, -1, true))) == "@ O1+ U1+ U2- O2-");
  CHECK_THROWS_AS(apply_move(kTrefoil, MoveSite::r1_delete(1)), MoveError);
  CHECK_THROWS_AS(apply_move(kink, MoveSite::r1_delete(7)), MoveError);
  // the base point separates the two endpoints
  CHECK_THROWS_AS(apply_move(parse_gauss_code("@ U1+ O2+ U2+ O1+"), MoveSite::r1_delete(1)), MoveError);
  CHECK(apply_move(parse_gauss_code("U1+ O2+ U2+ O1+"), MoveSite::r1_delete(1)) == parse_gauss_code("O2+ U2+"));
}

TEST_CASE("R2 examples") {
  const auto d = apply_move(GaussDiagram::empty(DiagramKind::based), MoveSite::r2_insert(0, 0, 1, false, false));
  CHECK(to_string(d) == "@ O1+ O2- U1+ U2-");
  CHECK(apply_move(d, MoveSite::r2_delete(1, 2)).empty());
  const auto r = apply_move(parse_gauss_code("@ O1+ U1+"), MoveSite::r2_insert(1, 2, -1, true, true));
  CHECK(to_string(r) == "@ O1+ U2- U3+ U1+ O3+ O2-");
  CHECK_THROWS_AS(apply_move(parse_gauss_code("@ O1+ O2+ U1+ U2+"), MoveSite::r2_delete(1, 2)), MoveError);
  CHECK_THROWS_AS(apply_move(d, MoveSite::r2_insert(3, 1, 1, false, false)), MoveError);
}

TEST_CASE("R3 sites are involutions and keep signs") {
  Rng rng(9);
  int seen = 0;
  for (int i = 0; i < 400; ++i) {
    const auto d = random_diagram(rng, 3, 5, i % 2 ? DiagramKind::based : DiagramKind::closed);
    for (const auto& s : enumerate_reidemeister(d, {false, false, -1})) {
      if (s.kind != MoveKind::r3) continue;
      ++seen;
      const auto moved = apply_move(d, s);
      CHECK(moved.sign_list() == d.sign_list());
      CHECK(apply_move(moved, s) == d);
      CHECK_FALSE(moved == d);
    }
  }
  CHECK(seen > 50);
}

TEST_CASE("R3 table holds one pattern and its full reversal per sign triple") {
  int valid = 0;
  for (int k = 0; k < 64; ++k) {
    valid += r3_valid(k);
    CHECK(r3_valid(k) == r3_valid(k ^ 7));
  }
  CHECK(valid == 16);
  for (int signs = 0; signs < 8; ++signs) {
    int per = 0;
    for (int order = 0; order < 8; ++order) per += r3_valid(signs << 3 | order);
    CHECK(per == 2);
  }
}

TEST_CASE("R3 on a braid-like triangle preserves the f-polynomial") {
  Rng rng(10);
  int checked = 0;
  for (int i = 0; i < 300 && checked < 60; ++i) {
    const auto d = random_diagram(rng, 3, 6, DiagramKind::closed);
    for (const auto& s : enumerate_reidemeister(d, {false, false, -1}))
      if (s.kind == MoveKind::r3) {
        CHECK(f_polynomial(apply_move(d, s)) == f_polynomial(d));
        ++checked;
      }
  }
  CHECK(checked >= 60);
}

TEST_CASE("virtualization deletes one chord") {
  CHECK(virtualize(parse_gauss_code("@ O1+ U1+"), 1).empty());
  CHECK(to_string(virtualize(kTrefoil, 2)) == "O1+ O3+ U1+ U3+");
  CHECK_THROWS_AS(virtualize(kTrefoil, 4), MoveError);
  Rng rng(11);
  for (int i = 0; i < 50; ++i) {
    const auto d = random_diagram(rng, 1, 8, DiagramKind::based);
    const int id = d.chords()[rng() % d.chords().size()].id;
    const auto v = virtualize(d, id);
    CHECK(v.chord_count() == d.chord_count() - 1);
    CHECK(writhe(v) == writhe(d) - d.sign(id));
  }
}

TEST_CASE("forbidden sites") {
  const auto d = parse_gauss_code("@ O1+ O2+ U1+ U2+");
  const auto sites = forbidden_sites(d);
  REQUIRE(sites.size() == 2);
  CHECK(sites[0].position == 0);
  CHECK(sites[0].role == Role::tail);
  CHECK(sites[1].position == 2);
  CHECK(sites[1].role == Role::head);
  CHECK(forbidden_sites(parse_gauss_code("@ O1+ U1+ O2+ U2+")).empty());
  // every cyclically adjacent pair of this code mixes a tail and a head
  CHECK(forbidden_sites(kTrefoil).empty());
  // closed diagrams wrap around
  CHECK(forbidden_sites(parse_gauss_code("O1+ U1+ U2+ O2+")).size() == 2);
  CHECK(forbidden_sites(parse_gauss_code("@ O1+ U1+ U2+ O2+")).size() == 1);
}

TEST_CASE("forbidden moves transpose and flip the site sign") {
  const auto d = parse_gauss_code("@ O1+ O2+ U1+ U2+");
  const auto t = forbidden_sites(d)[0];
  const auto moved = apply_forbidden(d, t);
  CHECK(to_string(moved) == "@ O2+ O1+ U1+ U2+");
  CHECK(apply_forbidden(moved, t) == d);
  CHECK(triangle_sign(moved, 0) == -triangle_sign(d, 0));
  CHECK_THROWS_AS(apply_forbidden(d, Triangle{1, Role::tail, 1}), MoveError);

  Rng rng(12);
  for (int i = 0; i < 200; ++i) {
    const auto g = random_diagram(rng, 2, 7, i % 2 ? DiagramKind::based : DiagramKind::closed);
    for (const auto& s : forbidden_sites(g)) {
      const auto m = apply_forbidden(g, s);
      CHECK(m.sign_list() == g.sign_list());
      CHECK(writhe(m) == writhe(g));
      CHECK(apply_forbidden(m, s) == g);
      CHECK(triangle_sign(m, s.position) == -s.sign);
      CHECK(apply_move(g, MoveSite::forbidden(s)) == m);
    }
  }
}

TEST_CASE("site text round trip") {
  Rng rng(13);
  for (int i = 0; i < 40; ++i) {
    const auto d = random_diagram(rng, 0, 4, i % 2 ? DiagramKind::based : DiagramKind::closed);
    auto sites = enumerate_reidemeister(d);
    for (const auto& t : forbidden_sites(d)) sites.push_back(MoveSite::forbidden(t));
    for (const auto& c : d.chords()) sites.push_back(MoveSite::virtualize(c.id));
    for (const auto& s : sites) {
      const auto back = parse_site(format_site(s));
      CHECK(format_site(back) == format_site(s));
      CHECK(apply_move(d, back) == apply_move(d, s));
    }
  }
  CHECK_THROWS_AS(parse_site("R4 chord=1"), MoveError);
  CHECK_THROWS_AS(parse_site("R1_delete"), MoveError);
  CHECK_THROWS_AS(parse_site("R1_insert gap=x sign=+ order=OU"), MoveError);
}

TEST_CASE("every move output is a valid diagram with the expected chord change") {
  Rng rng(14);
  const std::map<MoveKind, int> delta{{MoveKind::r1_insert, 1}, {MoveKind::r1_delete, -1}, {MoveKind::r2_insert, 2},
                                      {MoveKind::r2_delete, -2}, {MoveKind::r3, 0}};
  for (int i = 0; i < 60; ++i) {
    const auto d = random_diagram(rng, 0, 5, i % 2 ? DiagramKind::based : DiagramKind::closed);
    for (const auto& s : enumerate_reidemeister(d)) {
      const auto m = apply_move(d, s);
      CHECK(m.chord_count() == d.chord_count() + delta.at(s.kind));
      // the constructor re-validates the chord invariants
      CHECK_NOTHROW(GaussDiagram(m.kind(), m.endpoints(), m.sign_list()));
    }
  }
}
