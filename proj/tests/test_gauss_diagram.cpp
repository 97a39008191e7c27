#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "vknot/gauss_diagram.hpp"
#include "vknot/random.hpp"

using namespace vknot;

TEST_CASE("parse reads based and closed codes") {
  const auto d = parse_gauss_code("@ O1+ U1+");
  CHECK(d.is_based());
  CHECK(d.chord_count() == 1);
  CHECK(d.sign(1) == 1);
  CHECK(d.chord(1).tail_pos == 0);
  CHECK(d.chord(1).head_pos == 1);

  const auto t = parse_gauss_code("O1+ U2+ O3+ U1+ O2+ U3+");
  CHECK(t.is_closed());
  CHECK(t.chord_count() == 3);
  CHECK(to_string(t) == "O1+ U2+ O3+ U1+ O2+ U3+");
  CHECK(parse_gauss_code("@").is_based());
  CHECK(parse_gauss_code("").empty());
}

TEST_CASE("parse rejects malformed input") {
  CHECK_THROWS_AS(parse_gauss_code("O1+ U1-"), GaussError);
  CHECK_THROWS_AS(parse_gauss_code("O1+ U1"), GaussError);
  CHECK_THROWS_AS(parse_gauss_code("X1+ U1+"), GaussError);
  CHECK_THROWS_AS(parse_gauss_code("O0+ U0+"), GaussError);
  CHECK_THROWS_AS(parse_gauss_code("O1+"), GaussError);
  CHECK_THROWS_AS(parse_gauss_code("O1+ U1+ O1+"), GaussError);
  CHECK_THROWS_AS(parse_gauss_code("O1+ O1+"), GaussError);
  CHECK_THROWS_AS(parse_gauss_code("O1+ @ U1+"), GaussError);
}

TEST_CASE("canonical form relabels and minimizes rotation") {
  CHECK(to_string(canonicalize(parse_gauss_code("@ O2- U2-"))) == "@ O1- U1-");
  CHECK(to_string(canonicalize(parse_gauss_code("U1+ O1+"))) == "O1+ U1+");
  // based diagrams are never rotated
  CHECK(to_string(canonicalize(parse_gauss_code("@ U1+ O1+"))) == "@ U1+ O1+");
}

TEST_CASE("canonicalize is idempotent and rotation invariant") {
  Rng rng(7);
  for (int i = 0; i < 100; ++i) {
    const auto d = random_diagram(rng, 0, 7, i % 2 ? DiagramKind::based : DiagramKind::closed);
    const auto c = canonicalize(d);
    CHECK(canonicalize(c) == c);
    CHECK(oracle::same_diagram(c, d));
    if (d.is_closed() && !d.empty()) {
      auto eps = d.endpoints();
      for (int r = 0; r < d.length(); ++r) {
        std::rotate(eps.begin(), eps.begin() + 1, eps.end());
        const GaussDiagram rot(DiagramKind::closed, eps, d.sign_list());
        CHECK(canonicalize(rot) == c);
        CHECK(canonical_key(rot) == canonical_key(d));
      }
    }
  }
}

TEST_CASE("canonical keys separate inequivalent diagrams") {
  Rng rng(8);
  std::vector<GaussDiagram> ds;
  for (int i = 0; i < 60; ++i) ds.push_back(random_diagram(rng, 0, 3, DiagramKind::closed));
  for (const auto& a : ds)
    for (const auto& b : ds) CHECK((canonical_key(a) == canonical_key(b)) == oracle::same_diagram(a, b));
}

TEST_CASE("sub_diagrams enumerates every chord subset") {
  CHECK(sub_diagrams(GaussDiagram::empty(DiagramKind::based)).size() == 1);
  const auto one = sub_diagrams(parse_gauss_code("@ O1+ U1+"));
  REQUIRE(one.size() == 2);
  CHECK(one[0].empty());
  CHECK(one[1] == parse_gauss_code("@ O1+ U1+"));
  const auto tre = sub_diagrams(parse_gauss_code("O1+ U2+ O3+ U1+ O2+ U3+"));
  CHECK(tre.size() == 8);
  CHECK(to_string(tre[5]) == "O1+ O3+ U1+ U3+");
  Rng rng(1);
  CHECK_THROWS_AS(sub_diagrams(random_diagram(rng, 21, DiagramKind::based)), CapError);
  CHECK(sub_diagrams(random_diagram(rng, 4, DiagramKind::based), 4).size() == 16);
}

TEST_CASE("based and closed views share endpoints") {
  const auto d = parse_gauss_code("O1+ U2- U1+ O2-");
  CHECK(to_string(as_based(d)) == "@ O1+ U2- U1+ O2-");
  CHECK(as_closed(as_based(d)) == d);
}

TEST_CASE("navigation respects the base point") {
  const auto b = parse_gauss_code("@ O1+ U1+ O2- U2-");
  CHECK(b.next(3) == -1);
  CHECK(b.prev(0) == -1);
  CHECK_FALSE(b.adjacent(0, 3));
  const auto c = as_closed(b);
  CHECK(c.next(3) == 0);
  CHECK(c.adjacent(0, 3));
  CHECK(b.partner(2) == 3);
}
