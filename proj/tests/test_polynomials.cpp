#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>

#include "oracles.hpp"
#include "vknot/polynomials.hpp"
#include "vknot/random.hpp"

using namespace vknot;

namespace {

const GaussDiagram kTrefoil = parse_gauss_code("O1+ U2+ O3+ U1+ O2+ U3+");
const GaussDiagram kVirtualTrefoil = parse_gauss_code("O1+ U2+ U1+ O2+");

LaurentPoly mono(std::int64_t c, int e) { return LaurentPoly::monomial(c, e); }

// Mirror image: over and under swap, so do the signs.
GaussDiagram mirror(const GaussDiagram& d) {
  std::string code = to_string(d);
  for (char& ch : code) {
    if (ch == 'O') ch = 'U';
    else if (ch == 'U') ch = 'O';
    else if (ch == '+') ch = '-';
    else if (ch == '-') ch = '+';
  }
  return parse_gauss_code(code);
}

// f(t = -1) for a knot: A^(4m) becomes (-1)^m.
std::int64_t f_at_minus_one(const LaurentPoly& f) {
  std::int64_t v = 0;
  for (const auto& [e, c] : f.coefficients()) {
    REQUIRE(e % 4 == 0);
    v += (e / 4) % 2 ? -c : c;
  }
  return v;
}

// Conway at z = 2i, i.e. Alexander at t = -1.
std::int64_t conway_at_2i(const LaurentPoly& z) {
  std::int64_t v = 0, p = 1;
  for (int k = 0; k <= z.max_degree(); k += 2, p *= -4) v += z.coefficient(k) * p;
  return v;
}

}  // namespace

TEST_CASE("writhe") {
  CHECK(writhe(GaussDiagram::empty(DiagramKind::based)) == 0);
  CHECK(writhe(kTrefoil) == 3);
  CHECK(writhe(mirror(kTrefoil)) == -3);
}

TEST_CASE("bracket and f examples") {
  CHECK(kauffman_bracket(GaussDiagram::empty(DiagramKind::closed)) == LaurentPoly(1));
  CHECK(kauffman_bracket(parse_gauss_code("O1+ U1+")) == mono(-1, 3));
  CHECK(kauffman_bracket(parse_gauss_code("@ O1- U1-")) == mono(-1, -3));
  CHECK(kauffman_bracket(parse_gauss_code("U1- O1-")) == mono(-1, -3));
  CHECK(f_polynomial(GaussDiagram::empty(DiagramKind::based)) == LaurentPoly(1));
  CHECK(f_polynomial(parse_gauss_code("O1+ U1+")) == LaurentPoly(1));
  CHECK(f_polynomial(parse_gauss_code("U1+ O1+")) == LaurentPoly(1));

  const auto f = f_polynomial(kTrefoil);
  CHECK(f == mono(-1, -16) + mono(1, -12) + mono(1, -4));
  CHECK(f.to_string() == "-1*A^-16 + 1*A^-12 + 1*A^-4");
  CHECK(max_degree(f) == -4);
  CHECK(f_polynomial(as_based(kTrefoil)) == f);
  CHECK(f_polynomial(mirror(kTrefoil)) == f.reflected());

  const auto v = f_polynomial(kVirtualTrefoil);
  CHECK_FALSE(v == LaurentPoly(1));
  CHECK(v == oracle::recursive_bracket(to_link(kVirtualTrefoil)) * mono(writhe(kVirtualTrefoil) % 2 ? -1 : 1, -3 * writhe(kVirtualTrefoil)));
}

TEST_CASE("state sum agrees with skein recursion") {
  Rng rng(31);
  for (int i = 0; i < 150; ++i) {
    const auto d = random_diagram(rng, 0, 8, i % 2 ? DiagramKind::based : DiagramKind::closed);
    CHECK(kauffman_bracket(d) == oracle::recursive_bracket(to_link(d)));
  }
}

TEST_CASE("one-chord smoothing identities") {
  // <D> = A <A-smoothing> + A^-1 <B-smoothing>, and
  // A <L+> - A^-1 <L-> = (A^2 - A^-2) <L0>.
  Rng rng(32);
  for (int i = 0; i < 150; ++i) {
    const auto d = random_diagram(rng, 1, 8, DiagramKind::closed);
    const auto l = to_link(d);
    for (const auto& c : d.chords()) {
      const auto o = kauffman_bracket(oriented_smoothing(l, c.id));
      const auto u = kauffman_bracket(unoriented_smoothing(l, c.id));
      const auto here = kauffman_bracket(l);
      if (c.sign > 0)
        CHECK(here == mono(1, 1) * o + mono(1, -1) * u);
      else
        CHECK(here == mono(1, 1) * u + mono(1, -1) * o);
      const auto flipped = kauffman_bracket(crossing_change(l, c.id));
      const auto& plus = c.sign > 0 ? here : flipped;
      const auto& minus = c.sign > 0 ? flipped : here;
      CHECK(mono(1, 1) * plus - mono(1, -1) * minus == (mono(1, 2) - mono(1, -2)) * o);
    }
  }
}

TEST_CASE("state sum cap") {
  Rng rng(33);
  CHECK_THROWS_AS(kauffman_bracket(random_diagram(rng, 23, DiagramKind::closed)), CapError);
  CHECK_THROWS_AS(kauffman_bracket(random_diagram(rng, 5, DiagramKind::closed), 4), CapError);
}

TEST_CASE("transfer matrix agrees with the state sum") {
  Rng rng(34);
  for (int i = 0; i < 200; ++i) {
    BraidWord w;
    const int len = 1 + static_cast<int>(rng() % 20);
    for (int k = 0; k < len; ++k) w.push_back(static_cast<BraidLetter>(rng() % 3));
    if (real_letter_count(w) > 14) continue;
    CHECK(kauffman_bracket(w, ClosureMode::knot) == kauffman_bracket(braid_closure(w, ClosureMode::knot)));
    CHECK(f_polynomial(w, ClosureMode::knot) == f_polynomial(braid_closure(w, ClosureMode::knot)));
  }
}

TEST_CASE("classical two-strand closures match the braid oracle") {
  Rng rng(35);
  for (int i = 0; i < 60; ++i) {
    std::vector<int> word;
    BraidWord w;
    const int len = 1 + 2 * static_cast<int>(rng() % 6);
    for (int k = 0; k < len; ++k) {
      const bool pos = rng() % 2;
      word.push_back(pos ? 1 : -1);
      w.push_back(pos ? BraidLetter::real_pos : BraidLetter::real_neg);
    }
    const auto ref = oracle::classical_closure(2, word);
    CHECK(canonical_key(braid_closure(w)) == canonical_key(ref));
    CHECK(kauffman_bracket(w) == oracle::recursive_bracket(to_link(ref)));
  }
}

TEST_CASE("f survives long random Reidemeister walks") {
  std::size_t moves = 0;
  Rng rng(36);
  std::vector<GaussDiagram> bases{kTrefoil, kVirtualTrefoil, as_based(kTrefoil)};
  for (int i = 0; i < 4; ++i) bases.push_back(random_diagram(rng, 2, 5, i % 2 ? DiagramKind::based : DiagramKind::closed));
  for (std::size_t i = 0; i < bases.size(); ++i) {
    FuzzOptions o;
    o.trials = 360;
    o.seed = 100 + i;
    o.moves_per_trial = 4;
    const auto v = invariance_fuzz(f_functional(), bases[i], o);
    CHECK(v.pass);
    moves += v.moves;
  }
  CHECK(moves >= 10000);
}

TEST_CASE("writhe is caught changing under R1") {
  FuzzOptions o;
  o.trials = 10;
  const auto v = invariance_fuzz(writhe_functional(), kTrefoil, o);
  REQUIRE_FALSE(v.pass);
  REQUIRE(v.violation);
  CHECK(replays(*v.violation));
  CHECK(v.expected == 3);
  CHECK(v.found == writhe(v.violation->end()));
  CHECK(v.found != v.expected);
}

TEST_CASE("c2 examples") {
  CHECK(c2(GaussDiagram::empty(DiagramKind::based)) == 0);
  CHECK(c2(GaussDiagram::empty(DiagramKind::closed)) == 0);
  CHECK(c2(kTrefoil) == 1);
  CHECK(c2(mirror(kTrefoil)) == 1);
  const auto eight = oracle::classical_closure(3, {1, -2, 1, -2});
  CHECK(eight.chord_count() == 4);
  CHECK(c2(eight) == -1);
  CHECK(c2_formula().size() == 4);
  CHECK(c2_formula().total() == 0);
}

TEST_CASE("Conway oracle") {
  CHECK(conway_polynomial(GaussDiagram::empty(DiagramKind::closed)) == LaurentPoly(1));
  CHECK(conway_polynomial(parse_gauss_code("O1- U1-")) == LaurentPoly(1));
  CHECK(conway_polynomial(kTrefoil) == LaurentPoly(1) + mono(1, 2));
  CHECK(conway_polynomial(kTrefoil).to_string('z') == "1*z^0 + 1*z^2");
  CHECK(conway_polynomial(oracle::classical_closure(3, {1, -2, 1, -2})) == LaurentPoly(1) - mono(1, 2));
  ConwayBudget tight;
  tight.max_chords = 2;
  CHECK_THROWS_AS(conway_polynomial(kTrefoil, tight), CapError);
}

TEST_CASE("Conway and f share the determinant") {
  std::mt19937_64 rng(37);
  for (int i = 0; i < 30; ++i) {
    const int strands = 2 + static_cast<int>(rng() % 3);
    const auto d = oracle::classical_closure(strands, oracle::random_knot_braid(rng, strands, 3 + static_cast<int>(rng() % 7)));
    if (d.chord_count() > 12) continue;
    CHECK(std::abs(conway_at_2i(conway_polynomial(d))) == std::abs(f_at_minus_one(f_polynomial(d))));
  }
}

TEST_CASE("c2 is the z^2 coefficient on classical closures") {
  std::mt19937_64 rng(38);
  int checked = 0;
  for (int i = 0; i < 40; ++i) {
    const int strands = 2 + static_cast<int>(rng() % 3);
    const auto d = oracle::classical_closure(strands, oracle::random_knot_braid(rng, strands, 3 + static_cast<int>(rng() % 8)));
    if (d.chord_count() > 12) continue;
    CHECK(c2(d) == conway_polynomial(d).coefficient(2));
    // any cut of a classical knot gives the same value
    for (int r = 1; r < d.length(); ++r) {
      std::vector<Endpoint> eps(d.endpoints().begin() + r, d.endpoints().end());
      eps.insert(eps.end(), d.endpoints().begin(), d.endpoints().begin() + r);
      CHECK(c2(GaussDiagram(DiagramKind::based, eps, d.sign_list())) == c2(d));
    }
    ++checked;
  }
  CHECK(checked >= 10);
}

TEST_CASE("c2 survives random Reidemeister walks on long diagrams") {
  Rng rng(39);
  for (int i = 0; i < 200; ++i) {
    FuzzOptions o;
    o.trials = 3;
    o.seed = static_cast<std::uint64_t>(i);
    const auto v = invariance_fuzz(c2_functional(), random_diagram(rng, 0, 8, DiagramKind::based), o);
    CHECK(v.pass);
  }
}
