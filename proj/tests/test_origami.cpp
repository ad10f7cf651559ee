#include <algorithm>
#include <set>

#include "doctest.h"
#include "ellcover/monodromy.hpp"
#include "ellcover/origami.hpp"

using namespace ellcover;

namespace {

Permutation P(const char* s, int d) { return Permutation::parse(s, d); }

SquareTiledSurface surface(const char* alpha, const char* beta, int d) {
  return SquareTiledSurface::from_pair(P(alpha, d), P(beta, d));
}

std::set<std::pair<int, int>> cylinder_shapes(const SquareTiledSurface& s) {
  std::set<std::pair<int, int>> out;
  for (const auto& c : cylinders(s)) out.insert({c.circumference, c.height});
  return out;
}

}  // namespace

TEST_CASE("worked examples: commutators") {
  struct Case {
    const char *alpha, *beta;
    int d;
    const char* comm;
  };
  for (const auto& c : {Case{"(1 5)", "(1 2 3 4)", 5, "(1 5 2)"},
                        Case{"(1 2 4 3 5)", "(1 2 3 4 5)", 5, "(1 3 4)"},
                        Case{"(1 3 5 7 6 2 4)", "(1 2)(3 4)(5 6 7)", 7, "(1 6)(2 5)"},
                        Case{"(1 6 8 10)(2 4 11 3 5 7 9)", "(1 2 3)(4 5 6)(7 8)(9 10)", 11, "(1 3)(7 11)"}}) {
    CHECK(commutator(P(c.alpha, c.d), P(c.beta, c.d)) == P(c.comm, c.d));
  }
  const auto ex3 = surface("(1 2 6 4 5 3 7)", "(1 2 3 4 5 6 7)", 7);
  CHECK(cycle_type(commutator(ex3.v(), ex3.h())) == CycleType({2, 2, 1, 1, 1}));
}

TEST_CASE("cylinder decompositions") {
  const auto ex3 = surface("(1 2 6 4 5 3 7)", "(1 2 3 4 5 6 7)", 7);
  const auto ex4 = surface("(1 3 5 7 6 2 4)", "(1 2)(3 4)(5 6 7)", 7);
  const auto ex5 = surface("(1 6 8 10)(2 4 11 3 5 7 9)", "(1 2 3)(4 5 6)(7 8)(9 10)", 11);
  CHECK(cylinders(ex3).size() == 1);
  CHECK(cylinders(ex4).size() == 2);
  CHECK(cylinder_shapes(ex4) == std::set<std::pair<int, int>>{{2, 2}, {3, 1}});
  CHECK(cylinders(ex5).size() == 3);
  for (const auto& s : {ex3, ex4, ex5}) {
    int area = 0;
    std::set<int> seen;
    for (const auto& c : cylinders(s)) {
      area += c.circumference * c.height;
      for (std::size_t k = 0; k + 1 < c.annuli.size(); ++k)
        for (std::size_t j = 0; j < c.annuli[k].size(); ++j) CHECK(s.v()(c.annuli[k][j]) == c.annuli[k + 1][j]);
      for (const auto& row : c.annuli) seen.insert(row.begin(), row.end());
    }
    CHECK(area == s.squares());
    CHECK(static_cast<int>(seen.size()) == s.squares());
  }
  // The one-square torus is a single cylinder of height 1.
  const SquareTiledSurface torus(Permutation::identity(1), Permutation::identity(1));
  CHECK(cylinder_shapes(torus) == std::set<std::pair<int, int>>{{1, 1}});
  CHECK(singularities(torus).empty());
}

TEST_CASE("singularities follow the commutator") {
  const auto ex5 = surface("(1 6 8 10)(2 4 11 3 5 7 9)", "(1 2 3)(4 5 6)(7 8)(9 10)", 11);
  const auto cones = singularities(ex5);
  REQUIRE(cones.size() == 2);
  CHECK(cones[0].order == 2);
  CHECK(cones[0].squares == std::vector<int>{0, 2});
  CHECK(cones[1].squares == std::vector<int>{6, 10});
}

TEST_CASE("U and R moves") {
  const auto ex1 = surface("(1 5)", "(1 2 3 4)", 5);
  CHECK(act_U(ex1).v() == P("(1 2 3 4 5)", 5));
  CHECK(act_U(ex1).h() == ex1.h());
  const auto rr = act_R(act_R(ex1));
  CHECK(rr.v() == ex1.v().inverse());
  CHECK(rr.h() == ex1.h().inverse());
  const auto r4 = act_R(act_R(rr));
  CHECK(r4.v() == ex1.v());
  CHECK(r4.h() == ex1.h());
  CHECK_THROWS_AS(SquareTiledSurface(P("(1 2)", 4), P("(3 4)", 4)), InvalidInput);
  CHECK_THROWS_AS(SquareTiledSurface(Permutation::identity(2), Permutation::identity(3)), InvalidInput);
}

TEST_CASE("U and R agree with the monodromy moves on classes") {
  for (int d = 3; d <= 7; ++d) {
    const auto table = enumerate_classes(RamificationProfile::parse("3", d));
    const auto b = move_table(table, Move::B);
    const auto inv = move_table(table, Move::Inv);
    for (std::size_t i = 0; i < table.size(); ++i) {
      const auto s = SquareTiledSurface::from_class(table[i]);
      const auto [ua, ub] = act_U(s).to_pair();
      CHECK(table.find(ua, ub) == b[i]);
      const auto [ra, rb] = act_R(act_R(s)).to_pair();
      CHECK(table.find(ra, rb) == inv[i]);
    }
  }
}

TEST_CASE("round trip through the canonical pair") {
  const auto table = enumerate_classes(RamificationProfile::parse("5", 5));
  CHECK(table.size() == 40);
  for (std::size_t i = 0; i < table.size(); ++i) {
    const auto s = SquareTiledSurface::from_class(table[i]);
    CHECK(s.to_canonical_pair() == std::pair(table[i].alpha, table[i].beta));
    CHECK(s.to_pair() == std::pair(table[i].alpha, table[i].beta));
  }
}

TEST_CASE("origami components for sigma = (3)") {
  const std::vector<std::size_t> expected{1, 1, 2, 1, 2, 1};
  for (int d = 3; d <= 8; ++d) {
    const auto table = enumerate_classes(RamificationProfile::parse("3", d));
    const auto comps = origami_components(table);
    CHECK_MESSAGE(primitive_components(table, comps).size() == expected[static_cast<std::size_t>(d - 3)], "d=", d);
    // <U, R> and <a, b> have the same orbits.
    CHECK(comps == components(table));
  }
}

TEST_CASE("Weierstrass parity") {
  CHECK(weierstrass_parity(P("(1 5)", 5), P("(1 2 3 4)", 5)) == 1);
  CHECK(weierstrass_parity(P("(1 2 4 3 5)", 5), P("(1 2 3 4 5)", 5)) == 3);
  CHECK_THROWS_AS(weierstrass_parity(P("(1 3 5 7 6 2 4)", 7), P("(1 2)(3 4)(5 6 7)", 7)), InvalidInput);
  for (int d : {5, 7}) {
    const auto table = enumerate_classes(RamificationProfile::parse("3", d));
    const auto comps = origami_components(table);
    CHECK(comps.size() == 2);
    std::set<int> values;
    for (const auto& comp : comps) {
      const int w = weierstrass_parity(table[comp.front()]);
      for (std::size_t i : comp) CHECK(weierstrass_parity(table[i]) == w);
      values.insert(w);
    }
    CHECK(values == std::set<int>{1, 3});
  }
}

TEST_CASE("witness pairs for sigma = (2,2) at d = 7") {
  const auto a1 = P("(1 3 5 2 4 6 7)", 7), b1 = P("(1 2)(3 4)", 7);
  const auto a2 = P("(1 3 2 4 5 6 7)", 7), b2 = P("(1 2)", 7);
  const Permutation g1[] = {a1, b1};
  const Permutation g2[] = {a2, b2};
  CHECK(generates_alternating_or_symmetric(g1) == GroupKind::Alternating);
  CHECK(generates_alternating_or_symmetric(g2) == GroupKind::Symmetric);
  const auto table = enumerate_classes(RamificationProfile::parse("2,2", 7));
  const auto i1 = table.find(a1, b1), i2 = table.find(a2, b2);
  REQUIRE(i1);
  REQUIRE(i2);
  for (const auto& comp : origami_components(table)) {
    const bool has1 = std::binary_search(comp.begin(), comp.end(), *i1);
    const bool has2 = std::binary_search(comp.begin(), comp.end(), *i2);
    CHECK_FALSE((has1 && has2));
  }
}

TEST_CASE("rendering") {
  const SquareTiledSurface torus(Permutation::identity(1), Permutation::identity(1));
  const auto ascii = render(torus);
  CHECK(ascii.find("+----+") != std::string::npos);
  CHECK(ascii.find("cylinders=1") != std::string::npos);
  const auto svg = render(torus, {RenderFormat::Svg, false});
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);

  const auto ex3 = surface("(1 2 6 4 5 3 7)", "(1 2 3 4 5 6 7)", 7);
  std::set<int> rows;
  for (const auto& p : layout(ex3)) rows.insert(p.y);
  CHECK(rows.size() == 1);

  const auto ex5 = surface("(1 6 8 10)(2 4 11 3 5 7 9)", "(1 2 3)(4 5 6)(7 8)(9 10)", 11);
  std::set<std::pair<int, int>> cells;
  for (const auto& p : layout(ex5)) CHECK(cells.insert({p.x, p.y}).second);
  CHECK(cells.size() == 11);
  const auto svg5 = render(ex5, {RenderFormat::Svg, false});
  CHECK(std::count(svg5.begin(), svg5.end(), '\n') > 11);

  const auto ex1 = surface("(1 5)", "(1 2 3 4)", 5);
  CHECK(render(ex1, {RenderFormat::Ascii, true}).find("integer-weierstrass=1") != std::string::npos);
  CHECK(render(ex5, {RenderFormat::Ascii, true}).find("integer-weierstrass=n/a") != std::string::npos);
  CHECK(parse_render_format("svg") == RenderFormat::Svg);
  CHECK_THROWS_AS(parse_render_format("png"), InvalidInput);
}
