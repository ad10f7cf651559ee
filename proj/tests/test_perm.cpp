#include <random>

#include "doctest.h"
#include "ellcover/perm.hpp"

using namespace ellcover;

namespace {

Permutation P(const char* s, int d) { return Permutation::parse(s, d); }

Permutation random_perm(int d, std::mt19937& rng) {
  std::vector<int> v(d);
  for (int i = 0; i < d; ++i) v[i] = i + 1;
  std::shuffle(v.begin(), v.end(), rng);
  return Permutation::from_images(v);
}

}  // namespace

TEST_CASE("compose follows right-factor-first") {
  CHECK(compose(P("id", 3), P("(1 2)", 3)) == P("(1 2)", 3));
  CHECK(compose(P("(1 2)", 3), P("(1 2)", 3)).is_identity());
  CHECK(compose(P("(1 2 3)", 3), P("(1 2 3)", 3)) == P("(1 3 2)", 3));
  CHECK(compose(P("(1 5)", 5), P("(1 2 3 4)", 5)) == P("(1 2 3 4 5)", 5));
  CHECK_THROWS_AS(compose(P("(1 2)", 2), P("(1 2)", 3)), InvalidInput);
}

TEST_CASE("commutators of the worked surfaces") {
  CHECK(commutator(P("(1 5)", 5), P("(1 2 3 4)", 5)) == P("(1 5 2)", 5));
  CHECK(commutator(P("(1 2 4 3 5)", 5), P("(1 2 3 4 5)", 5)) == P("(1 3 4)", 5));
  // The 7-square one-cylinder surface: the printed labels give type [2,2,1,1,1] but
  // not the printed support; no alpha at all pairs with this beta to give (1 6)(2 5).
  auto c3 = commutator(P("(1 2 6 4 5 3 7)", 7), P("(1 2 3 4 5 6 7)", 7));
  CHECK(c3 == P("(1 5)(3 6)", 7));
  CHECK(cycle_type(c3) == CycleType({2, 2, 1, 1, 1}));
  CHECK(commutator(P("(1 3 5 7 6 2 4)", 7), P("(1 2)(3 4)(5 6 7)", 7)) == P("(1 6)(2 5)", 7));
  CHECK(commutator(P("(1 6 8 10)(2 4 11 3 5 7 9)", 11), P("(1 2 3)(4 5 6)(7 8)(9 10)", 11)) ==
        P("(1 3)(7 11)", 11));
}

TEST_CASE("cycle types") {
  CHECK(cycle_type(P("(1 2 3)(4 5)", 5)).to_string() == "[3,2]");
  CHECK(cycle_type(P("id", 4)).to_string() == "[1,1,1,1]");
  CHECK(cycle_type(P("(1 2 3 4 5 6 7)", 7)).to_string() == "[7]");
  CycleType t({2, 1, 3});
  CHECK(t.parts() == std::vector<int>{3, 2, 1});
  CHECK(t.reciprocal_sum() == Rational(11, 6));
  CHECK(t.lcm() == 6);
}

TEST_CASE("class sizes") {
  CHECK(class_size(CycleType({2, 1, 1, 1})) == 10);
  for (int d = 1; d <= 10; ++d) {
    CHECK(class_size(CycleType({d})) == factorial(d - 1));
    CHECK(class_size(CycleType(std::vector<int>(d, 1))) == 1);
    BigInt total = 0;
    for (const auto& t : partitions(d)) total += class_size(t);
    CHECK(total == factorial(d));
  }
}

TEST_CASE("partitions come in descending lexicographic order") {
  auto p = partitions(5);
  REQUIRE(p.size() == 7);
  CHECK(p[0].to_string() == "[5]");
  CHECK(p[1].to_string() == "[4,1]");
  CHECK(p[2].to_string() == "[3,2]");
  CHECK(p[6].to_string() == "[1,1,1,1,1]");
  CHECK(partitions(10).size() == 42);
}

TEST_CASE("transitivity") {
  std::vector<Permutation> g1{P("(1 2 3 4 5)", 5)};
  std::vector<Permutation> g2{P("(1 2)", 3)};
  std::vector<Permutation> g3{P("(1 5)", 5), P("(1 2 3 4)", 5)};
  CHECK(is_transitive(g1));
  CHECK_FALSE(is_transitive(g2));
  CHECK(is_transitive(g3));
  CHECK_FALSE(is_transitive(3, {}));
}

TEST_CASE("group classification") {
  std::vector<Permutation> s5{P("(1 5)", 5), P("(1 2 3 4)", 5)};
  std::vector<Permutation> a5{P("(1 2 4 3 5)", 5), P("(1 2 3 4 5)", 5)};
  std::vector<Permutation> s2{P("(1 2)", 2)};
  std::vector<Permutation> c5{P("(1 2 3 4 5)", 5)};
  CHECK(generates_alternating_or_symmetric(s5) == GroupKind::Symmetric);
  CHECK(generates_alternating_or_symmetric(a5) == GroupKind::Alternating);
  CHECK(generates_alternating_or_symmetric(s2) == GroupKind::Symmetric);
  CHECK(generates_alternating_or_symmetric(c5) == GroupKind::Other);
  CHECK(group_order(5, c5) == 5);
  std::vector<Permutation> d4{P("(1 2 3 4)", 4), P("(1 3)", 4)};
  CHECK(group_order(4, d4) == 8);
  std::vector<Permutation> big{P("(1 2)", 12), P("(1 2 3 4 5 6 7 8 9 10 11 12)", 12)};
  CHECK(group_order(12, big) == factorial(12));
}

TEST_CASE("conjugating element") {
  auto t = conjugating_element(P("(1 2)", 4), P("(3 4)", 4));
  REQUIRE(t);
  CHECK(conjugate(P("(1 2)", 4), *t) == P("(3 4)", 4));
  CHECK_FALSE(conjugating_element(P("(1 2)", 3), P("(1 2 3)", 3)));
  auto id = conjugating_element(P("(1 2 3)", 3), P("(1 2 3)", 3));
  REQUIRE(id);
  CHECK(id->is_identity());

  // Lexicographic minimality against brute force in S_4.
  std::vector<int> v{1, 2, 3, 4};
  auto p = P("(1 3)(2 4)", 4), q = P("(1 2)(3 4)", 4);
  std::optional<Permutation> best;
  do {
    auto tau = Permutation::from_images(v);
    if (conjugate(p, tau) == q && (!best || tau < *best)) best = tau;
  } while (std::next_permutation(v.begin(), v.end()));
  CHECK(*conjugating_element(p, q) == *best);
}

TEST_CASE("random algebraic properties") {
  std::mt19937 rng(7);
  for (int d = 1; d <= 9; ++d) {
    for (int trial = 0; trial < 1000; ++trial) {
      auto a = random_perm(d, rng), b = random_perm(d, rng), c = random_perm(d, rng);
      CHECK((a * b) * c == a * (b * c));
      CHECK((a * a.inverse()).is_identity());
      CHECK(cycle_type(conjugate(a, b)) == cycle_type(a));
      CHECK(sign(commutator(a, b)) == 1);
      auto tau = conjugating_element(a, conjugate(a, b));
      REQUIRE(tau);
      CHECK(conjugate(a, *tau) == conjugate(a, b));
    }
  }
}

TEST_CASE("cycle notation round trip") {
  CHECK(to_cycle_string(P("(1 5)(2,3)", 5)) == "(1 5)(2 3)");
  CHECK(to_cycle_string(P("()", 3)) == "()");
  CHECK(to_cycle_string(P(" ( 3 1 2 ) ", 3)) == "(1 2 3)");
  CHECK(P("(1 10)", 11)(0) == 9);
  CHECK_THROWS_AS(P("(1 2)(2 3)", 3), InvalidInput);
  CHECK_THROWS_AS(P("(1 4)", 3), InvalidInput);
  CHECK_THROWS_AS(P("(1 2", 3), InvalidInput);
  CHECK_THROWS_AS(P("1 2", 3), InvalidInput);
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("28/3") == Rational(28, 3));
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(to_string(Rational(30, 1)) == "30");
  CHECK_THROWS_AS(parse_rational("x"), InvalidInput);
}
