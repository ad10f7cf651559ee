#include <doctest.h>

#include "ellcover/closed_forms.hpp"
#include "ellcover/monodromy.hpp"

using namespace ellcover;

TEST_CASE("divisor sums") {
  CHECK(sigma(1, 6) == 12);
  CHECK(sigma(3, 6) == 252);
  CHECK(sigma(0, 12) == 6);
  for (long p : primes_in(2, 100)) CHECK(sigma(1, p) == p + 1);
  CHECK_THROWS_AS(sigma(1, 0), InvalidInput);
}

TEST_CASE("Eisenstein series and Ramanujan equations") {
  const auto P = eisenstein(Eisenstein::P, 10);
  CHECK(P[0] == 1);
  CHECK(P[1] == -24);
  CHECK(eisenstein(Eisenstein::Q, 3)[1] == 240);
  CHECK(eisenstein(Eisenstein::R, 3)[1] == -504);
  CHECK(ramanujan_check(10));
  CHECK(ramanujan_check(200));
  auto Q = eisenstein(Eisenstein::Q, 10);
  Q[4] += 1;
  CHECK_FALSE(ramanujan_check(P, Q, eisenstein(Eisenstein::R, 10)));
  CHECK_THROWS_AS(ramanujan_check(1), InvalidInput);
}

TEST_CASE("convolution of divisor sums") {
  CHECK(convolution_identity(6).first == 70);
  CHECK(convolution_identity(5).first == 38);
  CHECK(convolution_identity(2).first == 1);
  CHECK(convolution_identity(2).second == 1);
  for (long d = 2; d <= 500; ++d) {
    const auto [lhs, rhs] = convolution_identity(d);
    REQUIRE(lhs == rhs);
  }
  for (long p : primes_in(2, 199)) CHECK(convolution_identity(p).second == convolution_prime_value(p));
}

TEST_CASE("sum of l1 l2 over two-length types") {
  CHECK(sum_identity_l1l2(5).lhs == 17);
  CHECK(sum_identity_l1l2(5).rhs == 17);
  CHECK(sum_identity_l1l2(2).lhs == 0);
  CHECK(sum_identity_l1l2(2).holds());
  CHECK(sum_identity_l1l2(7).holds());
  for (long d = 2; d <= 200; ++d) {
    const auto s = sum_identity_l1l2(d);
    CHECK(s.holds_general());
    CHECK(s.holds() == is_prime(d));
  }
  // Equal-length pairs are what the prime form leaves out.
  CHECK(sum_identity_l1l2(4).lhs == 5);
  CHECK(sum_identity_l1l2(4).rhs == 7);
}

TEST_CASE("closed N and M") {
  CHECK(closed_N_M(5, Family::G2_31) == std::pair<BigInt, Rational>(27, 30));
  CHECK(closed_N_M(7, Family::G2_22) == std::pair<BigInt, Rational>(160, 200));
  CHECK(closed_N_M(7, Family::G2_31) == std::pair<BigInt, Rational>(90, 100));
  CHECK_THROWS_AS(closed_N_M(9, Family::G2_31), InvalidInput);
  CHECK_THROWS_AS(closed_N_M(7, Family::G3_5), InvalidInput);
}

TEST_CASE("per-type counts") {
  CHECK(per_type_N(5, Family::G2_31, CycleType({3, 2})) == 6);
  CHECK(per_type_N(7, Family::G2_22, CycleType({2, 2, 1, 1, 1})) == 2);
  CHECK(per_type_N(5, Family::G3_5, CycleType({5})) == 8);
  CHECK_THROWS_AS(per_type_N(7, Family::G2_22, CycleType({4, 2, 1})), UnclassifiedType);
  CHECK_THROWS_AS(per_type_N(7, Family::G2_31, CycleType({1, 1, 1, 1, 1, 1, 1})), UnclassifiedType);
  CHECK_THROWS_AS(per_type_N(6, Family::G2_31, CycleType({6})), InvalidInput);
}

TEST_CASE("assembled counts equal the closed forms over primes") {
  for (long d : primes_in(2, 199))
    for (Family f : {Family::G2_31, Family::G2_22}) {
      const auto a = assemble_counts(d, f);
      const auto [N, M] = closed_N_M(d, f);
      CHECK_MESSAGE(a.N == N, to_string(f), " d=", d);
      CHECK_MESSAGE(a.M == M, to_string(f), " d=", d);
      if (N > 0) CHECK(*slope_row(d, f).slope == 10);
    }
}

TEST_CASE("per-type counts match brute force type by type") {
  for (long d : {5L, 7L})
    for (Family f : {Family::G2_31, Family::G2_22, Family::G3_5}) {
      const auto sigma = RamificationProfile::parse(family_sigma(f), static_cast<int>(d));
      const auto brute = count_table(sigma, CountMethod::Brute);
      for (const auto& p : partitions(static_cast<int>(d))) {
        const BigInt have = brute.count_for(p).value_or(BigInt(0));
        std::optional<BigInt> formula;
        try {
          formula = per_type_N(d, f, p);
        } catch (const UnclassifiedType&) {
        }
        CHECK_MESSAGE(formula.value_or(BigInt(0)) == have, to_string(f), " d=", d, " ", p.to_string());
      }
      const auto a = assemble_counts(d, f);
      CHECK(a.N == brute.N);
      CHECK(a.M == brute.M);
    }
}

TEST_CASE("genus formulas against the orbit genus") {
  struct Case {
    long d;
    Family f;
    long orbit, printed;
  };
  for (const auto& c : {Case{5, Family::G2_31, 88, 112}, Case{7, Family::G2_31, 343, 403},
                        Case{5, Family::G2_22, 85, 151}, Case{7, Family::G2_22, 633, 903}}) {
    const auto table = enumerate_classes(RamificationProfile::parse(family_sigma(c.f), static_cast<int>(c.d)));
    const long orbit = genus(table, decompose(table));
    CHECK(orbit == c.orbit);
    const auto g = genus_closed(c.d, c.f, orbit);
    CHECK(g.printed == c.printed);
    CHECK_FALSE(g.printed_matches());
    CHECK(g.corrected == orbit);
  }
  CHECK(genus_closed(5, Family::G2_31).gcd_sum == 6);
  CHECK(genus_closed(5, Family::G2_22).derivation == 79);
  // Growth: N / d^3 tends to 3/8 and the gcd sum is lower order.
  const auto g = genus_closed(199, Family::G2_31);
  const Rational n_ratio = Rational(assemble_counts(199, Family::G2_31).N, BigInt(199) * 199 * 199);
  CHECK(abs(n_ratio - Rational(3, 8)) < Rational(1, 100));
  CHECK(Rational(g.gcd_sum, BigInt(199) * 199 * 199) < Rational(1, 100));
  CHECK_THROWS_AS(genus_closed(3, Family::G2_31), InvalidInput);
}

TEST_CASE("De Jonquieres counts") {
  CHECK(dejonquieres(2, {{2, 1}}) == 6);
  CHECK(dejonquieres(3, {{2, 2}}) == 28);
  CHECK(dejonquieres_expanded(3, {{2, 2}}) == 28);
  for (int g = 2; g <= 8; ++g)
    for (const auto& mu : canonical_profiles(g)) {
      const auto v = dejonquieres(g, mu);
      CHECK(v > 0);
      CHECK(v == dejonquieres_expanded(g, mu));
    }
  CHECK(canonical_profiles(4).size() == 3);  // 4+1+1, 3+2+1, 2+2+2
  CHECK_THROWS_AS(dejonquieres(3, {{3, 1}}), InvalidInput);
  CHECK_THROWS_AS(dejonquieres(3, {{2, 1}, {2, 1}}), InvalidInput);
}

TEST_CASE("genus-3 probe") {
  const auto p = g3_slope_probe(2, 199);
  CHECK(p.strictly_decreasing);
  CHECK(p.above_nine);
  REQUIRE(p.rows.size() >= 2);
  CHECK(p.rows[0].d == 5);
  CHECK(*p.rows[0].slope == Rational(1548, 169));
  CHECK(*p.rows[0].slope > 9);
  CHECK(*p.rows[0].slope < Rational(28, 3));
  CHECK(*p.rows[1].slope < *p.rows[0].slope);
}
