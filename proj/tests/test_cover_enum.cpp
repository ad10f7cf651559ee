#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "ellcover/cover_enum.hpp"

using namespace ellcover;

namespace {

Permutation P(const char* s, int d) { return Permutation::parse(s, d); }

std::vector<Permutation> all_perms(int d) {
  std::vector<int> v(d);
  for (int i = 0; i < d; ++i) v[i] = i + 1;
  std::vector<Permutation> out;
  do out.push_back(Permutation::from_images(v));
  while (std::next_permutation(v.begin(), v.end()));
  return out;
}

// Independent oracle: minimum over all of S_d of the conjugated pair, ordered (beta, alpha).
std::map<std::string, int> oracle_type_counts(int d, const RamificationProfile& sigma) {
  const auto sd = all_perms(d);
  std::set<std::pair<Permutation, Permutation>> reps;
  for (const auto& a : sd)
    for (const auto& b : sd) {
      if (!is_cover_pair(a, b, sigma)) continue;
      std::pair<Permutation, Permutation> best{b, a};
      for (const auto& t : sd) best = std::min(best, {conjugate(b, t), conjugate(a, t)});
      reps.insert(best);
    }
  std::map<std::string, int> counts;
  for (const auto& [b, a] : reps) ++counts[cycle_type(b).to_string()];
  return counts;
}

std::map<std::string, int> type_counts(const CountsTable& ct) {
  std::map<std::string, int> m;
  for (const auto& tc : ct.types) m[tc.type.to_string()] = static_cast<int>(tc.n.get_si());
  return m;
}

}  // namespace

TEST_CASE("profile parsing") {
  auto s = RamificationProfile::parse("3", 5);
  CHECK(s.to_string() == "3,1,1");
  CHECK(s.genus() == 2);
  CHECK(s.ramified_count() == 1);
  CHECK(RamificationProfile::parse("2,2+ones", 7).to_string() == "2,2,1,1,1");
  CHECK(RamificationProfile::parse("(3)(1)(1)", 5) == s);
  CHECK(RamificationProfile::parse("5", 5).genus() == 3);
  CHECK_FALSE(RamificationProfile::parse("2", 4).parity_ok());
  CHECK_THROWS_AS(RamificationProfile::parse("2", 4).genus(), InvalidInput);
  CHECK_THROWS_AS(RamificationProfile::parse("6", 5), InvalidInput);
  CHECK_THROWS_AS(RamificationProfile::parse("", 5), InvalidInput);
  CHECK_THROWS_AS(RamificationProfile::parse("3,x", 5), InvalidInput);
  CHECK_THROWS_AS(RamificationProfile::parse("0", 5), InvalidInput);
}

TEST_CASE("cover pair predicate") {
  CHECK(is_cover_pair(P("(1 5)", 5), P("(1 2 3 4)", 5), RamificationProfile::parse("3", 5)));
  CHECK_FALSE(is_cover_pair(P("id", 3), P("id", 3), RamificationProfile::parse("1", 3)));
  CHECK(is_cover_pair(P("(1 2)", 3), P("(1 2 3)", 3), RamificationProfile::parse("3", 3)));
  CHECK_THROWS_AS(is_cover_pair(P("(1 2)", 3), P("(1 2)", 4), RamificationProfile::parse("3", 3)),
                  InvalidInput);
}

TEST_CASE("class enumeration matches the known small cases") {
  CHECK(enumerate_classes(RamificationProfile::parse("3", 3)).size() == 3);
  CHECK(enumerate_classes(RamificationProfile::parse("5", 5)).size() == 40);
  CHECK(enumerate_classes(RamificationProfile::parse("1,1", 2)).size() == 3);
  CHECK(enumerate_classes(RamificationProfile::parse("1", 1)).size() == 1);
}

TEST_CASE("class enumeration matches a full-S_d orbit oracle") {
  const std::vector<std::pair<int, const char*>> cases = {
      {3, "3"}, {4, "3"}, {4, "2,2"}, {4, "1"}, {5, "3"}, {5, "2,2"}, {3, "1"}, {5, "5"}};
  for (auto [d, s] : cases) {
    CAPTURE(d);
    CAPTURE(s);
    const auto sigma = RamificationProfile::parse(s, d);
    CHECK(type_counts(count_table(sigma, CountMethod::Brute)) == oracle_type_counts(d, sigma));
  }
}

TEST_CASE("counts for the genus-2 families") {
  auto ct = count_table(RamificationProfile::parse("3", 5), CountMethod::Brute);
  CHECK(ct.N == 27);
  CHECK(ct.M == 30);
  std::map<std::string, int> want{{"[5]", 10}, {"[4,1]", 4},   {"[3,2]", 6},
                                  {"[3,1,1]", 3}, {"[2,2,1]", 2}, {"[2,1,1,1]", 2}};
  CHECK(type_counts(ct) == want);

  auto c7 = count_table(RamificationProfile::parse("2,2", 7), CountMethod::Brute);
  CHECK(c7.N == 160);
  CHECK(c7.M == 200);

  auto c3 = count_table(RamificationProfile::parse("3", 3), CountMethod::Brute);
  CHECK(c3.N == 3);
  CHECK(c3.M == Rational(10, 3));
  CHECK(type_counts(c3) == std::map<std::string, int>{{"[3]", 1}, {"[2,1]", 2}});
}

TEST_CASE("burnside counting agrees with orbit enumeration for prime degree") {
  for (int d : {3, 5, 7})
    for (const char* s : {"3", "2,2"}) {
      if (d < 4 && std::string(s) == "2,2") continue;
      const auto sigma = RamificationProfile::parse(s, d);
      auto a = count_table(sigma, CountMethod::Brute);
      auto b = count_table(sigma, CountMethod::BurnsidePrime);
      CHECK(type_counts(a) == type_counts(b));
      CHECK(a.M == b.M);
    }
  CHECK_THROWS_AS(count_table(RamificationProfile::parse("3", 6), CountMethod::BurnsidePrime),
                  InvalidInput);
}

TEST_CASE("capacity bound") {
  EnumerateOptions opts;
  opts.bound = 6;
  try {
    enumerate_classes(RamificationProfile::parse("3", 7), opts);
    FAIL("expected capacity error");
  } catch (const CapacityError& e) {
    CHECK(e.bound() == 6);
    CHECK(std::string(e.what()).find("6") != std::string::npos);
  }
}

TEST_CASE("parity obstruction empties odd profiles") {
  for (int d = 2; d <= 7; ++d)
    CHECK(enumerate_classes(RamificationProfile::parse("2", d)).size() == 0);
}

TEST_CASE("representatives are canonical and totals consistent") {
  for (int d = 3; d <= 6; ++d)
    for (const char* s : {"3", "2,2", "5"}) {
      if (CycleType(std::vector<int>{s[0] - '0'}).degree() > d) continue;
      if (std::string(s) == "2,2" && d < 4) continue;
      const auto table = enumerate_classes(RamificationProfile::parse(s, d));
      auto ct = counts_from_classes(table);
      CHECK(ct.N == static_cast<long>(table.size()));
      for (std::size_t i = 0; i < table.size(); ++i) {
        const auto& c = table[i];
        auto [a, b] = canonicalize(c.alpha, c.beta);
        CHECK(a == c.alpha);
        CHECK(b == c.beta);
        CHECK(table.find(c.alpha, c.beta) == i);
        CHECK(stabilizer_order(c.alpha, c.beta) == c.stabilizer);
        if (is_prime(d)) CHECK(c.stabilizer == 1);
      }
    }
}

TEST_CASE("lookup is invariant under simultaneous conjugation") {
  std::mt19937 rng(11);
  const auto table = enumerate_classes(RamificationProfile::parse("3", 6));
  for (std::size_t i = 0; i < table.size(); ++i) {
    std::vector<int> v{1, 2, 3, 4, 5, 6};
    std::shuffle(v.begin(), v.end(), rng);
    const auto t = Permutation::from_images(v);
    CHECK(table.find(conjugate(table[i].alpha, t), conjugate(table[i].beta, t)) == i);
  }
}

TEST_CASE("stabilizer orders") {
  CHECK(stabilizer_order(P("(1 2)", 2), P("(1 2)", 2)) == 2);
  CHECK(stabilizer_order(P("id", 1), P("id", 1)) == 1);
  for (const auto& c : enumerate_classes(RamificationProfile::parse("3", 5)).classes())
    CHECK(c.stabilizer == 1);
}

TEST_CASE("weighted counts") {
  CHECK(weighted_count(5, 2, CycleType({5})) == 5);
  CHECK(weighted_count(3, 0, CycleType({3})) == 1);
  CHECK(weighted_count(4, 1, CycleType({4})) == 0);
  CHECK(weighted_count(3, 2, CycleType({3})) == 0);
  // Equals the sum of inverse stabilizer orders over classes of that beta type.
  for (int d = 2; d <= 6; ++d)
    for (int k : {0, 2}) {
      if (2 * k > d) continue;
      std::vector<int> parts(static_cast<std::size_t>(k), 2);
      const auto table = enumerate_classes(RamificationProfile(CycleType(parts).padded_to(d)));
      for (const auto& p : partitions(d)) {
        Rational sum = 0;
        for (const auto& c : table.classes())
          if (c.beta_type == p) sum += Rational(1, c.stabilizer);
        CHECK(weighted_count(d, k, p) == sum);
      }
    }
}

TEST_CASE("counts json round trip") {
  auto ct = count_table(RamificationProfile::parse("3", 5), CountMethod::Brute);
  const auto j = ct.to_json();
  CHECK(j.dump() ==
        R"({"d":5,"sigma":[3,1,1],"types":[{"type":[5],"n":10,"weight":"1/5"},)"
        R"({"type":[4,1],"n":4,"weight":"5/4"},{"type":[3,2],"n":6,"weight":"5/6"},)"
        R"({"type":[3,1,1],"n":3,"weight":"7/3"},{"type":[2,2,1],"n":2,"weight":"2"},)"
        R"({"type":[2,1,1,1],"n":2,"weight":"7/2"}],"N":27,"M":"30"})");
  auto back = CountsTable::from_json(nlohmann::json::parse(j.dump()));
  CHECK(back.to_json() == j);
}

TEST_CASE("thread count does not change results") {
  const auto sigma = RamificationProfile::parse("3", 6);
  EnumerateOptions one, four;
  one.jobs = 1;
  four.jobs = 4;
  const auto a = enumerate_classes(sigma, one);
  const auto b = enumerate_classes(sigma, four);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].alpha == b[i].alpha);
    CHECK(a[i].beta == b[i].beta);
  }
}
