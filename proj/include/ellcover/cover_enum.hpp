#pragma once

// Pairs (alpha, beta) in S_d x S_d with commutator of a fixed cycle type and
// transitive generated group, up to simultaneous conjugation.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ellcover/perm.hpp"
#include "json.hpp"

namespace ellcover {

inline constexpr int kDefaultBruteBound = 9;

// Ramification over the branch point, padded with ones to the cover degree.
class RamificationProfile {
 public:
  RamificationProfile() = default;
  RamificationProfile(CycleType parts);

  // Accepts "3", "3,1,1", "3 1 1", "(3)(1)(1)", "3+1s", "2,2+ones"; ones are appended up to d.
  static RamificationProfile parse(std::string_view text, int degree);

  const CycleType& type() const { return type_; }
  int degree() const { return type_.degree(); }
  // Sum of (l_i - 1).
  int total_ramification() const { return type_.degree() - type_.num_parts(); }
  int ramified_count() const;
  // An odd total ramification both breaks Riemann-Hurwitz and is an odd class.
  bool parity_ok() const { return total_ramification() % 2 == 0; }
  // Genus of the covering curve; throws when parity fails.
  int genus() const;

  // Full partition, e.g. "3,1,1".
  std::string to_string() const;
  std::vector<int> parts() const { return type_.parts(); }

  friend bool operator==(const RamificationProfile&, const RamificationProfile&) = default;

 private:
  CycleType type_;
};

struct CoverClass {
  Permutation alpha;
  Permutation beta;
  CycleType beta_type;
  Permutation commutator;
  GroupKind group = GroupKind::Other;
  // |{tau : tau fixes alpha and beta under conjugation}|
  long stabilizer = 1;
  bool primitive = true;

  std::string to_string() const;
};

bool is_cover_pair(const Permutation& a, const Permutation& b, const RamificationProfile& sigma);

// True unless the cover factors through a nontrivial isogeny of the base torus,
// i.e. unless the commutator subgroup of <a, b> is intransitive.
bool is_primitive_cover(const Permutation& a, const Permutation& b);

struct EnumerateOptions {
  int bound = kDefaultBruteBound;
  // 0 means one worker per hardware thread.
  int jobs = 0;
};

// Every alpha with commutator(alpha, beta) of type sigma and <alpha, beta> transitive,
// in lexicographic order. Work is split across threads by alpha(1).
std::vector<Permutation> valid_alphas(const Permutation& beta, const CycleType& sigma,
                                      const EnumerateOptions& opts = {});

// Generators of the centralizer of the standard representative of `t`.
std::vector<Permutation> centralizer_generators(const CycleType& t);

class ClassTable {
 public:
  ClassTable() = default;
  using TypeIndex = std::map<CycleType, std::unordered_map<Permutation, std::size_t>>;
  ClassTable(RamificationProfile sigma, std::vector<CoverClass> classes, TypeIndex index);

  int degree() const { return sigma_.degree(); }
  const RamificationProfile& sigma() const { return sigma_; }
  const std::vector<CoverClass>& classes() const { return classes_; }
  std::size_t size() const { return classes_.size(); }
  const CoverClass& operator[](std::size_t i) const { return classes_[i]; }

  // Index of the class containing (a, b), if it is a cover pair for sigma.
  std::optional<std::size_t> find(const Permutation& a, const Permutation& b) const;

 private:
  RamificationProfile sigma_;
  std::vector<CoverClass> classes_;
  // Per beta type: every alpha paired with the standard representative, mapped
  // to its class (whole centralizer orbits, not just the minima).
  TypeIndex index_;
};

// Classes sorted by beta type (partitions in descending lexicographic order),
// then by alpha. Throws CapacityError when d exceeds opts.bound.
ClassTable enumerate_classes(const RamificationProfile& sigma, const EnumerateOptions& opts = {});

// Canonical representative of the class of (a, b): beta moved to the standard
// representative of its type, alpha minimized over that representative's centralizer.
std::pair<Permutation, Permutation> canonicalize(const Permutation& a, const Permutation& b);

long stabilizer_order(const Permutation& a, const Permutation& b);

enum class CountMethod { Brute, BurnsidePrime };
CountMethod parse_count_method(std::string_view name);

struct TypeCount {
  CycleType type;
  BigInt n;
  // Sum over beta's parts of 1/part.
  Rational weight;
};

struct CountsTable {
  int d = 0;
  RamificationProfile sigma;
  std::vector<TypeCount> types;
  BigInt N = 0;
  Rational M = 0;

  std::optional<BigInt> count_for(const CycleType& t) const;
  nlohmann::ordered_json to_json() const;
  static CountsTable from_json(const nlohmann::json& j);
};

CountsTable counts_from_classes(const ClassTable& table);
// Counts restricted to a subset of classes (a component, say).
CountsTable counts_from_classes(const ClassTable& table, const std::vector<std::size_t>& members);

CountsTable count_table(const RamificationProfile& sigma, CountMethod method,
                        const EnumerateOptions& opts = {});

// |Cov_p| / d! for the profile (2^k 1^(d-2k)) and beta of type `p`: connected pairs
// weighted by 1/|stabilizer|. Zero when 2k > d or k is odd.
Rational weighted_count(int d, int k, const CycleType& p, const EnumerateOptions& opts = {});

bool is_prime(long n);

}  // namespace ellcover
