#pragma once

// Permutations of {0..d-1} (printed 1-based), cycle types and the small amount
// of group theory the cover enumeration needs.
//
// Composition is right-factor-first: (p * q)(x) = p(q(x)).

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ellcover/errors.hpp"
#include "ellcover/rational.hpp"

namespace ellcover {

inline constexpr int kMaxDegree = 32;

class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(int degree);
  // Images are 1-based: images[i] = pi(i + 1).
  static Permutation from_images(std::span<const int> images);
  // Disjoint cycles with 1-based labels; points not mentioned are fixed.
  static Permutation from_cycles(int degree, const std::vector<std::vector<int>>& cycles);
  // Cycle notation such as "(1 5)(2 3 4)"; see parse_cycles().
  static Permutation parse(std::string_view text, int degree);

  int degree() const { return n_; }

  // 0-based application.
  int operator()(int x) const { return img_[static_cast<std::size_t>(x)]; }

  // 1-based images.
  std::vector<int> images() const;

  Permutation inverse() const {
    Permutation r;
    r.n_ = n_;
    for (int i = 0; i < n_; ++i) r.img_[img_[i]] = static_cast<std::uint8_t>(i);
    return r;
  }

  bool is_identity() const {
    for (int i = 0; i < n_; ++i)
      if (img_[i] != i) return false;
    return true;
  }

  // Unchecked composition; callers that cannot guarantee equal degrees use compose().
  friend Permutation operator*(const Permutation& p, const Permutation& q) {
    Permutation r;
    r.n_ = q.n_;
    for (int i = 0; i < q.n_; ++i) r.img_[i] = p.img_[q.img_[i]];
    return r;
  }

  // Lexicographic on the image sequence; degree breaks ties.
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    for (int i = 0; i < a.n_; ++i)
      if (auto c = a.img_[i] <=> b.img_[i]; c != 0) return c;
    return std::strong_ordering::equal;
  }
  friend bool operator==(const Permutation& a, const Permutation& b) {
    return (a <=> b) == 0;
  }

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ull ^ n_;
    for (int i = 0; i < n_; ++i) h = (h ^ img_[i]) * 1099511628211ull;
    return h;
  }

  // Raw mutable access for enumeration loops.
  std::uint8_t* data() { return img_.data(); }
  const std::uint8_t* data() const { return img_.data(); }
  void set_degree(int d) { n_ = static_cast<std::uint8_t>(d); }

 private:
  std::array<std::uint8_t, kMaxDegree> img_{};
  std::uint8_t n_ = 0;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const { return p.hash(); }
};

// A multiset of positive integers kept in descending order.
class CycleType {
 public:
  CycleType() = default;
  explicit CycleType(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int degree() const { return degree_; }
  int num_parts() const { return static_cast<int>(parts_.size()); }
  // a_i = number of parts equal to i, indexed 0..degree.
  std::vector<int> multiplicities() const;
  int count(int length) const;
  // Distinct part lengths, descending.
  std::vector<int> distinct_lengths() const;

  CycleType padded_to(int degree) const;
  // Parts > 1 only.
  CycleType nontrivial() const;

  // sum over parts of 1/part, i.e. a_1/1 + a_2/2 + ...
  Rational reciprocal_sum() const;
  long long lcm() const;
  int sign() const { return (degree_ - num_parts()) % 2 == 0 ? 1 : -1; }

  std::string to_string() const;

  friend auto operator<=>(const CycleType& a, const CycleType& b) {
    return a.parts_ <=> b.parts_;
  }
  friend bool operator==(const CycleType&, const CycleType&) = default;

 private:
  std::vector<int> parts_;
  int degree_ = 0;
};

// All partitions of n, in descending lexicographic order: [n], [n-1,1], ...
std::vector<CycleType> partitions(int n);

Permutation compose(const Permutation& p, const Permutation& q);
Permutation commutator(const Permutation& a, const Permutation& b);
// tau * p * tau^-1
Permutation conjugate(const Permutation& p, const Permutation& tau);

// Disjoint cycles, 0-based, each starting at its smallest point, sorted by that point.
std::vector<std::vector<int>> cycles(const Permutation& p);
CycleType cycle_type(const Permutation& p);
int sign(const Permutation& p);
int order(const Permutation& p);

// d! / prod_i (i^{a_i} a_i!)
BigInt class_size(const CycleType& t);
// prod_i i^{a_i} a_i!
BigInt centralizer_order(const CycleType& t);
BigInt factorial(int n);

// Cycles of descending length on consecutive points: [3,2] -> (1 2 3)(4 5).
Permutation standard_representative(const CycleType& t);

std::vector<std::vector<int>> orbits(int degree, std::span<const Permutation> gens);
bool is_transitive(int degree, std::span<const Permutation> gens);
bool is_transitive(std::span<const Permutation> gens);

// Order of <gens> by Schreier-Sims.
BigInt group_order(int degree, std::span<const Permutation> gens);

enum class GroupKind { Symmetric, Alternating, Other };
std::string to_string(GroupKind k);
GroupKind generates_alternating_or_symmetric(std::span<const Permutation> gens);

// Lexicographically smallest tau with tau p tau^-1 = q, if the cycle types agree.
std::optional<Permutation> conjugating_element(const Permutation& p, const Permutation& q);

// Grammar (whitespace-insensitive):
//   perm  := "id" | "()" | cycle*
//   cycle := "(" label (sep? label)* ")"      sep := "," | whitespace
// Labels are 1-based and at most `degree`; cycles must be disjoint.
std::vector<std::vector<int>> parse_cycles(std::string_view text);
std::string to_cycle_string(const Permutation& p);

}  // namespace ellcover

template <>
struct std::hash<ellcover::Permutation> {
  std::size_t operator()(const ellcover::Permutation& p) const { return p.hash(); }
};
