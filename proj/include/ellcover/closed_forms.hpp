#pragma once

// Closed-form counts, genus formulas, divisor-sum identities, Eisenstein series,
// De Jonquieres coefficients and the genus-3 slope probe. Pure arithmetic, no enumeration.

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ellcover/geometry.hpp"

namespace ellcover {

// ---------------------------------------------------------------------------
// Divisor sums and q-series

BigInt sigma(int i, long n);

class QSeries {
 public:
  explicit QSeries(int order = 0) : c_(static_cast<std::size_t>(order) + 1, Rational(0)) {}
  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& operator[](int k) const { return c_[static_cast<std::size_t>(k)]; }
  Rational& operator[](int k) { return c_[static_cast<std::size_t>(k)]; }

  QSeries operator+(const QSeries& o) const;
  QSeries operator-(const QSeries& o) const;
  QSeries operator*(const QSeries& o) const;
  QSeries operator*(const Rational& s) const;
  // q d/dq
  QSeries q_derivative() const;
  bool operator==(const QSeries& o) const;

 private:
  std::vector<Rational> c_;
};

enum class Eisenstein { P, Q, R };
QSeries eisenstein(Eisenstein which, int order);
// All three Ramanujan differential equations, coefficientwise to the given order.
bool ramanujan_check(int order);
bool ramanujan_check(const QSeries& P, const QSeries& Q, const QSeries& R);

// sum_{k=1}^{d-1} sigma_1(k) sigma_1(d-k) versus (1/12 - d/2) sigma_1(d) + (5/12) sigma_3(d).
std::pair<Rational, Rational> convolution_identity(long d);
// (1/12)(d-1)(d+1)(5d-6), the prime-d value of the right side above.
Rational convolution_prime_value(long d);

struct SumIdentity {
  BigInt lhs;          // sum over two-length types l1 > l2 of l1 * l2
  Rational rhs;        // (1/2)(sum sigma_1 sigma_1 - (d - 1)), the prime-d form
  Rational rhs_general;  // same with sum_{l | d, l < d} l (d - l) subtracted instead
  bool holds() const { return Rational(lhs) == rhs; }
  bool holds_general() const { return Rational(lhs) == rhs_general; }
};
SumIdentity sum_identity_l1l2(long d);

// ---------------------------------------------------------------------------
// Families and per-type counts (d prime)

enum class Family { G2_31, G2_22, G3_5 };
Family parse_family(std::string_view name);
std::string to_string(Family f);
// "3", "2,2", "5"
std::string family_sigma(Family f);
int family_genus(Family f);
std::optional<Family> family_for(const RamificationProfile& sigma);

// Cycle type as (length, multiplicity) with lengths descending.
struct TypeShape {
  std::vector<std::pair<long, long>> parts;
  static TypeShape from(const CycleType& t);
  CycleType to_cycle_type() const;
  long degree() const;
  Rational weight() const;  // sum multiplicity / length
  std::string to_string() const;
};

struct UnclassifiedType : InvalidInput {
  using InvalidInput::InvalidInput;
};

// The case-analysis count for one beta type; throws UnclassifiedType outside the case list.
BigInt per_type_N(long d, Family f, const CycleType& type);
BigInt per_type_N(long d, Family f, const TypeShape& type);

// Visits every type in the family's case list with its count.
void for_each_classified_type(long d, Family f,
                              const std::function<void(const TypeShape&, const BigInt&)>& visit);

struct AssembledCounts {
  long d = 0;
  Family family{};
  BigInt N;
  Rational M;
  long types = 0;  // classified types with nonzero count
};
AssembledCounts assemble_counts(long d, Family f);

// Closed N and M for the two genus-2 families.
std::pair<BigInt, Rational> closed_N_M(long d, Family f);

// ---------------------------------------------------------------------------
// Genus of the family curve for the genus-2 families, d >= 5 prime

struct GenusClosed {
  long d = 0;
  Family family{};
  BigInt gcd_sum;     // local orbits off the long-cycle stratum, a sum of gcd products
  BigInt printed;     // the published closed form, evaluated literally
  BigInt derivation;  // Riemann-Hurwitz with the local orbit structure as stated in the proof
  BigInt corrected;   // same, with the 2^a 1^b orbit sizes taken as 2/(a,2)
  // Matches against an orbit-computed genus, when one is supplied.
  std::optional<long> orbit;
  bool printed_matches() const { return orbit && printed == *orbit; }
};
GenusClosed genus_closed(long d, Family f, std::optional<long> orbit_genus = std::nullopt);

// ---------------------------------------------------------------------------
// De Jonquieres

// mu given as (value a_i, multiplicity n_i) pairs, sum n_i = g - 1, sum n_i a_i = 2g - 2.
using DivisorProfile = std::vector<std::pair<int, int>>;
// [R(t)^g / P(t)] at t_1^{n_1}...t_m^{n_m} by truncated multivariate division.
BigInt dejonquieres(int g, const DivisorProfile& mu);
// Same coefficient from the expansion sum_j A^{g-1-j} (A - B)^j.
BigInt dejonquieres_expanded(int g, const DivisorProfile& mu);
// All profiles of 2g - 2 into exactly g - 1 parts.
std::vector<DivisorProfile> canonical_profiles(int g);

// ---------------------------------------------------------------------------
// Sweeps and the genus-3 probe

std::vector<long> primes_in(long lo, long hi);

struct SlopeRow {
  long d = 0;
  Family family{};
  BigInt N;
  Rational M;
  std::optional<Rational> slope;  // empty when there are no covers
};
SlopeRow slope_row(long d, Family f);

struct ProbeResult {
  std::vector<SlopeRow> rows;
  bool strictly_decreasing = true;
  bool above_nine = true;
};
ProbeResult g3_slope_probe(long lo, long hi);

}  // namespace ellcover
