#pragma once

// Symmetric-group characters (Murnaghan-Nakayama), disconnected cover counts by
// the Frobenius class-sum formula, and the exponential relation between
// disconnected and connected generating functions.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ellcover/cover_enum.hpp"
#include "json.hpp"

namespace ellcover {

// chi^shape(cls); |shape| must equal |cls|.
BigInt character_value(const CycleType& shape, const CycleType& cls);
// Degree of chi^shape by the hook length formula.
BigInt character_degree(const CycleType& shape);

struct CharacterTable {
  int d = 0;
  std::vector<CycleType> shapes;   // rows
  std::vector<CycleType> classes;  // columns
  std::vector<std::vector<BigInt>> values;
  std::vector<BigInt> degrees;

  static CharacterTable build(int d);
  const BigInt& at(std::size_t shape, std::size_t cls) const { return values[shape][cls]; }
  std::string to_csv() const;
};

// Commutator class (2^k 1^(d-2k)).
CycleType commutator_class(int d, int k);

// |{(alpha, beta) : beta in p, [alpha, beta] in (2^k 1^(d-2k))}|, no transitivity.
BigInt disconnected_count(int d, int k, const CycleType& p);
BigInt disconnected_count(const CharacterTable& table, int k, const CycleType& p);

inline constexpr int kDirectPairBound = 7;
// Same counts by looping over all of S_d x S_d, keyed by (beta type, k).
std::map<std::pair<CycleType, int>, BigInt> disconnected_counts_direct(int d);

// Graded coefficient maps keyed by (beta type, k); the grade is the type's degree.
struct GenFun {
  using Key = std::pair<CycleType, int>;
  int max_degree = 0;
  std::map<Key, Rational> coeffs;  // zero coefficients are not stored

  Rational get(const CycleType& p, int k) const;
  void add(const CycleType& p, int k, const Rational& v);
  nlohmann::ordered_json to_json() const;
  friend bool operator==(const GenFun& a, const GenFun& b) {
    return a.max_degree == b.max_degree && a.coeffs == b.coeffs;
  }
};

GenFun multiply(const GenFun& f, const GenFun& g);
// exp(f) - 1 and log(1 + f), truncated at f.max_degree; f has no constant term.
GenFun exp_minus_one(const GenFun& f);
GenFun log_one_plus(const GenFun& f);

struct GeneratingFunctions {
  GenFun disconnected;  // coefficients N_hat / d!
  GenFun connected;     // coefficients N_tilde
};

// Disconnected side from characters, connected side from enumeration.
GeneratingFunctions build_generating_functions(int d_max, const EnumerateOptions& opts = {});
GenFun connected_from_disconnected(const GenFun& disconnected);

}  // namespace ellcover
