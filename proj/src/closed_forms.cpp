#include "ellcover/closed_forms.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace ellcover {

namespace {

BigInt binom(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

BigInt as_integer(Rational r, const char* what) {
  r.canonicalize();
  if (!is_integer(r)) throw ConsistencyError(std::string(what) + " is not integral: " + to_string(r));
  return r.get_num();
}

void require_prime(long d) {
  if (!is_prime(d)) throw InvalidInput("degree " + std::to_string(d) + " is not prime");
}

}  // namespace

// ---------------------------------------------------------------------------
// Divisor sums and q-series

BigInt sigma(int i, long n) {
  if (n < 1) throw InvalidInput("sigma needs n >= 1");
  if (i < 0) throw InvalidInput("sigma needs i >= 0");
  BigInt total = 0, p;
  for (long k = 1; k * k <= n; ++k) {
    if (n % k) continue;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(i));
    total += p;
    if (long j = n / k; j != k) {
      mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(j), static_cast<unsigned long>(i));
      total += p;
    }
  }
  return total;
}

QSeries QSeries::operator+(const QSeries& o) const {
  QSeries r(std::min(order(), o.order()));
  for (int k = 0; k <= r.order(); ++k) r[k] = (*this)[k] + o[k];
  return r;
}

QSeries QSeries::operator-(const QSeries& o) const {
  QSeries r(std::min(order(), o.order()));
  for (int k = 0; k <= r.order(); ++k) r[k] = (*this)[k] - o[k];
  return r;
}

QSeries QSeries::operator*(const QSeries& o) const {
  QSeries r(std::min(order(), o.order()));
  for (int i = 0; i <= r.order(); ++i) {
    if ((*this)[i] == 0) continue;
    for (int j = 0; i + j <= r.order(); ++j) r[i + j] += (*this)[i] * o[j];
  }
  return r;
}

QSeries QSeries::operator*(const Rational& s) const {
  QSeries r(order());
  for (int k = 0; k <= order(); ++k) r[k] = (*this)[k] * s;
  return r;
}

QSeries QSeries::q_derivative() const {
  QSeries r(order());
  for (int k = 0; k <= order(); ++k) r[k] = (*this)[k] * k;
  return r;
}

bool QSeries::operator==(const QSeries& o) const {
  if (order() != o.order()) return false;
  for (int k = 0; k <= order(); ++k)
    if ((*this)[k] != o[k]) return false;
  return true;
}

QSeries eisenstein(Eisenstein which, int order) {
  if (order < 0) throw InvalidInput("series order must be >= 0");
  int power = 1;
  long scale = -24;
  if (which == Eisenstein::Q) power = 3, scale = 240;
  if (which == Eisenstein::R) power = 5, scale = -504;
  QSeries s(order);
  s[0] = 1;
  for (int n = 1; n <= order; ++n) s[n] = Rational(sigma(power, n) * scale);
  return s;
}

bool ramanujan_check(const QSeries& P, const QSeries& Q, const QSeries& R) {
  const bool p = P.q_derivative() == (P * P - Q) * Rational(1, 12);
  const bool q = Q.q_derivative() == (P * Q - R) * Rational(1, 3);
  const bool r = R.q_derivative() == (P * R - Q * Q) * Rational(1, 2);
  return p && q && r;
}

bool ramanujan_check(int order) {
  if (order < 2) throw InvalidInput("Ramanujan check needs order >= 2");
  return ramanujan_check(eisenstein(Eisenstein::P, order), eisenstein(Eisenstein::Q, order),
                         eisenstein(Eisenstein::R, order));
}

std::pair<Rational, Rational> convolution_identity(long d) {
  if (d < 2) throw InvalidInput("convolution identity needs d >= 2");
  BigInt lhs = 0;
  for (long k = 1; k < d; ++k) lhs += sigma(1, k) * sigma(1, d - k);
  Rational rhs = (Rational(1, 12) - Rational(d, 2)) * Rational(sigma(1, d)) +
                 Rational(5, 12) * Rational(sigma(3, d));
  rhs.canonicalize();
  return {Rational(lhs), rhs};
}

Rational convolution_prime_value(long d) {
  Rational r = Rational(1, 12) * Rational((d - 1) * (d + 1)) * Rational(5 * d - 6);
  r.canonicalize();
  return r;
}

namespace {

// Every (l1, a1, l2, a2) with l1 > l2 >= 1, a1, a2 >= 1 and a1 l1 + a2 l2 = d.
template <typename F>
void for_each_two_length(long d, F&& f) {
  for (long l1 = 2; l1 < d; ++l1)
    for (long a1 = 1; a1 * l1 < d; ++a1) {
      const long rem = d - a1 * l1;
      for (long l2 = 1; l2 < l1 && l2 <= rem; ++l2)
        if (rem % l2 == 0) f(l1, a1, l2, rem / l2);
    }
}

// Every (l1, a1, l2, a2, l3, a3) with l1 > l2 > l3 >= 1, all a >= 1, summing to d.
template <typename F>
void for_each_three_length(long d, bool split_only, F&& f) {
  for (long l2 = 2; l2 < d; ++l2)
    for (long l3 = 1; l3 < l2; ++l3) {
      const long lo = split_only ? l2 + l3 : l2 + 1;
      const long hi = split_only ? l2 + l3 : d;
      for (long l1 = lo; l1 <= hi; ++l1)
        for (long a1 = 1; a1 * l1 + l2 + l3 <= d; ++a1)
          for (long a2 = 1; a1 * l1 + a2 * l2 + l3 <= d; ++a2) {
            const long rem = d - a1 * l1 - a2 * l2;
            if (rem % l3 == 0) f(l1, a1, l2, a2, l3, rem / l3);
          }
    }
}

}  // namespace

SumIdentity sum_identity_l1l2(long d) {
  if (d < 2) throw InvalidInput("sum identity needs d >= 2");
  SumIdentity s;
  s.lhs = 0;
  for_each_two_length(d, [&](long l1, long, long l2, long) { s.lhs += l1 * l2; });
  BigInt conv = 0;
  for (long k = 1; k < d; ++k) conv += sigma(1, k) * sigma(1, d - k);
  BigInt equal_lengths = 0;
  for (long l = 1; l < d; ++l)
    if (d % l == 0) equal_lengths += l * (d - l);
  s.rhs = Rational(conv - (d - 1), 2);
  s.rhs_general = Rational(conv - equal_lengths, 2);
  s.rhs.canonicalize();
  s.rhs_general.canonicalize();
  return s;
}

// ---------------------------------------------------------------------------
// Families

Family parse_family(std::string_view name) {
  if (name == "g2_31" || name == "g2-31") return Family::G2_31;
  if (name == "g2_22" || name == "g2-22") return Family::G2_22;
  if (name == "g3_5" || name == "g3-5") return Family::G3_5;
  throw InvalidInput("unknown family '" + std::string(name) + "' (expected g2_31, g2_22 or g3_5)");
}

std::string to_string(Family f) {
  switch (f) {
    case Family::G2_31: return "g2_31";
    case Family::G2_22: return "g2_22";
    case Family::G3_5: return "g3_5";
  }
  return "?";
}

std::string family_sigma(Family f) {
  switch (f) {
    case Family::G2_31: return "3";
    case Family::G2_22: return "2,2";
    case Family::G3_5: return "5";
  }
  return "";
}

int family_genus(Family f) { return f == Family::G3_5 ? 3 : 2; }

std::optional<Family> family_for(const RamificationProfile& sigma) {
  const auto nt = sigma.type().nontrivial();
  if (nt == CycleType({3})) return Family::G2_31;
  if (nt == CycleType({2, 2})) return Family::G2_22;
  if (nt == CycleType({5})) return Family::G3_5;
  return std::nullopt;
}

TypeShape TypeShape::from(const CycleType& t) {
  TypeShape s;
  for (int l : t.distinct_lengths()) s.parts.emplace_back(l, t.count(l));
  return s;
}

CycleType TypeShape::to_cycle_type() const {
  std::vector<int> out;
  for (auto [l, a] : parts) out.insert(out.end(), static_cast<std::size_t>(a), static_cast<int>(l));
  return CycleType(std::move(out));
}

long TypeShape::degree() const {
  long d = 0;
  for (auto [l, a] : parts) d += l * a;
  return d;
}

Rational TypeShape::weight() const {
  Rational w = 0;
  for (auto [l, a] : parts) w += Rational(a, l);
  w.canonicalize();
  return w;
}

std::string TypeShape::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) os << ",";
    os << parts[i].first;
    if (parts[i].second > 1) os << "^" << parts[i].second;
  }
  os << "]";
  return os.str();
}

namespace {

BigInt long_cycle_count(long d, Family f) {
  switch (f) {
    case Family::G2_31: return binom(d, 3);
    case Family::G2_22: return binom(d, 4);
    case Family::G3_5: return 8 * binom(d, 5);
  }
  return 0;
}

BigInt two_length_count(long d, Family f, long l1, long a1, long l2, long a2) {
  const bool transposition_type = l1 == 2 && l2 == 1;
  switch (f) {
    case Family::G2_31: return BigInt(l1 * l2);
    case Family::G2_22:
      // Splitting a transposition from fixed points: a1 counts the 2-cycles, a2 the fixed points.
      if (transposition_type) return BigInt(a2 - 1);
      return BigInt(l1 * l2 * (l1 - 2));
    case Family::G3_5: {
      if (transposition_type) return BigInt(8 * (a1 - 1));
      const BigInt twice = BigInt(l1 * l2) *
                           (3 * l1 * l1 + 3 * l2 * l2 - 19 * l1 - 11 * l2 + 4 * d + 22);
      return as_integer(Rational(twice, 2), "two-length count");
    }
  }
  return 0;
}

std::optional<BigInt> three_length_count(Family f, long l1, long l2, long l3) {
  const bool split = l1 == l2 + l3;
  switch (f) {
    case Family::G2_31: return std::nullopt;
    case Family::G2_22:
      if (!split) return std::nullopt;
      return BigInt(l1 * l2 * l3);
    case Family::G3_5: return BigInt((split ? 7 : 11) * l1 * l2 * l3);
  }
  return std::nullopt;
}

}  // namespace

BigInt per_type_N(long d, Family f, const TypeShape& type) {
  require_prime(d);
  if (type.degree() != d)
    throw InvalidInput("type " + type.to_string() + " is not a partition of " + std::to_string(d));
  const auto& p = type.parts;
  if (p.size() == 1 && p[0].first == d) return long_cycle_count(d, f);
  if (p.size() == 2) return two_length_count(d, f, p[0].first, p[0].second, p[1].first, p[1].second);
  if (p.size() == 3)
    if (auto n = three_length_count(f, p[0].first, p[1].first, p[2].first)) return *n;
  throw UnclassifiedType("unclassified type " + type.to_string() + " for family " + to_string(f));
}

BigInt per_type_N(long d, Family f, const CycleType& type) {
  return per_type_N(d, f, TypeShape::from(type));
}

void for_each_classified_type(long d, Family f,
                              const std::function<void(const TypeShape&, const BigInt&)>& visit) {
  require_prime(d);
  TypeShape s;
  s.parts = {{d, 1}};
  visit(s, long_cycle_count(d, f));
  for_each_two_length(d, [&](long l1, long a1, long l2, long a2) {
    s.parts = {{l1, a1}, {l2, a2}};
    visit(s, two_length_count(d, f, l1, a1, l2, a2));
  });
  if (f == Family::G2_31) return;
  for_each_three_length(d, f == Family::G2_22, [&](long l1, long a1, long l2, long a2, long l3, long a3) {
    s.parts = {{l1, a1}, {l2, a2}, {l3, a3}};
    visit(s, *three_length_count(f, l1, l2, l3));
  });
}

AssembledCounts assemble_counts(long d, Family f) {
  AssembledCounts out;
  out.d = d;
  out.family = f;
  out.N = 0;
  // Accumulate M over the common denominator lcm(1..d) to keep the inner loop integral.
  BigInt den = 1;
  for (long l = 2; l <= d; ++l) mpz_lcm_ui(den.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(l));
  BigInt scaled = 0;
  for_each_classified_type(d, f, [&](const TypeShape& s, const BigInt& n) {
    if (n == 0) return;
    ++out.types;
    out.N += n;
    BigInt w = 0;
    for (auto [l, a] : s.parts) w += (den / l) * a;
    scaled += n * w;
  });
  out.M = Rational(scaled, den);
  out.M.canonicalize();
  return out;
}

std::pair<BigInt, Rational> closed_N_M(long d, Family f) {
  require_prime(d);
  const BigInt core = BigInt(d - 2) * (d - 1) * (d + 1);
  switch (f) {
    case Family::G2_31: {
      Rational M = Rational(5, 12) * Rational(core);
      M.canonicalize();
      return {as_integer(Rational(3, 8) * Rational(core), "closed N"), M};
    }
    case Family::G2_22: {
      const BigInt q = core * (d - 3);
      Rational M = Rational(5, 24) * Rational(q);
      M.canonicalize();
      return {as_integer(Rational(1, 6) * Rational(q), "closed N"), M};
    }
    case Family::G3_5: break;
  }
  throw InvalidInput("no closed N, M for family " + to_string(f));
}

// ---------------------------------------------------------------------------
// Genus

GenusClosed genus_closed(long d, Family f, std::optional<long> orbit_genus) {
  require_prime(d);
  if (d < 5) throw InvalidInput("closed genus formulas need d >= 5");
  if (f == Family::G3_5) throw InvalidInput("no closed genus formula for family g3_5");
  GenusClosed g;
  g.d = d;
  g.family = f;
  g.orbit = orbit_genus;

  const BigInt N = assemble_counts(d, f).N;
  const BigInt long_orbits = as_integer(Rational(long_cycle_count(d, f), d), "long-cycle orbits");
  auto gcd = [](long a, long b) { return std::gcd(a, b); };
  auto from_ram = [&](const BigInt& ram) -> BigInt { return 1 - N + 6 * ram; };

  if (f == Family::G2_31) {
    BigInt S = 0, ram = long_orbits * (d - 1);
    for_each_two_length(d, [&](long l1, long a1, long l2, long a2) {
      const long orbits = gcd(l1, a1) * gcd(l2, a2);
      S += orbits;
      ram += l1 * l2 - orbits;
    });
    g.gcd_sum = S;
    g.printed = as_integer(Rational(1) + Rational(BigInt(d - 1) * (d - 2) * (15 * d + 23), 8) - 6 * Rational(S),
                           "printed genus");
    g.derivation = g.corrected = from_ram(ram);
    return g;
  }

  // Genus 2, (2,2).
  BigInt S3 = 0, S2 = 0;
  Rational S1 = 0;
  BigInt ram_common = long_orbits * (d - 1);
  for_each_three_length(d, true, [&](long l1, long a1, long l2, long a2, long l3, long a3) {
    const long orbits = gcd(l1, a1) * gcd(l2, a2) * gcd(l3, a3);
    S3 += orbits;
    ram_common += l1 * l2 * l3 - orbits;
  });
  for_each_two_length(d, [&](long l1, long a1, long l2, long a2) {
    const long orbits = (l1 - 2) * gcd(l1, a1) * gcd(l2, a2);
    S2 += orbits;
    ram_common += (l1 - 2) * l1 * l2 - orbits;
  });
  BigInt ram_stated = ram_common, ram_fixed = ram_common, S1_fixed = 0;
  for (long twos = 1; 2 * twos < d; ++twos) {
    const long ones = d - 2 * twos;
    const long n = ones - 1;
    const long g2 = gcd(twos, 2);
    S1 += Rational(n, g2);
    // As stated: n / (a,2) orbits of size (a,2).
    ram_stated += n - as_integer(Rational(n, g2), "stated orbit count");
    // Orbits are fixed exactly when the number of 2-cycles is even.
    const BigInt orbits = as_integer(Rational(n * g2, 2), "orbit count");
    S1_fixed += orbits;
    ram_fixed += n - orbits;
  }
  g.gcd_sum = S3 + S2 + S1_fixed;
  Rational printed = Rational(1) +
                     Rational(BigInt(d - 1) * (d - 3) * (10 * d * d - 13 * d - 14), 12) -
                     6 * (Rational(S3) - Rational(S2) - S1);
  g.printed = as_integer(printed, "printed genus");
  g.derivation = from_ram(ram_stated);
  g.corrected = from_ram(ram_fixed);
  return g;
}

// ---------------------------------------------------------------------------
// De Jonquieres

namespace {

// Dense polynomial in m variables truncated at exponents <= bound_i.
class TruncatedPoly {
 public:
  explicit TruncatedPoly(std::vector<int> bounds) : bounds_(std::move(bounds)) {
    std::size_t n = 1;
    for (int b : bounds_) n *= static_cast<std::size_t>(b + 1);
    c_.assign(n, BigInt(0));
  }
  std::size_t size() const { return c_.size(); }
  BigInt& at(std::size_t i) { return c_[i]; }
  const BigInt& at(std::size_t i) const { return c_[i]; }
  const BigInt& top() const { return c_.back(); }

  std::vector<int> exponents(std::size_t idx) const {
    std::vector<int> e(bounds_.size());
    for (std::size_t v = 0; v < bounds_.size(); ++v) {
      e[v] = static_cast<int>(idx % static_cast<std::size_t>(bounds_[v] + 1));
      idx /= static_cast<std::size_t>(bounds_[v] + 1);
    }
    return e;
  }
  std::optional<std::size_t> index(const std::vector<int>& e) const {
    std::size_t idx = 0, stride = 1;
    for (std::size_t v = 0; v < bounds_.size(); ++v) {
      if (e[v] > bounds_[v]) return std::nullopt;
      idx += stride * static_cast<std::size_t>(e[v]);
      stride *= static_cast<std::size_t>(bounds_[v] + 1);
    }
    return idx;
  }

  static TruncatedPoly one(const std::vector<int>& bounds) {
    TruncatedPoly p(bounds);
    p.c_[0] = 1;
    return p;
  }
  // constant + sum_i coeff_i t_i
  static TruncatedPoly linear(const std::vector<int>& bounds, long constant, const std::vector<long>& coeff) {
    TruncatedPoly p(bounds);
    p.c_[0] = constant;
    std::vector<int> e(bounds.size(), 0);
    for (std::size_t v = 0; v < bounds.size(); ++v) {
      e[v] = 1;
      if (auto i = p.index(e)) p.c_[*i] += coeff[v];
      e[v] = 0;
    }
    return p;
  }

  TruncatedPoly operator*(const TruncatedPoly& o) const {
    TruncatedPoly r(bounds_);
    for (std::size_t i = 0; i < size(); ++i) {
      if (c_[i] == 0) continue;
      const auto ei = exponents(i);
      for (std::size_t j = 0; j < size(); ++j) {
        if (o.c_[j] == 0) continue;
        auto e = o.exponents(j);
        for (std::size_t v = 0; v < e.size(); ++v) e[v] += ei[v];
        if (auto k = r.index(e)) r.c_[*k] += c_[i] * o.c_[j];
      }
    }
    return r;
  }
  TruncatedPoly operator+(const TruncatedPoly& o) const {
    TruncatedPoly r(bounds_);
    for (std::size_t i = 0; i < size(); ++i) r.c_[i] = c_[i] + o.c_[i];
    return r;
  }
  TruncatedPoly pow(int n) const {
    TruncatedPoly r = one(bounds_);
    for (int k = 0; k < n; ++k) r = r * *this;
    return r;
  }

 private:
  std::vector<int> bounds_;
  std::vector<BigInt> c_;
};

void validate_profile(int g, const DivisorProfile& mu) {
  if (g < 2) throw InvalidInput("De Jonquieres count needs g >= 2");
  long parts = 0, total = 0;
  std::vector<int> seen;
  for (auto [a, n] : mu) {
    if (a < 1 || n < 1) throw InvalidInput("profile entries must be positive");
    if (std::find(seen.begin(), seen.end(), a) != seen.end())
      throw InvalidInput("profile values must be distinct");
    seen.push_back(a);
    parts += n;
    total += static_cast<long>(a) * n;
  }
  if (parts != g - 1 || total != 2 * g - 2)
    throw InvalidInput("profile must split 2g-2 = " + std::to_string(2 * g - 2) + " into g-1 = " +
                       std::to_string(g - 1) + " parts");
}

struct ProfilePolys {
  std::vector<int> bounds;
  TruncatedPoly A, B;
};

ProfilePolys profile_polys(const DivisorProfile& mu) {
  std::vector<int> bounds;
  std::vector<long> sq, lin;
  for (auto [a, n] : mu) {
    bounds.push_back(n);
    sq.push_back(static_cast<long>(a) * a);
    lin.push_back(a);
  }
  return {bounds, TruncatedPoly::linear(bounds, 0, sq), TruncatedPoly::linear(bounds, 0, lin)};
}

}  // namespace

BigInt dejonquieres(int g, const DivisorProfile& mu) {
  validate_profile(g, mu);
  auto [bounds, A, B] = profile_polys(mu);
  const TruncatedPoly R = TruncatedPoly::one(bounds) + A;
  // 1 / (1 + B) = sum_j (-B)^j; B has no constant term so g - 1 terms suffice.
  TruncatedPoly minus_b = B;
  for (std::size_t i = 0; i < minus_b.size(); ++i) minus_b.at(i) = -minus_b.at(i);
  TruncatedPoly inverse = TruncatedPoly::one(bounds), term = TruncatedPoly::one(bounds);
  for (int j = 1; j <= g - 1; ++j) {
    term = term * minus_b;
    inverse = inverse + term;
  }
  return (R.pow(g) * inverse).top();
}

BigInt dejonquieres_expanded(int g, const DivisorProfile& mu) {
  validate_profile(g, mu);
  auto [bounds, A, B] = profile_polys(mu);
  TruncatedPoly diff = A;
  for (std::size_t i = 0; i < diff.size(); ++i) diff.at(i) -= B.at(i);
  TruncatedPoly sum(bounds);
  for (int j = 0; j <= g - 1; ++j) sum = sum + A.pow(g - 1 - j) * diff.pow(j);
  return sum.top();
}

std::vector<DivisorProfile> canonical_profiles(int g) {
  if (g < 2) throw InvalidInput("canonical profiles need g >= 2");
  std::vector<DivisorProfile> out;
  for (const auto& p : partitions(2 * g - 2)) {
    if (p.num_parts() != g - 1) continue;
    DivisorProfile mu;
    for (int a : p.distinct_lengths()) mu.emplace_back(a, p.count(a));
    out.push_back(std::move(mu));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Sweeps

std::vector<long> primes_in(long lo, long hi) {
  std::vector<long> out;
  for (long d = std::max(lo, 2L); d <= hi; ++d)
    if (is_prime(d)) out.push_back(d);
  return out;
}

SlopeRow slope_row(long d, Family f) {
  const auto c = assemble_counts(d, f);
  SlopeRow row{d, f, c.N, c.M, std::nullopt};
  if (c.N > 0) {
    const auto sigma = RamificationProfile::parse(family_sigma(f), static_cast<int>(d));
    row.slope = slope(static_cast<int>(d), sigma, c.N, c.M).slope;
  }
  return row;
}

ProbeResult g3_slope_probe(long lo, long hi) {
  ProbeResult r;
  for (long d : primes_in(std::max(lo, 5L), hi)) {
    auto row = slope_row(d, Family::G3_5);
    if (!row.slope) continue;
    if (*row.slope <= 9) r.above_nine = false;
    if (!r.rows.empty() && !(*row.slope < *r.rows.back().slope)) r.strictly_decreasing = false;
    r.rows.push_back(std::move(row));
  }
  return r;
}

}  // namespace ellcover
