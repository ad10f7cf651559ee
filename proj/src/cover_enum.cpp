#include "ellcover/cover_enum.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <deque>
#include <numeric>
#include <thread>

namespace ellcover {

// ---------------------------------------------------------------------------
// RamificationProfile

RamificationProfile::RamificationProfile(CycleType parts) : type_(std::move(parts)) {
  if (type_.degree() < 1) throw InvalidInput("ramification profile must have degree >= 1");
}

RamificationProfile RamificationProfile::parse(std::string_view text, int degree) {
  if (degree < 1) throw InvalidInput("degree must be >= 1");
  std::string s(text);
  // Strip a trailing "+ones" / "+1s" / "+".
  if (auto plus = s.find('+'); plus != std::string::npos) {
    std::string tail = s.substr(plus + 1);
    tail.erase(std::remove_if(tail.begin(), tail.end(), ::isspace), tail.end());
    if (!tail.empty() && tail != "ones" && tail != "1s" && tail != "1")
      throw InvalidInput("unrecognized profile suffix '+" + tail + "'");
    s.resize(plus);
  }
  std::vector<int> parts;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      int v = 0;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        v = v * 10 + (s[i++] - '0');
        if (v > kMaxDegree) throw InvalidInput("profile part too large in '" + std::string(text) + "'");
      }
      if (v < 1) throw InvalidInput("profile parts must be positive");
      parts.push_back(v);
    } else if (c == ',' || c == '(' || c == ')' || c == '[' || c == ']' ||
               std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else {
      throw InvalidInput("invalid character '" + std::string(1, c) + "' in profile '" +
                         std::string(text) + "'");
    }
  }
  if (parts.empty()) throw InvalidInput("empty ramification profile");
  CycleType t(std::move(parts));
  if (t.degree() > degree)
    throw InvalidInput("profile " + t.to_string() + " exceeds degree " + std::to_string(degree));
  return RamificationProfile(t.padded_to(degree));
}

int RamificationProfile::ramified_count() const {
  return static_cast<int>(std::count_if(type_.parts().begin(), type_.parts().end(),
                                        [](int l) { return l >= 2; }));
}

int RamificationProfile::genus() const {
  if (!parity_ok())
    throw InvalidInput("profile " + to_string() + " has odd total ramification; no covers exist");
  return total_ramification() / 2 + 1;
}

std::string RamificationProfile::to_string() const {
  std::string s;
  for (int p : type_.parts()) {
    if (!s.empty()) s += ",";
    s += std::to_string(p);
  }
  return s;
}

// ---------------------------------------------------------------------------
// Pair tests

std::string CoverClass::to_string() const {
  return "(" + to_cycle_string(alpha) + ", " + to_cycle_string(beta) + ")";
}

bool is_cover_pair(const Permutation& a, const Permutation& b, const RamificationProfile& sigma) {
  if (a.degree() != b.degree() || a.degree() != sigma.degree())
    throw InvalidInput("degree mismatch between pair and profile");
  if (cycle_type(commutator(a, b)) != sigma.type()) return false;
  const Permutation gens[] = {a, b};
  return is_transitive(gens);
}

bool is_primitive_cover(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw InvalidInput("degree mismatch");
  const int d = a.degree();
  // Orbits of the normal closure of [a, b]: the finest <a, b>-invariant partition
  // in which every x shares a part with [a, b](x).
  std::vector<int> parent(static_cast<std::size_t>(d));
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<std::pair<int, int>> pending;
  auto unite = [&](int x, int y) {
    x = root(x);
    y = root(y);
    if (x == y) return;
    parent[y] = x;
    pending.emplace_back(x, y);
  };
  const Permutation c = commutator(a, b);
  for (int x = 0; x < d; ++x) unite(x, c(x));
  // A merge of x and y forces merges of g(x) and g(y) for each generator g.
  while (!pending.empty()) {
    auto [x, y] = pending.back();
    pending.pop_back();
    unite(a(x), a(y));
    unite(b(x), b(y));
  }
  for (int x = 1; x < d; ++x)
    if (root(x) != root(0)) return false;
  return true;
}

namespace {

int resolve_jobs(int jobs) {
  if (jobs > 0) return jobs;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Fast membership test for one alpha; all scratch space on the stack.
class PairTester {
 public:
  PairTester(const Permutation& beta, const CycleType& sigma)
      : d_(beta.degree()), beta_(beta), beta_inv_(beta.inverse()) {
    want_.fill(0);
    for (int p : sigma.parts()) ++want_[p];
  }

  bool operator()(const Permutation& alpha) const {
    std::array<std::uint8_t, kMaxDegree> ainv{};
    for (int i = 0; i < d_; ++i) ainv[alpha(i)] = static_cast<std::uint8_t>(i);
    // c = alpha beta alpha^-1 beta^-1
    std::array<std::uint8_t, kMaxDegree> c{};
    for (int x = 0; x < d_; ++x) c[x] = static_cast<std::uint8_t>(alpha(beta_(ainv[beta_inv_(x)])));
    std::array<int, kMaxDegree + 1> have{};
    std::uint32_t seen = 0;
    for (int i = 0; i < d_; ++i) {
      if (seen >> i & 1u) continue;
      int len = 0;
      for (int x = i; !(seen >> x & 1u); x = c[x]) {
        seen |= 1u << x;
        ++len;
      }
      if (++have[len] > want_[len]) return false;
    }
    for (int l = 1; l <= d_; ++l)
      if (have[l] != want_[l]) return false;
    return transitive(alpha);
  }

 private:
  bool transitive(const Permutation& alpha) const {
    const std::uint64_t all = (1ull << d_) - 1;
    std::uint64_t reached = 1;
    std::array<std::uint8_t, kMaxDegree> stack{};
    int top = 0;
    stack[top++] = 0;
    while (top) {
      const int x = stack[--top];
      for (int y : {alpha(x), beta_(x)}) {
        if (reached >> y & 1ull) continue;
        reached |= 1ull << y;
        stack[top++] = static_cast<std::uint8_t>(y);
      }
    }
    return reached == all;
  }

  int d_;
  Permutation beta_, beta_inv_;
  std::array<int, kMaxDegree + 1> want_{};
};

long to_long(const BigInt& z) {
  if (!z.fits_slong_p()) throw ConsistencyError("integer overflow converting " + z.get_str());
  return z.get_si();
}

// Conjugation orbit of `a` under `gens`; calls visit(x) once for every member.
template <class Visit>
void conjugation_orbit(const Permutation& a, const std::vector<Permutation>& gens,
                       const std::vector<Permutation>& gens_inv, Visit&& visit,
                       std::unordered_map<Permutation, std::size_t>& seen, std::size_t tag) {
  std::deque<Permutation> queue{a};
  seen.emplace(a, tag);
  visit(a);
  while (!queue.empty()) {
    const Permutation x = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      Permutation y = gens[i] * x * gens_inv[i];
      if (seen.emplace(y, tag).second) {
        visit(y);
        queue.push_back(y);
      }
    }
  }
}

}  // namespace

std::vector<Permutation> valid_alphas(const Permutation& beta, const CycleType& sigma,
                                      const EnumerateOptions& opts) {
  const int d = beta.degree();
  if (sigma.degree() != d) throw InvalidInput("profile degree differs from beta's degree");
  if (d > opts.bound) throw CapacityError(d, opts.bound);
  if ((sigma.degree() - sigma.num_parts()) % 2 != 0) return {};

  const PairTester test(beta, sigma);
  const int workers = std::min(resolve_jobs(opts.jobs), d);
  std::vector<std::vector<Permutation>> buckets(static_cast<std::size_t>(d));
  std::atomic<int> next{0};

  auto work = [&] {
    for (int head; (head = next.fetch_add(1)) < d;) {
      Permutation alpha = Permutation::identity(d);
      std::uint8_t* img = alpha.data();
      img[0] = static_cast<std::uint8_t>(head);
      for (int i = 1, v = 0; i < d; ++i, ++v) {
        if (v == head) ++v;
        img[i] = static_cast<std::uint8_t>(v);
      }
      auto& out = buckets[static_cast<std::size_t>(head)];
      do {
        if (test(alpha)) out.push_back(alpha);
      } while (std::next_permutation(img + 1, img + d));
    }
  };

  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  std::vector<Permutation> all;
  for (auto& b : buckets) all.insert(all.end(), b.begin(), b.end());
  return all;  // buckets are in head order, each internally sorted
}

std::vector<Permutation> centralizer_generators(const CycleType& t) {
  const int d = t.degree();
  std::vector<Permutation> gens;
  const auto& parts = t.parts();
  int start = 0;
  for (std::size_t j = 0; j < parts.size(); ++j) {
    const int len = parts[j];
    if (len > 1) {
      Permutation rot = Permutation::identity(d);
      for (int i = 0; i < len; ++i)
        rot.data()[start + i] = static_cast<std::uint8_t>(start + (i + 1) % len);
      gens.push_back(rot);
    }
    if (j + 1 < parts.size() && parts[j + 1] == len) {
      Permutation swap = Permutation::identity(d);
      for (int i = 0; i < len; ++i) {
        swap.data()[start + i] = static_cast<std::uint8_t>(start + len + i);
        swap.data()[start + len + i] = static_cast<std::uint8_t>(start + i);
      }
      gens.push_back(swap);
    }
    start += len;
  }
  return gens;
}

// ---------------------------------------------------------------------------
// ClassTable

ClassTable::ClassTable(RamificationProfile sigma, std::vector<CoverClass> classes, TypeIndex index)
    : sigma_(std::move(sigma)), classes_(std::move(classes)), index_(std::move(index)) {}

std::optional<std::size_t> ClassTable::find(const Permutation& a, const Permutation& b) const {
  if (a.degree() != degree() || b.degree() != degree()) return std::nullopt;
  const CycleType t = cycle_type(b);
  auto it = index_.find(t);
  if (it == index_.end()) return std::nullopt;
  const auto tau = conjugating_element(b, standard_representative(t));
  auto hit = it->second.find(conjugate(a, *tau));
  if (hit == it->second.end()) return std::nullopt;
  return hit->second;
}

ClassTable enumerate_classes(const RamificationProfile& sigma, const EnumerateOptions& opts) {
  const int d = sigma.degree();
  if (d > opts.bound) throw CapacityError(d, opts.bound);

  std::vector<CoverClass> classes;
  ClassTable::TypeIndex index;
  for (const CycleType& t : partitions(d)) {
    const Permutation beta = standard_representative(t);
    const auto alphas = valid_alphas(beta, sigma.type(), opts);
    if (alphas.empty()) continue;
    const auto gens = centralizer_generators(t);
    std::vector<Permutation> gens_inv;
    for (const auto& g : gens) gens_inv.push_back(g.inverse());
    const long zc = to_long(centralizer_order(t));
    auto& seen = index[t];
    seen.reserve(alphas.size());
    for (const Permutation& a : alphas) {
      if (seen.count(a)) continue;
      long orbit_size = 0;
      conjugation_orbit(a, gens, gens_inv, [&](const Permutation&) { ++orbit_size; }, seen,
                        classes.size());
      if (zc % orbit_size != 0)
        throw ConsistencyError("orbit size does not divide the centralizer order");
      CoverClass c;
      c.alpha = a;
      c.beta = beta;
      c.beta_type = t;
      c.commutator = commutator(a, beta);
      const Permutation pair[] = {a, beta};
      c.group = generates_alternating_or_symmetric(pair);
      c.stabilizer = zc / orbit_size;
      c.primitive = is_primitive_cover(a, beta);
      classes.push_back(std::move(c));
    }
  }
  return ClassTable(sigma, std::move(classes), std::move(index));
}

std::pair<Permutation, Permutation> canonicalize(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw InvalidInput("degree mismatch");
  const CycleType t = cycle_type(b);
  const Permutation rep = standard_representative(t);
  const Permutation start = conjugate(a, *conjugating_element(b, rep));
  const auto gens = centralizer_generators(t);
  std::vector<Permutation> gens_inv;
  for (const auto& g : gens) gens_inv.push_back(g.inverse());
  std::unordered_map<Permutation, std::size_t> seen;
  Permutation best = start;
  conjugation_orbit(start, gens, gens_inv, [&](const Permutation& x) { best = std::min(best, x); },
                    seen, 0);
  return {best, rep};
}

long stabilizer_order(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw InvalidInput("degree mismatch");
  const CycleType t = cycle_type(b);
  const Permutation rep = standard_representative(t);
  const Permutation start = conjugate(a, *conjugating_element(b, rep));
  const auto gens = centralizer_generators(t);
  std::vector<Permutation> gens_inv;
  for (const auto& g : gens) gens_inv.push_back(g.inverse());
  std::unordered_map<Permutation, std::size_t> seen;
  long orbit_size = 0;
  conjugation_orbit(start, gens, gens_inv, [&](const Permutation&) { ++orbit_size; }, seen, 0);
  return to_long(centralizer_order(t)) / orbit_size;
}

// ---------------------------------------------------------------------------
// Counts

CountMethod parse_count_method(std::string_view name) {
  if (name == "brute") return CountMethod::Brute;
  if (name == "burnside" || name == "burnside_prime") return CountMethod::BurnsidePrime;
  throw InvalidInput("unknown count method '" + std::string(name) + "'");
}

std::optional<BigInt> CountsTable::count_for(const CycleType& t) const {
  for (const auto& tc : types)
    if (tc.type == t) return tc.n;
  return std::nullopt;
}

namespace {

nlohmann::ordered_json json_int(const BigInt& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

BigInt parse_int(const nlohmann::json& j) {
  if (j.is_string()) return BigInt(j.get<std::string>());
  return BigInt(j.get<long>());
}

void finish_totals(CountsTable& ct) {
  ct.N = 0;
  ct.M = 0;
  for (const auto& tc : ct.types) {
    ct.N += tc.n;
    ct.M += tc.weight * tc.n;
  }
  ct.M.canonicalize();
}

}  // namespace

nlohmann::ordered_json CountsTable::to_json() const {
  nlohmann::ordered_json j;
  j["d"] = d;
  j["sigma"] = sigma.parts();
  auto arr = nlohmann::ordered_json::array();
  for (const auto& tc : types) {
    nlohmann::ordered_json e;
    e["type"] = tc.type.parts();
    e["n"] = json_int(tc.n);
    e["weight"] = ellcover::to_string(tc.weight);
    arr.push_back(std::move(e));
  }
  j["types"] = std::move(arr);
  j["N"] = json_int(N);
  j["M"] = ellcover::to_string(M);
  return j;
}

CountsTable CountsTable::from_json(const nlohmann::json& j) {
  CountsTable ct;
  ct.d = j.at("d").get<int>();
  ct.sigma = RamificationProfile(CycleType(j.at("sigma").get<std::vector<int>>()));
  for (const auto& e : j.at("types")) {
    TypeCount tc;
    tc.type = CycleType(e.at("type").get<std::vector<int>>());
    tc.n = parse_int(e.at("n"));
    tc.weight = parse_rational(e.at("weight").get<std::string>());
    ct.types.push_back(std::move(tc));
  }
  finish_totals(ct);
  if (ct.N != parse_int(j.at("N")) || ct.M != parse_rational(j.at("M").get<std::string>()))
    throw CacheCorruption("counts record totals disagree with its per-type entries");
  return ct;
}

CountsTable counts_from_classes(const ClassTable& table, const std::vector<std::size_t>& members) {
  std::map<CycleType, BigInt, std::greater<>> by_type;
  for (std::size_t i : members) by_type[table[i].beta_type] += 1;
  CountsTable ct;
  ct.d = table.degree();
  ct.sigma = table.sigma();
  for (auto& [t, n] : by_type) ct.types.push_back({t, n, t.reciprocal_sum()});
  finish_totals(ct);
  return ct;
}

CountsTable counts_from_classes(const ClassTable& table) {
  std::vector<std::size_t> all(table.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return counts_from_classes(table, all);
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

CountsTable count_table(const RamificationProfile& sigma, CountMethod method,
                        const EnumerateOptions& opts) {
  if (method == CountMethod::Brute) return counts_from_classes(enumerate_classes(sigma, opts));

  const int d = sigma.degree();
  if (!is_prime(d))
    throw InvalidInput("burnside_prime counting requires a prime degree, got " + std::to_string(d));
  if (d > opts.bound) throw CapacityError(d, opts.bound);
  // For prime d every stabilizer is trivial, so each class meets the fixed
  // beta representative in exactly |C(beta)| alphas.
  CountsTable ct;
  ct.d = d;
  ct.sigma = sigma;
  for (const CycleType& t : partitions(d)) {
    const BigInt hits = valid_alphas(standard_representative(t), sigma.type(), opts).size();
    if (hits == 0) continue;
    const BigInt zc = centralizer_order(t);
    if (hits % zc != 0)
      throw ConsistencyError("alpha count " + hits.get_str() + " for type " + t.to_string() +
                             " is not a multiple of the centralizer order");
    ct.types.push_back({t, hits / zc, t.reciprocal_sum()});
  }
  finish_totals(ct);
  return ct;
}

Rational weighted_count(int d, int k, const CycleType& p, const EnumerateOptions& opts) {
  if (p.degree() != d) throw InvalidInput("beta type " + p.to_string() + " is not a partition of " +
                                          std::to_string(d));
  if (k < 0 || 2 * k > d || k % 2 != 0) return 0;
  std::vector<int> parts(static_cast<std::size_t>(k), 2);
  const RamificationProfile sigma(CycleType(parts).padded_to(d));
  const auto hits = valid_alphas(standard_representative(p), sigma.type(), opts).size();
  Rational r(BigInt(static_cast<unsigned long>(hits)), centralizer_order(p));
  r.canonicalize();
  return r;
}

}  // namespace ellcover
