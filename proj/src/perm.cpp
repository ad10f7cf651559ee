#include "ellcover/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace ellcover {

namespace {

void check_degree(int d) {
  if (d < 0 || d > kMaxDegree)
    throw InvalidInput("permutation degree " + std::to_string(d) + " outside [0, " +
                       std::to_string(kMaxDegree) + "]");
}

void require_same_degree(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw InvalidInput("degree mismatch: " + std::to_string(p.degree()) + " vs " +
                       std::to_string(q.degree()));
}

}  // namespace

Rational parse_rational(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0) throw InvalidInput("not a rational: '" + text + "'");
  if (q.get_den() == 0) throw InvalidInput("zero denominator: '" + text + "'");
  q.canonicalize();
  return q;
}

// ---------------------------------------------------------------------------
// Permutation

Permutation Permutation::identity(int degree) {
  check_degree(degree);
  Permutation p;
  p.n_ = static_cast<std::uint8_t>(degree);
  for (int i = 0; i < degree; ++i) p.img_[i] = static_cast<std::uint8_t>(i);
  return p;
}

Permutation Permutation::from_images(std::span<const int> images) {
  const int d = static_cast<int>(images.size());
  check_degree(d);
  Permutation p;
  p.n_ = static_cast<std::uint8_t>(d);
  std::vector<bool> seen(d, false);
  for (int i = 0; i < d; ++i) {
    const int v = images[i];
    if (v < 1 || v > d || seen[v - 1])
      throw InvalidInput("images do not form a bijection of {1.." + std::to_string(d) + "}");
    seen[v - 1] = true;
    p.img_[i] = static_cast<std::uint8_t>(v - 1);
  }
  return p;
}

Permutation Permutation::from_cycles(int degree, const std::vector<std::vector<int>>& cycs) {
  Permutation p = identity(degree);
  std::vector<bool> used(degree, false);
  for (const auto& c : cycs) {
    for (int x : c) {
      if (x < 1 || x > degree)
        throw InvalidInput("label " + std::to_string(x) + " outside 1.." +
                           std::to_string(degree));
      if (used[x - 1]) throw InvalidInput("cycles are not disjoint at " + std::to_string(x));
      used[x - 1] = true;
    }
    for (std::size_t i = 0; i < c.size(); ++i)
      p.img_[c[i] - 1] = static_cast<std::uint8_t>(c[(i + 1) % c.size()] - 1);
  }
  return p;
}

Permutation Permutation::parse(std::string_view text, int degree) {
  return from_cycles(degree, parse_cycles(text));
}

std::vector<int> Permutation::images() const {
  std::vector<int> out(n_);
  for (int i = 0; i < n_; ++i) out[i] = img_[i] + 1;
  return out;
}

// ---------------------------------------------------------------------------
// CycleType

CycleType::CycleType(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p < 1) throw InvalidInput("cycle type parts must be positive");
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  degree_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::vector<int> CycleType::multiplicities() const {
  std::vector<int> a(degree_ + 1, 0);
  for (int p : parts_) ++a[p];
  return a;
}

int CycleType::count(int length) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), length));
}

std::vector<int> CycleType::distinct_lengths() const {
  std::vector<int> out;
  for (int p : parts_)
    if (out.empty() || out.back() != p) out.push_back(p);
  return out;
}

CycleType CycleType::padded_to(int degree) const {
  if (degree < degree_)
    throw InvalidInput("cycle type " + to_string() + " does not fit in degree " +
                       std::to_string(degree));
  std::vector<int> parts = parts_;
  parts.insert(parts.end(), static_cast<std::size_t>(degree - degree_), 1);
  return CycleType(std::move(parts));
}

CycleType CycleType::nontrivial() const {
  std::vector<int> parts;
  for (int p : parts_)
    if (p > 1) parts.push_back(p);
  return CycleType(std::move(parts));
}

Rational CycleType::reciprocal_sum() const {
  Rational s = 0;
  for (int p : parts_) s += Rational(1, p);
  return s;
}

long long CycleType::lcm() const {
  long long l = 1;
  for (int p : parts_) l = std::lcm(l, static_cast<long long>(p));
  return l;
}

std::string CycleType::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + "]";
}

std::vector<CycleType> partitions(int n) {
  std::vector<CycleType> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

// ---------------------------------------------------------------------------
// Algebra

Permutation compose(const Permutation& p, const Permutation& q) {
  require_same_degree(p, q);
  return p * q;
}

Permutation commutator(const Permutation& a, const Permutation& b) {
  require_same_degree(a, b);
  return a * b * a.inverse() * b.inverse();
}

Permutation conjugate(const Permutation& p, const Permutation& tau) {
  require_same_degree(p, tau);
  // (tau p tau^-1)(tau(x)) = tau(p(x))
  Permutation r = p;
  for (int x = 0; x < p.degree(); ++x) r.data()[tau(x)] = static_cast<std::uint8_t>(tau(p(x)));
  return r;
}

std::vector<std::vector<int>> cycles(const Permutation& p) {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(p.degree(), false);
  for (int i = 0; i < p.degree(); ++i) {
    if (seen[i]) continue;
    std::vector<int> c;
    for (int x = i; !seen[x]; x = p(x)) {
      seen[x] = true;
      c.push_back(x);
    }
    out.push_back(std::move(c));
  }
  return out;
}

CycleType cycle_type(const Permutation& p) {
  std::vector<int> parts;
  for (const auto& c : cycles(p)) parts.push_back(static_cast<int>(c.size()));
  return CycleType(std::move(parts));
}

int sign(const Permutation& p) { return cycle_type(p).sign(); }

int order(const Permutation& p) { return static_cast<int>(cycle_type(p).lcm()); }

BigInt factorial(int n) {
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

BigInt centralizer_order(const CycleType& t) {
  BigInt z = 1;
  const auto a = t.multiplicities();
  for (int i = 1; i < static_cast<int>(a.size()); ++i) {
    if (a[i] == 0) continue;
    BigInt pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(i), static_cast<unsigned long>(a[i]));
    z *= pw * factorial(a[i]);
  }
  return z;
}

BigInt class_size(const CycleType& t) { return factorial(t.degree()) / centralizer_order(t); }

Permutation standard_representative(const CycleType& t) {
  std::vector<std::vector<int>> cycs;
  int next = 1;
  for (int len : t.parts()) {
    std::vector<int> c(len);
    std::iota(c.begin(), c.end(), next);
    next += len;
    cycs.push_back(std::move(c));
  }
  return Permutation::from_cycles(t.degree(), cycs);
}

std::vector<std::vector<int>> orbits(int degree, std::span<const Permutation> gens) {
  for (const auto& g : gens)
    if (g.degree() != degree) throw InvalidInput("generator degree mismatch");
  std::vector<int> comp(degree, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < degree; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> orbit{s};
    comp[s] = static_cast<int>(out.size());
    for (std::size_t k = 0; k < orbit.size(); ++k)
      for (const auto& g : gens) {
        const int y = g(orbit[k]);
        if (comp[y] < 0) {
          comp[y] = comp[s];
          orbit.push_back(y);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

bool is_transitive(int degree, std::span<const Permutation> gens) {
  if (degree <= 1) return true;
  return orbits(degree, gens).size() == 1;
}

bool is_transitive(std::span<const Permutation> gens) {
  if (gens.empty()) return false;
  return is_transitive(gens.front().degree(), gens);
}

// ---------------------------------------------------------------------------
// Schreier-Sims with base 0,1,...,d-1 (incremental form; adequate for d <= 32).

namespace {

class StabilizerChain {
 public:
  explicit StabilizerChain(int n) : n_(n), gens_(n), trans_(n) {
    for (int k = 0; k < n; ++k) {
      trans_[k].resize(n);
      trans_[k][k] = Permutation::identity(n);
    }
  }

  void insert(int k, const Permutation& g) {
    if (contains(k, g)) return;
    gens_[k].push_back(g);
    for (int x = 0; x < n_; ++x)
      if (trans_[k][x]) update(k, g * *trans_[k][x]);
  }

  BigInt order() const {
    BigInt o = 1;
    for (int k = 0; k < n_; ++k) {
      long c = 0;
      for (const auto& t : trans_[k]) c += t.has_value();
      o *= c;
    }
    return o;
  }

 private:
  bool contains(int k, Permutation g) const {
    for (; k < n_; ++k) {
      const int x = g(k);
      if (!trans_[k][x]) return false;
      g = trans_[k][x]->inverse() * g;
    }
    return true;
  }

  void update(int k, const Permutation& t) {
    const int x = t(k);
    if (trans_[k][x]) {
      if (k + 1 < n_) insert(k + 1, trans_[k][x]->inverse() * t);
      return;
    }
    trans_[k][x] = t;
    // gens_ may grow during recursion; index rather than iterate.
    for (std::size_t i = 0; i < gens_[k].size(); ++i) update(k, gens_[k][i] * t);
  }

  int n_;
  std::vector<std::vector<Permutation>> gens_;
  std::vector<std::vector<std::optional<Permutation>>> trans_;
};

}  // namespace

BigInt group_order(int degree, std::span<const Permutation> gens) {
  check_degree(degree);
  if (degree == 0) return 1;
  StabilizerChain chain(degree);
  for (const auto& g : gens) {
    if (g.degree() != degree) throw InvalidInput("generator degree mismatch");
    chain.insert(0, g);
  }
  return chain.order();
}

std::string to_string(GroupKind k) {
  switch (k) {
    case GroupKind::Symmetric: return "S";
    case GroupKind::Alternating: return "A";
    case GroupKind::Other: return "other";
  }
  return "other";
}

GroupKind generates_alternating_or_symmetric(std::span<const Permutation> gens) {
  if (gens.empty() || !is_transitive(gens)) return GroupKind::Other;
  const int d = gens.front().degree();
  const BigInt ord = group_order(d, gens);
  const BigInt full = factorial(d);
  if (ord == full) return GroupKind::Symmetric;
  const bool all_even = std::all_of(gens.begin(), gens.end(),
                                    [](const Permutation& g) { return sign(g) == 1; });
  // For d <= 2, A_d is trivial and cannot be transitive unless d == 1.
  if (all_even && ord * 2 == full && d >= 3) return GroupKind::Alternating;
  return GroupKind::Other;
}

std::optional<Permutation> conjugating_element(const Permutation& p, const Permutation& q) {
  require_same_degree(p, q);
  const int d = p.degree();
  // Cycle length of each point under p and q.
  auto lengths = [d](const Permutation& r) {
    std::vector<int> len(d, 0);
    for (const auto& c : cycles(r))
      for (int x : c) len[x] = static_cast<int>(c.size());
    return len;
  };
  if (cycle_type(p) != cycle_type(q)) return std::nullopt;
  const auto plen = lengths(p);
  const auto qlen = lengths(q);
  // tau(p(x)) = q(tau(x)): fixing tau(x) = y maps the p-cycle of x onto the q-cycle of y.
  Permutation tau = Permutation::identity(d);
  std::vector<bool> assigned(d, false), used(d, false);
  for (int x = 0; x < d; ++x) {
    if (assigned[x]) continue;
    int y = 0;
    while (used[y] || qlen[y] != plen[x]) ++y;
    for (int i = 0, px = x, qy = y; i < plen[x]; ++i, px = p(px), qy = q(qy)) {
      tau.data()[px] = static_cast<std::uint8_t>(qy);
      assigned[px] = true;
      used[qy] = true;
    }
  }
  return tau;
}

std::vector<std::vector<int>> parse_cycles(std::string_view text) {
  std::vector<std::vector<int>> out;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (text.substr(i) == "id") return out;
  while (true) {
    skip_ws();
    if (i >= text.size()) break;
    if (text[i] != '(') throw InvalidInput("expected '(' in cycle notation: '" +
                                           std::string(text) + "'");
    ++i;
    std::vector<int> cyc;
    while (true) {
      skip_ws();
      if (i >= text.size()) throw InvalidInput("unterminated cycle: '" + std::string(text) + "'");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] == ',') {
        ++i;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw InvalidInput("unexpected character '" + std::string(1, text[i]) +
                           "' in cycle notation");
      int v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        v = v * 10 + (text[i++] - '0');
      cyc.push_back(v);
    }
    if (cyc.size() > 1) out.push_back(std::move(cyc));
  }
  return out;
}

std::string to_cycle_string(const Permutation& p) {
  std::ostringstream os;
  bool any = false;
  for (const auto& c : cycles(p)) {
    if (c.size() < 2) continue;
    any = true;
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << c[i] + 1;
    os << ')';
  }
  return any ? os.str() : "()";
}

}  // namespace ellcover
