#include "ellcover/char_counts.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <sstream>

namespace ellcover {

namespace {

using Shape = std::vector<int>;

// Beta-set of a partition padded to n parts: b_i = lambda_i + n - i (descending).
std::vector<int> beta_set(const Shape& lambda) {
  const int n = static_cast<int>(lambda.size());
  std::vector<int> b(lambda.size());
  for (int i = 0; i < n; ++i) b[i] = lambda[i] + (n - 1 - i);
  return b;
}

Shape from_beta_set(std::vector<int> b) {
  std::sort(b.begin(), b.end(), std::greater<>());
  const int n = static_cast<int>(b.size());
  Shape lambda;
  for (int i = 0; i < n; ++i)
    if (int part = b[i] - (n - 1 - i); part > 0) lambda.push_back(part);
  return lambda;
}

class MurnaghanNakayama {
 public:
  BigInt value(const Shape& lambda, const std::vector<int>& mu, std::size_t from) {
    if (from == mu.size()) return lambda.empty() ? 1 : 0;
    auto key = std::make_pair(lambda, std::vector<int>(mu.begin() + static_cast<long>(from), mu.end()));
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const int r = mu[from];
    const auto b = beta_set(lambda);
    const std::set<int> present(b.begin(), b.end());
    BigInt total = 0;
    for (std::size_t i = 0; i < b.size(); ++i) {
      const int target = b[i] - r;
      if (target < 0 || present.count(target)) continue;
      // Height of the removed rim hook = beta numbers strictly between.
      int between = 0;
      for (int x : b)
        if (x > target && x < b[i]) ++between;
      auto nb = b;
      nb[i] = target;
      const BigInt sub = value(from_beta_set(nb), mu, from + 1);
      if (between % 2) total -= sub;
      else total += sub;
    }
    memo_.emplace(std::move(key), total);
    return total;
  }

 private:
  std::map<std::pair<Shape, std::vector<int>>, BigInt> memo_;
};

MurnaghanNakayama& shared_mn() {
  static MurnaghanNakayama mn;
  return mn;
}
std::mutex& mn_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

BigInt character_value(const CycleType& shape, const CycleType& cls) {
  if (shape.degree() != cls.degree())
    throw InvalidInput("shape " + shape.to_string() + " and class " + cls.to_string() +
                       " have different sizes");
  std::lock_guard<std::mutex> lock(mn_mutex());
  return shared_mn().value(shape.parts(), cls.parts(), 0);
}

BigInt character_degree(const CycleType& shape) {
  const auto& p = shape.parts();
  BigInt hooks = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (int j = 0; j < p[i]; ++j) {
      int below = 0;
      for (std::size_t k = i + 1; k < p.size() && p[k] > j; ++k) ++below;
      hooks *= p[i] - j - 1 + below + 1;
    }
  return factorial(shape.degree()) / hooks;
}

CharacterTable CharacterTable::build(int d) {
  if (d < 1) throw InvalidInput("character table needs d >= 1");
  CharacterTable t;
  t.d = d;
  t.shapes = partitions(d);
  t.classes = t.shapes;
  for (const auto& s : t.shapes) {
    std::vector<BigInt> row;
    for (const auto& c : t.classes) row.push_back(character_value(s, c));
    t.values.push_back(std::move(row));
    t.degrees.push_back(character_degree(s));
  }
  return t;
}

std::string CharacterTable::to_csv() const {
  auto label = [](const CycleType& t) { return "\"" + t.to_string() + "\""; };
  std::ostringstream os;
  os << "shape";
  for (const auto& c : classes) os << "," << label(c);
  os << "\n";
  for (std::size_t i = 0; i < shapes.size(); ++i) {
    os << label(shapes[i]);
    for (const auto& v : values[i]) os << "," << v.get_str();
    os << "\n";
  }
  return os.str();
}

CycleType commutator_class(int d, int k) {
  if (k < 0 || 2 * k > d) throw InvalidInput("no class (2^" + std::to_string(k) + ") in degree " +
                                              std::to_string(d));
  return CycleType(std::vector<int>(static_cast<std::size_t>(k), 2)).padded_to(d);
}

BigInt disconnected_count(const CharacterTable& table, int k, const CycleType& p) {
  const int d = table.d;
  if (p.degree() != d) throw InvalidInput("class " + p.to_string() + " is not a partition of " +
                                          std::to_string(d));
  const CycleType tau = commutator_class(d, k);
  const auto col = [&](const CycleType& c) {
    return static_cast<std::size_t>(std::find(table.classes.begin(), table.classes.end(), c) -
                                    table.classes.begin());
  };
  const std::size_t ip = col(p), it = col(tau);
  Rational sum = 0;
  for (std::size_t i = 0; i < table.shapes.size(); ++i) {
    const BigInt& x = table.at(i, ip);
    sum += Rational(x * x * table.at(i, it), table.degrees[i]);
  }
  sum *= class_size(p) * class_size(tau);
  sum.canonicalize();
  if (!is_integer(sum)) throw ConsistencyError("character sum is not integral");
  return sum.get_num();
}

BigInt disconnected_count(int d, int k, const CycleType& p) {
  return disconnected_count(CharacterTable::build(d), k, p);
}

std::map<std::pair<CycleType, int>, BigInt> disconnected_counts_direct(int d) {
  if (d > kDirectPairBound) throw CapacityError(d, kDirectPairBound);
  std::vector<int> v(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) v[i] = i + 1;
  std::vector<Permutation> all;
  do all.push_back(Permutation::from_images(v));
  while (std::next_permutation(v.begin(), v.end()));

  std::map<std::pair<CycleType, int>, BigInt> out;
  for (const auto& b : all) {
    const CycleType bt = cycle_type(b);
    std::map<int, long> by_k;
    for (const auto& a : all) {
      const CycleType ct = cycle_type(commutator(a, b));
      if (ct.parts().front() > 2) continue;
      ++by_k[ct.count(2)];
    }
    for (auto [k, n] : by_k) out[{bt, k}] += n;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Generating functions

Rational GenFun::get(const CycleType& p, int k) const {
  auto it = coeffs.find({p, k});
  return it == coeffs.end() ? Rational(0) : it->second;
}

void GenFun::add(const CycleType& p, int k, const Rational& value) {
  Rational v = value;
  v.canonicalize();
  if (v == 0) return;
  auto [it, fresh] = coeffs.emplace(Key{p, k}, v);
  if (!fresh) {
    it->second += v;
    it->second.canonicalize();
    if (it->second == 0) coeffs.erase(it);
  }
}

nlohmann::ordered_json GenFun::to_json() const {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& [key, v] : coeffs) {
    nlohmann::ordered_json e;
    e["type"] = key.first.parts();
    e["k"] = key.second;
    e["coeff"] = to_string(v);
    arr.push_back(std::move(e));
  }
  return {{"max_degree", max_degree}, {"coeffs", std::move(arr)}};
}

GenFun multiply(const GenFun& f, const GenFun& g) {
  GenFun out;
  out.max_degree = std::min(f.max_degree, g.max_degree);
  for (const auto& [kf, vf] : f.coeffs)
    for (const auto& [kg, vg] : g.coeffs) {
      if (kf.first.degree() + kg.first.degree() > out.max_degree) continue;
      std::vector<int> parts = kf.first.parts();
      parts.insert(parts.end(), kg.first.parts().begin(), kg.first.parts().end());
      out.add(CycleType(std::move(parts)), kf.second + kg.second, vf * vg);
    }
  return out;
}

namespace {

void require_no_constant(const GenFun& f) {
  for (const auto& [key, v] : f.coeffs)
    if (key.first.degree() == 0) throw InvalidInput("series has a constant term");
}

}  // namespace

GenFun exp_minus_one(const GenFun& f) {
  require_no_constant(f);
  GenFun out;
  out.max_degree = f.max_degree;
  GenFun power = f;
  BigInt fact = 1;
  for (int n = 1; n <= f.max_degree && !power.coeffs.empty(); ++n) {
    fact *= n;
    for (const auto& [key, v] : power.coeffs) out.add(key.first, key.second, v / Rational(fact));
    power = multiply(power, f);
  }
  return out;
}

GenFun log_one_plus(const GenFun& f) {
  require_no_constant(f);
  GenFun out;
  out.max_degree = f.max_degree;
  GenFun power = f;
  for (int n = 1; n <= f.max_degree && !power.coeffs.empty(); ++n) {
    const Rational c(n % 2 ? 1 : -1, n);
    for (const auto& [key, v] : power.coeffs) out.add(key.first, key.second, v * c);
    power = multiply(power, f);
  }
  return out;
}

GeneratingFunctions build_generating_functions(int d_max, const EnumerateOptions& opts) {
  if (d_max > opts.bound) throw CapacityError(d_max, opts.bound);
  GeneratingFunctions gf;
  gf.disconnected.max_degree = gf.connected.max_degree = d_max;
  for (int d = 1; d <= d_max; ++d) {
    const auto table = CharacterTable::build(d);
    const BigInt df = factorial(d);
    for (const auto& p : table.classes)
      for (int k = 0; 2 * k <= d; ++k) {
        gf.disconnected.add(p, k, Rational(disconnected_count(table, k, p), df));
        gf.connected.add(p, k, weighted_count(d, k, p, opts));
      }
  }
  return gf;
}

GenFun connected_from_disconnected(const GenFun& disconnected) {
  return log_one_plus(disconnected);
}

}  // namespace ellcover
