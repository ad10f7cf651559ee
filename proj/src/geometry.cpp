#include "ellcover/geometry.hpp"

#include <map>
#include <numeric>
#include <unordered_set>

namespace ellcover {

SlopeResult slope(int d, const RamificationProfile& sigma, const BigInt& N, const Rational& M) {
  SlopeResult r;
  r.N = N;
  r.M = M;
  r.delta = 12 * M;
  r.kappa = (Rational(d) - sigma.type().reciprocal_sum()) * N;
  r.lambda = (r.delta + r.kappa) / 12;
  r.delta.canonicalize();
  r.kappa.canonicalize();
  r.lambda.canonicalize();
  if (N > 0) {
    if (r.lambda <= 0) throw ConsistencyError("non-positive Hodge degree with covers present");
    Rational s = r.delta / r.lambda;
    s.canonicalize();
    r.slope = s;
  }
  return r;
}

SlopeResult slope(const CountsTable& counts) {
  return slope(counts.d, counts.sigma, counts.N, counts.M);
}

SlopeResult component_slope(const ClassTable& table, const std::vector<std::size_t>& members) {
  return slope(counts_from_classes(table, members));
}

long genus_from_orbits(std::size_t n_classes, const std::vector<LocalOrbit>& orbits) {
  long ram = 0;
  for (const auto& o : orbits) ram += static_cast<long>(o.size()) - 1;
  const long twice = -2 * static_cast<long>(n_classes) + kSpecialFibers * ram + 2;
  if (twice % 2 != 0) throw ConsistencyError("Riemann-Hurwitz gives a non-integral genus");
  return twice / 2;
}

long genus(const ClassTable& table, const OrbitDecomposition& dec) {
  return genus_from_orbits(table.size(), dec.local_orbits);
}

long genus(const ClassTable&, const OrbitDecomposition& dec,
           const std::vector<std::size_t>& component) {
  const std::unordered_set<std::size_t> in(component.begin(), component.end());
  std::vector<LocalOrbit> mine;
  for (const auto& o : dec.local_orbits) {
    const bool first = in.count(o.members.front()) > 0;
    for (std::size_t m : o.members)
      if ((in.count(m) > 0) != first)
        throw ConsistencyError("local orbit straddles two components");
    if (first) mine.push_back(o);
  }
  return genus_from_orbits(component.size(), mine);
}

long orbifold_order(const LocalOrbit& orbit) {
  const long l = orbit.beta_type.lcm();
  const long n = static_cast<long>(orbit.size());
  if (l % n != 0)
    throw ConsistencyError("orbifold order lcm " + std::to_string(l) + " / orbit size " +
                           std::to_string(n) + " is not integral for beta type " +
                           orbit.beta_type.to_string());
  return l / n;
}

std::vector<OrbifoldPoint> orbifold_profile(const std::vector<LocalOrbit>& orbits) {
  std::map<long, long> by_order;
  for (const auto& o : orbits)
    if (long k = orbifold_order(o); k >= 2) ++by_order[k];
  std::vector<OrbifoldPoint> out;
  for (auto [k, n] : by_order) out.push_back({k, n});
  return out;
}

Rational euler_orbifold(long genus, const std::vector<OrbifoldPoint>& points) {
  Rational chi = 2 - 2 * genus;
  for (const auto& p : points) chi -= kSpecialFibers * p.count * (1 - Rational(1, p.order));
  chi.canonicalize();
  return chi;
}

CurveInvariants curve_invariants(const ClassTable& table, const OrbitDecomposition& dec) {
  CurveInvariants ci;
  ci.genus = genus(table, dec);
  ci.orbifold_points = orbifold_profile(dec.local_orbits);
  ci.euler_orbifold = euler_orbifold(ci.genus, ci.orbifold_points);
  return ci;
}

nlohmann::ordered_json slope_json(const SlopeResult& s) {
  nlohmann::ordered_json j;
  j["N"] = s.N.fits_slong_p() ? nlohmann::ordered_json(s.N.get_si())
                              : nlohmann::ordered_json(s.N.get_str());
  j["M"] = to_string(s.M);
  j["slope"] = s.slope ? nlohmann::ordered_json(to_string(*s.slope)) : nlohmann::ordered_json();
  j["delta"] = to_string(s.delta);
  j["kappa"] = to_string(s.kappa);
  j["lambda"] = to_string(s.lambda);
  return j;
}

nlohmann::ordered_json invariant_report(const ClassTable& table, const OrbitDecomposition& dec) {
  const auto ci = curve_invariants(table, dec);
  auto j = slope_json(slope(counts_from_classes(table)));
  j["genus"] = ci.genus;
  auto orb = nlohmann::ordered_json::array();
  for (const auto& p : ci.orbifold_points) orb.push_back({{"order", p.order}, {"count", p.count}});
  j["orbifold"] = std::move(orb);
  j["chi"] = to_string(ci.euler_orbifold);
  auto comps = nlohmann::ordered_json::array();
  for (const auto& c : dec.components) {
    const auto s = component_slope(table, c);
    nlohmann::ordered_json e;
    e["size"] = c.size();
    e["slope"] = s.slope ? nlohmann::ordered_json(to_string(*s.slope)) : nlohmann::ordered_json();
    e["genus"] = genus(table, dec, c);
    e["primitive"] = table[c.front()].primitive;
    comps.push_back(std::move(e));
  }
  j["components"] = std::move(comps);
  return j;
}

}  // namespace ellcover
