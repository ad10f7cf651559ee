#pragma once

// Numerical invariants of the family of covers over the j-line: intersection
// numbers and slope, Riemann-Hurwitz genus, orbifold points.

#include <cstddef>
#include <optional>
#include <vector>

#include "ellcover/cover_enum.hpp"
#include "ellcover/monodromy.hpp"
#include "json.hpp"

namespace ellcover {

// Each of the 12 degenerate fibers carries identical local data.
inline constexpr int kSpecialFibers = 12;

struct SlopeResult {
  BigInt N = 0;
  Rational M = 0;
  Rational delta = 0;   // 12 M
  Rational kappa = 0;   // (d - sum 1/l_i) N
  Rational lambda = 0;  // (delta + kappa) / 12
  // Empty when there are no covers.
  std::optional<Rational> slope;
};

SlopeResult slope(const CountsTable& counts);
SlopeResult slope(int d, const RamificationProfile& sigma, const BigInt& N, const Rational& M);
SlopeResult component_slope(const ClassTable& table, const std::vector<std::size_t>& members);

struct OrbifoldPoint {
  long order;
  long count;  // per special fiber
};

struct CurveInvariants {
  long genus = 0;
  std::vector<OrbifoldPoint> orbifold_points;
  Rational euler_orbifold = 0;
};

// 2g - 2 = -2N + 12 sum(|O| - 1) over local orbits O.
long genus_from_orbits(std::size_t n_classes, const std::vector<LocalOrbit>& orbits);
long genus(const ClassTable& table, const OrbitDecomposition& dec);
long genus(const ClassTable& table, const OrbitDecomposition& dec,
           const std::vector<std::size_t>& component);

// Order of a local orbit: lcm(beta parts) / |O|, which must be integral.
long orbifold_order(const LocalOrbit& orbit);
std::vector<OrbifoldPoint> orbifold_profile(const std::vector<LocalOrbit>& orbits);
Rational euler_orbifold(long genus, const std::vector<OrbifoldPoint>& points);

CurveInvariants curve_invariants(const ClassTable& table, const OrbitDecomposition& dec);

// {N, M, slope, delta, lambda, genus, orbifold, chi, components:[{size, slope, genus}]}
nlohmann::ordered_json invariant_report(const ClassTable& table, const OrbitDecomposition& dec);

nlohmann::ordered_json slope_json(const SlopeResult& s);

}  // namespace ellcover
