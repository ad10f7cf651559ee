#pragma once

// The actions a: (alpha, beta) -> (alpha, alpha beta) and b: (alpha, beta) -> (alpha beta, beta)
// on cover classes, their orbits (components) and the cycles of b (local orbits).

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ellcover/cover_enum.hpp"
#include "json.hpp"

namespace ellcover {

enum class Move { A, B, AInv, BInv, Inv };
Move parse_move(std::string_view name);
std::string to_string(Move m);

// Image of a raw pair, not canonicalized.
std::pair<Permutation, Permutation> apply_move(Move m, const Permutation& a, const Permutation& b);
// Canonical representative of the image class.
std::pair<Permutation, Permutation> act(Move m, const Permutation& a, const Permutation& b);
// Image class index inside the table.
std::size_t act(const ClassTable& table, Move m, std::size_t cls);

// The permutation of class indices induced by a move.
std::vector<std::size_t> move_table(const ClassTable& table, Move m);

struct LocalOrbit {
  CycleType beta_type;
  std::vector<std::size_t> members;  // in cycle order starting from the smallest index
  std::size_t size() const { return members.size(); }
};

// (beta type, orbit size, number of such orbits) per fiber.
struct LocalOrbitGroup {
  CycleType beta_type;
  std::size_t size;
  std::size_t count;
};

struct OrbitDecomposition {
  std::vector<std::vector<std::size_t>> components;
  std::vector<LocalOrbit> local_orbits;

  std::vector<LocalOrbitGroup> grouped_local_orbits() const;
};

// Orbits under <a, b>, each sorted, ordered by smallest member.
std::vector<std::vector<std::size_t>> components(const ClassTable& table);
// Components made of primitive covers (primitivity is constant on components).
std::vector<std::vector<std::size_t>> primitive_components(
    const ClassTable& table, const std::vector<std::vector<std::size_t>>& comps);
// Orbits under <a, b, inv>: the components of the involution quotient.
std::vector<std::vector<std::size_t>> involution_quotient_components(const ClassTable& table);
// Cycles of b, ordered by smallest member.
std::vector<LocalOrbit> local_orbits(const ClassTable& table);
OrbitDecomposition decompose(const ClassTable& table);

// Whether some tau conjugates (a, b) to (a^-1, b^-1).
bool is_involution_fixed(const Permutation& a, const Permutation& b);

std::string pair_string(const Permutation& a, const Permutation& b);
nlohmann::ordered_json components_json(const ClassTable& table,
                                       const std::vector<std::vector<std::size_t>>& comps);
// Graphviz digraph of the a (solid) and b (dashed) actions.
std::string action_graph_dot(const ClassTable& table);

}  // namespace ellcover
