#include "ellcover/monodromy.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace ellcover {

Move parse_move(std::string_view name) {
  if (name == "a") return Move::A;
  if (name == "b") return Move::B;
  if (name == "a_inv" || name == "a-1") return Move::AInv;
  if (name == "b_inv" || name == "b-1") return Move::BInv;
  if (name == "inv") return Move::Inv;
  throw InvalidInput("unknown move '" + std::string(name) + "'");
}

std::string to_string(Move m) {
  switch (m) {
    case Move::A: return "a";
    case Move::B: return "b";
    case Move::AInv: return "a_inv";
    case Move::BInv: return "b_inv";
    case Move::Inv: return "inv";
  }
  return "?";
}

std::pair<Permutation, Permutation> apply_move(Move m, const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw InvalidInput("degree mismatch");
  switch (m) {
    case Move::A: return {a, a * b};
    case Move::B: return {a * b, b};
    case Move::AInv: return {a, a.inverse() * b};
    case Move::BInv: return {a * b.inverse(), b};
    case Move::Inv: return {a.inverse(), b.inverse()};
  }
  return {a, b};
}

std::pair<Permutation, Permutation> act(Move m, const Permutation& a, const Permutation& b) {
  auto [x, y] = apply_move(m, a, b);
  return canonicalize(x, y);
}

std::size_t act(const ClassTable& table, Move m, std::size_t cls) {
  const auto& c = table[cls];
  auto [x, y] = apply_move(m, c.alpha, c.beta);
  auto hit = table.find(x, y);
  if (!hit) throw ConsistencyError("move " + to_string(m) + " left the class table at " + c.to_string());
  return *hit;
}

std::vector<std::size_t> move_table(const ClassTable& table, Move m) {
  std::vector<std::size_t> out(table.size());
  for (std::size_t i = 0; i < table.size(); ++i) out[i] = act(table, m, i);
  return out;
}

namespace {

std::vector<std::vector<std::size_t>> orbits_of(std::size_t n,
                                                const std::vector<std::vector<std::size_t>>& maps) {
  std::vector<int> comp(n, -1);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    const int id = static_cast<int>(out.size());
    std::vector<std::size_t> orbit{s};
    comp[s] = id;
    for (std::size_t k = 0; k < orbit.size(); ++k)
      for (const auto& f : maps) {
        const std::size_t y = f[orbit[k]];
        if (comp[y] < 0) {
          comp[y] = id;
          orbit.push_back(y);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

}  // namespace

std::vector<std::vector<std::size_t>> components(const ClassTable& table) {
  // The group is finite, so forward closure under a and b already gives orbits.
  return orbits_of(table.size(), {move_table(table, Move::A), move_table(table, Move::B)});
}

std::vector<std::vector<std::size_t>> primitive_components(
    const ClassTable& table, const std::vector<std::vector<std::size_t>>& comps) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& c : comps)
    if (table[c.front()].primitive) out.push_back(c);
  return out;
}

std::vector<std::vector<std::size_t>> involution_quotient_components(const ClassTable& table) {
  return orbits_of(table.size(), {move_table(table, Move::A), move_table(table, Move::B),
                                  move_table(table, Move::Inv)});
}

std::vector<LocalOrbit> local_orbits(const ClassTable& table) {
  const auto b = move_table(table, Move::B);
  std::vector<bool> seen(table.size(), false);
  std::vector<LocalOrbit> out;
  for (std::size_t s = 0; s < table.size(); ++s) {
    if (seen[s]) continue;
    LocalOrbit o{table[s].beta_type, {}};
    for (std::size_t x = s; !seen[x]; x = b[x]) {
      seen[x] = true;
      o.members.push_back(x);
    }
    out.push_back(std::move(o));
  }
  return out;
}

OrbitDecomposition decompose(const ClassTable& table) {
  return {components(table), local_orbits(table)};
}

std::vector<LocalOrbitGroup> OrbitDecomposition::grouped_local_orbits() const {
  std::map<std::pair<CycleType, std::size_t>, std::size_t, std::greater<>> counts;
  for (const auto& o : local_orbits) ++counts[{o.beta_type, o.size()}];
  std::vector<LocalOrbitGroup> out;
  for (const auto& [key, n] : counts) out.push_back({key.first, key.second, n});
  return out;
}

bool is_involution_fixed(const Permutation& a, const Permutation& b) {
  return canonicalize(a.inverse(), b.inverse()) == canonicalize(a, b);
}

std::string pair_string(const Permutation& a, const Permutation& b) {
  return "(" + to_cycle_string(a) + ", " + to_cycle_string(b) + ")";
}

nlohmann::ordered_json components_json(const ClassTable& table,
                                       const std::vector<std::vector<std::size_t>>& comps) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& comp : comps) {
    auto members = nlohmann::ordered_json::array();
    for (std::size_t i : comp) members.push_back(pair_string(table[i].alpha, table[i].beta));
    nlohmann::ordered_json e;
    e["size"] = comp.size();
    e["primitive"] = table[comp.front()].primitive;
    e["group"] = to_string(table[comp.front()].group);
    e["members"] = std::move(members);
    arr.push_back(std::move(e));
  }
  return arr;
}

std::string action_graph_dot(const ClassTable& table) {
  const auto a = move_table(table, Move::A);
  const auto b = move_table(table, Move::B);
  std::ostringstream os;
  os << "digraph monodromy {\n  node [shape=box, fontname=\"monospace\"];\n";
  for (std::size_t i = 0; i < table.size(); ++i)
    os << "  c" << i << " [label=\"" << i + 1 << ": "
       << pair_string(table[i].alpha, table[i].beta) << "\"];\n";
  for (std::size_t i = 0; i < table.size(); ++i) {
    os << "  c" << i << " -> c" << a[i] << " [label=\"a\"];\n";
    os << "  c" << i << " -> c" << b[i] << " [label=\"b\", style=dashed];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace ellcover
