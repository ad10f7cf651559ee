#pragma once

// Square-tiled surfaces: square i has right neighbor h(i) = beta(i) and upper neighbor
// v(i) = alpha(i). Cylinders, the U and R moves, the genus-2 parity invariant, rendering.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ellcover/cover_enum.hpp"

namespace ellcover {

class SquareTiledSurface {
 public:
  // Throws InvalidInput when <h, v> is not transitive or the degrees differ.
  SquareTiledSurface(Permutation h, Permutation v);
  static SquareTiledSurface from_pair(const Permutation& alpha, const Permutation& beta);
  static SquareTiledSurface from_class(const CoverClass& c) { return from_pair(c.alpha, c.beta); }

  const Permutation& h() const { return h_; }
  const Permutation& v() const { return v_; }
  int squares() const { return h_.degree(); }
  // (alpha, beta) = (v, h)
  std::pair<Permutation, Permutation> to_pair() const { return {v_, h_}; }
  // Canonical class representative.
  std::pair<Permutation, Permutation> to_canonical_pair() const;

 private:
  Permutation h_, v_;
};

// One cone point per nontrivial cycle of [v, h]; its angle is 2*pi*order.
struct ConePoint {
  int order;                 // l for a cone angle of 2*pi*l
  std::vector<int> squares;  // 0-based squares whose lower-left corner is this point
};
std::vector<ConePoint> singularities(const SquareTiledSurface& s);

struct Cylinder {
  int circumference;
  int height;
  // Annuli bottom to top, each listed along h from its base square (0-based).
  std::vector<std::vector<int>> annuli;
};
std::vector<Cylinder> cylinders(const SquareTiledSurface& s);

// U: v -> v h.  R: (v, h) -> (h^-1, v).
SquareTiledSurface act_U(const SquareTiledSurface& s);
SquareTiledSurface act_R(const SquareTiledSurface& s);

// Orbits of <U, R> on a class table, each sorted, ordered by smallest member.
std::vector<std::vector<std::size_t>> origami_components(const ClassTable& table);

// Number of integer Weierstrass points for genus 2, sigma = (3, 1^(d-3)): 1 for S_d, 3 for A_d.
int weierstrass_parity(const Permutation& alpha, const Permutation& beta);
int weierstrass_parity(const CoverClass& c);

enum class RenderFormat { Svg, Ascii };
RenderFormat parse_render_format(std::string_view name);
struct RenderOptions {
  RenderFormat format = RenderFormat::Ascii;
  bool mark_weierstrass = false;
};
std::string render(const SquareTiledSurface& s, const RenderOptions& opts = {});

// Placement of squares used by both renderers: lower-left corner of each square in unit cells.
struct SquarePlacement {
  int square;
  int x, y;
};
std::vector<SquarePlacement> layout(const SquareTiledSurface& s);

}  // namespace ellcover
