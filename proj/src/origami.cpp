#include "ellcover/origami.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace ellcover {

SquareTiledSurface::SquareTiledSurface(Permutation h, Permutation v) : h_(std::move(h)), v_(std::move(v)) {
  if (h_.degree() != v_.degree()) throw InvalidInput("h and v act on different numbers of squares");
  const Permutation gens[] = {h_, v_};
  if (!is_transitive(gens)) throw InvalidInput("square-tiled surface is disconnected");
}

SquareTiledSurface SquareTiledSurface::from_pair(const Permutation& alpha, const Permutation& beta) {
  return SquareTiledSurface(beta, alpha);
}

std::pair<Permutation, Permutation> SquareTiledSurface::to_canonical_pair() const {
  return canonicalize(v_, h_);
}

std::vector<ConePoint> singularities(const SquareTiledSurface& s) {
  std::vector<ConePoint> out;
  for (auto& c : cycles(commutator(s.v(), s.h())))
    if (c.size() > 1) out.push_back({static_cast<int>(c.size()), std::move(c)});
  return out;
}

namespace {

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
  std::vector<std::size_t> parent;
};

}  // namespace

std::vector<Cylinder> cylinders(const SquareTiledSurface& s) {
  const auto& h = s.h();
  const auto& v = s.v();
  const auto annuli = cycles(h);
  std::vector<std::size_t> annulus_of(static_cast<std::size_t>(s.squares()));
  for (std::size_t a = 0; a < annuli.size(); ++a)
    for (int i : annuli[a]) annulus_of[static_cast<std::size_t>(i)] = a;

  // The top edge of an annulus is free of cone points iff v commutes with h along it.
  std::vector<bool> glued_up(annuli.size());
  UnionFind uf(annuli.size());
  for (std::size_t a = 0; a < annuli.size(); ++a) {
    glued_up[a] = std::all_of(annuli[a].begin(), annuli[a].end(),
                              [&](int i) { return h(v(i)) == v(h(i)); });
    if (glued_up[a]) uf.unite(a, annulus_of[static_cast<std::size_t>(v(annuli[a].front()))]);
  }

  std::map<std::size_t, std::vector<std::size_t>> groups;  // root -> annuli, by smallest square
  for (std::size_t a = 0; a < annuli.size(); ++a) groups[uf.find(a)].push_back(a);
  std::vector<Cylinder> out;
  for (auto& [root, members] : groups) {
    // Bottom annulus: the one not glued to from below; a closed loop starts at its smallest square.
    std::size_t bottom = members.front();
    for (std::size_t a : members) {
      const std::size_t below = annulus_of[static_cast<std::size_t>(v.inverse()(annuli[a].front()))];
      if (!(glued_up[below] && uf.find(below) == root)) {
        bottom = a;
        break;
      }
    }
    Cylinder cyl{static_cast<int>(annuli[bottom].size()), 0, {}};
    std::vector<int> row = annuli[bottom];
    for (std::size_t k = 0; k < members.size(); ++k) {
      cyl.annuli.push_back(row);
      for (int& i : row) i = v(i);
    }
    cyl.height = static_cast<int>(cyl.annuli.size());
    out.push_back(std::move(cyl));
  }
  std::sort(out.begin(), out.end(), [](const Cylinder& x, const Cylinder& y) {
    return *std::min_element(x.annuli.front().begin(), x.annuli.front().end()) <
           *std::min_element(y.annuli.front().begin(), y.annuli.front().end());
  });
  return out;
}

SquareTiledSurface act_U(const SquareTiledSurface& s) { return SquareTiledSurface(s.h(), s.v() * s.h()); }

SquareTiledSurface act_R(const SquareTiledSurface& s) { return SquareTiledSurface(s.v(), s.h().inverse()); }

std::vector<std::vector<std::size_t>> origami_components(const ClassTable& table) {
  const std::size_t n = table.size();
  std::vector<std::size_t> u(n), r(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& c = table[i];
    auto iu = table.find(c.alpha * c.beta, c.beta);
    auto ir = table.find(c.beta.inverse(), c.alpha);
    if (!iu || !ir) throw ConsistencyError("U or R left the class table at " + c.to_string());
    u[i] = *iu;
    r[i] = *ir;
  }
  std::vector<bool> seen(n, false);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> orbit{s};
    seen[s] = true;
    for (std::size_t k = 0; k < orbit.size(); ++k)
      for (std::size_t y : {u[orbit[k]], r[orbit[k]]})
        if (!seen[y]) {
          seen[y] = true;
          orbit.push_back(y);
        }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

int weierstrass_parity(const Permutation& alpha, const Permutation& beta) {
  if (cycle_type(commutator(alpha, beta)).nontrivial() != CycleType({3}))
    throw InvalidInput("Weierstrass parity is defined for genus 2, sigma = (3,1,...,1) only");
  const Permutation gens[] = {alpha, beta};
  switch (generates_alternating_or_symmetric(gens)) {
    case GroupKind::Symmetric: return 1;
    case GroupKind::Alternating: return 3;
    case GroupKind::Other: break;
  }
  throw InvalidInput("monodromy group of " + to_cycle_string(alpha) + ", " + to_cycle_string(beta) +
                     " is neither alternating nor symmetric");
}

int weierstrass_parity(const CoverClass& c) { return weierstrass_parity(c.alpha, c.beta); }

RenderFormat parse_render_format(std::string_view name) {
  if (name == "svg") return RenderFormat::Svg;
  if (name == "ascii") return RenderFormat::Ascii;
  throw InvalidInput("unknown render format '" + std::string(name) + "' (expected svg or ascii)");
}

std::vector<SquarePlacement> layout(const SquareTiledSurface& s) {
  // Cylinders stacked bottom to top, each shifted one unit right of the one below.
  std::vector<SquarePlacement> out;
  int y = 0, x0 = 0;
  for (const auto& cyl : cylinders(s)) {
    for (const auto& row : cyl.annuli) {
      for (std::size_t k = 0; k < row.size(); ++k) out.push_back({row[k], x0 + static_cast<int>(k), y});
      ++y;
    }
    ++x0;
  }
  return out;
}

namespace {

std::string caption(const SquareTiledSurface& s, const RenderOptions& opts) {
  std::ostringstream os;
  os << "d=" << s.squares() << " h=" << to_cycle_string(s.h()) << " v=" << to_cycle_string(s.v())
     << " [v,h]=" << to_cycle_string(commutator(s.v(), s.h())) << " cylinders=" << cylinders(s).size();
  if (opts.mark_weierstrass) {
    try {
      os << " integer-weierstrass=" << weierstrass_parity(s.v(), s.h());
    } catch (const InvalidInput&) {
      os << " integer-weierstrass=n/a";
    }
  }
  return os.str();
}

constexpr std::string_view kMarkers = "*o#@%&";

std::string render_ascii(const SquareTiledSurface& s, const RenderOptions& opts) {
  const auto places = layout(s);
  int W = 0, H = 0;
  for (const auto& p : places) W = std::max(W, p.x + 1), H = std::max(H, p.y + 1);
  const int cw = 5, ch = 2;
  std::vector<std::string> canvas(static_cast<std::size_t>(H * ch + 1), std::string(static_cast<std::size_t>(W * cw + 1), ' '));
  auto put = [&](int row, int col, char c) { canvas[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = c; };
  std::vector<std::pair<int, int>> lower_left(static_cast<std::size_t>(s.squares()));
  for (const auto& p : places) {
    const int top = (H - p.y - 1) * ch, left = p.x * cw;
    for (int c = 0; c <= cw; ++c) put(top, left + c, '-'), put(top + ch, left + c, '-');
    for (int r = 0; r <= ch; ++r) put(top + r, left, '|'), put(top + r, left + cw, '|');
    for (int r : {top, top + ch})
      for (int c : {left, left + cw}) put(r, c, '+');
    const std::string label = std::to_string(p.square + 1);
    for (std::size_t k = 0; k < label.size(); ++k) put(top + 1, left + 2 + static_cast<int>(k), label[k]);
    lower_left[static_cast<std::size_t>(p.square)] = {top + ch, left};
  }
  const auto cones = singularities(s);
  for (std::size_t c = 0; c < cones.size(); ++c)
    for (int sq : cones[c].squares) {
      auto [r, col] = lower_left[static_cast<std::size_t>(sq)];
      put(r, col, kMarkers[c % kMarkers.size()]);
    }
  std::ostringstream os;
  os << caption(s, opts) << "\n";
  for (auto& line : canvas) {
    line.erase(line.find_last_not_of(' ') + 1);
    os << line << "\n";
  }
  for (std::size_t c = 0; c < cones.size(); ++c)
    os << kMarkers[c % kMarkers.size()] << " cone angle " << 2 * cones[c].order << "pi\n";
  return os.str();
}

std::string render_svg(const SquareTiledSurface& s, const RenderOptions& opts) {
  const auto places = layout(s);
  int W = 0, H = 0;
  for (const auto& p : places) W = std::max(W, p.x + 1), H = std::max(H, p.y + 1);
  const int u = 40, pad = 20, text_h = 24;
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << W * u + 2 * pad
     << "\" height=\"" << H * u + 2 * pad + text_h << "\">\n"
     << "  <title>" << caption(s, opts) << "</title>\n"
     << "  <text x=\"" << pad << "\" y=\"" << pad << "\" font-family=\"monospace\" font-size=\"11\">"
     << caption(s, opts) << "</text>\n";
  std::vector<std::pair<int, int>> lower_left(static_cast<std::size_t>(s.squares()));
  for (const auto& p : places) {
    const int x = pad + p.x * u, y = pad + text_h + (H - p.y - 1) * u;
    os << "  <rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << u << "\" height=\"" << u
       << "\" fill=\"#f4f4f4\" stroke=\"#222\" stroke-width=\"1\"/>\n"
       << "  <text x=\"" << x + u / 2 << "\" y=\"" << y + u / 2 + 5
       << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">" << p.square + 1
       << "</text>\n";
    lower_left[static_cast<std::size_t>(p.square)] = {x, y + u};
  }
  const auto cones = singularities(s);
  for (std::size_t c = 0; c < cones.size(); ++c)
    for (int sq : cones[c].squares) {
      auto [x, y] = lower_left[static_cast<std::size_t>(sq)];
      const bool filled = c % 2 == 0;
      os << "  <circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"5\" fill=\"" << (filled ? "#000" : "#fff")
         << "\" stroke=\"#000\" stroke-width=\"1.5\"/>\n";
    }
  os << "</svg>\n";
  return os.str();
}

}  // namespace

std::string render(const SquareTiledSurface& s, const RenderOptions& opts) {
  return opts.format == RenderFormat::Svg ? render_svg(s, opts) : render_ascii(s, opts);
}

}  // namespace ellcover
