#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <utility>
#include <vector>

#include "arcsys/arcs.hpp"
#include "arcsys/error.hpp"

namespace arcsys {

/// Result of the lift-enumeration count. `stabilized` is true when the count
/// did not change when the radius grew by one and by two.
struct LiftCount {
  int count = 0;
  bool stabilized = false;
  int radius = 0;
};

/// Combinatorial model of the universal cover: tiles are reduced words in the
/// side symbols (the sides crossed from the base tile), ideal points are
/// (tile, corner) pairs, and the circle at infinity is ordered by addresses
/// read off the tree of tiles.
class TileTree {
 public:
  using Word = std::vector<int>;

  explicit TileTree(const SurfaceGluing& g) : g_(g) {}

  Word multiply(const Word& u, const Word& v) const {
    Word out = u;
    for (int s : v) {
      if (!out.empty() && g_.partner(out.back()) == s)
        out.pop_back();
      else
        out.push_back(s);
    }
    return out;
  }

  Word inverse(const Word& u) const {
    Word out;
    out.reserve(u.size());
    for (auto it = u.rbegin(); it != u.rend(); ++it) out.push_back(g_.partner(*it));
    return out;
  }

  struct Point {
    Word tile;
    int corner = 0;
  };

  /// Moves an ideal point to the tile of its fan nearest the base tile.
  Point canonical(Point p) const {
    while (!p.tile.empty() && g_.corner_on_side(p.corner, g_.partner(p.tile.back()))) {
      p.corner = g_.glue_corner(g_.partner(p.tile.back()), p.corner);
      p.tile.pop_back();
    }
    return p;
  }

  /// Position on the circle at infinity as a lexicographic key. Expects a
  /// canonical point.
  std::vector<int> address(const Point& p) const {
    std::vector<int> key;
    if (p.tile.empty()) return {2 * p.corner};
    key.push_back(2 * p.tile[0] + 1);
    for (std::size_t k = 1; k < p.tile.size(); ++k)
      key.push_back(relative(g_.partner(p.tile[k - 1]), false, p.tile[k]));
    key.push_back(relative(g_.partner(p.tile.back()), true, p.corner));
    return key;
  }

  /// Neighbour of a tile in the fan around one of its corners, stepping
  /// counterclockwise (+1) or clockwise (-1) around the ideal point.
  Point fan_step(const Point& p, int dir) const {
    int side = dir > 0 ? p.corner : g_.wrap(p.corner - 1);
    return {multiply(p.tile, {side}), g_.glue_corner(side, p.corner)};
  }

 private:
  int relative(int entry, bool is_corner, int index) const {
    int t = g_.wrap(index - entry);
    if (is_corner) return 2 * (t == 0 ? g_.side_count() : t) - 2;
    return 2 * t - 1;
  }

  const SurfaceGluing& g_;
};

inline int default_lift_radius(const CanonicalArc& a, const CanonicalArc& b) {
  return static_cast<int>(a.length() + b.length() + 2 * a.surface().longest_cusp_cycle() + 2);
}

namespace detail {

// Tiles of the lift's tile path (level 0) and of the fans around both ideal
// endpoints, each tagged with its distance along the fan.
inline std::map<TileTree::Word, int> extended_path(const TileTree& tree, const CanonicalArc& a,
                                                   int radius) {
  std::map<TileTree::Word, int> level;
  auto note = [&](const TileTree::Word& w, int l) {
    auto [it, fresh] = level.emplace(w, l);
    if (!fresh) it->second = std::min(it->second, l);
  };
  TileTree::Word w;
  note(w, 0);
  for (int s : a.word()) {
    w = tree.multiply(w, {s});
    note(w, 0);
  }
  for (const TileTree::Point& end : {TileTree::Point{{}, a.start()}, TileTree::Point{w, a.end()}}) {
    for (int dir : {1, -1}) {
      TileTree::Point p = end;
      for (int r = 1; r <= radius; ++r) {
        p = tree.fan_step(p, dir);
        note(p.tile, r);
      }
    }
  }
  return level;
}

}  // namespace detail

/// Counts crossings of `a` and `b` by fixing one lift of `a` and testing the
/// translates of the lift of `b` that pass near it for linking at infinity.
inline LiftCount intersection_number_lifts(const CanonicalArc& a, const CanonicalArc& b,
                                           int radius) {
  require_same_surface(a, b);
  require(radius >= 1, "radius must be positive");
  const auto& g = a.surface();
  TileTree tree(g);

  auto ext_a = detail::extended_path(tree, a, radius + 2);
  auto ext_b = detail::extended_path(tree, b, radius + 2);
  std::map<TileTree::Word, int> translates;
  for (const auto& [v, lv] : ext_a) {
    for (const auto& [u, lu] : ext_b) {
      auto tau = tree.multiply(v, tree.inverse(u));
      int l = std::max(lv, lu);
      auto [it, fresh] = translates.emplace(std::move(tau), l);
      if (!fresh) it->second = std::min(it->second, l);
    }
  }

  auto a0 = tree.address(tree.canonical({{}, a.start()}));
  auto a1 = tree.address(tree.canonical({a.word(), a.end()}));
  if (a1 < a0) std::swap(a0, a1);

  std::array<int, 3> counts{};
  for (const auto& [tau, l] : translates) {
    auto b0 = tree.address(tree.canonical({tau, b.start()}));
    auto b1 = tree.address(tree.canonical({tree.multiply(tau, b.word()), b.end()}));
    if (b0 == a0 || b0 == a1 || b1 == a0 || b1 == a1) continue;
    bool in0 = a0 < b0 && b0 < a1;
    bool in1 = a0 < b1 && b1 < a1;
    if (in0 == in1) continue;
    for (int k = 0; k < 3; ++k)
      if (l <= radius + k) ++counts[static_cast<std::size_t>(k)];
  }
  if (a == b)
    for (auto& c : counts) c /= 2;
  return {counts[0], counts[0] == counts[1] && counts[1] == counts[2], radius};
}

inline LiftCount intersection_number_lifts(const CanonicalArc& a, const CanonicalArc& b) {
  return intersection_number_lifts(a, b, default_lift_radius(a, b));
}

/// As above, but a count that has not stabilized is an error.
inline int intersection_number_lifts_strict(const CanonicalArc& a, const CanonicalArc& b,
                                            int radius) {
  auto r = intersection_number_lifts(a, b, radius);
  if (!r.stabilized)
    throw Error(ErrorCode::NotStabilized, "lift count still growing at radius " +
                                              std::to_string(radius));
  return r.count;
}

}  // namespace arcsys
