#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "arcsys/arcs.hpp"
#include "arcsys/error.hpp"
#include "arcsys/farey.hpp"

namespace arcsys {

/// One crossing of an arc with a cut arc (a side pair of the polygon).
struct Occurrence {
  int arc = 0;    // index into the arc list the order was built from
  int index = 0;  // position in the arc's word
  int pair = 0;
  bool forward = true;  // crossed through the lowercase copy of the pair
};

using IntersectionMatrix = std::vector<std::vector<int>>;

namespace detail {

// Boundary elements of a tile ranked counterclockwise starting just after the
// entry side: corner e+1 is 0, side e+1 is 1, ..., corner e is 2n-2.
inline int rank_from_side(const SurfaceGluing& g, int entry, bool is_corner, int index) {
  int t = g.wrap(index - entry);
  if (is_corner) return 2 * (t == 0 ? g.side_count() : t) - 2;
  return 2 * t - 1;
}

// The boundary ranks met by the strand of occurrence i as it walks away from
// the crossed cut arc into the tile that sees the cut arc as its lowercase side.
inline std::vector<int> divergence_key(const CanonicalArc& a, std::size_t i) {
  const auto& g = a.surface();
  const auto& w = a.word();
  std::vector<int> key;
  if (g.is_forward(w[i])) {
    int entry = w[i];
    for (std::size_t j = i + 1; j-- > 0;) {
      if (j == 0) {
        key.push_back(rank_from_side(g, entry, true, a.start()));
        break;
      }
      key.push_back(rank_from_side(g, entry, false, g.partner(w[j - 1])));
      entry = w[j - 1];
    }
  } else {
    int entry = g.partner(w[i]);
    for (std::size_t j = i + 1; j <= w.size(); ++j) {
      if (j == w.size()) {
        key.push_back(rank_from_side(g, entry, true, a.end()));
        break;
      }
      key.push_back(rank_from_side(g, entry, false, w[j]));
      entry = g.partner(w[j]);
    }
  }
  return key;
}

using BoundaryPoint = std::pair<long, long>;
using BoundaryChord = std::pair<BoundaryPoint, BoundaryPoint>;

inline bool interleave(const BoundaryChord& x, const BoundaryChord& y) {
  auto [a0, a1] = std::minmax(x.first, x.second);
  auto [b0, b1] = std::minmax(y.first, y.second);
  return (a0 < b0 && b0 < a1 && a1 < b1) || (b0 < a0 && a0 < b1 && b1 < a1);
}

}  // namespace detail

/// Exact position of every crossing of `a` along the lowercase copy of the
/// crossed side, computed from the arc's geodesic lift in the Farey model.
inline std::vector<Fraction> crossing_positions(const CanonicalArc& a, const FareyModel& model) {
  const auto& g = a.surface();
  const auto& w = a.word();
  std::vector<Mat2> lift{Mat2::identity()};
  for (int s : w) lift.push_back(lift.back() * model.pairing(s));
  Proj x = model.vertex(a.start());
  Proj y = lift.back().apply(model.vertex(a.end()));

  std::vector<Fraction> out;
  out.reserve(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    bool fwd = g.is_forward(w[i]);
    const Mat2& frame = fwd ? lift[i] : lift[i + 1];
    int side = fwd ? w[i] : g.partner(w[i]);
    Mat2 back = frame.inverse_unimodular();
    out.push_back(crossing_parameter(back.apply(x), back.apply(y), model.vertex(side),
                                     model.vertex(g.wrap(side + 1))));
  }
  return out;
}

/// Strand order of a list of arcs on each cut arc, and the chord
/// decomposition it induces. Built once and then queried pairwise.
class StrandOrder {
 public:
  StrandOrder(SurfacePtr surface, std::vector<CanonicalArc> arcs)
      : surface_(std::move(surface)), arcs_(std::move(arcs)) {
    for (const auto& a : arcs_)
      if (a.surface().word() != surface_->word())
        throw Error(ErrorCode::SurfaceMismatch, "arc from " + a.surface().word() +
                                                    " in a system on " + surface_->word());
    build();
  }

  const SurfaceGluing& surface() const { return *surface_; }
  const std::vector<CanonicalArc>& arcs() const { return arcs_; }

  /// Occurrences on the cut arc of `pair`, in increasing position along its
  /// lowercase copy.
  const std::vector<Occurrence>& along(int pair) const {
    return order_[static_cast<std::size_t>(pair)];
  }
  int rank(int arc, int index) const {
    return ranks_[static_cast<std::size_t>(arc)][static_cast<std::size_t>(index)];
  }

  int crossings(std::size_t i, std::size_t j) const {
    if (i == j) return self_crossings(i);
    const auto& a = arcs_[i];
    const auto& b = arcs_[j];
    if (a.is_side_arc() && b.is_side_arc()) return 0;
    if (a.is_side_arc()) return pair_count_[j][static_cast<std::size_t>(a.side_pair())];
    if (b.is_side_arc()) return pair_count_[i][static_cast<std::size_t>(b.side_pair())];
    int n = 0;
    for (const auto& x : chords_[i])
      for (const auto& y : chords_[j])
        if (detail::interleave(x, y)) ++n;
    return n;
  }

  int self_crossings(std::size_t i) const {
    const auto& c = chords_[i];
    int n = 0;
    for (std::size_t x = 0; x < c.size(); ++x)
      for (std::size_t y = x + 1; y < c.size(); ++y)
        if (detail::interleave(c[x], c[y])) ++n;
    return n;
  }

  const std::vector<detail::BoundaryChord>& chords(std::size_t i) const { return chords_[i]; }

 private:
  void build() {
    const auto& g = *surface_;
    FareyModel model(g);
    std::vector<std::vector<Fraction>> pos;
    std::vector<std::vector<std::vector<int>>> keys(arcs_.size());
    order_.assign(static_cast<std::size_t>(g.pair_count()), {});
    pair_count_.assign(arcs_.size(), std::vector<int>(static_cast<std::size_t>(g.pair_count()), 0));
    for (std::size_t i = 0; i < arcs_.size(); ++i) {
      const auto& a = arcs_[i];
      pos.push_back(a.is_side_arc() ? std::vector<Fraction>{} : crossing_positions(a, model));
      if (a.is_side_arc()) continue;
      for (std::size_t t = 0; t < a.length(); ++t) {
        int s = a.word()[t];
        ++pair_count_[i][static_cast<std::size_t>(g.pair_of(s))];
        order_[static_cast<std::size_t>(g.pair_of(s))].push_back(
            {static_cast<int>(i), static_cast<int>(t), g.pair_of(s), g.is_forward(s)});
      }
    }

    auto key_of = [&](const Occurrence& o) -> const std::vector<int>& {
      auto& slot = keys[static_cast<std::size_t>(o.arc)];
      if (slot.empty()) slot.resize(arcs_[static_cast<std::size_t>(o.arc)].length());
      auto& k = slot[static_cast<std::size_t>(o.index)];
      if (k.empty()) k = detail::divergence_key(arcs_[static_cast<std::size_t>(o.arc)],
                                                static_cast<std::size_t>(o.index));
      return k;
    };
    auto less = [&](const Occurrence& x, const Occurrence& y) {
      if (x.arc == y.arc && x.index == y.index) return false;
      int c = compare(pos[static_cast<std::size_t>(x.arc)][static_cast<std::size_t>(x.index)],
                      pos[static_cast<std::size_t>(y.arc)][static_cast<std::size_t>(y.index)]);
      if (c != 0) return c < 0;
      // Strands through a common point of the side: the one turning towards
      // the far end of the side comes later.
      const auto& kx = key_of(x);
      const auto& ky = key_of(y);
      if (kx == ky)
        throw Error(ErrorCode::IndistinguishableStrands,
                    "strands " + format_arc(arcs_[static_cast<std::size_t>(x.arc)]) + " and " +
                        format_arc(arcs_[static_cast<std::size_t>(y.arc)]) + " coincide");
      return ky < kx;
    };

    ranks_.assign(arcs_.size(), {});
    for (std::size_t i = 0; i < arcs_.size(); ++i) ranks_[i].assign(arcs_[i].length(), -1);
    for (auto& occs : order_) {
      std::sort(occs.begin(), occs.end(), less);
      for (std::size_t r = 0; r < occs.size(); ++r)
        ranks_[static_cast<std::size_t>(occs[r].arc)][static_cast<std::size_t>(occs[r].index)] =
            static_cast<int>(r) + 1;
    }

    chords_.assign(arcs_.size(), {});
    for (std::size_t i = 0; i < arcs_.size(); ++i) {
      const auto& a = arcs_[i];
      if (a.is_side_arc()) continue;
      const auto& w = a.word();
      auto corner = [](int c) { return detail::BoundaryPoint{2L * c, 0L}; };
      auto on_side = [&](int side, std::size_t occ) {
        long r = ranks_[i][occ];
        return detail::BoundaryPoint{2L * side + 1, g.is_forward(side) ? r : -r};
      };
      for (std::size_t t = 0; t <= w.size(); ++t) {
        auto from = t == 0 ? corner(a.start()) : on_side(g.partner(w[t - 1]), t - 1);
        auto to = t == w.size() ? corner(a.end()) : on_side(w[t], t);
        chords_[i].emplace_back(from, to);
      }
    }
  }

  SurfacePtr surface_;
  std::vector<CanonicalArc> arcs_;
  std::vector<std::vector<Occurrence>> order_;
  std::vector<std::vector<int>> ranks_;
  std::vector<std::vector<int>> pair_count_;
  std::vector<std::vector<detail::BoundaryChord>> chords_;
};

inline StrandOrder strand_order(const SurfacePtr& surface, std::vector<CanonicalArc> arcs) {
  return StrandOrder(surface, std::move(arcs));
}

/// Geometric intersection number of two arcs in minimal position. Arcs
/// sharing an ideal endpoint do not meet there.
inline int intersection_number(const CanonicalArc& a, const CanonicalArc& b) {
  require_same_surface(a, b);
  if (a == b) return StrandOrder(a.surface_ptr(), {a}).self_crossings(0);
  return StrandOrder(a.surface_ptr(), {a, b}).crossings(0, 1);
}

/// Number of transverse self-crossings of the geodesic representative.
inline int self_intersection(const CanonicalArc& a) {
  if (a.is_side_arc()) return 0;
  return StrandOrder(a.surface_ptr(), {a}).self_crossings(0);
}

inline bool is_simple(const CanonicalArc& a) { return self_intersection(a) == 0; }

inline IntersectionMatrix intersection_matrix(const SurfacePtr& surface,
                                              const std::vector<CanonicalArc>& arcs) {
  StrandOrder order(surface, arcs);
  IntersectionMatrix m(arcs.size(), std::vector<int>(arcs.size(), 0));
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    m[i][i] = order.self_crossings(i);
    for (std::size_t j = i + 1; j < arcs.size(); ++j) m[i][j] = m[j][i] = order.crossings(i, j);
  }
  return m;
}

}  // namespace arcsys
