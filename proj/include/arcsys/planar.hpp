#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "arcsys/arcs.hpp"
#include "arcsys/surface.hpp"

namespace arcsys {

struct Point2 {
  double x = 0;
  double y = 0;
};

/// Where a traced path begins or ends: at one of the finite punctures, or at
/// the puncture at infinity.
struct PathEnd {
  bool at_infinity = true;
  int puncture = -1;

  static PathEnd infinity() { return {true, -1}; }
  static PathEnd at(int k) { return {false, k}; }
};

/// A drawn arc: a polyline through `via`. A finite end is prepended or
/// appended as the puncture itself; an end at infinity leaves from the first
/// (or last) via point straight away from the punctures.
struct PlanarPath {
  PathEnd start;
  std::vector<Point2> via;
  PathEnd end;
};

/// The plane with finite punctures q_0..q_{m-1} (sorted by x) and the
/// puncture p at infinity, cut along the vertical rays going up from each q_k.
/// The cut plane is the polygon of the sphere word aAbB... with m pairs:
///
///   - q_k is corner 2k+1;
///   - the part of infinity above and between rays k-1 and k is corner 2k;
///   - every other direction to infinity is corner 0;
///   - crossing ray k from left to right leaves through side 2k (lowercase),
///     from right to left through side 2k+1.
class PlanarDiagram {
 public:
  explicit PlanarDiagram(std::vector<Point2> punctures) : q_(std::move(punctures)) {
    require(q_.size() >= 2, "need at least two finite punctures");
    std::sort(q_.begin(), q_.end(), [](const Point2& a, const Point2& b) { return a.x < b.x; });
    for (std::size_t k = 1; k < q_.size(); ++k)
      if (q_[k].x - q_[k - 1].x < kEps) throw std::logic_error("punctures share an x coordinate");
    surface_ = make_standard_planar(static_cast<int>(q_.size()) - 1);
  }

  const SurfacePtr& surface() const { return surface_; }
  const std::vector<Point2>& punctures() const { return q_; }
  int puncture_count() const { return static_cast<int>(q_.size()); }
  int corner_of_puncture(int k) const { return 2 * k + 1; }

  /// Corner reached by leaving `s` for infinity: straight up when between two
  /// rays above the axis, otherwise away from all rays.
  int corner_at_infinity(const Point2& s) const {
    int m = puncture_count();
    for (int k = 1; k < m; ++k) {
      if (s.x > q_[static_cast<std::size_t>(k - 1)].x && s.x < q_[static_cast<std::size_t>(k)].x) {
        // Going straight up only stays clear of the punctures if we start
        // above all of them.
        if (s.y > max_height() + kEps) return 2 * k;
        if (s.y < min_height() - kEps) return 0;
        throw std::logic_error("point is not clear of the punctures");
      }
    }
    return 0;
  }

  Itinerary trace(const PlanarPath& path) const {
    std::vector<Point2> pts;
    if (!path.start.at_infinity) pts.push_back(q_.at(static_cast<std::size_t>(path.start.puncture)));
    pts.insert(pts.end(), path.via.begin(), path.via.end());
    if (!path.end.at_infinity) pts.push_back(q_.at(static_cast<std::size_t>(path.end.puncture)));
    require(pts.size() >= 2, "a traced path needs at least two points");

    Itinerary it;
    it.start = path.start.at_infinity ? corner_at_infinity(pts.front())
                                      : corner_of_puncture(path.start.puncture);
    it.end = path.end.at_infinity ? corner_at_infinity(pts.back())
                                  : corner_of_puncture(path.end.puncture);
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
      int skip_from = (i == 0 && !path.start.at_infinity) ? path.start.puncture : -1;
      int skip_to = (i + 2 == pts.size() && !path.end.at_infinity) ? path.end.puncture : -1;
      crossings(pts[i], pts[i + 1], skip_from, skip_to, it.word);
    }
    return it;
  }

  CanonicalArc trace_arc(const PlanarPath& path) const {
    return canonicalize(trace(path), surface_);
  }

 private:
  static constexpr double kEps = 1e-9;

  double max_height() const {
    double h = q_.front().y;
    for (const auto& p : q_) h = std::max(h, p.y);
    return h;
  }
  double min_height() const {
    double h = q_.front().y;
    for (const auto& p : q_) h = std::min(h, p.y);
    return h;
  }

  // Appends the sides crossed by the segment a->b in order along it. The
  // segment may start or end at puncture `skip_from` / `skip_to`.
  void crossings(const Point2& a, const Point2& b, int skip_from, int skip_to,
                 std::vector<int>& word) const {
    for (int k = 0; k < puncture_count(); ++k) {
      if (k == skip_from || k == skip_to) continue;
      const Point2& q = q_[static_cast<std::size_t>(k)];
      if (point_near_segment(q, a, b)) throw std::logic_error("path passes through a puncture");
    }
    struct Hit {
      double t;
      int side;
    };
    std::vector<Hit> hits;
    for (int k = 0; k < puncture_count(); ++k) {
      const Point2& q = q_[static_cast<std::size_t>(k)];
      double da = a.x - q.x, db = b.x - q.x;
      bool starts_here = (k == skip_from), ends_here = (k == skip_to);
      if (starts_here && std::abs(da) < kEps) {
        if (std::abs(db) < kEps && b.y > q.y) throw std::logic_error("path runs along a cut");
        continue;
      }
      if (ends_here && std::abs(db) < kEps) {
        if (std::abs(da) < kEps && a.y > q.y) throw std::logic_error("path runs along a cut");
        continue;
      }
      if (std::abs(da) < kEps || std::abs(db) < kEps) {
        // A vertex exactly on the ray's line is ambiguous only above q.
        double y = std::abs(da) < kEps ? a.y : b.y;
        if (y > q.y - kEps) throw std::logic_error("path vertex lies on a cut");
        continue;
      }
      if ((da < 0) == (db < 0)) continue;
      double t = da / (da - db);
      double y = a.y + t * (b.y - a.y);
      if (std::abs(y - q.y) < kEps) throw std::logic_error("path crosses a cut at its puncture");
      if (y < q.y) continue;
      hits.push_back({t, da < 0 ? 2 * k : 2 * k + 1});
    }
    std::sort(hits.begin(), hits.end(), [](const Hit& x, const Hit& y) { return x.t < y.t; });
    for (std::size_t i = 1; i < hits.size(); ++i)
      if (hits[i].t - hits[i - 1].t < kEps) throw std::logic_error("simultaneous cut crossings");
    for (const auto& h : hits) word.push_back(h.side);
  }

  static bool point_near_segment(const Point2& q, const Point2& a, const Point2& b) {
    double vx = b.x - a.x, vy = b.y - a.y;
    double len2 = vx * vx + vy * vy;
    double t = len2 == 0 ? 0 : ((q.x - a.x) * vx + (q.y - a.y) * vy) / len2;
    t = std::clamp(t, 0.0, 1.0);
    double dx = a.x + t * vx - q.x, dy = a.y + t * vy - q.y;
    return dx * dx + dy * dy < 1e-12;
  }

  std::vector<Point2> q_;
  SurfacePtr surface_;
};

}  // namespace arcsys
