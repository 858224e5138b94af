#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "arcsys/arcs.hpp"
#include "arcsys/error.hpp"
#include "arcsys/formulas.hpp"
#include "arcsys/planar.hpp"
#include "arcsys/systems.hpp"

namespace arcsys {

namespace detail {

// Distinctness is part of every construction's count, so a collision is an
// error rather than something to deduplicate.
inline ArcSystem distinct_system(const SurfacePtr& surface, std::vector<CanonicalArc> arcs,
                                 const std::string& what) {
  auto sorted = arcs;
  std::sort(sorted.begin(), sorted.end());
  auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  if (dup != sorted.end())
    throw Error(ErrorCode::DegenerateSystem, what + ": two arcs normalize to " + format_arc(*dup));
  return ArcSystem(surface, std::move(arcs));
}

inline CanonicalArc chord(const SurfacePtr& s, int i, int j) {
  return canonicalize(Itinerary{i, {}, j}, s);
}

inline bool adjacent_corners(const SurfaceGluing& g, int i, int j) {
  return g.wrap(i + 1) == j || g.wrap(j + 1) == i;
}

}  // namespace detail

/// All diagonals of the polygon together with the side arcs: a family of
/// arcs pairwise intersecting at most once, of size 2|chi|(|chi|+1).
inline ArcSystem ideal_polygon_system(const SurfacePtr& surface) {
  const auto& g = *surface;
  std::vector<CanonicalArc> arcs;
  for (int i = 0; i < g.corner_count(); ++i)
    for (int j = i + 2; j < g.corner_count(); ++j)
      if (!detail::adjacent_corners(g, i, j)) arcs.push_back(detail::chord(surface, i, j));
  for (int p = 0; p < g.pair_count(); ++p) arcs.push_back(side_arc(surface, p));
  return detail::distinct_system(surface, std::move(arcs), "polygon");
}

/// Side arcs plus the fan of diagonals from corner 0: an ideal triangulation.
inline ArcSystem triangulation_system(const SurfacePtr& surface) {
  const auto& g = *surface;
  std::vector<CanonicalArc> arcs;
  for (int p = 0; p < g.pair_count(); ++p) arcs.push_back(side_arc(surface, p));
  for (int j = 2; j <= g.corner_count() - 2; ++j) arcs.push_back(detail::chord(surface, 0, j));
  return detail::distinct_system(surface, std::move(arcs), "triangulation");
}

/// Punctures on k+1 concentric circles around p' (the origin), |chi|/(k+1)
/// on each circle, p at infinity. The arcs go from p' to p crossing every
/// circle once and avoiding the reference arc that runs straight down; two
/// such arcs meet at most once between consecutive circles.
inline ArcSystem concentric_system(int abs_chi, int k) {
  require(abs_chi >= 1 && k >= 0, "concentric system needs |chi| >= 1 and k >= 0");
  const auto expected = formulas::k_system_lower(abs_chi, k);
  const int circles = k + 1;
  const int per = abs_chi / circles;
  constexpr double deg = std::numbers::pi / 180.0;

  // Angles measured from straight down, counterclockwise, so the reference
  // arc sits at 0 and 360. Punctures stay in the left half plane.
  std::vector<std::vector<double>> angles(static_cast<std::size_t>(circles));
  std::vector<Point2> pts;
  for (int c = 0; c < circles; ++c) {
    for (int j = 0; j < per; ++j) {
      double a = 190.0 + 150.0 * (j + 0.5) / per + 5.0 * (c + 1) / (circles + 1) - 2.5;
      angles[static_cast<std::size_t>(c)].push_back(a);
      double r = c + 1;
      double th = (a - 90.0) * deg;
      pts.push_back({r * std::cos(th), r * std::sin(th)});
    }
  }
  pts.push_back({0.0, 0.0});
  PlanarDiagram diagram(pts);
  const int origin = diagram.puncture_count() - 1;

  auto at = [&](double r, double a) {
    double th = (a - 90.0) * deg;
    return Point2{r * std::cos(th), r * std::sin(th)};
  };
  // Crossing angle through gap t of circle c: between consecutive punctures,
  // or between a puncture and the reference arc.
  auto gap = [&](int c, int t) {
    const auto& as = angles[static_cast<std::size_t>(c)];
    double lo = t == 0 ? 0.0 : as[static_cast<std::size_t>(t - 1)];
    double hi = t == per ? 360.0 : as[static_cast<std::size_t>(t)];
    return 0.5 * (lo + hi);
  };

  auto trace = [&](const std::vector<int>& tuple) {
    PlanarPath path{PathEnd::at(origin), {}, PathEnd::infinity()};
    double a = gap(0, tuple[0]);
    for (int c = 0; c < circles; ++c) {
      double target = gap(c, tuple[static_cast<std::size_t>(c)]);
      double r = c + 0.5;
      if (c > 0) {
        // Turn inside the annulus without passing the reference arc.
        int steps = std::max(1, static_cast<int>(std::abs(target - a)));
        for (int s = 1; s <= steps; ++s) path.via.push_back(at(r, a + (target - a) * s / steps));
      } else {
        path.via.push_back(at(r, target));
      }
      a = target;
      path.via.push_back(at(c + 1.5, a));
    }
    path.via.push_back(at(1000.0, a));
    return diagram.trace_arc(path);
  };

  std::vector<CanonicalArc> arcs;
  std::vector<int> tuple(static_cast<std::size_t>(circles), 0);
  std::vector<int> all_max(static_cast<std::size_t>(circles), per);
  for (;;) {
    if (tuple != all_max) arcs.push_back(trace(tuple));
    int c = circles - 1;
    while (c >= 0 && tuple[static_cast<std::size_t>(c)] == per) tuple[static_cast<std::size_t>(c--)] = 0;
    if (c < 0) break;
    ++tuple[static_cast<std::size_t>(c)];
  }
  // The two extreme tuples both hug the reference arc.
  if (trace(all_max) != trace(std::vector<int>(static_cast<std::size_t>(circles), 0)))
    throw Error(ErrorCode::DegenerateSystem, "extreme tuples trace different arcs");
  auto sys = detail::distinct_system(diagram.surface(), std::move(arcs), "concentric");
  if (static_cast<formulas::Int>(sys.size()) != expected)
    throw Error(ErrorCode::DegenerateSystem, "concentric system has the wrong size");
  return sys;
}

/// Arcs from p to p on the punctured sphere: the punctures sit on a line, and
/// each arc joins two of the |chi|+1 rays from a centre below the line out
/// to p. Any two meet at most once, at the centre.
inline ArcSystem same_puncture_system(int abs_chi) {
  require(abs_chi >= 1, "same-puncture system needs |chi| >= 1");
  const int m = abs_chi + 1;
  std::vector<Point2> pts;
  for (int k = 0; k < m; ++k) pts.push_back({static_cast<double>(k), 0.0});
  PlanarDiagram diagram(pts);
  const Point2 centre{0.5 * (m - 1) + 0.25, -3.0};

  // Ray t leaves the centre through the gap left of q_t; ray 0 goes straight
  // down instead, past all punctures.
  auto ray = [&](int t) -> std::vector<Point2> {
    if (t == 0) return {{centre.x, -1000.0}};
    double x = t - 0.5;
    return {{x, 0.0}, {x, 10.0}};
  };
  std::vector<CanonicalArc> arcs;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      PlanarPath path{PathEnd::infinity(), {}, PathEnd::infinity()};
      auto in = ray(i);
      path.via.assign(in.rbegin(), in.rend());
      path.via.push_back(centre);
      auto out = ray(j);
      path.via.insert(path.via.end(), out.begin(), out.end());
      arcs.push_back(diagram.trace_arc(path));
    }
  }
  return detail::distinct_system(diagram.surface(), std::move(arcs), "same-puncture");
}

/// Arcs from p (at infinity, far left) to p' = q_{m-1}. The reference arc
/// runs along the axis through q_0..q_{m-2}; for each pair of its segments
/// i < j the arc starts above the axis, crosses to below at segment i and
/// back above at segment j.
inline ArcSystem two_puncture_system(int abs_chi) {
  require(abs_chi >= 1, "two-puncture system needs |chi| >= 1");
  const int m = abs_chi + 1;
  std::vector<Point2> pts;
  for (int k = 0; k < m; ++k) pts.push_back({static_cast<double>(k), 0.0});
  PlanarDiagram diagram(pts);
  const int target = m - 1;

  std::vector<CanonicalArc> arcs;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      PlanarPath path{PathEnd::infinity(), {{-5.0, 1.0}}, PathEnd::at(target)};
      // Segment s of the axis lies between q_{s-1} and q_s.
      for (int s = 0; s < target; ++s) {
        bool below = s >= i && s < j;
        path.via.push_back({s - 0.5, below ? -1.0 : 1.0});
        path.via.push_back({s + 0.5, below ? -1.0 : 1.0});
      }
      path.via.push_back({target - 0.5, 0.0});
      arcs.push_back(diagram.trace_arc(path));
    }
  }
  return detail::distinct_system(diagram.surface(), std::move(arcs), "two-punctures");
}

/// The four-punctured sphere as the boundary of a tetrahedron ABCD with D at
/// infinity: the 6 edges, and for every edge the path joining the two other
/// vertices through its midpoint along the medians of the adjacent faces.
inline ArcSystem tetrahedron_system() {
  const Point2 A{0.0, 0.0}, B{2.0, 0.0}, C{0.9, 1.8};
  PlanarDiagram diagram({A, B, C});
  // Punctures sorted by x: A = q0, C = q1, B = q2.
  const int a = 0, c = 1, b = 2;
  const Point2 G{(A.x + B.x + C.x) / 3, (A.y + B.y + C.y) / 3};

  auto away = [&](const Point2& v, double t) {
    return Point2{v.x + t * (v.x - G.x), v.y + t * (v.y - G.y)};
  };
  auto mid = [](const Point2& u, const Point2& v) { return Point2{(u.x + v.x) / 2, (u.y + v.y) / 2}; };
  auto finite = [&](int from, std::vector<Point2> via, int to) {
    return diagram.trace_arc({PathEnd::at(from), std::move(via), PathEnd::at(to)});
  };
  auto to_infinity = [&](int from, std::vector<Point2> via) {
    return diagram.trace_arc({PathEnd::at(from), std::move(via), PathEnd::infinity()});
  };
  const double far = 1000.0;

  std::vector<CanonicalArc> arcs;
  // Edges.
  arcs.push_back(finite(a, {}, b));
  arcs.push_back(finite(b, {}, c));
  arcs.push_back(finite(c, {}, a));
  arcs.push_back(to_infinity(a, {away(A, far)}));
  arcs.push_back(to_infinity(b, {away(B, far)}));
  arcs.push_back(to_infinity(c, {away(C, far)}));
  // Through the midpoints of AB, BC, CA: from the opposite vertex of ABC
  // across the edge and out through the outer face to D.
  arcs.push_back(to_infinity(c, {mid(A, B), away(mid(A, B), far)}));
  arcs.push_back(to_infinity(a, {mid(B, C), away(mid(B, C), far)}));
  arcs.push_back(to_infinity(b, {mid(C, A), away(mid(C, A), far)}));
  // Through the midpoints of AD, BD, CD, which sit on the edge rays.
  arcs.push_back(finite(b, {away(A, 1.5)}, c));
  arcs.push_back(finite(a, {away(B, 1.5)}, c));
  arcs.push_back(finite(a, {away(C, 1.5)}, b));
  return detail::distinct_system(diagram.surface(), std::move(arcs), "tetrahedron");
}

}  // namespace arcsys
