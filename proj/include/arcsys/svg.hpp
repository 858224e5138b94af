#pragma once

#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

#include "arcsys/chords.hpp"
#include "arcsys/intersection.hpp"
#include "arcsys/systems.hpp"

namespace arcsys {

namespace detail {

struct XY {
  double x, y;
};

inline std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", std::abs(v) < 0.005 ? 0.0 : v);
  return buf;
}

inline const char* palette(std::size_t i) {
  static const char* colours[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                  "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};
  return colours[i % 10];
}

inline XY on_circle(int i, int n, double r, XY c) {
  double th = std::numbers::pi / 2 + 2 * std::numbers::pi * i / n;
  return {c.x + r * std::cos(th), c.y - r * std::sin(th)};
}

inline bool segment_cross(XY p1, XY p2, XY q1, XY q2, XY& out) {
  double d = (p2.x - p1.x) * (q2.y - q1.y) - (p2.y - p1.y) * (q2.x - q1.x);
  if (std::abs(d) < 1e-12) return false;
  double t = ((q1.x - p1.x) * (q2.y - q1.y) - (q1.y - p1.y) * (q2.x - q1.x)) / d;
  out = {p1.x + t * (p2.x - p1.x), p1.y + t * (p2.y - p1.y)};
  return true;
}

}  // namespace detail

/// The polygon with every arc drawn as its chords; points on a side are
/// spaced by strand order, and crossings are circled.
inline std::string render_system_svg(const ArcSystem& sys) {
  using detail::XY;
  const auto& g = sys.surface();
  const int n = g.side_count();
  const XY centre{260, 260};
  const double radius = 220;
  StrandOrder order(sys.surface_ptr(), sys.arcs());

  std::vector<XY> corner;
  for (int i = 0; i < n; ++i) corner.push_back(detail::on_circle(i, n, radius, centre));
  auto lerp = [](XY a, XY b, double t) { return XY{a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)}; };
  auto side_point = [&](int side, int occurrence_rank) {
    int pair = g.pair_of(side);
    double f = static_cast<double>(occurrence_rank) /
               static_cast<double>(order.along(pair).size() + 1);
    XY from = corner[static_cast<std::size_t>(side)];
    XY to = corner[static_cast<std::size_t>(g.wrap(side + 1))];
    // The uppercase copy runs against the lowercase one.
    return g.is_forward(side) ? lerp(from, to, f) : lerp(to, from, f);
  };

  std::vector<std::vector<std::pair<XY, XY>>> segments(sys.size());
  for (std::size_t i = 0; i < sys.size(); ++i) {
    const auto& a = sys[i];
    if (a.is_side_arc()) continue;
    const auto& w = a.word();
    for (std::size_t t = 0; t <= w.size(); ++t) {
      XY from = t == 0 ? corner[static_cast<std::size_t>(a.start())]
                       : side_point(g.partner(w[t - 1]), order.rank(static_cast<int>(i), static_cast<int>(t - 1)));
      XY to = t == w.size() ? corner[static_cast<std::size_t>(a.end())]
                            : side_point(w[t], order.rank(static_cast<int>(i), static_cast<int>(t)));
      segments[i].emplace_back(from, to);
    }
  }

  auto m = intersection_matrix(sys);
  long total = 0;
  for (std::size_t i = 0; i < sys.size(); ++i)
    for (std::size_t j = i + 1; j < sys.size(); ++j) total += m[i][j];

  std::string s;
  s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"520\" height=\"560\">\n";
  s += "<title>" + g.word() + ": " + std::to_string(sys.size()) + " arcs</title>\n";
  s += "<polygon fill=\"none\" stroke=\"#000\" stroke-width=\"1.5\" points=\"";
  for (int i = 0; i < n; ++i)
    s += (i ? " " : "") + detail::num(corner[static_cast<std::size_t>(i)].x) + "," +
         detail::num(corner[static_cast<std::size_t>(i)].y);
  s += "\"/>\n";
  for (int side = 0; side < n; ++side) {
    XY mid = lerp(corner[static_cast<std::size_t>(side)],
                  corner[static_cast<std::size_t>(g.wrap(side + 1))], 0.5);
    XY out = lerp(centre, mid, 1.08);
    s += "<text x=\"" + detail::num(out.x) + "\" y=\"" + detail::num(out.y) +
         "\" font-size=\"14\" text-anchor=\"middle\">" + std::string(1, g.symbol_char(side)) +
         "</text>\n";
  }
  for (int c = 0; c < n; ++c) {
    XY p = lerp(centre, corner[static_cast<std::size_t>(c)], 1.05);
    s += "<text x=\"" + detail::num(p.x) + "\" y=\"" + detail::num(p.y) +
         "\" font-size=\"10\" fill=\"#555\" text-anchor=\"middle\">c" + std::to_string(c) + "</text>\n";
  }
  for (std::size_t i = 0; i < sys.size(); ++i) {
    const auto& a = sys[i];
    std::string colour = detail::palette(i);
    if (a.is_side_arc()) {
      for (int side : {g.forward_side(a.side_pair()), g.partner(g.forward_side(a.side_pair()))}) {
        XY p = corner[static_cast<std::size_t>(side)];
        XY q = corner[static_cast<std::size_t>(g.wrap(side + 1))];
        s += "<line x1=\"" + detail::num(p.x) + "\" y1=\"" + detail::num(p.y) + "\" x2=\"" +
             detail::num(q.x) + "\" y2=\"" + detail::num(q.y) + "\" stroke=\"" + colour +
             "\" stroke-width=\"4\" stroke-opacity=\"0.5\"/>\n";
      }
      continue;
    }
    for (const auto& [p, q] : segments[i])
      s += "<line x1=\"" + detail::num(p.x) + "\" y1=\"" + detail::num(p.y) + "\" x2=\"" +
           detail::num(q.x) + "\" y2=\"" + detail::num(q.y) + "\" stroke=\"" + colour +
           "\" stroke-width=\"1.5\"/>\n";
  }
  for (std::size_t i = 0; i < sys.size(); ++i) {
    for (std::size_t j = i + 1; j < sys.size(); ++j) {
      for (std::size_t x = 0; x < order.chords(i).size(); ++x) {
        for (std::size_t y = 0; y < order.chords(j).size(); ++y) {
          if (!detail::interleave(order.chords(i)[x], order.chords(j)[y])) continue;
          XY at{};
          const auto& [p1, p2] = segments[i][x];
          const auto& [q1, q2] = segments[j][y];
          if (!detail::segment_cross(p1, p2, q1, q2, at)) continue;
          s += "<circle cx=\"" + detail::num(at.x) + "\" cy=\"" + detail::num(at.y) +
               "\" r=\"4\" fill=\"none\" stroke=\"#d00\" stroke-width=\"1.5\"/>\n";
        }
      }
    }
  }
  // A side arc is drawn on the boundary; other arcs cross it where they pass
  // through its lowercase copy.
  for (std::size_t i = 0; i < sys.size(); ++i) {
    if (!sys[i].is_side_arc()) continue;
    const int pair = sys[i].side_pair();
    for (const auto& o : order.along(pair)) {
      XY at = side_point(g.forward_side(pair), order.rank(o.arc, o.index));
      s += "<circle cx=\"" + detail::num(at.x) + "\" cy=\"" + detail::num(at.y) +
           "\" r=\"4\" fill=\"none\" stroke=\"#d00\" stroke-width=\"1.5\"/>\n";
    }
  }
  s += "<text x=\"20\" y=\"545\" font-size=\"14\">crossings: " + std::to_string(total) + "</text>\n";
  s += "</svg>\n";
  return s;
}

/// Circle with l labelled points; degenerate chords are drawn as dots.
inline std::string render_chords_svg(const ChordFamily& fam) {
  using detail::XY;
  const XY centre{220, 220};
  const double radius = 180;
  std::vector<XY> pt;
  for (int i = 0; i < fam.l; ++i) pt.push_back(detail::on_circle(i, fam.l, radius, centre));

  int crossings = 0;
  for (std::size_t i = 0; i < fam.chords.size(); ++i)
    for (std::size_t j = i + 1; j < fam.chords.size(); ++j)
      if (chords_intersect(fam.chords[i], fam.chords[j], fam.l)) ++crossings;

  std::string s;
  s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"440\" height=\"470\">\n";
  s += "<title>" + std::to_string(fam.chords.size()) + " chords on " + std::to_string(fam.l) +
       " points</title>\n";
  s += "<circle cx=\"" + detail::num(centre.x) + "\" cy=\"" + detail::num(centre.y) + "\" r=\"" +
       detail::num(radius) + "\" fill=\"none\" stroke=\"#000\"/>\n";
  for (std::size_t k = 0; k < fam.chords.size(); ++k) {
    const auto& c = fam.chords[k];
    XY p = pt[static_cast<std::size_t>(c.a)], q = pt[static_cast<std::size_t>(c.b)];
    if (c.degenerate())
      s += "<circle cx=\"" + detail::num(p.x) + "\" cy=\"" + detail::num(p.y) + "\" r=\"7\" fill=\"" +
           detail::palette(k) + "\"/>\n";
    else
      s += "<line x1=\"" + detail::num(p.x) + "\" y1=\"" + detail::num(p.y) + "\" x2=\"" +
           detail::num(q.x) + "\" y2=\"" + detail::num(q.y) + "\" stroke=\"" + detail::palette(k) +
           "\" stroke-width=\"2\"/>\n";
  }
  for (int i = 0; i < fam.l; ++i) {
    XY p = pt[static_cast<std::size_t>(i)];
    XY label{centre.x + 1.1 * (p.x - centre.x), centre.y + 1.1 * (p.y - centre.y)};
    s += "<circle cx=\"" + detail::num(p.x) + "\" cy=\"" + detail::num(p.y) + "\" r=\"3\"/>\n";
    s += "<text x=\"" + detail::num(label.x) + "\" y=\"" + detail::num(label.y) +
         "\" font-size=\"12\" text-anchor=\"middle\">" + std::to_string(i) + "</text>\n";
  }
  s += "<text x=\"20\" y=\"455\" font-size=\"14\">intersecting pairs: " + std::to_string(crossings) +
       "</text>\n";
  s += "</svg>\n";
  return s;
}

}  // namespace arcsys
