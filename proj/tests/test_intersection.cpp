#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <cstdlib>
#include <numeric>
#include <random>

#include "arcsys/constructions.hpp"
#include "arcsys/intersection.hpp"
#include "arcsys/lifts.hpp"
#include "arcsys/systems.hpp"
#include "support.hpp"

using namespace arcsys;
using arcsys::testing::random_arc;

namespace {

CanonicalArc arc(const SurfacePtr& s, const char* text) { return parse_arc(text, s); }

ArcSystem universe(const char* word, int max_len) {
  SearchConfig cfg;
  cfg.max_word_len = max_len;
  return enumerate_arcs(make_surface(word), cfg);
}

// Homology class of an arc on the once-punctured torus closed up at the
// puncture: every tile segment is pushed onto the polygon boundary, walking
// counterclockwise from its entry corner to its exit corner.
std::array<long, 2> torus_class(const CanonicalArc& a) {
  const auto& g = a.surface();
  std::array<long, 2> v{0, 0};
  auto walk = [&](int from, int to) {
    for (int c = from; c != to; c = g.wrap(c + 1))
      v[static_cast<std::size_t>(g.pair_of(c))] += g.is_forward(c) ? 1 : -1;
  };
  int at = a.start();
  for (int x : a.word()) {
    walk(at, x);
    at = g.glue_corner(x, x);
  }
  walk(at, a.end());
  return v;
}

}  // namespace

TEST(Intersection, CutArcsAreDisjoint) {
  for (const char* w : {"aAbB", "abAB", "aAbBcC", "abcABC", "abABcC"}) {
    auto s = make_surface(w);
    for (int p = 0; p < s->pair_count(); ++p)
      for (int q = 0; q < s->pair_count(); ++q)
        EXPECT_EQ(intersection_number(side_arc(s, p), side_arc(s, q)), 0) << w;
  }
}

TEST(Intersection, SquareDiagonalsCrossOnce) {
  auto s = make_surface("aAbB");
  auto d1 = arc(s, "c0::c2"), d2 = arc(s, "c1::c3");
  EXPECT_EQ(intersection_number(d1, d2), 1);
  auto lc = intersection_number_lifts(d1, d2, 4);
  EXPECT_EQ(lc.count, 1);
  EXPECT_TRUE(lc.stabilized);
}

TEST(Intersection, CutArcsOracle) {
  auto s = make_surface("aAbB");
  auto lc = intersection_number_lifts(side_arc(s, 0), side_arc(s, 1), 3);
  EXPECT_EQ(lc.count, 0);
  EXPECT_TRUE(lc.stabilized);
}

TEST(Intersection, TorusSingleCrossings) {
  // Arcs of slopes (1,2) and (2,1): |det| = 3, so two crossings.
  auto s = make_surface("abAB");
  auto x = arc(s, "c0:A:c2"), y = arc(s, "c0:b:c2");
  EXPECT_EQ(torus_class(x), (std::array<long, 2>{1, 2}));
  EXPECT_EQ(torus_class(y), (std::array<long, 2>{2, 1}));
  EXPECT_EQ(intersection_number(x, y), 2);
  EXPECT_EQ(intersection_number_lifts_strict(x, y, default_lift_radius(x, y)), 2);
}

TEST(Intersection, TorusSlopeFormula) {
  // Distinct simple arcs of slopes u, v on the once-punctured torus meet
  // |det(u, v)| - 1 times.
  auto u = universe("abAB", 8);
  auto m = intersection_matrix(u);
  ASSERT_GT(u.size(), 60u);
  for (std::size_t i = 0; i < u.size(); ++i) {
    auto x = torus_class(u[i]);
    for (std::size_t j = i + 1; j < u.size(); ++j) {
      auto y = torus_class(u[j]);
      long det = std::labs(x[0] * y[1] - x[1] * y[0]);
      ASSERT_EQ(m[i][j], det - 1) << format_arc(u[i]) << " x " << format_arc(u[j]);
    }
  }
}

TEST(Intersection, SelfIsZeroForSimple) {
  auto s = make_surface("aAbB");
  auto sys = ideal_polygon_system(s);
  for (const auto& a : sys.arcs()) {
    EXPECT_EQ(self_intersection(a), 0);
    EXPECT_EQ(intersection_number(a, a), 0);
  }
  EXPECT_EQ(self_intersection(arc(s, "c0::c2")), 0);
}

TEST(Intersection, NonSimpleArcOnSquare) {
  // The shortest non-simple arcs on aAbB, cross-checked against the lift count.
  auto s = make_surface("aAbB");
  SearchConfig cfg;
  cfg.max_word_len = 4;
  auto simple = enumerate_arcs(s, cfg);
  std::mt19937 rng(1);
  int found = 0;
  for (int t = 0; t < 2000 && found < 10; ++t) {
    auto a = random_arc(s, rng, 4);
    int n = self_intersection(a);
    if (n == 0) continue;
    ++found;
    EXPECT_EQ(intersection_number_lifts_strict(a, a, default_lift_radius(a, a)), n)
        << format_arc(a);
    EXPECT_EQ(std::find(simple.arcs().begin(), simple.arcs().end(), a), simple.arcs().end());
    EXPECT_THROW(ArcSystem(s, {a}), Error);
  }
  EXPECT_GT(found, 0);
}

TEST(Intersection, SymmetricOnEnumeratedArcs) {
  for (const char* w : {"aAbB", "abAB", "aAbBcC"}) {
    auto u = universe(w, 4);
    for (std::size_t i = 0; i < u.size(); ++i)
      for (std::size_t j = i + 1; j < u.size(); ++j)
        ASSERT_EQ(intersection_number(u[i], u[j]), intersection_number(u[j], u[i]))
            << w << " " << format_arc(u[i]) << " " << format_arc(u[j]);
  }
}

TEST(Intersection, AgreesWithLiftCount) {
  std::mt19937 rng(31337);
  for (const char* w : {"aAbB", "abAB", "aAbBcC", "abcABC", "abABcC"}) {
    auto s = make_surface(w);
    int stabilized = 0;
    for (int t = 0; t < 60; ++t) {
      auto a = random_arc(s, rng, 4);
      auto b = random_arc(s, rng, 4);
      auto lc = intersection_number_lifts(a, b);
      if (!lc.stabilized) continue;
      ++stabilized;
      EXPECT_EQ(intersection_number(a, b), lc.count) << w << " " << format_arc(a) << " x " << format_arc(b);
    }
    EXPECT_GT(stabilized, 50) << w;
  }
}

TEST(Intersection, PermutationInvariant) {
  std::mt19937 rng(8);
  for (const char* w : {"aAbB", "abAB", "aAbBcC"}) {
    auto u = universe(w, 3);
    const auto& arcs = u.arcs();
    auto base = intersection_matrix(u.surface_ptr(), arcs);
    std::vector<std::size_t> perm(arcs.size());
    std::iota(perm.begin(), perm.end(), 0);
    for (int t = 0; t < 5; ++t) {
      std::shuffle(perm.begin(), perm.end(), rng);
      std::vector<CanonicalArc> shuffled;
      for (auto p : perm) shuffled.push_back(arcs[p]);
      auto m = intersection_matrix(u.surface_ptr(), shuffled);
      for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = 0; j < perm.size(); ++j) ASSERT_EQ(m[i][j], base[perm[i]][perm[j]]);
    }
  }
}

TEST(Intersection, MatrixExamples) {
  auto s = make_surface("aAbB");
  auto poly = intersection_matrix(ideal_polygon_system(s));
  int ones = 0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    EXPECT_EQ(poly[i][i], 0);
    for (std::size_t j = 0; j < poly.size(); ++j) {
      EXPECT_LE(poly[i][j], 1);
      EXPECT_EQ(poly[i][j], poly[j][i]);
      if (i < j) ones += poly[i][j];
    }
  }
  EXPECT_EQ(ones, 1);

  for (const char* w : {"aAbB", "abAB", "aAbBcC"}) {
    auto tri = intersection_matrix(triangulation_system(make_surface(w)));
    for (const auto& row : tri)
      for (int v : row) EXPECT_EQ(v, 0) << w;
  }

  auto single = intersection_matrix(s, {arc(s, "c0::c2")});
  EXPECT_EQ(single, (IntersectionMatrix{{0}}));
}

TEST(StrandOrder, SingleOccurrence) {
  auto s = make_surface("aAbB");
  auto a = arc(s, "c2:a:c0");
  ASSERT_EQ(a.length(), 1u);
  StrandOrder order(s, {a});
  ASSERT_EQ(order.along(0).size(), 1u);
  EXPECT_EQ(order.rank(0, 0), 1);
  for (int p = 1; p < s->pair_count(); ++p) EXPECT_TRUE(order.along(p).empty());
}

TEST(StrandOrder, RepeatedCrossingsAreStrictlyOrdered) {
  std::mt19937 rng(4);
  auto s = make_surface("abAB");
  for (int t = 0; t < 200; ++t) {
    auto a = random_arc(s, rng, 6);
    StrandOrder order(s, {a});
    for (int p = 0; p < s->pair_count(); ++p) {
      std::vector<int> ranks;
      for (const auto& o : order.along(p)) ranks.push_back(order.rank(o.arc, o.index));
      for (std::size_t r = 0; r < ranks.size(); ++r) EXPECT_EQ(ranks[r], static_cast<int>(r) + 1);
    }
  }
}

TEST(StrandOrder, ReversedArcMirrorsCrossingCount) {
  // Listing an arc in either orientation gives the same crossings with others.
  std::mt19937 rng(12);
  auto s = make_surface("aAbBcC");
  for (int t = 0; t < 100; ++t) {
    auto a = random_arc(s, rng, 4);
    auto b = random_arc(s, rng, 4);
    auto rb = canonicalize(reverse(b.itinerary(), *s), s);
    EXPECT_EQ(intersection_number(a, b), intersection_number(a, rb));
  }
}

TEST(Intersection, SurfaceMismatch) {
  auto s = make_surface("aAbB");
  auto t = make_surface("abAB");
  EXPECT_THROW(intersection_number(side_arc(s, 0), side_arc(t, 0)), Error);
}

TEST(Intersection, RemarkCeilingOnUniverse) {
  // No disjoint family among simple arcs exceeds 3|chi|.
  for (const char* w : {"aAbB", "abAB"}) {
    SearchConfig cfg;
    cfg.max_word_len = 6;
    cfg.k = 0;
    auto r = extremal_search(make_surface(w), cfg);
    EXPECT_LE(static_cast<formulas::Int>(r.clique_size), formulas::disjoint_arcs(1)) << w;
  }
  SearchConfig cfg;
  cfg.max_word_len = 4;
  cfg.k = 0;
  auto r = extremal_search(make_surface("aAbBcC"), cfg);
  EXPECT_LE(static_cast<formulas::Int>(r.clique_size), formulas::disjoint_arcs(2));
}
