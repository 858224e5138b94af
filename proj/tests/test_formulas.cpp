#include <gtest/gtest.h>

#include "arcsys/formulas.hpp"

using namespace arcsys;
using namespace arcsys::formulas;

namespace {

// Independent oracles: count objects rather than evaluate closed forms.

// Diagonals of a (2x+2)-gon plus its x+1 side pairs.
Int polygon_count(Int x) {
  Int n = 2 * x + 2;
  return n * (n - 3) / 2 + (x + 1);
}

// Pairs {i, j} of the x+1 rays.
Int ray_pairs(Int x) {
  Int count = 0;
  for (Int i = 0; i <= x; ++i)
    for (Int j = i + 1; j <= x; ++j) ++count;
  return count;
}

// Tuples of gap choices, one per circle, minus the repeated extreme tuple.
Int gap_tuples(Int x, Int k) {
  Int per = x / (k + 1);
  Int count = 0;
  std::vector<Int> t(static_cast<std::size_t>(k + 1), 0);
  for (;;) {
    ++count;
    Int c = k;
    while (c >= 0 && t[static_cast<std::size_t>(c)] == per) t[static_cast<std::size_t>(c--)] = 0;
    if (c < 0) break;
    ++t[static_cast<std::size_t>(c)];
  }
  return count - 1;
}

}  // namespace

TEST(Formulas, Examples) {
  EXPECT_EQ(f_arcs(1), 4);
  EXPECT_EQ(f_arcs(2), 12);
  EXPECT_EQ(f_arcs(3), 24);
  EXPECT_EQ(disjoint_arcs(1), 3);
  EXPECT_EQ(disjoint_arcs(2), 6);
  EXPECT_EQ(disjoint_arcs(10), 30);
  EXPECT_EQ(bipartite_disjoint(1), 2);
  EXPECT_EQ(bipartite_disjoint(2), 4);
  EXPECT_EQ(bipartite_disjoint(5), 10);
  EXPECT_EQ(curve_bound(1, 1), 9);
  EXPECT_EQ(curve_bound(2, 2), 51);
  EXPECT_EQ(curve_bound(0, 2), 1);
  EXPECT_EQ(punctured_sphere_arcs(1), 1);
  EXPECT_EQ(punctured_sphere_arcs(2), 3);
  EXPECT_EQ(punctured_sphere_arcs(4), 10);
  EXPECT_EQ(k_system_lower(2, 1), 3);
  EXPECT_EQ(k_system_lower(3, 2), 7);
  EXPECT_EQ(k_system_lower(4, 1), 8);
  EXPECT_EQ(nib_overlap_bound(1), 4);
  EXPECT_EQ(nib_overlap_bound(2), 6);
  EXPECT_EQ(nib_overlap_bound(3), 8);
  EXPECT_EQ(chord_bound(3), 3);
  EXPECT_EQ(chord_bound(8), 8);
  EXPECT_EQ(chord_bound(1), 1);
  EXPECT_EQ(degree_summary(1), std::make_pair(Int{2}, Int{3}));
  EXPECT_EQ(degree_summary(0), std::make_pair(Int{1}, Int{1}));
  EXPECT_EQ(degree_summary(2), std::make_pair(Int{3}, Int{7}));
}

TEST(Formulas, PolygonIdentity) {
  for (Int x = 1; x <= 1'000'000; ++x) ASSERT_EQ(f_arcs(x), polygon_count(x)) << x;
}

TEST(Formulas, CountingOracles) {
  for (Int x = 1; x <= 40; ++x) {
    EXPECT_EQ(punctured_sphere_arcs(x), ray_pairs(x));
    EXPECT_EQ(k_system_lower(x, 0), x);
    EXPECT_LE(k_system_lower(x, 0), disjoint_arcs(x));
    for (Int k = 0; k <= 3; ++k)
      if (x % (k + 1) == 0) EXPECT_EQ(k_system_lower(x, k), gap_tuples(x, k)) << x << " " << k;
  }
}

TEST(Formulas, Errors) {
  auto code = [](auto f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::Parse;
  };
  EXPECT_EQ(code([] { k_system_lower(3, 1); }), ErrorCode::DivisibilityError);
  EXPECT_EQ(code([] { f_arcs(0); }), ErrorCode::Precondition);
  EXPECT_EQ(code([] { curve_bound(-1, 2); }), ErrorCode::Precondition);
  EXPECT_EQ(code([] { f_arcs(Int{1} << 40); }), ErrorCode::TooLarge);
  EXPECT_EQ(code([] { k_system_lower(128, 127); }), ErrorCode::TooLarge);
}
