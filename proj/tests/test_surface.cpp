#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "arcsys/surface.hpp"

using namespace arcsys;

namespace {

ErrorCode code_of(std::string_view word) {
  try {
    parse_gluing(word);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << word << " was accepted";
  return ErrorCode::Precondition;
}

// Independent cusp count: union-find over corners, joining the two corner
// identifications of every side pair.
int cusps_by_union_find(const std::string& word) {
  const int n = static_cast<int>(word.size());
  std::vector<int> parent(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) parent[static_cast<std::size_t>(i)] = i;
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  auto join = [&](int x, int y) { parent[static_cast<std::size_t>(find(x))] = find(y); };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && std::tolower(word[static_cast<std::size_t>(i)]) == std::tolower(word[static_cast<std::size_t>(j)]) &&
          std::islower(word[static_cast<std::size_t>(i)])) {
        // Side i runs corner i -> i+1, side j is traversed backwards.
        join(i, (j + 1) % n);
        join((i + 1) % n, j);
      }
  std::set<int> roots;
  for (int i = 0; i < n; ++i) roots.insert(find(i));
  return static_cast<int>(roots.size());
}

}  // namespace

TEST(Surface, ThreePuncturedSphere) {
  auto g = parse_gluing("aAbB");
  EXPECT_EQ(g.pair_count(), 2);
  EXPECT_EQ(g.euler(), -1);
  EXPECT_EQ(g.punctures(), 3);
  EXPECT_EQ(g.genus(), 0);
}

TEST(Surface, OncePuncturedTorus) {
  auto g = parse_gluing("abAB");
  EXPECT_EQ(g.euler(), -1);
  EXPECT_EQ(g.punctures(), 1);
  EXPECT_EQ(g.genus(), 1);
  for (int c = 0; c < g.corner_count(); ++c) EXPECT_EQ(g.cusp_of_corner(c), 0);
}

TEST(Surface, Rejections) {
  EXPECT_EQ(code_of("aA"), ErrorCode::EulerTooLarge);
  EXPECT_EQ(code_of("aab"), ErrorCode::UnpairedLetter);
  EXPECT_EQ(code_of("abab"), ErrorCode::NonOrientable);
  EXPECT_EQ(code_of(""), ErrorCode::Parse);
  EXPECT_EQ(code_of("a1A1"), ErrorCode::Parse);
}

TEST(Surface, StandardPlanar) {
  EXPECT_EQ(standard_planar_gluing(1).word(), "aAbB");
  EXPECT_EQ(standard_planar_gluing(1).punctures(), 3);
  EXPECT_EQ(standard_planar_gluing(2).word(), "aAbBcC");
  EXPECT_EQ(standard_planar_gluing(2).punctures(), 4);
  EXPECT_THROW(standard_planar_gluing(0), Error);
}

TEST(Surface, HexagonHasFourCusps) {
  auto g = parse_gluing("aAbBcC");
  std::set<int> ids;
  for (int c = 0; c < 6; ++c) ids.insert(g.cusp_of_corner(c));
  EXPECT_EQ(ids.size(), 4u);
}

TEST(Surface, CuspIdsAreStable) {
  // Corner 2 sits between A and b.
  auto g1 = parse_gluing("aAbB");
  auto g2 = parse_gluing("aAbB");
  EXPECT_EQ(g1.cusp_of_corner(2), g2.cusp_of_corner(2));
  EXPECT_EQ(g1.cusp_cycles(), g2.cusp_cycles());
}

TEST(Surface, SphereWords) {
  for (int m = 2; m <= 10; ++m) {
    auto g = standard_planar_gluing(m - 1);
    EXPECT_EQ(g.genus(), 0);
    EXPECT_EQ(g.punctures(), m + 1);
  }
}

TEST(Surface, EulerRelationAndUnionFind) {
  const char* words[] = {"aAbB", "abAB", "aAbBcC", "abcABC", "abABcC", "abcCBA", "aAbcBC",
                         "abABcdCD", "abcdABCD", "aAbBcCdDeE", "abcdeABCDE", "abABcdCDeE"};
  for (const char* w : words) {
    auto g = parse_gluing(w);
    EXPECT_EQ(g.punctures() + 2 * g.genus(), 2 - g.euler()) << w;
    EXPECT_GE(g.genus(), 0) << w;
    EXPECT_EQ(g.punctures(), cusps_by_union_find(w)) << w;
    std::vector<int> all;
    for (const auto& c : g.cusp_cycles()) all.insert(all.end(), c.begin(), c.end());
    std::sort(all.begin(), all.end());
    for (int c = 0; c < g.corner_count(); ++c) EXPECT_EQ(all[static_cast<std::size_t>(c)], c);
  }
}

TEST(Surface, RotationInvariance) {
  for (std::string w : {"aAbB", "abAB", "aAbBcC", "abcABC", "abABcC", "aAbcBC"}) {
    auto base = parse_gluing(w);
    for (std::size_t r = 1; r < w.size(); ++r) {
      std::string rot = w.substr(r) + w.substr(0, r);
      auto g = parse_gluing(rot);
      // Corner i of the rotated word is corner i + r of the original.
      std::set<std::set<int>> a, b;
      for (const auto& c : base.cusp_cycles()) a.insert(std::set<int>(c.begin(), c.end()));
      for (const auto& c : g.cusp_cycles()) {
        std::set<int> moved;
        for (int x : c) moved.insert(static_cast<int>((static_cast<std::size_t>(x) + r) % w.size()));
        b.insert(moved);
      }
      EXPECT_EQ(a, b) << w << " rotated by " << r;
    }
  }
}

TEST(Surface, DistinguishedCusps) {
  auto g = parse_gluing("aAbBcC");
  EXPECT_EQ(g.distinguished_p(), g.cusp_of_corner(0));
  EXPECT_EQ(g.distinguished_p_prime(), g.cusp_of_corner(5));
  EXPECT_NE(g.distinguished_p(), g.distinguished_p_prime());
}
