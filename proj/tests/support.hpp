#pragma once

#include <random>
#include <vector>

#include "arcsys/arcs.hpp"

namespace arcsys::testing {

inline int uniform(std::mt19937& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

/// Random freely reduced, end-reduced itinerary; canonicalized it may still be
/// inessential only when the word is empty and both ends coincide.
inline CanonicalArc random_arc(const SurfacePtr& s, std::mt19937& rng, int max_len) {
  const auto& g = *s;
  for (;;) {
    int len = uniform(rng, 0, max_len);
    std::vector<int> w;
    while (static_cast<int>(w.size()) < len) {
      int x = uniform(rng, 0, g.side_count() - 1);
      if (!w.empty() && g.partner(w.back()) == x) continue;
      w.push_back(x);
    }
    int c = uniform(rng, 0, g.corner_count() - 1);
    int d = uniform(rng, 0, g.corner_count() - 1);
    auto a = canonicalize(Itinerary{c, w, d}, s);
    if (is_essential(a)) return a;
  }
}

// Homotopy moves on raw itineraries.

inline Itinerary insert_backtrack(Itinerary it, const SurfaceGluing& g, std::mt19937& rng) {
  int pos = uniform(rng, 0, static_cast<int>(it.word.size()));
  int s = uniform(rng, 0, g.side_count() - 1);
  it.word.insert(it.word.begin() + pos, {s, g.partner(s)});
  return it;
}

// Inverse of one end-reduction step at the start: find a side and a corner on
// it that the reduction would transport back to the current start.
inline Itinerary push_start(Itinerary it, const SurfaceGluing& g, std::mt19937& rng) {
  std::vector<std::pair<int, int>> options;
  for (int s = 0; s < g.side_count(); ++s)
    for (int c = 0; c < g.corner_count(); ++c)
      if (g.corner_on_side(c, s) && g.glue_corner(s, c) == it.start) options.emplace_back(s, c);
  auto [s, c] = options[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(options.size()) - 1))];
  it.word.insert(it.word.begin(), s);
  it.start = c;
  return it;
}

inline Itinerary push_end(Itinerary it, const SurfaceGluing& g, std::mt19937& rng) {
  std::vector<std::pair<int, int>> options;
  for (int t = 0; t < g.side_count(); ++t)
    for (int e = 0; e < g.corner_count(); ++e)
      if (g.corner_on_side(e, g.partner(t)) && g.glue_corner(g.partner(t), e) == it.end)
        options.emplace_back(t, e);
  auto [t, e] = options[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(options.size()) - 1))];
  it.word.push_back(t);
  it.end = e;
  return it;
}

inline Itinerary random_move(const Itinerary& it, const SurfaceGluing& g, std::mt19937& rng) {
  switch (uniform(rng, 0, 3)) {
    case 0: return insert_backtrack(it, g, rng);
    case 1: return push_start(it, g, rng);
    case 2: return push_end(it, g, rng);
    default: return reverse(it, g);
  }
}

}  // namespace arcsys::testing
