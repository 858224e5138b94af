#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "arcsys/error.hpp"

namespace arcsys::formulas {

using Int = std::int64_t;

namespace detail {

inline Int mul(Int a, Int b) {
  Int r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::TooLarge, "integer overflow");
  return r;
}

inline void require_chi(Int abs_chi) { require(abs_chi >= 1, "|chi| must be at least 1"); }

}  // namespace detail

/// Maximal size of a family of arcs pairwise intersecting at most once.
inline Int f_arcs(Int abs_chi) {
  detail::require_chi(abs_chi);
  return detail::mul(2 * abs_chi, abs_chi + 1);
}

/// Maximal size of a family of pairwise disjoint arcs (an ideal triangulation).
inline Int disjoint_arcs(Int abs_chi) {
  detail::require_chi(abs_chi);
  return detail::mul(3, abs_chi);
}

/// Disjoint arcs running between two complementary sets of punctures.
inline Int bipartite_disjoint(Int abs_chi) {
  detail::require_chi(abs_chi);
  return detail::mul(2, abs_chi);
}

/// Bound for closed curves pairwise intersecting at most once.
inline Int curve_bound(Int genus, Int abs_chi) {
  detail::require_chi(abs_chi);
  require(genus >= 0, "genus must be non-negative");
  return detail::mul(genus, detail::mul(2, f_arcs(abs_chi)) + 1) + abs_chi - 1;
}

/// Arcs between two fixed punctures of a punctured sphere, pairwise
/// intersecting at most once.
inline Int punctured_sphere_arcs(Int abs_chi) {
  detail::require_chi(abs_chi);
  return detail::mul(abs_chi, abs_chi + 1) / 2;
}

/// Size of the concentric-circles family of arcs pairwise intersecting at
/// most k times.
inline Int k_system_lower(Int abs_chi, Int k) {
  detail::require_chi(abs_chi);
  require(k >= 0, "k must be non-negative");
  if (abs_chi % (k + 1) != 0)
    throw Error(ErrorCode::DivisibilityError,
                std::to_string(k + 1) + " does not divide " + std::to_string(abs_chi));
  Int base = abs_chi / (k + 1) + 1;
  Int p = 1;
  for (Int i = 0; i <= k; ++i) p = detail::mul(p, base);
  return p - 1;
}

/// Multiplicity bound for the overlap of the tip regions.
inline Int nib_overlap_bound(Int abs_chi) {
  detail::require_chi(abs_chi);
  return 2 * (abs_chi + 1);
}

/// Pairwise intersecting chords (degenerate ones allowed) on l circle points.
inline Int chord_bound(Int l) {
  require(l >= 1, "l must be at least 1");
  return l;
}

/// Polynomial degrees in |chi| of the k-system bounds: arcs, closed curves.
inline std::pair<Int, Int> degree_summary(Int k) {
  require(k >= 0, "k must be non-negative");
  return {k + 1, k * k + k + 1};
}

}  // namespace arcsys::formulas
