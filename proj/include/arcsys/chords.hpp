#pragma once

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "arcsys/clique.hpp"
#include "arcsys/error.hpp"

namespace arcsys {

/// Chord between two of the l points on a circle, labelled 0..l-1 in cyclic
/// order; a == b is a degenerate chord (a single point).
struct Chord {
  int a = 0;
  int b = 0;

  Chord() = default;
  Chord(int x, int y) : a(std::min(x, y)), b(std::max(x, y)) {}
  bool degenerate() const { return a == b; }
  friend auto operator<=>(const Chord&, const Chord&) = default;
};

struct ChordFamily {
  int l = 0;
  std::vector<Chord> chords;
};

inline void validate(const ChordFamily& fam) {
  require(fam.l >= 1, "need at least one point");
  std::set<Chord> seen;
  for (const auto& c : fam.chords) {
    require(c.a >= 0 && c.b < fam.l, "chord label out of range");
    require(seen.insert(c).second, "duplicate chord");
  }
}

/// Chords meet when they share a point or their ends strictly interleave.
inline bool chords_intersect(const Chord& x, const Chord& y, int l) {
  require(x.a >= 0 && x.b < l && y.a >= 0 && y.b < l, "chord label out of range");
  if (x.a == y.a || x.a == y.b || x.b == y.a || x.b == y.b) return true;
  if (x.degenerate() || y.degenerate()) return false;
  bool ya_in = x.a < y.a && y.a < x.b;
  bool yb_in = x.a < y.b && y.b < x.b;
  return ya_in != yb_in;
}

inline bool pairwise_intersecting(const ChordFamily& fam) {
  for (std::size_t i = 0; i < fam.chords.size(); ++i)
    for (std::size_t j = i + 1; j < fam.chords.size(); ++j)
      if (!chords_intersect(fam.chords[i], fam.chords[j], fam.l)) return false;
  return true;
}

/// Every chord on l points, degenerate ones included, in lexicographic order.
inline std::vector<Chord> all_chords(int l) {
  std::vector<Chord> out;
  for (int a = 0; a < l; ++a)
    for (int b = a; b < l; ++b) out.emplace_back(a, b);
  return out;
}

constexpr int kExhaustiveChordLimit = 8;

namespace detail {

// Backtracking over the chord list; collects every family of maximum size.
class ChordSearch {
 public:
  explicit ChordSearch(int l) : l_(l), chords_(all_chords(l)) {
    const std::size_t n = chords_.size();
    meets_.assign(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) meets_[i][j] = chords_intersect(chords_[i], chords_[j], l);
  }

  std::vector<std::vector<Chord>> run(bool collect_all) {
    collect_all_ = collect_all;
    std::vector<std::size_t> cand(chords_.size());
    for (std::size_t i = 0; i < cand.size(); ++i) cand[i] = i;
    std::vector<std::size_t> current;
    rec(current, cand);
    return found_;
  }

  const std::vector<Chord>& chords() const { return chords_; }
  bool meets(std::size_t i, std::size_t j) const { return meets_[i][j]; }

 private:
  void rec(std::vector<std::size_t>& current, const std::vector<std::size_t>& cand) {
    if (cand.empty()) {
      if (current.size() > best_) {
        best_ = current.size();
        found_.clear();
      }
      if (current.size() == best_ && (collect_all_ || found_.empty())) {
        std::vector<Chord> fam;
        for (auto i : current) fam.push_back(chords_[i]);
        found_.push_back(std::move(fam));
      }
      return;
    }
    for (std::size_t k = 0; k < cand.size(); ++k) {
      std::size_t remaining = cand.size() - k;
      if (current.size() + remaining < best_ ||
          (!collect_all_ && current.size() + remaining == best_))
        return;
      std::size_t v = cand[k];
      std::vector<std::size_t> next;
      for (std::size_t j = k + 1; j < cand.size(); ++j)
        if (meets_[v][cand[j]]) next.push_back(cand[j]);
      current.push_back(v);
      rec(current, next);
      current.pop_back();
    }
  }

  int l_;
  std::vector<Chord> chords_;
  std::vector<std::vector<bool>> meets_;
  bool collect_all_ = false;
  std::size_t best_ = 0;
  std::vector<std::vector<Chord>> found_;
};

}  // namespace detail

/// A largest pairwise intersecting family on l points, by exhaustive search.
inline ChordFamily max_pairwise_family(int l) {
  require(l >= 1, "need at least one point");
  if (l > kExhaustiveChordLimit)
    throw Error(ErrorCode::TooLarge, "exhaustive chord search is limited to l <= 8");
  auto found = detail::ChordSearch(l).run(false);
  return {l, found.front()};
}

/// Every pairwise intersecting family of maximum size on l points.
inline std::vector<ChordFamily> all_max_pairwise_families(int l) {
  require(l >= 1, "need at least one point");
  if (l > kExhaustiveChordLimit)
    throw Error(ErrorCode::TooLarge, "exhaustive chord search is limited to l <= 8");
  std::vector<ChordFamily> out;
  for (auto& f : detail::ChordSearch(l).run(true)) out.push_back({l, std::move(f)});
  return out;
}

/// Same maximum computed as a clique in the intersection graph of chords.
inline int max_pairwise_family_size_by_clique(int l) {
  auto chords = all_chords(l);
  Graph g(static_cast<int>(chords.size()));
  for (std::size_t i = 0; i < chords.size(); ++i)
    for (std::size_t j = i + 1; j < chords.size(); ++j)
      if (chords_intersect(chords[i], chords[j], l)) g.add_edge(static_cast<int>(i), static_cast<int>(j));
  return static_cast<int>(max_clique(g).size());
}

/// Common point of the label intervals of a pairwise intersecting family, and
/// the centre check that bounds the family size by l.
struct HellyCertificate {
  int point = 0;
  std::vector<int> doubled_centres;  // a + b for each chord, in family order
  bool centres_distinct = false;
  bool centres_in_window = false;  // all within [point/2, point + (l-1-point)/2]
};

inline HellyCertificate helly_certificate(const ChordFamily& fam) {
  validate(fam);
  require(!fam.chords.empty(), "empty family");
  if (!pairwise_intersecting(fam))
    throw Error(ErrorCode::NotPairwiseIntersecting, "family has two disjoint chords");
  HellyCertificate cert;
  int lo = fam.chords.front().a, hi = fam.chords.front().b;
  for (const auto& c : fam.chords) {
    lo = std::max(lo, c.a);
    hi = std::min(hi, c.b);
  }
  if (lo > hi)
    throw Error(ErrorCode::NotPairwiseIntersecting, "label intervals have no common point");
  cert.point = lo;
  for (const auto& c : fam.chords) cert.doubled_centres.push_back(c.a + c.b);
  auto sorted = cert.doubled_centres;
  std::sort(sorted.begin(), sorted.end());
  cert.centres_distinct = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  // Doubled window [i, 2i + l - 1 - i] holds exactly l integers.
  int wlo = cert.point, whi = cert.point + fam.l - 1;
  cert.centres_in_window = sorted.front() >= wlo && sorted.back() <= whi;
  return cert;
}

}  // namespace arcsys
