#pragma once

#include <algorithm>
#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "arcsys/error.hpp"
#include "arcsys/surface.hpp"

namespace arcsys {

/// Raw crossing itinerary of an arc over the polygon presentation.
///
/// `word[t]` is the side through which the arc leaves its current tile; it
/// enters the next tile through `partner(word[t])`. `start` is a corner of the
/// first tile, `end` a corner of the last one.
struct Itinerary {
  int start = 0;
  std::vector<int> word;
  int end = 0;

  friend bool operator==(const Itinerary&, const Itinerary&) = default;
};

inline void validate(const Itinerary& it, const SurfaceGluing& g) {
  auto in_range = [&](int v) { return v >= 0 && v < g.side_count(); };
  if (!in_range(it.start) || !in_range(it.end))
    throw Error(ErrorCode::MalformedItinerary, "corner index out of range");
  for (int s : it.word)
    if (!in_range(s)) throw Error(ErrorCode::MalformedItinerary, "side index out of range");
}

/// The same path traversed backwards.
inline Itinerary reverse(const Itinerary& it, const SurfaceGluing& g) {
  Itinerary r;
  r.start = it.end;
  r.end = it.start;
  r.word.reserve(it.word.size());
  for (auto s = it.word.rbegin(); s != it.word.rend(); ++s) r.word.push_back(g.partner(*s));
  return r;
}

inline std::vector<int> encoding(const Itinerary& it) {
  std::vector<int> e;
  e.reserve(it.word.size() + 2);
  e.push_back(it.start);
  e.insert(e.end(), it.word.begin(), it.word.end());
  e.push_back(it.end);
  return e;
}

/// A homotopy class of arc in normal form. Immutable once built.
class CanonicalArc {
 public:
  const SurfaceGluing& surface() const { return *surface_; }
  const SurfacePtr& surface_ptr() const { return surface_; }
  const Itinerary& itinerary() const { return it_; }
  const std::vector<int>& word() const { return it_.word; }
  int start() const { return it_.start; }
  int end() const { return it_.end; }
  std::size_t length() const { return it_.word.size(); }

  /// Side pair this arc runs parallel to, or -1.
  int side_pair() const { return side_pair_; }
  bool is_side_arc() const { return side_pair_ >= 0; }

  std::pair<int, int> endpoint_cusps() const {
    return {surface_->cusp_of_corner(it_.start), surface_->cusp_of_corner(it_.end)};
  }

  friend bool operator==(const CanonicalArc& a, const CanonicalArc& b) {
    return a.surface_->word() == b.surface_->word() && a.it_ == b.it_;
  }
  /// Shorter words first, then lexicographic on the encoding.
  friend std::strong_ordering operator<=>(const CanonicalArc& a, const CanonicalArc& b) {
    if (auto c = a.it_.word.size() <=> b.it_.word.size(); c != 0) return c;
    auto ea = encoding(a.it_), eb = encoding(b.it_);
    return ea <=> eb;
  }

  friend CanonicalArc canonicalize(const Itinerary& raw, SurfacePtr surface);

 private:
  CanonicalArc(SurfacePtr s, Itinerary it, int side_pair)
      : surface_(std::move(s)), it_(std::move(it)), side_pair_(side_pair) {}

  SurfacePtr surface_;
  Itinerary it_;
  int side_pair_ = -1;
};

namespace detail {

inline void free_reduce(std::vector<int>& word, const SurfaceGluing& g) {
  std::vector<int> out;
  out.reserve(word.size());
  for (int s : word) {
    if (!out.empty() && g.partner(out.back()) == s)
      out.pop_back();
    else
      out.push_back(s);
  }
  word = std::move(out);
}

// Pops crossings that merely go around the cusp at either end.
inline void end_reduce(Itinerary& it, const SurfaceGluing& g) {
  bool changed = true;
  while (changed) {
    changed = false;
    while (!it.word.empty() && g.corner_on_side(it.start, it.word.front())) {
      it.start = g.glue_corner(it.word.front(), it.start);
      it.word.erase(it.word.begin());
      changed = true;
    }
    while (!it.word.empty() && g.corner_on_side(it.end, g.partner(it.word.back()))) {
      it.end = g.glue_corner(g.partner(it.word.back()), it.end);
      it.word.pop_back();
      changed = true;
    }
  }
}

}  // namespace detail

/// Normal form: free reduction, end reduction, side-arc normalization, then
/// the lexicographically smaller of the two orientations.
inline CanonicalArc canonicalize(const Itinerary& raw, SurfacePtr surface) {
  const SurfaceGluing& g = *surface;
  validate(raw, g);
  Itinerary it = raw;
  detail::free_reduce(it.word, g);
  detail::end_reduce(it, g);

  int side_pair = -1;
  if (it.word.empty() && it.start != it.end) {
    int side = -1;
    if (it.end == g.wrap(it.start + 1)) side = it.start;
    if (it.start == g.wrap(it.end + 1)) side = it.end;
    if (side >= 0) {
      int rep = std::min(side, g.partner(side));
      it.start = rep;
      it.end = rep + 1;
      side_pair = g.pair_of(rep);
    }
  }

  Itinerary rev = reverse(it, g);
  if (encoding(rev) < encoding(it)) it = std::move(rev);
  return CanonicalArc(std::move(surface), std::move(it), side_pair);
}

inline CanonicalArc side_arc(SurfacePtr surface, int pair) {
  int s = surface->forward_side(pair);
  Itinerary it{s, {}, surface->wrap(s + 1)};
  return canonicalize(it, std::move(surface));
}

inline void require_same_surface(const CanonicalArc& a, const CanonicalArc& b) {
  if (a.surface().word() != b.surface().word())
    throw Error(ErrorCode::SurfaceMismatch,
                "arcs live on " + a.surface().word() + " and " + b.surface().word());
}

/// Homotopy equality.
inline bool equals(const CanonicalArc& a, const CanonicalArc& b) {
  require_same_surface(a, b);
  return a.itinerary() == b.itinerary();
}

/// An arc is essential iff its lift joins two distinct ideal points. For a
/// normal form that fails only for the empty chord from a corner to itself.
inline bool is_essential(const CanonicalArc& a) {
  return !(a.word().empty() && a.start() == a.end());
}

/// Cusp ids of the two ends, smaller first.
inline std::pair<int, int> endpoints(const CanonicalArc& a) {
  auto [x, y] = a.endpoint_cusps();
  return {std::min(x, y), std::max(x, y)};
}

// Text format: "c<start>:<symbols>:c<end>" or "side:<letter>".

inline std::string format_arc(const CanonicalArc& a) {
  const auto& g = a.surface();
  if (a.is_side_arc()) return std::string("side:") + g.pair_letter(a.side_pair());
  std::string out = "c" + std::to_string(a.start()) + ":";
  for (int s : a.word()) out.push_back(g.symbol_char(s));
  out += ":c" + std::to_string(a.end());
  return out;
}

inline std::string format_itinerary(const Itinerary& it, const SurfaceGluing& g) {
  std::string out = "c" + std::to_string(it.start) + ":";
  for (int s : it.word) out.push_back(g.symbol_char(s));
  out += ":c" + std::to_string(it.end);
  return out;
}

inline Itinerary parse_itinerary(std::string_view text, const SurfaceGluing& g) {
  auto fail = [&](const std::string& why) -> Itinerary {
    throw Error(ErrorCode::Parse, "arc '" + std::string(text) + "': " + why);
  };
  if (text.starts_with("side:")) {
    if (text.size() != 6) return fail("expected a single letter after side:");
    int pair = g.pair_of_letter(text[5]);
    if (pair < 0) return fail("unknown side letter");
    int s = g.forward_side(pair);
    return Itinerary{s, {}, g.wrap(s + 1)};
  }
  auto first = text.find(':');
  auto last = text.rfind(':');
  if (first == std::string_view::npos || first == last) return fail("expected c<i>:<word>:c<j>");
  auto corner = [&](std::string_view part) -> int {
    if (part.size() < 2 || part[0] != 'c') fail("bad corner '" + std::string(part) + "'");
    int v = 0;
    for (char ch : part.substr(1)) {
      if (ch < '0' || ch > '9') fail("bad corner '" + std::string(part) + "'");
      v = v * 10 + (ch - '0');
      if (v > 1000) fail("corner index too large");
    }
    if (v >= g.corner_count()) fail("corner out of range");
    return v;
  };
  Itinerary it;
  it.start = corner(text.substr(0, first));
  it.end = corner(text.substr(last + 1));
  for (char ch : text.substr(first + 1, last - first - 1)) {
    int s = g.side_of_char(ch);
    if (s < 0) fail(std::string("unknown side symbol '") + ch + "'");
    it.word.push_back(s);
  }
  return it;
}

inline CanonicalArc parse_arc(std::string_view text, const SurfacePtr& surface) {
  return canonicalize(parse_itinerary(text, *surface), surface);
}

}  // namespace arcsys
