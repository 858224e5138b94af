#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <memory>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "arcsys/error.hpp"

namespace arcsys {

/// One oriented side symbol of a gluing word: a letter plus a direction flag.
/// Lowercase letters read forward, uppercase letters read inverse.
struct SideSymbol {
  char letter = 'a';
  bool inverse = false;

  char to_char() const { return inverse ? static_cast<char>(std::toupper(letter)) : letter; }
  friend bool operator==(const SideSymbol&, const SideSymbol&) = default;
};

/// A punctured oriented surface presented as an ideal 2m-gon with its sides
/// glued in pairs.
///
/// Side i runs counterclockwise from corner i to corner i+1, so corner i sits
/// between side i-1 and side i. Gluing side i to its partner j identifies
/// corner i with corner j+1 and corner i+1 with corner j. The corner orbits
/// under these identifications are the cusps.
class SurfaceGluing {
 public:
  static constexpr int kMaxPairs = 26;

  int side_count() const { return static_cast<int>(sides_.size()); }
  int pair_count() const { return side_count() / 2; }
  int corner_count() const { return side_count(); }

  int euler() const { return 1 - pair_count(); }
  int abs_euler() const { return pair_count() - 1; }
  int punctures() const { return static_cast<int>(cusps_.size()); }
  int genus() const { return (2 - punctures() - euler()) / 2; }

  const std::string& word() const { return word_; }
  const SideSymbol& symbol(int side) const { return sides_[static_cast<std::size_t>(side)]; }
  char symbol_char(int side) const { return symbol(side).to_char(); }

  int partner(int side) const { return partner_[static_cast<std::size_t>(side)]; }
  /// Index of the side pair, ordered by first appearance in the word.
  int pair_of(int side) const { return pair_of_side_[static_cast<std::size_t>(side)]; }
  /// The side of a pair whose symbol reads forward (lowercase).
  int forward_side(int pair) const { return forward_side_[static_cast<std::size_t>(pair)]; }
  bool is_forward(int side) const { return !symbol(side).inverse; }
  char pair_letter(int pair) const { return symbol(forward_side(pair)).letter; }

  /// Side index carrying the given symbol character, or -1.
  int side_of_char(char c) const {
    for (int s = 0; s < side_count(); ++s)
      if (symbol_char(s) == c) return s;
    return -1;
  }
  int pair_of_letter(char letter) const {
    int s = side_of_char(static_cast<char>(std::tolower(letter)));
    return s < 0 ? -1 : pair_of(s);
  }

  int wrap(int i) const {
    int n = side_count();
    return ((i % n) + n) % n;
  }

  bool corner_on_side(int corner, int side) const {
    return corner == side || corner == wrap(side + 1);
  }

  /// Transport a corner incident to `side` across that side into the tile on
  /// the other side of it.
  int glue_corner(int side, int corner) const {
    int other = partner(side);
    if (corner == side) return wrap(other + 1);
    if (corner == wrap(side + 1)) return other;
    throw Error(ErrorCode::MalformedItinerary, "corner " + std::to_string(corner) +
                                                   " is not incident to side " +
                                                   std::to_string(side));
  }

  int cusp_of_corner(int corner) const {
    if (corner < 0 || corner >= corner_count())
      throw Error(ErrorCode::Precondition, "corner out of range");
    return corner_cusp_[static_cast<std::size_t>(corner)];
  }
  const std::vector<std::vector<int>>& cusp_cycles() const { return cusps_; }
  std::size_t longest_cusp_cycle() const {
    std::size_t best = 0;
    for (const auto& c : cusps_) best = std::max(best, c.size());
    return best;
  }

  /// p: the cusp of corner 0. p': the cusp of the last corner.
  int distinguished_p() const { return cusp_of_corner(0); }
  int distinguished_p_prime() const { return cusp_of_corner(corner_count() - 1); }

  friend bool operator==(const SurfaceGluing& a, const SurfaceGluing& b) {
    return a.word_ == b.word_;
  }

  friend SurfaceGluing parse_gluing(std::string_view text);

 private:
  SurfaceGluing() = default;

  std::string word_;
  std::vector<SideSymbol> sides_;
  std::vector<int> partner_;
  std::vector<int> pair_of_side_;
  std::vector<int> forward_side_;
  std::vector<int> corner_cusp_;
  std::vector<std::vector<int>> cusps_;
};

using SurfacePtr = std::shared_ptr<const SurfaceGluing>;

/// Parse a gluing word such as "aAbB" (3-punctured sphere) or "abAB"
/// (once-punctured torus).
inline SurfaceGluing parse_gluing(std::string_view text) {
  if (text.empty()) throw Error(ErrorCode::Parse, "empty gluing word");
  SurfaceGluing g;
  g.word_ = std::string(text);

  std::array<int, 26> count{}, fwd{}, inv{};
  fwd.fill(-1);
  inv.fill(-1);
  for (char c : text) {
    if (!std::isalpha(static_cast<unsigned char>(c)))
      throw Error(ErrorCode::Parse, std::string("invalid side symbol '") + c + "'");
    ++count[static_cast<std::size_t>(std::tolower(static_cast<unsigned char>(c)) - 'a')];
  }
  for (int l = 0; l < 26; ++l) {
    int k = count[static_cast<std::size_t>(l)];
    if (k != 0 && k != 2)
      throw Error(ErrorCode::UnpairedLetter, std::string("letter '") +
                                                 static_cast<char>('a' + l) + "' appears " +
                                                 std::to_string(k) + " times");
  }
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    SideSymbol sym{static_cast<char>(std::tolower(static_cast<unsigned char>(c))),
                   static_cast<bool>(std::isupper(static_cast<unsigned char>(c)))};
    auto& slot = sym.inverse ? inv[static_cast<std::size_t>(sym.letter - 'a')]
                             : fwd[static_cast<std::size_t>(sym.letter - 'a')];
    if (slot >= 0)
      throw Error(ErrorCode::NonOrientable, std::string("letter '") + sym.letter +
                                                "' appears twice in the same direction");
    slot = static_cast<int>(i);
    g.sides_.push_back(sym);
  }

  const int n = g.side_count();
  if (n / 2 > SurfaceGluing::kMaxPairs)
    throw Error(ErrorCode::Parse, "more than 26 side pairs");
  if (n < 4)
    throw Error(ErrorCode::EulerTooLarge,
                "Euler characteristic " + std::to_string(1 - n / 2) + " is not negative");

  g.partner_.assign(static_cast<std::size_t>(n), -1);
  g.pair_of_side_.assign(static_cast<std::size_t>(n), -1);
  for (int s = 0; s < n; ++s) {
    const auto& sym = g.sides_[static_cast<std::size_t>(s)];
    auto l = static_cast<std::size_t>(sym.letter - 'a');
    g.partner_[static_cast<std::size_t>(s)] = sym.inverse ? fwd[l] : inv[l];
  }
  for (int s = 0; s < n; ++s) {
    if (g.pair_of_side_[static_cast<std::size_t>(s)] >= 0) continue;
    int pair = static_cast<int>(g.forward_side_.size());
    int t = g.partner_[static_cast<std::size_t>(s)];
    g.pair_of_side_[static_cast<std::size_t>(s)] = pair;
    g.pair_of_side_[static_cast<std::size_t>(t)] = pair;
    g.forward_side_.push_back(g.sides_[static_cast<std::size_t>(s)].inverse ? t : s);
  }

  // Corner walk: corner c is the start of side c; crossing side c lands on
  // corner partner(c)+1 of the neighbouring tile.
  g.corner_cusp_.assign(static_cast<std::size_t>(n), -1);
  for (int start = 0; start < n; ++start) {
    if (g.corner_cusp_[static_cast<std::size_t>(start)] >= 0) continue;
    int id = static_cast<int>(g.cusps_.size());
    std::vector<int> cycle;
    int c = start;
    do {
      g.corner_cusp_[static_cast<std::size_t>(c)] = id;
      cycle.push_back(c);
      c = g.wrap(g.partner_[static_cast<std::size_t>(c)] + 1);
    } while (c != start);
    std::sort(cycle.begin(), cycle.end());
    g.cusps_.push_back(std::move(cycle));
  }
  return g;
}

inline SurfacePtr make_surface(std::string_view text) {
  return std::make_shared<const SurfaceGluing>(parse_gluing(text));
}

/// The sphere word a A b B ... with abs_chi + 1 side pairs: a sphere with
/// abs_chi + 2 punctures. Even corners form one cusp, every odd corner is a
/// cusp of its own.
inline SurfaceGluing standard_planar_gluing(int abs_chi) {
  require(abs_chi >= 1, "standard_planar_gluing needs abs_chi >= 1");
  require(abs_chi + 1 <= SurfaceGluing::kMaxPairs, "too many side pairs");
  std::string w;
  for (int k = 0; k <= abs_chi; ++k) {
    w.push_back(static_cast<char>('a' + k));
    w.push_back(static_cast<char>('A' + k));
  }
  return parse_gluing(w);
}

inline SurfacePtr make_standard_planar(int abs_chi) {
  return std::make_shared<const SurfaceGluing>(standard_planar_gluing(abs_chi));
}

}  // namespace arcsys
