#pragma once

#include <algorithm>
#include <chrono>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "arcsys/arcs.hpp"
#include "arcsys/clique.hpp"
#include "arcsys/error.hpp"
#include "arcsys/formulas.hpp"
#include "arcsys/intersection.hpp"

namespace arcsys {

/// A finite set of pairwise distinct, simple, essential arcs on one surface.
/// Arcs keep the order they were given in.
class ArcSystem {
 public:
  ArcSystem(SurfacePtr surface, std::vector<CanonicalArc> arcs)
      : surface_(std::move(surface)), arcs_(std::move(arcs)) {
    validate();
  }

  const SurfaceGluing& surface() const { return *surface_; }
  const SurfacePtr& surface_ptr() const { return surface_; }
  const std::vector<CanonicalArc>& arcs() const& { return arcs_; }
  // By value on temporaries, so `for (auto& a : make().arcs())` is safe.
  std::vector<CanonicalArc> arcs() && { return std::move(arcs_); }
  std::size_t size() const { return arcs_.size(); }
  const CanonicalArc& operator[](std::size_t i) const { return arcs_[i]; }

  /// Equality as sets of homotopy classes.
  bool same_arcs(const ArcSystem& other) const {
    if (surface_->word() != other.surface_->word() || size() != other.size()) return false;
    auto x = arcs_, y = other.arcs_;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    return x == y;
  }

 private:
  void validate() const {
    auto sorted = arcs_;
    for (const auto& a : arcs_) {
      if (a.surface().word() != surface_->word())
        throw Error(ErrorCode::SurfaceMismatch, "arc " + format_arc(a) + " lives on " +
                                                    a.surface().word() + ", system on " +
                                                    surface_->word());
      if (!is_essential(a))
        throw Error(ErrorCode::InvalidSystem, "arc " + format_arc(a) + " is not essential");
    }
    std::sort(sorted.begin(), sorted.end());
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end())
      throw Error(ErrorCode::InvalidSystem, "arc " + format_arc(*dup) + " appears twice");
    StrandOrder order(surface_, arcs_);
    for (std::size_t i = 0; i < arcs_.size(); ++i)
      if (order.self_crossings(i) != 0)
        throw Error(ErrorCode::InvalidSystem, "arc " + format_arc(arcs_[i]) + " is not simple");
  }

  SurfacePtr surface_;
  std::vector<CanonicalArc> arcs_;
};

inline IntersectionMatrix intersection_matrix(const ArcSystem& sys) {
  return intersection_matrix(sys.surface_ptr(), sys.arcs());
}

struct KSystemReport {
  int k = 0;
  std::size_t size = 0;
  IntersectionMatrix matrix;
  int max_pair = 0;
  bool ok = false;
  std::vector<std::pair<int, int>> witnesses;  // pairs meeting more than k times
};

inline KSystemReport verify_k_system(const ArcSystem& sys, int k) {
  KSystemReport r;
  r.k = k;
  r.size = sys.size();
  r.matrix = intersection_matrix(sys);
  bool diagonal_zero = true;
  for (std::size_t i = 0; i < r.size; ++i) {
    diagonal_zero = diagonal_zero && r.matrix[i][i] == 0;
    for (std::size_t j = i + 1; j < r.size; ++j) {
      r.max_pair = std::max(r.max_pair, r.matrix[i][j]);
      if (r.matrix[i][j] > k) r.witnesses.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  }
  r.ok = diagonal_zero && r.max_pair <= k;
  return r;
}

/// Which endpoint cusps an enumerated arc may have.
struct EndpointFilter {
  enum class Kind { None, Bipartite, Fixed };
  Kind kind = Kind::None;
  std::vector<int> first;
  std::vector<int> second;

  static EndpointFilter none() { return {}; }
  /// One end in `p1`, the other in `p2`; the two sets must be disjoint.
  static EndpointFilter bipartite(std::vector<int> p1, std::vector<int> p2) {
    return {Kind::Bipartite, std::move(p1), std::move(p2)};
  }
  /// Ends exactly at p and p' (which may coincide).
  static EndpointFilter fixed(int p, int p_prime) { return {Kind::Fixed, {p}, {p_prime}}; }

  void validate(const SurfaceGluing& g) const {
    for (const auto* set : {&first, &second})
      for (int c : *set)
        require(c >= 0 && c < g.punctures(), "cusp id " + std::to_string(c) + " out of range");
    if (kind == Kind::Bipartite) {
      require(!first.empty() && !second.empty(), "bipartite filter needs two non-empty sets");
      for (int c : first)
        require(std::find(second.begin(), second.end(), c) == second.end(),
                "bipartite cusp sets must be disjoint");
    }
    if (kind == Kind::Fixed) require(first.size() == 1 && second.size() == 1, "fixed filter");
  }

  bool accepts(std::pair<int, int> ends) const {
    auto in = [](const std::vector<int>& s, int c) {
      return std::find(s.begin(), s.end(), c) != s.end();
    };
    auto [x, y] = ends;
    switch (kind) {
      case Kind::None: return true;
      case Kind::Bipartite:
        return (in(first, x) && in(second, y)) || (in(first, y) && in(second, x));
      case Kind::Fixed:
        return (x == first[0] && y == second[0]) || (y == first[0] && x == second[0]);
    }
    return false;
  }
};

struct SearchConfig {
  int max_word_len = 4;
  int k = 1;
  EndpointFilter filter;
  std::optional<std::chrono::milliseconds> time_budget;
  /// Also list every maximum system, up to this many. Zero lists none.
  std::size_t list_maximum = 0;
};

namespace detail {

class Deadline {
 public:
  explicit Deadline(std::optional<std::chrono::milliseconds> budget)
      : start_(std::chrono::steady_clock::now()) {
    if (budget) end_ = start_ + *budget;
  }
  void check(const char* stage) const {
    if (end_ && std::chrono::steady_clock::now() > *end_)
      throw Error(ErrorCode::BudgetExceeded, std::string("time budget exhausted during ") + stage);
  }
  std::optional<std::chrono::milliseconds> remaining() const {
    if (!end_) return std::nullopt;
    auto left = std::chrono::duration_cast<std::chrono::milliseconds>(
        *end_ - std::chrono::steady_clock::now());
    return std::max(left, std::chrono::milliseconds(0));
  }
  double elapsed_seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
  std::optional<std::chrono::steady_clock::time_point> end_;
};

// Calls visit(word) for every freely reduced word of length <= max_len.
template <class Visit>
void for_each_reduced_word(const SurfaceGluing& g, int max_len, Visit&& visit) {
  std::vector<int> w;
  auto rec = [&](auto&& self) -> void {
    visit(static_cast<const std::vector<int>&>(w));
    if (static_cast<int>(w.size()) == max_len) return;
    for (int s = 0; s < g.side_count(); ++s) {
      if (!w.empty() && g.partner(w.back()) == s) continue;
      w.push_back(s);
      self(self);
      w.pop_back();
    }
  };
  rec(rec);
}

inline std::vector<CanonicalArc> enumerate_arcs(const SurfacePtr& surface, const SearchConfig& cfg,
                                                const Deadline& deadline) {
  const auto& g = *surface;
  require(cfg.max_word_len >= 0, "max word length must be non-negative");
  cfg.filter.validate(g);

  std::set<CanonicalArc> found;
  std::size_t visited = 0;
  for_each_reduced_word(g, cfg.max_word_len, [&](const std::vector<int>& w) {
    if ((++visited & 0xff) == 0) deadline.check("enumeration");
    for (int c = 0; c < g.corner_count(); ++c) {
      // Itineraries that are not end-reduced normalize to shorter words.
      if (!w.empty() && g.corner_on_side(c, w.front())) continue;
      for (int d = 0; d < g.corner_count(); ++d) {
        if (!w.empty() && g.corner_on_side(d, g.partner(w.back()))) continue;
        auto a = canonicalize(Itinerary{c, w, d}, surface);
        if (!is_essential(a) || !cfg.filter.accepts(a.endpoint_cusps())) continue;
        found.insert(std::move(a));
      }
    }
  });
  deadline.check("enumeration");

  std::vector<CanonicalArc> candidates(found.begin(), found.end());
  StrandOrder order(surface, candidates);
  std::vector<CanonicalArc> simple;
  for (std::size_t i = 0; i < candidates.size(); ++i)
    if (order.self_crossings(i) == 0) simple.push_back(candidates[i]);
  return simple;
}

}  // namespace detail

/// All simple essential arcs with word length at most cfg.max_word_len whose
/// ends pass the endpoint filter, in canonical order.
inline ArcSystem enumerate_arcs(const SurfacePtr& surface, const SearchConfig& cfg) {
  detail::Deadline deadline(cfg.time_budget);
  return ArcSystem(surface, detail::enumerate_arcs(surface, cfg, deadline));
}

/// Vertices are the arcs of the universe; an edge joins two arcs meeting at
/// most k times.
inline Graph compatibility_graph(const ArcSystem& universe, int k) {
  StrandOrder order(universe.surface_ptr(), universe.arcs());
  Graph graph(static_cast<int>(universe.size()));
  for (std::size_t i = 0; i < universe.size(); ++i)
    for (std::size_t j = i + 1; j < universe.size(); ++j)
      if (order.crossings(i, j) <= k) graph.add_edge(static_cast<int>(i), static_cast<int>(j));
  return graph;
}

/// The closed-form maximum the search is compared against, when one applies.
struct SearchBound {
  std::string name;
  formulas::Int value = 0;
};

inline std::optional<SearchBound> closed_form_bound(const SurfaceGluing& g,
                                                    const SearchConfig& cfg) {
  formulas::Int x = g.abs_euler();
  using Kind = EndpointFilter::Kind;
  switch (cfg.filter.kind) {
    case Kind::None:
      if (cfg.k == 0) return SearchBound{"disjoint_arcs", formulas::disjoint_arcs(x)};
      if (cfg.k == 1) return SearchBound{"f_arcs", formulas::f_arcs(x)};
      break;
    case Kind::Bipartite:
      if (cfg.k == 0) return SearchBound{"bipartite_disjoint", formulas::bipartite_disjoint(x)};
      break;
    case Kind::Fixed:
      if (cfg.k == 1 && g.genus() == 0)
        return SearchBound{"punctured_sphere_arcs", formulas::punctured_sphere_arcs(x)};
      break;
  }
  return std::nullopt;
}

struct SearchResult {
  ArcSystem best;
  std::size_t clique_size = 0;
  std::size_t universe_size = 0;
  int max_word_len = 0;
  int k = 0;
  double elapsed_seconds = 0;
  std::optional<SearchBound> bound;
  std::vector<ArcSystem> all_best;  // filled when list_maximum > 0
  bool all_best_truncated = false;

  /// Only meaningful within the enumerated universe (words up to max_word_len).
  bool meets_bound() const { return bound && static_cast<formulas::Int>(clique_size) == bound->value; }
  bool exceeds_bound() const { return bound && static_cast<formulas::Int>(clique_size) > bound->value; }
};

/// Largest k-system among the enumerated arcs.
inline SearchResult extremal_search(const SurfacePtr& surface, const SearchConfig& cfg) {
  require(cfg.k >= 0, "k must be non-negative");
  detail::Deadline deadline(cfg.time_budget);
  ArcSystem universe(surface, detail::enumerate_arcs(surface, cfg, deadline));
  deadline.check("graph construction");
  Graph graph = compatibility_graph(universe, cfg.k);
  deadline.check("graph construction");
  auto clique = max_clique(graph, deadline.remaining());

  std::vector<CanonicalArc> best;
  for (int v : clique) best.push_back(universe[static_cast<std::size_t>(v)]);
  SearchResult r{ArcSystem(surface, std::move(best))};
  r.clique_size = clique.size();
  r.universe_size = universe.size();
  r.max_word_len = cfg.max_word_len;
  r.k = cfg.k;
  r.bound = closed_form_bound(*surface, cfg);
  if (cfg.list_maximum > 0 && !clique.empty()) {
    auto listing = cliques_of_size(graph, clique.size(), cfg.list_maximum, deadline.remaining());
    for (const auto& c : listing.cliques) {
      std::vector<CanonicalArc> arcs;
      for (int v : c) arcs.push_back(universe[static_cast<std::size_t>(v)]);
      r.all_best.emplace_back(surface, std::move(arcs));
    }
    r.all_best_truncated = listing.truncated;
  }
  r.elapsed_seconds = deadline.elapsed_seconds();
  return r;
}

}  // namespace arcsys
