#pragma once

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "arcsys/error.hpp"

namespace arcsys {

/// Dense undirected graph on vertices 0..n-1 with bitset rows.
class Graph {
 public:
  explicit Graph(int n = 0)
      : n_(n), words_((static_cast<std::size_t>(n) + 63) / 64),
        rows_(static_cast<std::size_t>(n), std::vector<std::uint64_t>(words_, 0)) {}

  int size() const { return n_; }

  void add_edge(int u, int v) {
    if (u == v) return;
    set(u, v);
    set(v, u);
  }
  bool has_edge(int u, int v) const {
    return (rows_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v) / 64] >> (v % 64)) & 1U;
  }
  int degree(int u) const {
    int d = 0;
    for (auto w : rows_[static_cast<std::size_t>(u)]) d += std::popcount(w);
    return d;
  }
  std::size_t edge_count() const {
    std::size_t e = 0;
    for (int u = 0; u < n_; ++u) e += static_cast<std::size_t>(degree(u));
    return e / 2;
  }
  bool is_clique(const std::vector<int>& vs) const {
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j)
        if (!has_edge(vs[i], vs[j])) return false;
    return true;
  }

 private:
  void set(int u, int v) {
    rows_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v) / 64] |= std::uint64_t{1}
                                                                            << (v % 64);
  }

  int n_;
  std::size_t words_;
  std::vector<std::vector<std::uint64_t>> rows_;
};

/// Exact maximum clique by branch and bound with a greedy colouring bound.
/// Vertices are processed in a fixed order, so the returned clique is
/// deterministic. Throws BudgetExceeded if `budget` elapses first.
class MaxCliqueSolver {
 public:
  using Bits = std::vector<std::uint64_t>;

  explicit MaxCliqueSolver(const Graph& g,
                           std::optional<std::chrono::milliseconds> budget = std::nullopt)
      : g_(g), n_(g.size()), words_((static_cast<std::size_t>(n_) + 63) / 64) {
    if (budget) deadline_ = std::chrono::steady_clock::now() + *budget;
    // Highest degree first; index breaks ties.
    order_.resize(static_cast<std::size_t>(n_));
    std::iota(order_.begin(), order_.end(), 0);
    std::vector<int> deg(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) deg[static_cast<std::size_t>(v)] = g.degree(v);
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
      return deg[static_cast<std::size_t>(a)] > deg[static_cast<std::size_t>(b)];
    });
    adj_.assign(static_cast<std::size_t>(n_), Bits(words_, 0));
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        if (g.has_edge(order_[static_cast<std::size_t>(i)], order_[static_cast<std::size_t>(j)]))
          setbit(adj_[static_cast<std::size_t>(i)], j);
  }

  std::vector<int> solve() {
    best_.clear();
    if (n_ == 0) return {};
    Bits all(words_, 0);
    for (int v = 0; v < n_; ++v) setbit(all, v);
    std::vector<int> current;
    expand(current, all);
    std::vector<int> out;
    for (int v : best_) out.push_back(order_[static_cast<std::size_t>(v)]);
    std::sort(out.begin(), out.end());
    return out;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  static void setbit(Bits& b, int v) {
    b[static_cast<std::size_t>(v) / 64] |= std::uint64_t{1} << (v % 64);
  }
  static void clearbit(Bits& b, int v) {
    b[static_cast<std::size_t>(v) / 64] &= ~(std::uint64_t{1} << (v % 64));
  }
  static bool empty(const Bits& b) {
    return std::all_of(b.begin(), b.end(), [](std::uint64_t w) { return w == 0; });
  }

  void check_budget() {
    if (deadline_ && (nodes_ & 0x3ff) == 0 && std::chrono::steady_clock::now() > *deadline_)
      throw Error(ErrorCode::BudgetExceeded, "max clique search ran out of time");
  }

  // Greedy sequential colouring of the candidates; fills vertices in colour
  // order with their colour numbers (an upper bound on any clique extension).
  void colour(const Bits& cand, std::vector<int>& verts, std::vector<int>& colours) const {
    verts.clear();
    colours.clear();
    Bits uncoloured = cand;
    int c = 0;
    while (!empty(uncoloured)) {
      ++c;
      Bits q = uncoloured;
      for (std::size_t w = 0; w < words_; ++w) {
        while (q[w]) {
          int v = static_cast<int>(w * 64) + std::countr_zero(q[w]);
          clearbit(q, v);
          clearbit(uncoloured, v);
          verts.push_back(v);
          colours.push_back(c);
          const auto& row = adj_[static_cast<std::size_t>(v)];
          for (std::size_t k = w; k < words_; ++k) q[k] &= ~row[k];
        }
      }
    }
  }

  void expand(std::vector<int>& current, Bits cand) {
    ++nodes_;
    check_budget();
    std::vector<int> verts, colours;
    colour(cand, verts, colours);
    for (std::size_t i = verts.size(); i-- > 0;) {
      if (current.size() + static_cast<std::size_t>(colours[i]) <= best_.size()) return;
      int v = verts[i];
      current.push_back(v);
      Bits next(words_);
      const auto& row = adj_[static_cast<std::size_t>(v)];
      for (std::size_t k = 0; k < words_; ++k) next[k] = cand[k] & row[k];
      if (empty(next)) {
        if (current.size() > best_.size()) best_ = current;
      } else {
        expand(current, next);
      }
      current.pop_back();
      clearbit(cand, v);
    }
  }

  const Graph& g_;
  int n_;
  std::size_t words_;
  std::vector<int> order_;
  std::vector<Bits> adj_;
  std::vector<int> best_;
  std::uint64_t nodes_ = 0;
  std::optional<std::chrono::steady_clock::time_point> deadline_;
};

inline std::vector<int> max_clique(const Graph& g,
                                   std::optional<std::chrono::milliseconds> budget = std::nullopt) {
  return MaxCliqueSolver(g, budget).solve();
}

/// Every clique with exactly `size` vertices, each sorted, in lexicographic
/// order. Stops after `limit` cliques; `truncated` reports whether it did.
struct CliqueListing {
  std::vector<std::vector<int>> cliques;
  bool truncated = false;
};

inline CliqueListing cliques_of_size(const Graph& g, std::size_t size, std::size_t limit,
                                     std::optional<std::chrono::milliseconds> budget = std::nullopt) {
  CliqueListing out;
  std::optional<std::chrono::steady_clock::time_point> deadline;
  if (budget) deadline = std::chrono::steady_clock::now() + *budget;
  std::uint64_t nodes = 0;
  std::vector<int> current;
  auto extend = [&](auto& self, const std::vector<int>& cand) -> void {
    if (deadline && (++nodes & 0x3ff) == 0 && std::chrono::steady_clock::now() > *deadline)
      throw Error(ErrorCode::BudgetExceeded, "clique listing ran out of time");
    if (current.size() == size) {
      if (out.cliques.size() == limit) {
        out.truncated = true;
        return;
      }
      out.cliques.push_back(current);
      return;
    }
    for (std::size_t i = 0; i < cand.size() && !out.truncated; ++i) {
      if (current.size() + (cand.size() - i) < size) return;
      int v = cand[i];
      std::vector<int> next;
      for (std::size_t j = i + 1; j < cand.size(); ++j)
        if (g.has_edge(v, cand[j])) next.push_back(cand[j]);
      current.push_back(v);
      self(self, next);
      current.pop_back();
    }
  };
  std::vector<int> all(static_cast<std::size_t>(g.size()));
  std::iota(all.begin(), all.end(), 0);
  extend(extend, all);
  return out;
}

}  // namespace arcsys
