// Exact maximum cut of small graphs.

#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "hq/graph.hpp"

namespace hq {

class MaxCutError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct MaxCutResult {
  std::size_t cut = 0;
  std::size_t edges = 0;
  std::vector<std::uint8_t> side;  // witness partition

  /// Fewest monochromatic edges over all vertex 2-colorings.
  std::size_t min_monochromatic() const { return edges - cut; }
};

inline constexpr std::size_t kMaxCutExhaustiveLimit = 30;
inline constexpr std::size_t kMaxCutBranchBoundLimit = 60;

namespace detail {
inline std::vector<std::uint64_t> adjacency_words(const Graph& g) {
  std::vector<std::uint64_t> adj(g.vertex_count(), 0);
  for (const auto& [u, v] : g.edges()) {
    adj[u] |= 1ull << v;
    adj[v] |= 1ull << u;
  }
  return adj;
}

inline std::size_t cut_value(const Graph& g, const std::vector<std::uint8_t>& side) {
  std::size_t c = 0;
  for (const auto& [u, v] : g.edges()) c += side[u] != side[v];
  return c;
}
}  // namespace detail

/// Gray-code walk over all partitions with the last vertex pinned to side 0.
inline MaxCutResult maxcut_exhaustive(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n > kMaxCutExhaustiveLimit) throw MaxCutError("exhaustive max-cut limited to 30 vertices");
  MaxCutResult r;
  r.edges = g.edge_count();
  r.side.assign(n, 0);
  if (n <= 1) return r;
  const auto adj = detail::adjacency_words(g);
  std::uint64_t mask = 0, best_mask = 0;
  long long cut = 0, best = 0;
  const std::uint64_t steps = 1ull << (n - 1);
  for (std::uint64_t i = 1; i < steps; ++i) {
    const unsigned v = static_cast<unsigned>(__builtin_ctzll(i));
    const bool on = (mask >> v) & 1;
    const std::uint64_t same = on ? mask : ~mask;
    const int s = __builtin_popcountll(adj[v] & same);
    const int d = __builtin_popcountll(adj[v]);
    // v leaves its side: edges to its old side become cut, edges to the other side stop being cut.
    cut += s - (d - s);
    mask ^= 1ull << v;
    if (cut > best) {
      best = cut;
      best_mask = mask;
    }
  }
  r.cut = static_cast<std::size_t>(best);
  for (std::size_t v = 0; v < n; ++v) r.side[v] = (best_mask >> v) & 1;
  return r;
}

/// Branch and bound in Russian-doll form. Vertices are ordered by decreasing
/// degree and the suffixes order[i..] are solved from the shortest up, so that
/// the free part of a partial assignment at depth i is bounded by the already
/// known optimum of suffix i plus max(edges to side a, edges to side b) for
/// each free vertex.
inline MaxCutResult maxcut_branch_bound(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n > kMaxCutBranchBoundLimit) throw MaxCutError("branch-and-bound max-cut limited to 60 vertices");
  MaxCutResult r;
  r.edges = g.edge_count();
  r.side.assign(n, 0);
  if (n <= 1) return r;
  const auto adj = detail::adjacency_words(g);
  std::vector<unsigned> order(n);
  std::iota(order.begin(), order.end(), 0u);
  std::stable_sort(order.begin(), order.end(), [&](unsigned a, unsigned b) { return g.degree(a) > g.degree(b); });

  std::vector<std::size_t> suffix_best(n + 1, 0);
  std::vector<std::uint64_t> suffix_b(n + 1, 0);  // side-b vertices of each suffix optimum

  for (std::size_t start = n; start-- > 0;) {
    const unsigned first = order[start];
    // Incumbent: previous optimum with the new vertex on its better side.
    const std::uint64_t prev_b = suffix_b[start + 1];
    std::uint64_t prev_a = 0;
    for (std::size_t i = start + 1; i < n; ++i) prev_a |= 1ull << order[i];
    prev_a &= ~prev_b;
    const std::size_t ea = static_cast<std::size_t>(__builtin_popcountll(adj[first] & prev_a));
    const std::size_t eb = static_cast<std::size_t>(__builtin_popcountll(adj[first] & prev_b));
    std::size_t best = suffix_best[start + 1] + std::max(ea, eb);
    std::uint64_t best_b = ea >= eb ? (prev_b | (1ull << first)) : prev_b;

    auto rec = [&](auto&& self, std::size_t depth, std::uint64_t a, std::uint64_t b, std::size_t cut) -> void {
      if (depth == n) {
        if (cut > best) {
          best = cut;
          best_b = b;
        }
        return;
      }
      std::size_t ub = cut + suffix_best[depth];
      for (std::size_t i = depth; i < n; ++i) {
        const unsigned v = order[i];
        ub += static_cast<std::size_t>(
            std::max(__builtin_popcountll(adj[v] & a), __builtin_popcountll(adj[v] & b)));
      }
      if (ub <= best) return;
      const unsigned v = order[depth];
      const std::size_t to_a = static_cast<std::size_t>(__builtin_popcountll(adj[v] & a));
      const std::size_t to_b = static_cast<std::size_t>(__builtin_popcountll(adj[v] & b));
      if (to_a >= to_b) {
        self(self, depth + 1, a, b | (1ull << v), cut + to_a);
        self(self, depth + 1, a | (1ull << v), b, cut + to_b);
      } else {
        self(self, depth + 1, a | (1ull << v), b, cut + to_b);
        self(self, depth + 1, a, b | (1ull << v), cut + to_a);
      }
    };
    // Sides are interchangeable, so the first vertex of the suffix goes to side a.
    rec(rec, start + 1, 1ull << first, 0, 0);
    suffix_best[start] = best;
    suffix_b[start] = best_b;
  }
  r.cut = suffix_best[0];
  for (std::size_t v = 0; v < n; ++v) r.side[v] = (suffix_b[0] >> v) & 1;
  return r;
}

/// Exhaustive up to 30 vertices, branch and bound up to 60.
inline MaxCutResult maxcut_exact(const Graph& g) {
  if (g.vertex_count() <= kMaxCutExhaustiveLimit) return maxcut_exhaustive(g);
  return maxcut_branch_bound(g);
}

}  // namespace hq
