// Goodman-type counting of monochromatic triangles from per-vertex tallies.
//
// For a triangle family T and an edge coloring, let R(v) (resp. B(v)) count
// members of T at v whose two edges through v are red (resp. blue). A
// monochromatic member contributes 3 to sum_v (R+B), any other member 1, so
//   mono = (sum_v (R(v)+B(v)) - |T|) / 2.

#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "hq/coloring.hpp"
#include "hq/parallel.hpp"
#include "hq/triangles.hpp"

namespace hq {

class CountError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct GoodmanTally {
  std::vector<std::uint64_t> red, blue;  // R(v), B(v)
  std::uint64_t family_size = 0;
  std::uint64_t sum = 0;                 // sum_v (R+B)
  std::uint64_t monochromatic = 0;

  std::uint64_t non_monochromatic() const { return family_size - monochromatic; }
};

namespace detail {
inline void finish_tally(GoodmanTally& t) {
  t.sum = 0;
  for (std::size_t v = 0; v < t.red.size(); ++v) t.sum += t.red[v] + t.blue[v];
  if (t.sum < t.family_size || (t.sum - t.family_size) % 2 != 0)
    throw CountError("Goodman parity violated (sum - |T| must be even and non-negative)");
  t.monochromatic = (t.sum - t.family_size) / 2;
  if (t.monochromatic > t.family_size) throw CountError("Goodman count exceeds family size");
}
}  // namespace detail

/// Monochromatic members of a triangle family listed explicitly on any graph.
inline GoodmanTally goodman_count(const Graph& g, const std::vector<Triangle>& family, const EdgeColoring& delta) {
  if (delta.size() != g.edge_count()) throw ColoringError("coloring size does not match graph");
  GoodmanTally t;
  t.red.assign(g.vertex_count(), 0);
  t.blue.assign(g.vertex_count(), 0);
  t.family_size = family.size();
  for (const auto& tri : family) {
    for (int i = 0; i < 3; ++i) {
      const std::uint32_t v = tri[i], a = tri[(i + 1) % 3], b = tri[(i + 2) % 3];
      const bool ca = delta.blue(g.edge_id(v, a)), cb = delta.blue(g.edge_id(v, b));
      if (ca == cb) ++(ca ? t.blue[v] : t.red[v]);
    }
  }
  detail::finish_tally(t);
  return t;
}

/// Monochromatic members counted one triangle at a time.
inline std::uint64_t direct_monochromatic(const Graph& g, const std::vector<Triangle>& family,
                                          const EdgeColoring& delta) {
  std::uint64_t mono = 0;
  for (const auto& t : family) {
    const bool a = delta.blue(g.edge_id(t[0], t[1]));
    mono += a == delta.blue(g.edge_id(t[0], t[2])) && a == delta.blue(g.edge_id(t[1], t[2]));
  }
  return mono;
}

/// Monochromatic members of T_q. Each G_v is split into spanning cliques and
/// the induced vertex coloring chi(w) = delta(vw) is tallied clique by clique.
/// With cross_check (q <= 4) the result is compared against a direct scan.
inline GoodmanTally goodman_count(const TriangleFamily& fam, const EdgeColoring& delta, unsigned threads = 1,
                                  bool cross_check = false) {
  const IntersectionGraph& hg = fam.graph();
  const Graph& g = hg.graph();
  if (delta.size() != g.edge_count()) throw ColoringError("coloring size does not match graph");
  const std::size_t n = g.vertex_count();
  const std::uint32_t q = fam.q();
  GoodmanTally t;
  t.red.assign(n, 0);
  t.blue.assign(n, 0);
  t.family_size = fam.total();
  if (threads == 0) threads = default_threads();
  std::vector<std::vector<std::int8_t>> scratch(threads, std::vector<std::int8_t>(n, -1));
  parallel_for(n, threads, [&](std::size_t b, std::size_t e, unsigned worker) {
    auto& chi = scratch[worker];
    std::vector<std::uint32_t> clique(q + 1);
    for (std::size_t v = b; v < e; ++v) {
      const auto& nb = g.neighbors(static_cast<std::uint32_t>(v));
      const auto& inc = g.incident_edges(static_cast<std::uint32_t>(v));
      for (std::size_t i = 0; i < nb.size(); ++i) chi[nb[i]] = static_cast<std::int8_t>(delta.blue(inc[i]));
      std::uint64_t r = 0, bl = 0;
      for (std::uint32_t p : fam.spanning_points(static_cast<std::uint32_t>(v))) {
        fam.spanning_clique(static_cast<std::uint32_t>(v), p, clique);
        std::uint64_t blues = 0;
        for (auto w : clique) blues += chi[w] == 1;
        r += binom2(q + 1 - blues);
        bl += binom2(blues);
      }
      t.red[v] = r;
      t.blue[v] = bl;
      for (auto w : nb) chi[w] = -1;
    }
  });
  detail::finish_tally(t);
  if (cross_check) {
    const auto list = fam.explicit_triangles();
    const std::uint64_t mono = direct_monochromatic(g, list, delta);
    const std::uint64_t nonmono = list.size() - mono;
    if (mono != t.monochromatic || mono + nonmono != t.family_size || 3 * mono + nonmono != t.sum)
      throw CountError("Goodman count disagrees with direct triangle scan");
  }
  return t;
}

/// Same identity with T = all triangles of g: the members at v are the edges
/// of G[N(v)], and sum_v e(G[N(v)]) = 3 * #triangles.
struct AllTriangleTally {
  std::uint64_t sum = 0;        // sum_v (R+B)
  std::uint64_t triangles = 0;  // sum_v e(G[N(v)]) / 3
  std::uint64_t monochromatic = 0;
};

inline AllTriangleTally goodman_count_all_triangles(const Graph& g, const EdgeColoring& delta) {
  if (delta.size() != g.edge_count()) throw ColoringError("coloring size does not match graph");
  const std::size_t n = g.vertex_count();
  std::vector<std::int8_t> chi(n, -1);
  std::uint64_t sum = 0, nbhd_edges = 0;
  for (std::uint32_t v = 0; v < n; ++v) {
    const auto& nb = g.neighbors(v);
    const auto& inc = g.incident_edges(v);
    for (std::size_t i = 0; i < nb.size(); ++i) chi[nb[i]] = static_cast<std::int8_t>(delta.blue(inc[i]));
    for (auto w : nb)
      for (auto x : g.neighbors(w)) {
        if (x <= w || chi[x] < 0) continue;
        ++nbhd_edges;
        sum += chi[w] == chi[x];
      }
    for (auto w : nb) chi[w] = -1;
  }
  if (nbhd_edges % 3 != 0) throw CountError("neighbourhood edge total not divisible by 3");
  AllTriangleTally t;
  t.sum = sum;
  t.triangles = nbhd_edges / 3;
  if (t.sum < t.triangles || (t.sum - t.triangles) % 2 != 0) throw CountError("Goodman parity violated");
  t.monochromatic = (t.sum - t.triangles) / 2;
  return t;
}

/// Direct scan over all triangles; the oracle for goodman_count_all_triangles.
inline std::uint64_t direct_monochromatic_all(const Graph& g, const EdgeColoring& delta) {
  std::uint64_t mono = 0;
  for (std::size_t id = 0; id < g.edge_count(); ++id) {
    auto [a, b] = g.edge(id);
    const bool c = delta.blue(id);
    for (auto x : g.neighbors(b))
      if (x > b && g.adjacent(a, x))
        mono += delta.blue(g.edge_id(a, x)) == c && delta.blue(g.edge_id(b, x)) == c;
  }
  return mono;
}

}  // namespace hq
