// Degenerate / non-degenerate triangles of H_q, the non-degenerate family T_q
// held implicitly through spanning cliques of each neighbourhood graph G_v, and
// s-fans.

#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

#include "hq/certificate.hpp"
#include "hq/intersection_graph.hpp"

namespace hq {

enum class TriangleKind { degenerate, non_degenerate, not_a_triangle };

inline const char* to_string(TriangleKind k) {
  switch (k) {
    case TriangleKind::degenerate: return "degenerate";
    case TriangleKind::non_degenerate: return "non-degenerate";
    case TriangleKind::not_a_triangle: return "not-a-triangle";
  }
  return "?";
}

inline TriangleKind classify_triangle(const IntersectionGraph& hg, std::uint32_t a, std::uint32_t b, std::uint32_t c) {
  if (a == b || b == c || a == c) throw GraphError("triangle vertices must be distinct");
  const auto ab = hg.edge_point(a, b), bc = hg.edge_point(b, c), ac = hg.edge_point(a, c);
  if (!ab || !bc || !ac) return TriangleKind::not_a_triangle;
  if (*ab == *bc && *bc == *ac) return TriangleKind::degenerate;
  if (*ab != *bc && *bc != *ac && *ab != *ac) return TriangleKind::non_degenerate;
  // Two secants share at most one unital point, so exactly two distinct meets is impossible.
  throw GraphError("triangle with exactly two distinct meet points (internal error)");
}

using Triangle = std::array<std::uint32_t, 3>;  // sorted vertex ids

inline std::uint64_t binom2(std::uint64_t x) { return x * (x - (x > 0 ? 1 : 0)) / 2; }

/// |T_q| = (1/6)(q^4 - q^3 + q^2)(q^3 - q)(q + 1)q.
inline std::uint64_t family_size_formula(std::uint64_t q) {
  return (q * q * q * q - q * q * q + q * q) * (q * q * q - q) * (q + 1) * q / 6;
}

/// Non-degenerate triangles at one vertex: (q^3 - q) * C(q+1, 2).
inline std::uint64_t triangles_per_vertex_formula(std::uint64_t q) { return (q * q * q - q) * binom2(q + 1); }

class TriangleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// T_q stored per vertex: G_v is the edge-disjoint union of the spanning
/// cliques, one for each unital point p off the secant v, made of the q+1
/// secants joining p to the points of v.
class TriangleFamily {
 public:
  explicit TriangleFamily(const IntersectionGraph& hg) : hg_(&hg) {
    const auto& inc = hg.incidence();
    const std::size_t np = inc.point_count();
    off_points_.resize(hg.vertex_count());
    for (std::uint32_t v = 0; v < hg.vertex_count(); ++v) {
      const auto& on = inc.secant_points[v];
      auto& off = off_points_[v];
      off.reserve(np - on.size());
      for (std::uint32_t p = 0; p < np; ++p)
        if (!std::binary_search(on.begin(), on.end(), p)) off.push_back(p);
    }
  }

  const IntersectionGraph& graph() const { return *hg_; }
  std::uint32_t q() const { return hg_->q(); }
  std::uint64_t total() const { return family_size_formula(q()); }

  /// Unital points off secant v; spanning clique j of G_v belongs to point j.
  const std::vector<std::uint32_t>& spanning_points(std::uint32_t v) const { return off_points_[v]; }
  std::size_t spanning_clique_count(std::uint32_t v) const { return off_points_[v].size(); }

  /// Members of the spanning clique of G_v at an off-secant unital point,
  /// ordered like the points of v. `out` must have room for q+1 ids.
  void spanning_clique(std::uint32_t v, std::uint32_t point, std::span<std::uint32_t> out) const {
    const auto& inc = hg_->incidence();
    const auto& on = inc.secant_points[v];
    for (std::size_t i = 0; i < on.size(); ++i) out[i] = inc.secant_through(point, on[i]);
  }
  std::vector<std::uint32_t> spanning_clique(std::uint32_t v, std::uint32_t point) const {
    std::vector<std::uint32_t> out(q() + 1);
    spanning_clique(v, point, out);
    return out;
  }

  /// Calls fn(point, members) for every spanning clique of G_v.
  template <class Fn>
  void for_each_spanning_clique(std::uint32_t v, Fn&& fn) const {
    std::vector<std::uint32_t> buf(q() + 1);
    for (std::uint32_t p : off_points_[v]) {
      spanning_clique(v, p, buf);
      fn(p, std::span<const std::uint32_t>(buf));
    }
  }

  std::uint64_t triangles_at(std::uint32_t v) const { return spanning_clique_count(v) * binom2(q() + 1); }

  /// Explicit sorted triangle list (meant for q <= 4).
  std::vector<Triangle> explicit_triangles() const {
    std::vector<Triangle> out;
    for (std::uint32_t v = 0; v < hg_->vertex_count(); ++v) {
      for_each_spanning_clique(v, [&](std::uint32_t, std::span<const std::uint32_t> c) {
        for (std::size_t i = 0; i < c.size(); ++i)
          for (std::size_t j = i + 1; j < c.size(); ++j) {
            Triangle t{v, c[i], c[j]};
            std::sort(t.begin(), t.end());
            if (t[0] == v) out.push_back(t);
          }
      });
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  const IntersectionGraph* hg_;
  std::vector<std::vector<std::uint32_t>> off_points_;
};

/// All triangles of H_q by direct adjacency scan, split by classify_triangle.
struct TriangleCensus {
  std::uint64_t degenerate = 0;
  std::uint64_t non_degenerate = 0;
  std::vector<Triangle> non_degenerate_list;
};

inline TriangleCensus brute_force_triangles(const IntersectionGraph& hg, bool keep_list = false) {
  TriangleCensus c;
  const Graph& g = hg.graph();
  for (std::size_t id = 0; id < g.edge_count(); ++id) {
    auto [a, b] = g.edge(id);
    for (std::uint32_t x : g.neighbors(b)) {
      if (x <= b || !g.adjacent(a, x)) continue;
      const TriangleKind k = classify_triangle(hg, a, b, x);
      if (k == TriangleKind::degenerate) {
        ++c.degenerate;
      } else {
        ++c.non_degenerate;
        if (keep_list) c.non_degenerate_list.push_back({a, b, x});
      }
    }
  }
  return c;
}

/// Builds T_q and cross-checks it: per-vertex counts against the closed form
/// always, and (when `brute_force` is set, meant for q <= 4) the explicit list
/// against a full classification of every triangle of H_q.
inline TriangleFamily build_family(const IntersectionGraph& hg, bool brute_force) {
  TriangleFamily fam(hg);
  const std::uint32_t q = hg.q();
  std::uint64_t sum = 0;
  std::vector<std::uint32_t> buf(q + 1);
  for (std::uint32_t v = 0; v < hg.vertex_count(); ++v) {
    if (fam.spanning_clique_count(v) != std::uint64_t{q} * q * q - q)
      throw TriangleError("vertex with wrong number of spanning cliques");
    for (std::uint32_t p : fam.spanning_points(v)) {
      fam.spanning_clique(v, p, buf);
      for (std::size_t i = 0; i <= q; ++i) {
        if (!hg.adjacent(v, buf[i])) throw TriangleError("spanning clique member outside N(v)");
        if (!brute_force) continue;
        for (std::size_t j = i + 1; j <= q; ++j)
          if (hg.meet(buf[i], buf[j]) != p) throw TriangleError("spanning clique members do not meet at its point");
      }
    }
    sum += fam.triangles_at(v);
  }
  if (sum % 3 != 0 || sum / 3 != family_size_formula(q)) throw TriangleError("family size disagrees with formula");
  if (brute_force) {
    const TriangleCensus census = brute_force_triangles(hg, true);
    auto mine = fam.explicit_triangles();
    auto theirs = census.non_degenerate_list;
    std::sort(theirs.begin(), theirs.end());
    if (census.non_degenerate != family_size_formula(q) || mine != theirs)
      throw TriangleError("family disagrees with brute-force classification");
  }
  return fam;
}

/// Checks that N(v) splits into q+1 cliques of order q^2-1 and q^3-q spanning
/// cliques of order q+1 covering every edge of H_q[N(v)] exactly once.
inline Certificate verify_nbhd_decomposition(const TriangleFamily& fam, std::uint32_t v) {
  const IntersectionGraph& hg = fam.graph();
  const auto& inc = hg.incidence();
  const std::uint32_t q = hg.q();
  const auto& nb = hg.graph().neighbors(v);
  const std::size_t d = nb.size();
  auto local = [&](std::uint32_t w) -> std::size_t {
    auto it = std::lower_bound(nb.begin(), nb.end(), w);
    if (it == nb.end() || *it != w) return SIZE_MAX;
    return static_cast<std::size_t>(it - nb.begin());
  };
  std::vector<std::uint16_t> cover(d * d, 0);
  Certificate c;
  c.claim = "Gv.neighbourhood_decomposition";
  c.param("q", q).param("vertex", v);
  bool ok = true;
  auto mark = [&](const std::vector<std::uint32_t>& members) {
    for (std::size_t i = 0; i < members.size(); ++i) {
      const std::size_t a = local(members[i]);
      if (a == SIZE_MAX) {
        ok = false;
        if (c.witness.empty()) c.witness = {v, members[i]};
        continue;
      }
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        const std::size_t b = local(members[j]);
        if (b == SIZE_MAX) continue;
        ++cover[std::min(a, b) * d + std::max(a, b)];
      }
    }
  };

  std::size_t big = 0, big_bad = 0;
  for (std::uint32_t p : inc.secant_points[v]) {
    std::vector<std::uint32_t> members;
    for (std::uint32_t w : inc.point_secants[p])
      if (w != v) members.push_back(w);
    ++big;
    if (members.size() != std::size_t{q} * q - 1) ++big_bad;
    mark(members);
  }
  std::size_t spanning = 0, spanning_bad = 0;
  for (std::uint32_t p : fam.spanning_points(v)) {
    auto members = fam.spanning_clique(v, p);
    ++spanning;
    std::sort(members.begin(), members.end());
    if (std::adjacent_find(members.begin(), members.end()) != members.end() || members.size() != q + 1u)
      ++spanning_bad;
    mark(members);
  }

  std::uint64_t edges = 0, uncovered = 0, multiply = 0, non_edges = 0;
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = a + 1; b < d; ++b) {
      const bool e = hg.adjacent(nb[a], nb[b]);
      const auto k = cover[a * d + b];
      edges += e;
      if (e && k == 0) ++uncovered;
      if (k > 1) ++multiply;
      if (!e && k > 0) ++non_edges;
      if ((e && k != 1) || (!e && k > 0)) {
        ok = false;
        if (c.witness.empty()) c.witness = {v, nb[a], nb[b]};
      }
    }
  }
  const std::uint64_t span_edges = (std::uint64_t{q} * q * q - q) * binom2(q + 1);
  const std::uint64_t big_edges = (q + 1ull) * binom2(std::uint64_t{q} * q - 1);
  ok = ok && big == q + 1u && big_bad == 0 && spanning == std::size_t{q} * q * q - q && spanning_bad == 0 &&
       edges == span_edges + big_edges;
  c.quantity("big_cliques", big)
      .quantity("big_clique_order", std::uint64_t{q} * q - 1)
      .quantity("spanning_cliques", spanning)
      .quantity("spanning_clique_order", q + 1)
      .quantity("edges_in_neighbourhood", edges)
      .quantity("edges_expected", span_edges + big_edges)
      .quantity("uncovered_edges", uncovered)
      .quantity("multiply_covered", multiply)
      .quantity("covered_non_edges", non_edges);
  c.outcome = ok ? Outcome::pass : Outcome::fail;
  return c;
}

/// Every K4 of H_q (exhaustive, or sampled) contains a degenerate triangle, so
/// no four members of T_q span a K4.
inline Certificate verify_no_k4_in_family(const TriangleFamily& fam, const K4Mode& mode) {
  const IntersectionGraph& hg = fam.graph();
  std::uint64_t k4 = 0, bad = 0;
  std::vector<std::uint32_t> witness;
  auto check = [&](std::uint32_t a, std::uint32_t b, std::uint32_t c, std::uint32_t d) {
    ++k4;
    const bool has_degenerate = classify_triangle(hg, a, b, c) == TriangleKind::degenerate ||
                                classify_triangle(hg, a, b, d) == TriangleKind::degenerate ||
                                classify_triangle(hg, a, c, d) == TriangleKind::degenerate ||
                                classify_triangle(hg, b, c, d) == TriangleKind::degenerate;
    if (!has_degenerate) {
      ++bad;
      if (witness.empty()) witness = {a, b, c, d};
    }
  };
  const Graph& g = hg.graph();
  if (mode.exhaustive) {
    for_each_k4(g, check);
  } else {
    std::mt19937_64 rng(mode.seed);
    std::uniform_int_distribution<std::size_t> pick(0, g.edge_count() - 1);
    for (std::uint64_t s = 0; s < mode.samples; ++s) {
      auto [a, b] = g.edge(pick(rng));
      std::vector<std::uint32_t> common;
      for (std::uint32_t x : g.neighbors(a))
        if (g.adjacent(b, x)) common.push_back(x);
      if (common.empty()) continue;
      const std::uint32_t c = common[std::uniform_int_distribution<std::size_t>(0, common.size() - 1)(rng)];
      for (std::uint32_t d : common)
        if (d != c && g.adjacent(c, d)) check(a, b, c, d);
    }
  }
  Certificate cert;
  cert.claim = "Tq.no_k4_from_family";
  cert.param("q", hg.q()).param("mode", mode.exhaustive ? "exhaustive" : "sampled");
  if (!mode.exhaustive) cert.param("seed", mode.seed).param("samples", mode.samples);
  cert.quantity("k4_checked", k4).quantity("k4_without_degenerate_triangle", bad);
  cert.margin = std::to_string(bad);
  cert.witness = witness;
  cert.outcome = bad == 0 ? Outcome::pass : Outcome::fail;
  return cert;
}

// ---------------------------------------------------------------------------
// s-fans: s-1 secants concurrent at a unital point together with a transversal
// secant avoiding that point and meeting each of them in the unital.

struct Fan {
  std::uint32_t apex = 0;                  // unital point index
  std::vector<std::uint32_t> concurrent;   // s-1 secants through the apex
  std::uint32_t transversal = 0;           // secant not through the apex
};

struct FanFamily {
  std::uint32_t s = 0;
  std::vector<Fan> fans;
};

/// Total number of s-fans: n (q^3 - q) C(q+1, s-1).
inline std::uint64_t fan_count_formula(std::uint64_t q, std::uint32_t s) {
  std::uint64_t c = 1;
  const std::uint64_t r = s - 1;
  for (std::uint64_t i = 0; i < r; ++i) c = c * (q + 1 - i) / (i + 1);
  return (q * q * q * q - q * q * q + q * q) * (q * q * q - q) * c;
}

/// Streams s-fans in canonical order (transversal, apex, lexicographic choice)
/// until fn returns false. Returns the number visited.
template <class Fn>
std::uint64_t for_each_fan(const TriangleFamily& fam, std::uint32_t s, Fn&& fn) {
  const std::uint32_t q = fam.q();
  if (s < 3 || s > q + 1) throw TriangleError("fan size s must satisfy 3 <= s <= q+1");
  const std::uint32_t r = s - 1;
  std::uint64_t visited = 0;
  std::vector<std::uint32_t> clique(q + 1), pick(r);
  Fan fan;
  fan.concurrent.resize(r);
  for (std::uint32_t t = 0; t < fam.graph().vertex_count(); ++t) {
    for (std::uint32_t p : fam.spanning_points(t)) {
      fam.spanning_clique(t, p, clique);
      for (std::uint32_t i = 0; i < r; ++i) pick[i] = i;
      while (true) {
        fan.apex = p;
        fan.transversal = t;
        for (std::uint32_t i = 0; i < r; ++i) fan.concurrent[i] = clique[pick[i]];
        ++visited;
        if (!fn(static_cast<const Fan&>(fan))) return visited;
        // next r-combination of q+1
        int i = static_cast<int>(r) - 1;
        while (i >= 0 && pick[i] == q + 1 - r + static_cast<std::uint32_t>(i)) --i;
        if (i < 0) break;
        ++pick[i];
        for (std::uint32_t j = static_cast<std::uint32_t>(i) + 1; j < r; ++j) pick[j] = pick[j - 1] + 1;
      }
    }
  }
  return visited;
}

inline FanFamily enumerate_fans(const TriangleFamily& fam, std::uint32_t s, std::uint64_t limit) {
  FanFamily out;
  out.s = s;
  const std::uint32_t q = fam.q();
  if (s < 3 || s > q + 1) throw TriangleError("fan size s must satisfy 3 <= s <= q+1");
  if (limit == 0) return out;
  for_each_fan(fam, s, [&](const Fan& f) {
    out.fans.push_back(f);
    return out.fans.size() < limit;
  });
  return out;
}

}  // namespace hq
