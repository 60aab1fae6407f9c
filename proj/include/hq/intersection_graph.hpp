// The intersection graph H_q of the Hermitian unital's secants, its clique
// family (one clique per unital point), and the strongly-regular and K4
// structure checks.

#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <mutex>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "hq/certificate.hpp"
#include "hq/geometry.hpp"
#include "hq/graph.hpp"
#include "hq/parallel.hpp"

namespace hq {

/// H_q. Vertex ids coincide with secant indices and clique ids with unital
/// point indices of the underlying incidence structure.
class IntersectionGraph {
 public:
  IntersectionGraph(const UnitalIncidence& inc) : inc_(&inc), graph_(inc.secant_count()) {
    for (const auto& clique : inc.point_secants) {
      for (std::size_t i = 0; i < clique.size(); ++i) {
        for (std::size_t j = i + 1; j < clique.size(); ++j) {
          if (graph_.adjacent(clique[i], clique[j]))
            throw GraphError("two secants share more than one unital point");
          graph_.add_edge(clique[i], clique[j]);
        }
      }
    }
    graph_.finalize();
  }

  std::uint32_t q() const { return inc_->q; }
  const UnitalIncidence& incidence() const { return *inc_; }
  const Graph& graph() const { return graph_; }
  std::size_t vertex_count() const { return graph_.vertex_count(); }
  std::size_t edge_count() const { return graph_.edge_count(); }
  bool adjacent(std::uint32_t u, std::uint32_t v) const { return graph_.adjacent(u, v); }

  /// The clique family: clique c holds every secant through unital point c.
  const std::vector<std::vector<std::uint32_t>>& cliques() const { return inc_->point_secants; }
  /// The q+1 cliques (= unital points) containing vertex v.
  const std::vector<std::uint32_t>& vertex_cliques(std::uint32_t v) const { return inc_->secant_points[v]; }

  /// Unital point where adjacent secants u, v meet; nullopt if not adjacent.
  std::optional<std::uint32_t> edge_point(std::uint32_t u, std::uint32_t v) const {
    const auto& a = inc_->secant_points[u];
    const auto& b = inc_->secant_points[v];
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      if (a[i] == b[j]) return a[i];
      if (a[i] < b[j]) ++i; else ++j;
    }
    return std::nullopt;
  }
  std::uint32_t meet(std::uint32_t u, std::uint32_t v) const {
    auto p = edge_point(u, v);
    if (!p) throw GraphError("vertices are not adjacent");
    return *p;
  }

 private:
  const UnitalIncidence* inc_;
  Graph graph_;
};

struct HqParameters {
  std::uint64_t q, n, d, lambda, mu, cliques, clique_size;
  static HqParameters of(std::uint64_t q) {
    return {q, q * q * q * q - q * q * q + q * q, q * q * q + q * q - q - 1, 2 * q * q - 2, (q + 1) * (q + 1),
            q * q * q + 1, q * q};
  }
};

struct SrgReport {
  std::uint32_t q = 0;
  std::size_t n = 0;
  std::size_t d = 0;                      // degree of vertex 0
  std::size_t edges = 0;
  std::size_t lambda_min = 0, lambda_max = 0;
  std::size_t mu_min = 0, mu_max = 0;
  bool order_and_degree = false;          // item 1
  bool clique_family = false;             // item 2
  bool clique_membership = false;         // item 3
  std::optional<bool> k4_structure;       // item 4, filled from verify_k4_structure
  bool lambda_ok = false;                 // item 5
  bool mu_ok = false;                     // item 6

  bool pass() const {
    return order_and_degree && clique_family && clique_membership && lambda_ok && mu_ok &&
           k4_structure.value_or(true);
  }
};

/// Checks items 1-3, 5, 6 of the structure of H_q by exhaustive scan.
inline SrgReport verify_srg(const IntersectionGraph& hg, unsigned threads = 1) {
  const Graph& g = hg.graph();
  const auto expect = HqParameters::of(hg.q());
  SrgReport r;
  r.q = hg.q();
  r.n = g.vertex_count();
  r.edges = g.edge_count();
  r.d = r.n ? g.degree(0) : 0;

  bool regular = true;
  for (std::uint32_t v = 0; v < r.n; ++v) regular = regular && g.degree(v) == expect.d;
  r.order_and_degree = r.n == expect.n && regular && r.edges * 2 == expect.n * expect.d;

  // Clique family: count, sizes, cliqueness, maximality, pairwise intersections.
  const auto& cl = hg.cliques();
  bool fam = cl.size() == expect.cliques;
  const std::size_t words = g.adjacency().words_per_row();
  for (const auto& c : cl) {
    if (c.size() != expect.clique_size) fam = false;
    std::vector<std::uint64_t> common(words, ~std::uint64_t{0});
    for (std::size_t i = 0; i < c.size(); ++i) {
      for (std::size_t j = i + 1; j < c.size(); ++j)
        if (!g.adjacent(c[i], c[j])) fam = false;
      const std::uint64_t* row = g.adjacency().row(c[i]);
      for (std::size_t w = 0; w < words; ++w) common[w] &= row[w];
    }
    for (std::size_t w = 0; w < words; ++w)
      if (common[w]) fam = false;  // a vertex adjacent to the whole clique: not maximal
  }
  for (std::size_t a = 0; a < cl.size() && fam; ++a) {
    for (std::size_t b = a + 1; b < cl.size(); ++b) {
      std::vector<std::uint32_t> both;
      std::set_intersection(cl[a].begin(), cl[a].end(), cl[b].begin(), cl[b].end(), std::back_inserter(both));
      if (both.size() != 1) {
        fam = false;
        break;
      }
    }
  }
  r.clique_family = fam;

  bool member = true;
  for (std::uint32_t v = 0; v < r.n; ++v) member = member && hg.vertex_cliques(v).size() == expect.q + 1;
  for (std::size_t id = 0; id < g.edge_count() && member; ++id) {
    auto [u, v] = g.edge(id);
    const auto& a = hg.vertex_cliques(u);
    const auto& b = hg.vertex_cliques(v);
    std::vector<std::uint32_t> both;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
    member = both.size() == 1;
  }
  r.clique_membership = member;

  // Common neighbourhoods over all pairs.
  std::mutex mu;
  std::size_t lmin = SIZE_MAX, lmax = 0, mmin = SIZE_MAX, mmax = 0;
  parallel_for(r.n, threads, [&](std::size_t b, std::size_t e, unsigned) {
    std::size_t l0 = SIZE_MAX, l1 = 0, m0 = SIZE_MAX, m1 = 0;
    for (std::size_t u = b; u < e; ++u) {
      for (std::size_t v = u + 1; v < r.n; ++v) {
        const std::size_t c = g.common_neighbors(static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(v));
        if (g.adjacent(static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(v))) {
          l0 = std::min(l0, c);
          l1 = std::max(l1, c);
        } else {
          m0 = std::min(m0, c);
          m1 = std::max(m1, c);
        }
      }
    }
    std::lock_guard lock(mu);
    lmin = std::min(lmin, l0);
    lmax = std::max(lmax, l1);
    mmin = std::min(mmin, m0);
    mmax = std::max(mmax, m1);
  });
  r.lambda_min = lmin == SIZE_MAX ? 0 : lmin;
  r.lambda_max = lmax;
  r.mu_min = mmin == SIZE_MAX ? 0 : mmin;
  r.mu_max = mmax;
  r.lambda_ok = lmin == expect.lambda && lmax == expect.lambda;
  r.mu_ok = mmin == expect.mu && mmax == expect.mu;
  return r;
}

inline Certificate srg_certificate(const SrgReport& r) {
  const auto expect = HqParameters::of(r.q);
  Certificate c;
  c.claim = "Hq.strongly_regular";
  c.param("q", r.q);
  c.quantity("n", r.n)
      .quantity("n_expected", expect.n)
      .quantity("degree", r.d)
      .quantity("degree_expected", expect.d)
      .quantity("edges", r.edges)
      .quantity("lambda_min", r.lambda_min)
      .quantity("lambda_max", r.lambda_max)
      .quantity("lambda_expected", expect.lambda)
      .quantity("mu_min", r.mu_min)
      .quantity("mu_max", r.mu_max)
      .quantity("mu_expected", expect.mu)
      .quantity("item1_order_degree", r.order_and_degree)
      .quantity("item2_clique_family", r.clique_family)
      .quantity("item3_clique_membership", r.clique_membership)
      .quantity("item5_lambda", r.lambda_ok)
      .quantity("item6_mu", r.mu_ok);
  if (r.k4_structure) c.quantity("item4_k4_structure", *r.k4_structure);
  c.outcome = r.pass() ? Outcome::pass : Outcome::fail;
  return c;
}

/// Meet-point pattern of a K4 in H_q.
struct K4Shape {
  int degenerate_triangles = 0;  // triples whose three meet points coincide
  int distinct_points = 0;       // distinct meet points among the six edges
  bool three_in_clique() const { return degenerate_triangles > 0; }
};

inline K4Shape k4_shape(const IntersectionGraph& hg, std::uint32_t a, std::uint32_t b, std::uint32_t c,
                        std::uint32_t d) {
  const std::uint32_t v[4] = {a, b, c, d};
  std::uint32_t m[4][4] = {};
  std::vector<std::uint32_t> pts;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      m[i][j] = m[j][i] = hg.meet(v[i], v[j]);
      pts.push_back(m[i][j]);
    }
  K4Shape s;
  std::sort(pts.begin(), pts.end());
  s.distinct_points = static_cast<int>(std::unique(pts.begin(), pts.end()) - pts.begin());
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      for (int k = j + 1; k < 4; ++k)
        if (m[i][j] == m[i][k] && m[i][j] == m[j][k]) ++s.degenerate_triangles;
  return s;
}

struct K4Mode {
  bool exhaustive = true;
  std::uint64_t seed = 0;
  std::uint64_t samples = 0;
  static K4Mode full() { return {}; }
  static K4Mode sampled(std::uint64_t seed, std::uint64_t samples) { return {false, seed, samples}; }
};

struct K4Tally {
  std::uint64_t k4_total = 0;
  std::uint64_t all_four_in_clique = 0;
  std::uint64_t three_in_clique = 0;    // at least three
  std::uint64_t onan = 0;               // six distinct meet points
  std::uint64_t counterexamples = 0;
  std::vector<std::uint32_t> witness;
};

/// Visits K4s of H_q (all of them, or the K4s extending sampled triangles) and
/// classifies each.
inline K4Tally scan_k4(const IntersectionGraph& hg, const K4Mode& mode, unsigned threads = 1) {
  K4Tally t;
  auto record = [&](K4Tally& tally, std::uint32_t a, std::uint32_t b, std::uint32_t c, std::uint32_t d) {
    const K4Shape s = k4_shape(hg, a, b, c, d);
    ++tally.k4_total;
    if (s.distinct_points == 1) ++tally.all_four_in_clique;
    if (s.three_in_clique()) {
      ++tally.three_in_clique;
    } else {
      ++tally.counterexamples;
      if (tally.witness.empty()) tally.witness = {a, b, c, d};
    }
    if (s.distinct_points == 6) ++tally.onan;
  };
  const Graph& g = hg.graph();
  if (mode.exhaustive) {
    std::mutex mu;
    parallel_for(g.edge_count(), threads, [&](std::size_t b, std::size_t e, unsigned) {
      K4Tally local;
      for_each_k4(g, b, e, [&](std::uint32_t a, std::uint32_t b2, std::uint32_t c, std::uint32_t d) {
        record(local, a, b2, c, d);
      });
      std::lock_guard lock(mu);
      t.k4_total += local.k4_total;
      t.all_four_in_clique += local.all_four_in_clique;
      t.three_in_clique += local.three_in_clique;
      t.onan += local.onan;
      t.counterexamples += local.counterexamples;
      if (t.witness.empty()) t.witness = local.witness;
    });
    return t;
  }
  std::mt19937_64 rng(mode.seed);
  std::uniform_int_distribution<std::size_t> pick_edge(0, g.edge_count() - 1);
  for (std::uint64_t s = 0; s < mode.samples; ++s) {
    auto [a, b] = g.edge(pick_edge(rng));
    std::vector<std::uint32_t> common;
    for (std::uint32_t c : g.neighbors(a))
      if (g.adjacent(b, c)) common.push_back(c);
    if (common.empty()) continue;
    const std::uint32_t c = common[std::uniform_int_distribution<std::size_t>(0, common.size() - 1)(rng)];
    for (std::uint32_t d : common) {
      if (d == c || !g.adjacent(c, d)) continue;
      std::uint32_t v[4] = {a, b, c, d};
      std::sort(v, v + 4);
      record(t, v[0], v[1], v[2], v[3]);
    }
  }
  return t;
}

inline Certificate verify_k4_structure(const IntersectionGraph& hg, const K4Mode& mode, unsigned threads = 1) {
  const K4Tally t = scan_k4(hg, mode, threads);
  Certificate c;
  c.claim = "Hq.k4_three_in_clique";
  c.param("q", hg.q()).param("mode", mode.exhaustive ? "exhaustive" : "sampled");
  if (!mode.exhaustive) c.param("seed", mode.seed).param("samples", mode.samples);
  c.quantity("k4_total", t.k4_total)
      .quantity("k4_all_four_in_clique", t.all_four_in_clique)
      .quantity("k4_three_in_clique", t.three_in_clique)
      .quantity("onan_configurations", t.onan)
      .quantity("counterexamples", t.counterexamples);
  c.margin = std::to_string(t.counterexamples);
  c.witness = t.witness;
  c.outcome = (t.counterexamples == 0 && t.onan == 0) ? Outcome::pass : Outcome::fail;
  return c;
}

}  // namespace hq
