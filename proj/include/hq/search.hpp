// Local search for edge colorings of H_q with few monochromatic T_q members.

#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

#include "hq/block_construction.hpp"
#include "hq/certify.hpp"
#include "hq/goodman.hpp"

namespace hq {

class SearchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// For each edge, the other two edges of each of its q^2 members of T_q.
/// Edge uw meets at p; the third secant of a member is the join of a point
/// a != p on u with a point b != p on w.
class TriangleIndex {
 public:
  explicit TriangleIndex(const TriangleFamily& fam, bool precompute)
      : fam_(&fam), q2_(fam.q() * fam.q()) {
    if (!precompute) return;
    const std::size_t m = fam.graph().edge_count();
    pairs_.resize(m * q2_);
    for (std::size_t e = 0; e < m; ++e) compute(e, &pairs_[e * q2_]);
  }

  std::uint32_t per_edge() const { return q2_; }

  /// out must hold per_edge() pairs.
  void pairs(std::size_t e, std::pair<std::uint32_t, std::uint32_t>* out) const {
    if (!pairs_.empty()) {
      std::copy_n(&pairs_[e * q2_], q2_, out);
      return;
    }
    compute(e, out);
  }

 private:
  void compute(std::size_t e, std::pair<std::uint32_t, std::uint32_t>* out) const {
    const IntersectionGraph& hg = fam_->graph();
    const Graph& g = hg.graph();
    const auto& inc = hg.incidence();
    auto [u, w] = g.edge(e);
    const std::uint32_t p = hg.meet(u, w);
    std::size_t k = 0;
    for (std::uint32_t a : inc.secant_points[u]) {
      if (a == p) continue;
      for (std::uint32_t b : inc.secant_points[w]) {
        if (b == p) continue;
        const std::uint32_t x = inc.secant_through(a, b);
        out[k++] = {static_cast<std::uint32_t>(g.edge_id(u, x)), static_cast<std::uint32_t>(g.edge_id(w, x))};
      }
    }
    if (k != q2_) throw SearchError("edge with wrong number of family triangles");
  }

  const TriangleFamily* fam_;
  std::uint32_t q2_;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs_;
};

/// Coloring plus the exact objective and, per edge, the number of its
/// family triangles whose other two edges are both red / both blue.
class SearchState {
 public:
  SearchState(const TriangleFamily& fam, const TriangleIndex& index, EdgeColoring start)
      : fam_(&fam), index_(&index), coloring_(std::move(start)), buf_(index.per_edge()) {
    const std::size_t m = fam.graph().edge_count();
    if (coloring_.size() != m) throw ColoringError("coloring size does not match graph");
    both_red_.assign(m, 0);
    both_blue_.assign(m, 0);
    std::uint64_t mono3 = 0;
    for (std::size_t e = 0; e < m; ++e) {
      index.pairs(e, buf_.data());
      for (auto [x, y] : buf_) {
        const bool bx = coloring_.blue(x), by = coloring_.blue(y);
        if (bx != by) continue;
        ++(bx ? both_blue_[e] : both_red_[e]);
        mono3 += bx == coloring_.blue(e);
      }
    }
    objective_ = mono3 / 3;
  }

  std::uint64_t objective() const { return objective_; }
  const EdgeColoring& coloring() const { return coloring_; }

  /// Change in the objective if e flips.
  long long flip_delta(std::size_t e) const {
    const long long r = both_red_[e], b = both_blue_[e];
    return coloring_.blue(e) ? r - b : b - r;
  }

  void flip(std::size_t e) {
    objective_ = static_cast<std::uint64_t>(static_cast<long long>(objective_) + flip_delta(e));
    const bool was_blue = coloring_.blue(e);
    index_->pairs(e, buf_.data());
    for (auto [x, y] : buf_) {
      // For x the pair is (e, y), for y it is (e, x).
      update(x, was_blue, coloring_.blue(y));
      update(y, was_blue, coloring_.blue(x));
    }
    coloring_.flip(e);
  }

  /// Full recount through the Goodman tally.
  std::uint64_t recount() const { return goodman_count(*fam_, coloring_).monochromatic; }

 private:
  void update(std::size_t x, bool e_was_blue, bool other_blue) {
    if (e_was_blue == other_blue) --(other_blue ? both_blue_[x] : both_red_[x]);
    else ++(other_blue ? both_blue_[x] : both_red_[x]);
  }

  const TriangleFamily* fam_;
  const TriangleIndex* index_;
  EdgeColoring coloring_;
  std::vector<std::uint16_t> both_red_, both_blue_;
  std::uint64_t objective_ = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> buf_;
};

struct Schedule {
  double initial_temperature = 2.0;
  double cooling_rate = 1.0;       // per step
  std::uint64_t steps = 0;
  std::uint64_t revalidate_every = 100000;  // accepted moves between full recounts; 0 disables
  bool polish = true;

  /// Geometric cooling from t0 down to t_end over the budget.
  static Schedule geometric(std::uint64_t steps, double t0 = 2.0, double t_end = 0.02) {
    Schedule s;
    s.steps = steps;
    s.initial_temperature = t0;
    s.cooling_rate = steps > 1 ? std::pow(t_end / t0, 1.0 / static_cast<double>(steps - 1)) : 1.0;
    return s;
  }
};

struct AnnealResult {
  std::uint64_t objective = 0;
  EdgeColoring coloring;
  std::uint64_t initial_objective = 0;
  std::uint64_t accepted = 0;
  std::uint64_t revalidations = 0;
  std::uint64_t polish_flips = 0;
};

namespace detail {
inline std::uint64_t uniform_index(std::mt19937_64& rng, std::uint64_t bound) {
  return bounded_draw(rng(), static_cast<std::uint32_t>(bound));
}
inline double uniform_unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }
}  // namespace detail

/// Steepest descent on single flips; ties go to the lowest edge id.
inline std::uint64_t greedy_polish(SearchState& s) {
  std::uint64_t flips = 0;
  const std::size_t m = s.coloring().size();
  for (;;) {
    long long best = 0;
    std::size_t arg = m;
    for (std::size_t e = 0; e < m; ++e) {
      const long long d = s.flip_delta(e);
      if (d < best) {
        best = d;
        arg = e;
      }
    }
    if (arg == m) return flips;
    s.flip(arg);
    ++flips;
  }
}

/// Simulated annealing from a uniform random coloring drawn from `seed`.
inline AnnealResult anneal(const TriangleFamily& fam, const TriangleIndex& index, const Schedule& sch,
                           std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::size_t m = fam.graph().edge_count();
  SearchState s(fam, index, EdgeColoring::uniform(m, rng()));
  AnnealResult r;
  r.initial_objective = s.objective();
  r.objective = s.objective();
  r.coloring = s.coloring();
  if (sch.steps == 0) return r;

  double temp = sch.initial_temperature;
  std::uint64_t since_check = 0;
  for (std::uint64_t step = 0; step < sch.steps; ++step, temp *= sch.cooling_rate) {
    const std::size_t e = detail::uniform_index(rng, m);
    const long long d = s.flip_delta(e);
    if (d > 0 && !(temp > 0 && detail::uniform_unit(rng) < std::exp(-static_cast<double>(d) / temp))) continue;
    s.flip(e);
    ++r.accepted;
    if (s.objective() < r.objective) {
      r.objective = s.objective();
      r.coloring = s.coloring();
    }
    if (sch.revalidate_every && ++since_check == sch.revalidate_every) {
      since_check = 0;
      ++r.revalidations;
      if (s.recount() != s.objective()) throw SearchError("incremental objective drifted from full recount");
    }
  }
  if (sch.polish) {
    SearchState best(fam, index, r.coloring);
    r.polish_flips = greedy_polish(best);
    r.objective = best.objective();
    r.coloring = best.coloring();
  }
  if (goodman_count(fam, r.coloring).monochromatic != r.objective)
    throw SearchError("reported objective disagrees with full recount");
  return r;
}

struct SearchResult {
  std::uint64_t best_objective = 0;
  std::size_t best_restart = 0;
  EdgeColoring best_coloring;
  std::vector<std::uint64_t> restart_objectives;
  std::vector<std::uint64_t> restart_seeds;
  Rational lower_bound;
};

/// Independent restarts, reduced by minimum objective (lowest restart index on ties).
/// An objective below a positive L(q) is a counting bug and throws.
inline SearchResult search(const TriangleFamily& fam, const Schedule& sch, std::uint64_t restarts, std::uint64_t seed,
                           unsigned threads = 1) {
  if (restarts == 0) throw SearchError("restarts must be >= 1");
  const TriangleIndex index(fam, fam.q() <= 5);
  std::vector<AnnealResult> runs(restarts);
  SearchResult out;
  out.restart_seeds.resize(restarts);
  for (std::uint64_t i = 0; i < restarts; ++i) out.restart_seeds[i] = mix64(seed + i);
  parallel_for(restarts, threads, [&](std::size_t b, std::size_t e, unsigned) {
    for (std::size_t i = b; i < e; ++i) runs[i] = anneal(fam, index, sch, out.restart_seeds[i]);
  });
  out.lower_bound = theorem1_bound(fam.q()).lower_bound;
  out.best_objective = std::numeric_limits<std::uint64_t>::max();
  for (std::size_t i = 0; i < runs.size(); ++i) {
    out.restart_objectives.push_back(runs[i].objective);
    if (runs[i].objective < out.best_objective) {
      out.best_objective = runs[i].objective;
      out.best_restart = i;
    }
  }
  out.best_coloring = runs[out.best_restart].coloring;
  if (out.lower_bound > 0 && Rational(BigInt(out.best_objective)) < out.lower_bound)
    throw SearchError("search found a coloring below the proven lower bound");
  return out;
}

struct RandomColoringStats {
  std::uint64_t trials = 0;
  MeanEstimate fraction;  // monochromatic / |T_q|
};

/// Monochromatic fraction of uniform random colorings; expectation 1/4.
inline RandomColoringStats random_coloring_stats(const TriangleFamily& fam, std::uint64_t trials, std::uint64_t seed,
                                                 unsigned threads = 1) {
  if (trials < 2) throw SearchError("random_coloring_stats needs trials >= 2");
  const std::size_t m = fam.graph().edge_count();
  std::vector<double> frac(trials);
  parallel_for(trials, threads, [&](std::size_t b, std::size_t e, unsigned) {
    for (std::size_t t = b; t < e; ++t) {
      const auto c = EdgeColoring::uniform(m, mix64(seed ^ mix64(t)));
      frac[t] = static_cast<double>(goodman_count(fam, c).monochromatic) / static_cast<double>(fam.total());
    }
  });
  RandomColoringStats s;
  s.trials = trials;
  s.fraction = estimate(frac);
  return s;
}

}  // namespace hq
