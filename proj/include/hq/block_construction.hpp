// Blowups of a triangle-free replacement graph F, the random block
// construction H_q*, and the arithmetic around its concentration argument.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "hq/certificate.hpp"
#include "hq/certify.hpp"
#include "hq/intersection_graph.hpp"
#include "hq/maxcut.hpp"
#include "hq/parallel.hpp"
#include "hq/triangles.hpp"

namespace hq {

class BlockError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// ---------------------------------------------------------------------------
// Replacement graphs

struct ReplacementGraph {
  std::string name;
  Graph graph;
  std::size_t n = 0, m = 0;
  std::size_t maxcut = 0;
  Rational alpha;             // maxcut / m
  bool triangle_free = false;

  /// The construction needs alpha < 2/3.
  bool valid_for_block_construction() const { return alpha < Rational(2, 3); }
};

inline ReplacementGraph make_replacement(std::string name, Graph g) {
  if (!g.finalized()) g.finalize();
  ReplacementGraph f;
  f.name = std::move(name);
  f.n = g.vertex_count();
  f.m = g.edge_count();
  if (f.m == 0) throw BlockError("replacement graph must have at least one edge");
  f.triangle_free = is_triangle_free(g);
  if (!f.triangle_free) throw BlockError("replacement graph '" + f.name + "' contains a triangle");
  f.maxcut = maxcut_exact(g).cut;
  f.alpha = Rational(f.maxcut, f.m);
  f.graph = std::move(g);
  return f;
}

inline std::vector<std::string> replacement_registry() { return {"edge", "c5", "path4", "petersen"}; }

/// Registry name, or a path to an edge-list file.
inline ReplacementGraph replacement_graph(const std::string& spec) {
  if (spec == "edge") return make_replacement(spec, path_graph(2));
  if (spec == "c5") return make_replacement(spec, cycle_graph(5));
  if (spec == "path4") return make_replacement(spec, path_graph(4));
  if (spec == "petersen") return make_replacement(spec, petersen_graph());
  std::ifstream in(spec);
  if (!in) throw BlockError("unknown replacement graph '" + spec + "' (not in registry, file not readable)");
  try {
    return make_replacement(spec, read_edge_list(in));
  } catch (const GraphError& e) {
    throw BlockError("replacement graph file '" + spec + "': " + e.what());
  }
}

// ---------------------------------------------------------------------------
// Blowups

/// F[t]: vertex i of F becomes the independent set {i*t, ..., i*t + t-1}.
inline Graph blowup(const Graph& f, std::uint32_t t) {
  if (t < 1) throw BlockError("blowup factor t must be >= 1");
  Graph g(static_cast<std::uint32_t>(f.vertex_count() * t));
  for (const auto& [i, j] : f.edges())
    for (std::uint32_t a = 0; a < t; ++a)
      for (std::uint32_t b = 0; b < t; ++b) g.add_edge(i * t + a, j * t + b);
  g.finalize();
  return g;
}

struct BlowupMinimum {
  std::size_t exhaustive_min = 0;      // over all 2^{nt} vertex colorings
  std::size_t corner_min = 0;          // over colorings constant on each class
  Rational formula;                    // (1 - alpha) m t^2
  std::uint64_t minimizers = 0;        // colorings attaining exhaustive_min
  std::uint64_t corner_minimizers = 0;
  bool attained_at_corner() const { return corner_min == exhaustive_min; }
};

inline constexpr std::size_t kBlowupExhaustiveLimit = 25;

/// Formula mode: (1 - alpha) m t^2.
inline Rational min_mono_blowup_formula(const ReplacementGraph& f, std::uint32_t t) {
  return (1 - f.alpha) * Rational(f.m) * Rational(t) * Rational(t);
}

/// Exhaustive mode: Gray-code walk over every vertex coloring of F[t].
inline BlowupMinimum min_mono_blowup(const ReplacementGraph& f, std::uint32_t t) {
  const Graph g = blowup(f.graph, t);
  const std::size_t n = g.vertex_count();
  if (n > kBlowupExhaustiveLimit) throw BlockError("exhaustive blowup minimum limited to n*t <= 25");
  std::vector<std::uint64_t> adj(n, 0);
  for (const auto& [u, v] : g.edges()) {
    adj[u] |= 1ull << v;
    adj[v] |= 1ull << u;
  }
  const std::uint64_t class_mask = (1ull << t) - 1;
  auto is_corner = [&](std::uint64_t mask) {
    for (std::size_t i = 0; i < f.n; ++i) {
      const std::uint64_t c = (mask >> (i * t)) & class_mask;
      if (c != 0 && c != class_mask) return false;
    }
    return true;
  };
  BlowupMinimum r;
  r.formula = min_mono_blowup_formula(f, t);
  long long mono = static_cast<long long>(g.edge_count());  // all vertices red
  std::uint64_t mask = 0;
  long long best = mono, best_corner = mono;
  std::uint64_t count = 1, corner_count = 1;
  const std::uint64_t total = 1ull << n;
  for (std::uint64_t i = 1; i < total; ++i) {
    const unsigned v = static_cast<unsigned>(__builtin_ctzll(i));
    const bool on = (mask >> v) & 1;
    const int same = __builtin_popcountll(adj[v] & (on ? mask : ~mask));
    const int deg = __builtin_popcountll(adj[v]);
    mono += (deg - same) - same;
    mask ^= 1ull << v;
    if (mono < best) {
      best = mono;
      count = 0;
    }
    if (mono == best) ++count;
    if (is_corner(mask)) {
      if (mono < best_corner) {
        best_corner = mono;
        corner_count = 0;
      }
      if (mono == best_corner) ++corner_count;
    }
  }
  r.exhaustive_min = static_cast<std::size_t>(best);
  r.corner_min = static_cast<std::size_t>(best_corner);
  r.minimizers = count;
  r.corner_minimizers = corner_count;
  return r;
}

// ---------------------------------------------------------------------------
// Random block construction

/// splitmix64 finalizer; X_{w,C} is a pure function of (seed, C, w).
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

/// Unbiased draw from [0, bound) by multiply-shift with rejection.
inline std::uint32_t bounded_draw(std::uint64_t state, std::uint32_t bound) {
  const std::uint32_t threshold = static_cast<std::uint32_t>(-bound) % bound;
  for (;;) {
    state = mix64(state);
    const std::uint64_t prod = (state & 0xffffffffull) * bound;
    if (static_cast<std::uint32_t>(prod) >= threshold) return static_cast<std::uint32_t>(prod >> 32);
  }
}

struct BlockAssignment {
  std::uint64_t seed = 0;
  std::uint32_t n = 0;  // |V(F)|

  /// X_{w,C}: vertex of F assigned to secant w inside the clique of unital point C.
  std::uint32_t operator()(std::uint32_t w, std::uint32_t clique) const {
    const std::uint64_t key = mix64(mix64(seed ^ 0x5851f42d4c957f2dull) ^ clique) ^ (std::uint64_t{w} << 1 | 1);
    return bounded_draw(key, n);
  }
};

struct StarGraph {
  const IntersectionGraph* base = nullptr;
  BlockAssignment assignment;
  Graph graph;                              // same vertex set as H_q
  std::vector<std::uint32_t> base_edges;    // surviving edge ids of H_q, increasing
};

inline bool survives(const IntersectionGraph& hg, const ReplacementGraph& f, const BlockAssignment& x,
                     std::uint32_t u, std::uint32_t w) {
  const auto p = hg.edge_point(u, w);
  if (!p) return false;
  return f.graph.adjacent(x(u, *p), x(w, *p));
}

inline StarGraph random_block(const IntersectionGraph& hg, const ReplacementGraph& f, std::uint64_t seed) {
  if (!f.triangle_free) throw BlockError("replacement graph must be triangle-free");
  StarGraph s;
  s.base = &hg;
  s.assignment = {seed, static_cast<std::uint32_t>(f.n)};
  const Graph& g = hg.graph();
  s.graph = Graph(static_cast<std::uint32_t>(g.vertex_count()));
  for (std::size_t id = 0; id < g.edge_count(); ++id) {
    auto [u, w] = g.edge(id);
    if (survives(hg, f, s.assignment, u, w)) {
      s.graph.add_edge(u, w);
      s.base_edges.push_back(static_cast<std::uint32_t>(id));
    }
  }
  s.graph.finalize();
  return s;
}

/// E(H*) is a subset of E(H_q) and no clique of C_q keeps a triangle.
inline bool check_star_invariants(const StarGraph& s) {
  const IntersectionGraph& hg = *s.base;
  for (const auto& [u, w] : s.graph.edges())
    if (!hg.adjacent(u, w)) return false;
  for (const auto& clique : hg.cliques()) {
    for (std::size_t a = 0; a < clique.size(); ++a)
      for (std::size_t b = a + 1; b < clique.size(); ++b) {
        if (!s.graph.adjacent(clique[a], clique[b])) continue;
        for (std::size_t c = b + 1; c < clique.size(); ++c)
          if (s.graph.adjacent(clique[a], clique[c]) && s.graph.adjacent(clique[b], clique[c])) return false;
      }
  }
  return true;
}

inline double survival_probability(const ReplacementGraph& f) {
  return 2.0 * static_cast<double>(f.m) / (static_cast<double>(f.n) * static_cast<double>(f.n));
}

/// E|V_i(C) cap N*(v)| = 2m(q+1)/n^3.
inline double concentration_expectation(const ReplacementGraph& f, std::uint32_t q) {
  const double n = static_cast<double>(f.n);
  return 2.0 * static_cast<double>(f.m) * (q + 1) / (n * n * n);
}

struct MeanEstimate {
  double mean = 0, stderr_ = 0;
  std::size_t samples = 0;
  double z(double expected) const {
    return stderr_ > 0 ? (mean - expected) / stderr_ : (mean == expected ? 0.0 : std::numeric_limits<double>::infinity());
  }
  bool within(double expected, double sigmas) const { return std::abs(z(expected)) <= sigmas; }
};

inline MeanEstimate estimate(const std::vector<double>& xs) {
  MeanEstimate e;
  e.samples = xs.size();
  if (xs.empty()) return e;
  double s = 0;
  for (double x : xs) s += x;
  e.mean = s / xs.size();
  if (xs.size() > 1) {
    double ss = 0;
    for (double x : xs) ss += (x - e.mean) * (x - e.mean);
    e.stderr_ = std::sqrt(ss / (xs.size() - 1) / xs.size());
  }
  return e;
}

struct BlockExperiment {
  std::uint32_t q = 0;
  std::string f_name;
  std::uint64_t seed = 0, trials = 0;
  bool k4_scanned = false;
  std::uint64_t k4_found = 0;              // over all instances
  std::uint64_t invariant_failures = 0;
  double survival_expected = 0;
  MeanEstimate survival;                   // per-instance surviving fraction
  double triangles_expected = 0;           // (2m/n^2)^3 |T_q|
  MeanEstimate triangles;
};

/// Independent instances with seeds derived from `seed`; each instance is
/// checked for K4s (when scan_k4 is set) and for the per-clique invariants.
inline BlockExperiment block_experiment(const TriangleFamily& fam, const ReplacementGraph& f, std::uint64_t seed,
                                        std::uint64_t trials, bool scan_k4, unsigned threads = 1) {
  const IntersectionGraph& hg = fam.graph();
  BlockExperiment r;
  r.q = hg.q();
  r.f_name = f.name;
  r.seed = seed;
  r.trials = trials;
  r.k4_scanned = scan_k4;
  const double p = survival_probability(f);
  r.survival_expected = p;
  r.triangles_expected = p * p * p * static_cast<double>(fam.total());
  std::vector<double> surv(trials), tri(trials);
  std::vector<std::uint64_t> k4(trials, 0), bad(trials, 0);
  parallel_for(trials, threads, [&](std::size_t b, std::size_t e, unsigned) {
    for (std::size_t t = b; t < e; ++t) {
      const StarGraph s = random_block(hg, f, mix64(seed + t));
      surv[t] = static_cast<double>(s.graph.edge_count()) / static_cast<double>(hg.edge_count());
      tri[t] = static_cast<double>(count_triangles(s.graph));
      if (scan_k4) k4[t] = count_k4(s.graph);
      bad[t] = !check_star_invariants(s);
    }
  });
  for (std::size_t t = 0; t < trials; ++t) {
    r.k4_found += k4[t];
    r.invariant_failures += bad[t];
  }
  r.survival = estimate(surv);
  r.triangles = estimate(tri);
  return r;
}

struct ConcentrationReport {
  std::uint32_t q = 0;
  double expectation = 0;          // 2m(q+1)/n^3
  double delta = 0;
  std::uint64_t samples = 0, trials = 0;
  MeanEstimate mean;               // per-trial mean of f over the sample set
  double in_window = 0;            // fraction of (sample, trial) values in (1 +- delta) E
  bool vacuous = false;            // expectation below 1
};

/// f(v, C0, i) = |V_i(C0) cap N*(v)|, evaluated straight from the hashed
/// assignment: w in C0 counts iff vw survives in its own clique and X_{w,C0} = i.
inline std::uint32_t concentration_value(const TriangleFamily& fam, const ReplacementGraph& f,
                                         const BlockAssignment& x, std::uint32_t v, std::uint32_t point,
                                         std::uint32_t i, std::vector<std::uint32_t>& buf) {
  const IntersectionGraph& hg = fam.graph();
  buf.resize(fam.q() + 1);
  fam.spanning_clique(v, point, buf);
  std::uint32_t count = 0;
  for (std::uint32_t w : buf)
    if (x(w, point) == i && survives(hg, f, x, v, w)) ++count;
  return count;
}

inline ConcentrationReport concentration_experiment(const TriangleFamily& fam, const ReplacementGraph& f,
                                                    std::uint64_t samples, std::uint64_t trials, double delta,
                                                    std::uint64_t seed, unsigned threads = 1) {
  if (trials < 1) throw BlockError("concentration experiment needs trials >= 1");
  const IntersectionGraph& hg = fam.graph();
  ConcentrationReport r;
  r.q = hg.q();
  r.expectation = concentration_expectation(f, r.q);
  r.delta = delta;
  r.samples = samples;
  r.trials = trials;
  r.vacuous = r.expectation < 1.0;

  struct Triple { std::uint32_t v, point, i; };
  std::vector<Triple> picks(samples);
  std::mt19937_64 rng(seed);
  for (auto& s : picks) {
    s.v = std::uniform_int_distribution<std::uint32_t>(0, static_cast<std::uint32_t>(hg.vertex_count() - 1))(rng);
    const auto& pts = fam.spanning_points(s.v);
    s.point = pts[std::uniform_int_distribution<std::size_t>(0, pts.size() - 1)(rng)];
    s.i = std::uniform_int_distribution<std::uint32_t>(0, static_cast<std::uint32_t>(f.n - 1))(rng);
  }
  std::vector<double> trial_mean(trials);
  std::vector<std::uint64_t> inside(trials, 0);
  const double lo = (1 - delta) * r.expectation, hi = (1 + delta) * r.expectation;
  parallel_for(trials, threads, [&](std::size_t b, std::size_t e, unsigned) {
    std::vector<std::uint32_t> buf;
    for (std::size_t t = b; t < e; ++t) {
      const BlockAssignment x{mix64(seed ^ mix64(t + 1)), static_cast<std::uint32_t>(f.n)};
      double sum = 0;
      for (const auto& s : picks) {
        const double val = concentration_value(fam, f, x, s.v, s.point, s.i, buf);
        sum += val;
        inside[t] += val >= lo && val <= hi;
      }
      trial_mean[t] = samples ? sum / samples : 0;
    }
  });
  r.mean = estimate(trial_mean);
  std::uint64_t in = 0;
  for (auto c : inside) in += c;
  r.in_window = (samples > 0 && trials > 0) ? static_cast<double>(in) / static_cast<double>(samples * trials) : 0;
  return r;
}

// ---------------------------------------------------------------------------
// Tail bound and the margin of the final count

struct TailBound {
  double value = 0;   // min(2, 2 exp(-exponent)) is not applied; may exceed 1
  double log_value = 0;
};

/// 2 exp(-2 delta^2 E^2 / sum c_i^2).
inline TailBound mcdiarmid_bound(double expectation, const std::vector<double>& c, double delta) {
  if (!(expectation > 0)) throw BlockError("expectation must be positive");
  double s = 0;
  for (double ci : c) {
    if (!(ci > 0)) throw BlockError("difference bounds must be positive");
    s += ci * ci;
  }
  TailBound b;
  b.log_value = std::log(2.0) - 2 * delta * delta * expectation * expectation / s;
  b.value = std::exp(b.log_value);
  return b;
}

/// The instance with 3(q+1) unit differences and E = 2m(q+1)/n^3,
/// in closed form: 2 exp(-8 delta^2 m^2 (q+1) / (3 n^6)).
inline TailBound concentration_tail_closed_form(double n, double m, double q, double delta) {
  TailBound b;
  b.log_value = std::log(2.0) - 8 * delta * delta * m * m * (q + 1) / (3 * std::pow(n, 6));
  b.value = std::exp(b.log_value);
  return b;
}

/// (1/2) n_V [ (1-alpha) m (q^3-q) ((1-delta) E)^2 - (1/3) m (q^3-q) ((1+delta) E)^2 ],
/// E = 2m(q+1)/n^3, n_V = q^4 - q^3 + q^2.
inline Rational theorem2_margin_value(std::uint64_t q, std::uint64_t n, std::uint64_t m, const Rational& alpha,
                                      const Rational& delta) {
  const Rational Q(q), N(n), M(m);
  const Rational nv = Q * Q * Q * Q - Q * Q * Q + Q * Q;
  const Rational spanning = Q * Q * Q - Q;
  const Rational e = 2 * M * (Q + 1) / (N * N * N);
  const Rational lo = (1 - delta) * e, hi = (1 + delta) * e;
  return nv / 2 * ((1 - alpha) * M * spanning * lo * lo - M * spanning * hi * hi / 3);
}

inline double theorem2_margin_real(double q, double n, double m, double alpha, double delta) {
  const double nv = q * q * q * q - q * q * q + q * q, spanning = q * q * q - q;
  const double e = 2 * m * (q + 1) / (n * n * n);
  const double lo = (1 - delta) * e, hi = (1 + delta) * e;
  return nv / 2 * ((1 - alpha) * m * spanning * lo * lo - m * spanning * hi * hi / 3);
}

/// Largest delta keeping the margin positive: (1-delta)^2 (1-alpha) = (1+delta)^2 / 3.
inline double delta_star(double alpha) {
  if (!(alpha < 2.0 / 3.0)) throw BlockError("alpha must be below 2/3");
  const double s = std::sqrt(3 * (1 - alpha));
  return (s - 1) / (s + 1);
}

/// Nearest rational to a double with bounded denominator, for exact margins.
inline Rational to_rational(double x) {
  if (!std::isfinite(x)) throw BlockError("non-finite value");
  int exp = 0;
  const double mant = std::frexp(x, &exp);
  const BigInt num = static_cast<long long>(std::ldexp(mant, 53));
  Rational r(num);
  exp -= 53;
  if (exp >= 0) r *= Rational(BigInt(1) << exp);
  else r /= Rational(BigInt(1) << -exp);
  return r;
}

inline Certificate theorem2_margin(std::uint64_t q, const ReplacementGraph& f, double delta) {
  if (!f.valid_for_block_construction())
    throw BlockError("replacement graph '" + f.name + "' has alpha = " + to_string(f.alpha) +
                     " >= 2/3; the block construction argument does not apply");
  const Rational margin = theorem2_margin_value(q, f.n, f.m, f.alpha, to_rational(delta));
  const double ds = delta_star(to_double(f.alpha));
  Certificate c;
  c.claim = "HqStar.monochromatic_margin";
  c.param("q", q).param("F", f.name).param("delta", delta);
  c.quantity("F_vertices", f.n)
      .quantity("F_edges", f.m)
      .quantity("alpha", to_string(f.alpha))
      .quantity("expectation", concentration_expectation(f, static_cast<std::uint32_t>(q)))
      .quantity("delta_star", ds)
      .quantity("margin_decimal", to_double(margin));
  c.margin = to_string(margin);
  c.outcome = margin > 0 ? Outcome::pass : Outcome::inconclusive;
  if (margin <= 0) c.note = "margin not positive at this delta";
  return c;
}

// ---------------------------------------------------------------------------
// Quantitative bound with Alon's graphs

struct AlonParameters {
  int k = 0;
  double n = 0, m = 0, maxcut_upper = 0, ratio = 0;
  bool valid = false;
};

inline AlonParameters alon_parameters(int k) {
  if (k < 1) throw BlockError("k must be >= 1");
  if (k % 3 == 0) throw BlockError("k must not be divisible by 3");
  AlonParameters a;
  a.k = k;
  const double n = std::ldexp(1.0, 3 * k), h = std::ldexp(1.0, k - 1);
  a.n = n;
  a.m = 0.5 * n * h * (h - 1);
  a.maxcut_upper = 0.25 * n * (h * (h - 1) + 9 * std::ldexp(1.0, k) + 3 * std::pow(2.0, k / 2.0) + 0.25);
  a.ratio = a.m > 0 ? a.maxcut_upper / a.m : std::numeric_limits<double>::infinity();
  a.valid = a.maxcut_upper < 2.0 / 3.0 * a.m;
  return a;
}

inline int smallest_valid_alon_k(int limit = 40) {
  for (int k = 1; k <= limit; ++k)
    if (k % 3 != 0 && alon_parameters(k).valid) return k;
  return 0;
}

struct QuantitativeBound {
  double delta = 0;
  bool exact_count = false;
  double log2_q_threshold = 0;   // real solution of the positivity condition
  double log2_q = 0;             // least prime power at or above it, as log2
  std::uint64_t q_exact = 0;     // filled when that prime power fits in 64 bits and was scanned
  double log2_f_bound = 0;       // log2(q^4 - q^3 + q^2)
};

/// Least q making the union bound succeed. The default failure term is
/// 2 exp(-(8 delta^2 m^2 / 3n^6) q + 7 ln(nq)) (the count nq^7); with
/// exact_count it is n_V (q^3-q) n * 2 exp(-(8 delta^2 m^2 / 3n^6)(q+1)).
inline QuantitativeBound quantitative_bound(double n, double m, double alpha, double delta, bool exact_count = false) {
  if (!(alpha < 2.0 / 3.0)) throw BlockError("alpha must be below 2/3");
  if (!(delta > 0) || delta > delta_star(alpha) * (1 + 1e-12)) throw BlockError("delta must lie in (0, delta*]");
  const double a = 8 * delta * delta * m * m / (3 * std::pow(n, 6));
  const double ln2 = std::log(2.0);
  // log of the failure probability bound; success iff < 0.
  auto log_fail = [&](double log2q) {
    const double lnq = log2q * ln2;
    const double q = std::exp2(log2q);
    if (!exact_count) return ln2 - a * q + 7 * (std::log(n) + lnq);
    // ln(q^4 - q^3 + q^2) + ln(q^3 - q), stable for large q
    const double lq = std::log1p(-1 / q + 1 / (q * q)) + 4 * lnq + std::log1p(-1 / (q * q)) + 3 * lnq;
    return ln2 - a * (q + 1) + lq + std::log(n);
  };
  QuantitativeBound r;
  r.delta = delta;
  r.exact_count = exact_count;
  // log_fail is decreasing once a*q dominates; bracket from above, then bisect.
  double hi = 1;
  while (log_fail(hi) >= 0) {
    hi *= 2;
    if (hi > 4096) throw BlockError("no q below 2^4096 satisfies the bound");
  }
  double lo = 1;
  if (log_fail(lo) < 0) {
    lo = hi = 1;
  } else {
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      (log_fail(mid) < 0 ? hi : lo) = mid;
    }
  }
  r.log2_q_threshold = hi;
  if (hi <= 40) {
    std::uint64_t q = std::max<std::uint64_t>(2, static_cast<std::uint64_t>(std::floor(std::exp2(hi))) - 1);
    while (!is_prime_power(q) || log_fail(std::log2(static_cast<double>(q))) >= 0) ++q;
    r.q_exact = q;
    r.log2_q = std::log2(static_cast<double>(q));
  } else {
    r.log2_q = std::ceil(hi);  // a power of two
  }
  const double lq = r.log2_q;
  r.log2_f_bound = 4 * lq + std::log2(1 - std::exp2(-lq) + std::exp2(-2 * lq));
  return r;
}

}  // namespace hq
