// hqtool: build H_q, certify its properties, simulate the random block
// construction, search for good colorings, and check user colorings.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "hq/block_construction.hpp"
#include "hq/certify.hpp"
#include "hq/coloring.hpp"
#include "hq/search.hpp"
#include "hq/triangles.hpp"
#include "hq/version.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;
using namespace hq;

namespace {

constexpr int kExitError = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  std::uint32_t q = 0;
  std::string f = "edge";
  std::uint64_t seed = 1;
  std::uint64_t trials = 100;
  std::string delta = "auto";
  int alon_k = 0;
  std::string steps = "1e6";
  std::uint64_t restarts = 8;
  std::uint64_t samples = 20000;
  unsigned threads = 0;
  std::string out;
  std::string coloring;
  bool formula_only = false;
  bool exhaustive_k4 = false;

  ordered_json to_json() const {
    ordered_json j;
    j["command"] = command;
    j["q"] = q;
    j["F"] = f;
    j["seed"] = seed;
    j["trials"] = trials;
    j["delta"] = delta;
    j["alon_k"] = alon_k;
    j["steps"] = steps;
    j["restarts"] = restarts;
    j["samples"] = samples;
    j["threads"] = threads;
    j["out"] = out;
    j["coloring"] = coloring;
    j["formula_only"] = formula_only;
    j["exhaustive_k4"] = exhaustive_k4;
    return j;
  }
};

int exit_code(Outcome o) {
  switch (o) {
    case Outcome::pass: return 0;
    case Outcome::fail: return 1;
    case Outcome::inconclusive: return 2;
  }
  return 1;
}

std::uint32_t checked_q(std::uint32_t q, bool exhaustive = true) {
  if (!is_prime_power(q)) throw UsageError("q must be a prime power");
  if (exhaustive && q > 9) throw UsageError("q must be at most 9 for exhaustive commands (use --formula-only)");
  return q;
}

std::uint64_t parse_count(const std::string& s, const char* what) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || !(v >= 0) || v != std::floor(v) || v > 1e15)
    throw UsageError(std::string(what) + " must be a non-negative integer (e.g. 1000000 or 1e6)");
  return static_cast<std::uint64_t>(v);
}

double parse_delta(const std::string& s) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || !(v >= 0)) throw UsageError("--delta must be a non-negative number or 'auto'");
  return v;
}

fs::path output_dir(const RunConfig& cfg) {
  fs::path dir = cfg.out;
  fs::create_directories(dir);
  return dir;
}

ordered_json bundle(const RunConfig& cfg, std::vector<Certificate>& certs, Outcome overall) {
  ordered_json j;
  j["run_config"] = cfg.to_json();
  j["version"] = kToolkitVersion;
  j["outcome"] = to_string(overall);
  j["certificates"] = ordered_json::array();
  for (auto& c : certs) j["certificates"].push_back(to_json(c));
  return j;
}

void write_bundle(const RunConfig& cfg, const std::string& stem, std::vector<Certificate>& certs, Outcome overall,
                  const ordered_json& extra = {}) {
  const fs::path dir = output_dir(cfg);
  ordered_json j = bundle(cfg, certs, overall);
  if (!extra.is_null())
    for (auto it = extra.begin(); it != extra.end(); ++it) j[it.key()] = it.value();
  std::ofstream(dir / (stem + ".json")) << j.dump(2) << '\n';
  std::ofstream txt(dir / (stem + ".txt"));
  txt << "# " << cfg.to_json().dump() << '\n';
  for (const auto& c : certs) {
    write_text(txt, c);
    txt << '\n';
  }
  txt << "overall: " << to_string(overall) << '\n';
}

void print_summary(const std::vector<Certificate>& certs, Outcome overall) {
  for (const auto& c : certs)
    std::cout << to_string(c.outcome) << "  " << c.claim << (c.margin.empty() ? "" : "  margin=" + c.margin)
              << (c.note.empty() ? "" : "  (" + c.note + ")") << '\n';
  std::cout << "overall: " << to_string(overall) << '\n';
}

Certificate stamped(Certificate c) {
  c.stamp();
  return c;
}

// ---------------------------------------------------------------------------

int cmd_build(RunConfig& cfg) {
  const std::uint32_t q = checked_q(cfg.q);
  UnitalGeometry geo(q);
  IntersectionGraph hg(geo.incidence());
  const fs::path dir = output_dir(cfg);
  const std::string stem = "hq_q" + std::to_string(q);
  {
    std::ofstream os(dir / (stem + "_incidence.txt"));
    write_incidence(os, geo.incidence());
  }
  {
    std::ofstream os(dir / (stem + ".edges"));
    write_edge_list(os, hg.graph());
  }
  std::ofstream(dir / (stem + ".g6")) << to_graph6(hg.graph()) << '\n';
  std::vector<Certificate> certs{stamped(srg_certificate(verify_srg(hg, cfg.threads)))};
  const Outcome overall = combine(certs);
  write_bundle(cfg, stem + "_srg", certs, overall);
  std::cout << "H_" << q << ": " << hg.vertex_count() << " vertices, " << hg.edge_count() << " edges, "
            << hg.cliques().size() << " maximal cliques\n";
  print_summary(certs, overall);
  std::cout << "artifacts written to " << dir.string() << '\n';
  return exit_code(overall);
}

int cmd_certify(RunConfig& cfg) {
  const std::uint32_t q = checked_q(cfg.q, !cfg.formula_only);
  std::vector<Certificate> certs;
  auto add = [&](Certificate c) {
    c.stamp();
    certs.push_back(std::move(c));
    const Certificate& last = certs.back();
    if (last.outcome == Outcome::fail) {
      std::cerr << "check failed: " << last.claim;
      if (!last.witness.empty()) {
        std::cerr << ", witness:";
        for (auto w : last.witness) std::cerr << ' ' << w;
      }
      std::cerr << '\n';
      return false;
    }
    return true;
  };
  const std::string stem = "certify_q" + std::to_string(q);
  auto finish = [&] {
    const Outcome overall = combine(certs);
    write_bundle(cfg, stem, certs, overall);
    print_summary(certs, overall);
    return exit_code(overall);
  };
  if (!cfg.formula_only) {
    UnitalGeometry geo(q);
    IntersectionGraph hg(geo.incidence());
    SrgReport srg = verify_srg(hg, cfg.threads);
    const bool exhaustive = q <= 5 || cfg.exhaustive_k4;
    const K4Mode mode = exhaustive ? K4Mode::full() : K4Mode::sampled(cfg.seed, cfg.samples);
    Certificate k4 = verify_k4_structure(hg, mode, cfg.threads);
    srg.k4_structure = k4.passed();
    if (!add(srg_certificate(srg)) || !add(k4)) return finish();
    std::optional<TriangleFamily> fam;
    Certificate fc;
    fc.claim = "Tq.family";
    fc.param("q", q).param("brute_force_oracle", q <= 4);
    try {
      fam.emplace(build_family(hg, q <= 4));
      fc.quantity("family_size", fam->total()).quantity("per_vertex", fam->triangles_at(0));
      fc.outcome = Outcome::pass;
    } catch (const TriangleError& e) {
      fc.note = e.what();
      fc.outcome = Outcome::fail;
    }
    if (!add(fc)) return finish();
    if (!add(verify_nbhd_decomposition(*fam, 0))) return finish();
    if (!add(verify_no_k4_in_family(*fam, mode))) return finish();
  }
  add(theorem1_certificate(q));
  return finish();
}

int cmd_simulate(RunConfig& cfg) {
  std::vector<Certificate> certs;
  if (cfg.alon_k) {
    const AlonParameters a = alon_parameters(cfg.alon_k);
    Certificate c;
    c.claim = "alon.quantitative_bound";
    c.param("k", cfg.alon_k).param("delta", cfg.delta);
    c.quantity("n", a.n).quantity("m", a.m).quantity("maxcut_upper", a.maxcut_upper).quantity("alpha_upper", a.ratio)
        .quantity("valid", a.valid).quantity("smallest_valid_k", smallest_valid_alon_k());
    if (!a.valid) {
      c.outcome = Outcome::inconclusive;
      c.note = "maxcut bound is not below 2/3 of the edges for this k";
    } else {
      const double ds = delta_star(a.ratio);
      const double delta = cfg.delta == "auto" ? ds : parse_delta(cfg.delta);
      const QuantitativeBound union_nq7 = quantitative_bound(a.n, a.m, a.ratio, delta, false);
      const QuantitativeBound exact = quantitative_bound(a.n, a.m, a.ratio, delta, true);
      c.quantity("delta_star", ds)
          .quantity("delta_used", delta)
          .quantity("log2_q_threshold", union_nq7.log2_q_threshold)
          .quantity("log2_q", union_nq7.log2_q)
          .quantity("log2_f_bound", union_nq7.log2_f_bound)
          .quantity("exact_count_log2_q_threshold", exact.log2_q_threshold)
          .quantity("exact_count_log2_q", exact.log2_q)
          .quantity("exact_count_log2_f_bound", exact.log2_f_bound);
      c.margin = format_real(union_nq7.log2_q);
      c.outcome = Outcome::pass;
    }
    certs.push_back(stamped(c));
    const Outcome overall = combine(certs);
    write_bundle(cfg, "simulate_alon_k" + std::to_string(cfg.alon_k), certs, overall);
    print_summary(certs, overall);
    for (const auto& [k, v] : certs[0].quantities) std::cout << "  " << k << " = " << v << '\n';
    return exit_code(overall);
  }

  const std::uint32_t q = checked_q(cfg.q);
  const ReplacementGraph f = replacement_graph(cfg.f);
  UnitalGeometry geo(q);
  IntersectionGraph hg(geo.incidence());
  const TriangleFamily fam(hg);

  const BlockExperiment b = block_experiment(fam, f, cfg.seed, cfg.trials, true, cfg.threads);
  Certificate bc;
  bc.claim = "HqStar.k4_free";
  bc.param("q", q).param("F", f.name).param("seed", cfg.seed).param("trials", cfg.trials);
  bc.quantity("F_vertices", f.n).quantity("F_edges", f.m).quantity("alpha", to_string(f.alpha))
      .quantity("k4_found", b.k4_found)
      .quantity("invariant_failures", b.invariant_failures)
      .quantity("survival_expected", b.survival_expected)
      .quantity("survival_mean", b.survival.mean)
      .quantity("survival_stderr", b.survival.stderr_)
      .quantity("triangles_expected", b.triangles_expected)
      .quantity("triangles_mean", b.triangles.mean)
      .quantity("triangles_stderr", b.triangles.stderr_);
  bc.margin = std::to_string(b.k4_found);
  bc.outcome = b.k4_found == 0 && b.invariant_failures == 0 ? Outcome::pass : Outcome::fail;
  certs.push_back(stamped(bc));

  const double conc_delta = cfg.delta == "auto" ? 0.5 : parse_delta(cfg.delta);
  const ConcentrationReport cr =
      concentration_experiment(fam, f, cfg.samples, std::max<std::uint64_t>(cfg.trials, 2), conc_delta, cfg.seed,
                               cfg.threads);
  Certificate cc;
  cc.claim = "HqStar.concentration";
  cc.param("q", q).param("F", f.name).param("delta", conc_delta).param("samples", cfg.samples);
  cc.quantity("expectation", cr.expectation)
      .quantity("mean", cr.mean.mean)
      .quantity("stderr", cr.mean.stderr_)
      .quantity("z", cr.mean.z(cr.expectation))
      .quantity("in_window_fraction", cr.in_window)
      .quantity("vacuous", cr.vacuous);
  cc.outcome = cr.mean.within(cr.expectation, 3) ? Outcome::pass : Outcome::fail;
  if (cr.vacuous) cc.note = "expectation below 1; concentration cannot show at this scale";
  certs.push_back(stamped(cc));

  if (f.valid_for_block_construction()) {
    const double delta = cfg.delta == "auto" ? delta_star(to_double(f.alpha)) * 0.5 : parse_delta(cfg.delta);
    certs.push_back(stamped(theorem2_margin(q, f, delta)));
  } else {
    Certificate mc;
    mc.claim = "HqStar.monochromatic_margin";
    mc.param("q", q).param("F", f.name).param("delta", cfg.delta);
    mc.quantity("alpha", to_string(f.alpha));
    mc.outcome = Outcome::inconclusive;
    mc.note = "rejected: alpha = " + to_string(f.alpha) + " >= 2/3, so the counting argument does not apply";
    certs.push_back(stamped(mc));
  }
  const Outcome overall = combine(certs);
  write_bundle(cfg, "simulate_q" + std::to_string(q) + "_" + fs::path(f.name).stem().string(), certs, overall);
  print_summary(certs, overall);
  return exit_code(overall);
}

int cmd_search(RunConfig& cfg) {
  const std::uint32_t q = checked_q(cfg.q);
  const std::uint64_t steps = parse_count(cfg.steps, "--steps");
  UnitalGeometry geo(q);
  IntersectionGraph hg(geo.incidence());
  const TriangleFamily fam(hg);
  const Schedule sch = Schedule::geometric(steps);
  const SearchResult r = search(fam, sch, cfg.restarts, cfg.seed, cfg.threads);
  const RandomColoringStats rs = random_coloring_stats(fam, std::max<std::uint64_t>(cfg.trials, 2), cfg.seed, cfg.threads);

  const fs::path dir = output_dir(cfg);
  const std::string stem = "search_q" + std::to_string(q);
  {
    std::ofstream os(dir / (stem + "_best.coloring"));
    write_coloring(os, r.best_coloring, q, graph_checksum(hg.graph()));
  }
  Certificate c;
  c.claim = "search.best_coloring";
  c.param("q", q).param("seed", cfg.seed).param("steps", steps).param("restarts", cfg.restarts)
      .param("initial_temperature", sch.initial_temperature).param("cooling_rate", sch.cooling_rate);
  c.quantity("family_size", fam.total())
      .quantity("best_objective", r.best_objective)
      .quantity("best_fraction", static_cast<double>(r.best_objective) / static_cast<double>(fam.total()))
      .quantity("best_restart", r.best_restart)
      .quantity("lower_bound", to_string(r.lower_bound))
      .quantity("random_trials", rs.trials)
      .quantity("random_fraction_mean", rs.fraction.mean)
      .quantity("random_fraction_stderr", rs.fraction.stderr_);
  c.margin = to_string(Rational(BigInt(r.best_objective)) - r.lower_bound);
  c.outcome = Outcome::pass;
  if (r.lower_bound <= 0) c.note = "exploratory: no positive certified bound at this q";
  std::vector<Certificate> certs{stamped(c)};
  ordered_json extra;
  extra["restart_objectives"] = r.restart_objectives;
  extra["restart_seeds"] = r.restart_seeds;
  extra["best_coloring_file"] = (dir / (stem + "_best.coloring")).string();
  write_bundle(cfg, stem, certs, Outcome::pass, extra);
  print_summary(certs, Outcome::pass);
  std::cout << "best objective " << r.best_objective << " of " << fam.total() << " (restart " << r.best_restart
            << "), random mean fraction " << rs.fraction.mean << " +- " << rs.fraction.stderr_ << '\n';
  return 0;
}

int cmd_check_coloring(RunConfig& cfg) {
  const std::uint32_t q = checked_q(cfg.q);
  UnitalGeometry geo(q);
  IntersectionGraph hg(geo.incidence());
  const TriangleFamily fam(hg);
  std::ifstream in(cfg.coloring);
  if (!in) throw UsageError("cannot read coloring file '" + cfg.coloring + "'");
  const EdgeColoring delta = read_coloring_for(in, hg.graph(), q);
  std::vector<Certificate> certs{stamped(adversarial_color_check(fam, delta, cfg.threads))};
  const Outcome overall = combine(certs);
  write_bundle(cfg, "check_coloring_q" + std::to_string(q), certs, overall);
  print_summary(certs, overall);
  std::cout << "monochromatic family triangles: " << certs[0].get("monochromatic") << '\n';
  return exit_code(overall);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quasi-Folkman toolkit for the Hermitian unital intersection graphs H_q"};
  app.set_version_flag("--version", std::string(kToolkitVersion));
  app.require_subcommand(1);
  RunConfig cfg;
  const char* env_out = std::getenv("HQ_OUTPUT_DIR");
  cfg.out = env_out && *env_out ? env_out : "hq_out";
  app.add_option("--threads", cfg.threads, "worker threads (0 = all cores)");
  app.add_option("--out", cfg.out, "output directory (default $HQ_OUTPUT_DIR or ./hq_out)");

  auto* build = app.add_subcommand("build", "build H_q and write incidence, edge list, graph6 and SRG report");
  build->add_option("--q", cfg.q, "prime power q <= 9")->required();

  auto* certify = app.add_subcommand("certify", "run all structural checks and the monochromatic-triangle certificate");
  certify->add_option("--q", cfg.q, "prime power q")->required();
  certify->add_flag("--formula-only", cfg.formula_only, "only the closed-form certificate (any prime power q)");
  certify->add_flag("--exhaustive-k4", cfg.exhaustive_k4, "exhaustive K4 scan even for q > 5");
  certify->add_option("--samples", cfg.samples, "sampled K4 scan size for q > 5");
  certify->add_option("--seed", cfg.seed, "seed for sampled scans");

  auto* simulate = app.add_subcommand("simulate", "random block construction experiments");
  simulate->add_option("--q", cfg.q, "prime power q <= 9");
  simulate->add_option("--F", cfg.f, "replacement graph: edge, c5, path4, petersen, or an edge-list file");
  simulate->add_option("--seed", cfg.seed);
  simulate->add_option("--trials", cfg.trials, "independent instances");
  simulate->add_option("--samples", cfg.samples, "(v, C, i) samples for the concentration experiment");
  simulate->add_option("--delta", cfg.delta, "deviation parameter, or 'auto'");
  simulate->add_option("--alon-k", cfg.alon_k, "evaluate the quantitative bound for Alon's graph G_k instead");

  auto* srch = app.add_subcommand("search", "simulated annealing for colorings with few monochromatic family triangles");
  srch->add_option("--q", cfg.q, "prime power q <= 9")->required();
  srch->add_option("--steps", cfg.steps, "annealing steps per restart (e.g. 1e6)");
  srch->add_option("--restarts", cfg.restarts);
  srch->add_option("--seed", cfg.seed);
  srch->add_option("--trials", cfg.trials, "uniform random colorings for the baseline fraction");

  auto* check = app.add_subcommand("check-coloring", "count monochromatic family triangles of a coloring file");
  check->add_option("--q", cfg.q, "prime power q <= 9")->required();
  check->add_option("coloring", cfg.coloring, "coloring file")->required();

  CLI11_PARSE(app, argc, argv);
  try {
    if (*build) return cfg.command = "build", cmd_build(cfg);
    if (*certify) return cfg.command = "certify", cmd_certify(cfg);
    if (*simulate) {
      cfg.command = "simulate";
      if (!cfg.alon_k && cfg.q == 0) throw UsageError("simulate needs --q or --alon-k");
      return cmd_simulate(cfg);
    }
    if (*srch) return cfg.command = "search", cmd_search(cfg);
    if (*check) return cfg.command = "check-coloring", cmd_check_coloring(cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
