// Monochromatic-triangle guarantee for T_q and the certificates built on it.
//
// Each spanning clique K_{q+1} of G_v contributes at least clique_min_mono(q)
// to R(v)+B(v), so every coloring has at least
//   L(q) = (n (q^3 - q) clique_min_mono(q) - |T_q|) / 2
// monochromatic members of T_q.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "hq/certificate.hpp"
#include "hq/field.hpp"
#include "hq/goodman.hpp"

namespace hq {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& r) { return r.str(); }
inline double to_double(const Rational& r) { return r.convert_to<double>(); }

struct CliqueMinMono {
  std::uint64_t value = 0;   // min over a+b = q+1 of C(a,2)+C(b,2)
  std::uint64_t a = 0, b = 0;
  Rational real_bound;       // (q+1)^2/4 - (q+1)/2, the split at (q+1)/2
};

inline CliqueMinMono clique_min_mono(std::uint64_t q) {
  if (q < 2) throw std::invalid_argument("clique_min_mono needs q >= 2");
  CliqueMinMono c;
  c.a = (q + 2) / 2;
  c.b = (q + 1) / 2;
  c.value = binom2(c.a) + binom2(c.b);
  const Rational k = q + 1;
  c.real_bound = k * k / 4 - k / 2;
  return c;
}

struct Theorem1Bound {
  std::uint64_t q = 0;
  BigInt n, spanning_per_vertex, family_size;
  CliqueMinMono clique;
  Rational lower_bound;       // L(q) with the integer clique minimum
  Rational lower_bound_real;  // same with the real-valued split
  Rational fraction;          // L(q) / |T_q|
  Rational per_clique_lhs;    // (q+1)^2/4 - (q+1)/2
  Rational per_clique_rhs;    // (q+1) q / 6
};

inline Theorem1Bound theorem1_bound(std::uint64_t q) {
  if (!is_prime_power(q)) throw FieldError("q must be a prime power");
  Theorem1Bound t;
  t.q = q;
  const BigInt Q = q;
  t.n = Q * Q * Q * Q - Q * Q * Q + Q * Q;
  t.spanning_per_vertex = Q * Q * Q - Q;
  t.family_size = t.n * t.spanning_per_vertex * (Q + 1) * Q / 6;
  t.clique = clique_min_mono(q);
  const Rational n = t.n, spv = t.spanning_per_vertex, fam = t.family_size;
  t.lower_bound = (n * spv * Rational(t.clique.value) - fam) / 2;
  t.lower_bound_real = (n * spv * t.clique.real_bound - fam) / 2;
  t.fraction = t.lower_bound / fam;
  t.per_clique_lhs = t.clique.real_bound;
  t.per_clique_rhs = Rational(Q + 1) * Rational(Q) / 6;
  return t;
}

/// Passes iff L(q) > 0; a zero or negative margin leaves the claim undecided.
inline Certificate theorem1_certificate(std::uint64_t q) {
  const Theorem1Bound t = theorem1_bound(q);
  Certificate c;
  c.claim = "Hq.quasi_folkman";
  c.param("q", q);
  c.quantity("n", t.n.str())
      .quantity("spanning_cliques_per_vertex", t.spanning_per_vertex.str())
      .quantity("family_size", t.family_size.str())
      .quantity("clique_min_mono", t.clique.value)
      .quantity("clique_split", std::to_string(t.clique.a) + "+" + std::to_string(t.clique.b))
      .quantity("clique_real_bound", to_string(t.clique.real_bound))
      .quantity("lower_bound", to_string(t.lower_bound))
      .quantity("lower_bound_real", to_string(t.lower_bound_real))
      .quantity("fraction", to_string(t.fraction))
      .quantity("fraction_decimal", to_double(t.fraction))
      .quantity("per_clique_lhs", to_string(t.per_clique_lhs))
      .quantity("per_clique_rhs", to_string(t.per_clique_rhs))
      .quantity("per_clique_comparison", t.per_clique_lhs > t.per_clique_rhs    ? ">"
                                         : t.per_clique_lhs == t.per_clique_rhs ? "="
                                                                                : "<");
  c.margin = to_string(t.lower_bound);
  if (t.lower_bound > 0) {
    c.outcome = Outcome::pass;
  } else {
    c.outcome = Outcome::inconclusive;
    c.note = "lower bound is not positive; the counting argument does not decide this q";
  }
  return c;
}

/// Exact monochromatic count of T_q under a given coloring, checked against L(q).
inline Certificate adversarial_color_check(const TriangleFamily& fam, const EdgeColoring& delta,
                                           unsigned threads = 1) {
  const std::uint32_t q = fam.q();
  const GoodmanTally tally = goodman_count(fam, delta, threads, q <= 4);
  const Theorem1Bound t = theorem1_bound(q);
  Certificate c;
  c.claim = "Tq.coloring_meets_bound";
  c.param("q", q);
  c.quantity("family_size", tally.family_size)
      .quantity("sum_red_blue", tally.sum)
      .quantity("monochromatic", tally.monochromatic)
      .quantity("lower_bound", to_string(t.lower_bound))
      .quantity("blue_edges", delta.blue_count());
  const Rational margin = Rational(BigInt(tally.monochromatic)) - t.lower_bound;
  c.margin = to_string(margin);
  c.outcome = margin >= 0 ? Outcome::pass : Outcome::fail;
  if (c.outcome == Outcome::fail) c.note = "coloring beats the proven lower bound; this indicates a counting bug";
  return c;
}

}  // namespace hq
