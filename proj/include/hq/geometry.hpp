// The projective plane PG(2, q^2), the Hermitian unital X^{q+1}+Y^{q+1}+Z^{q+1} = 0
// inside it, and the split of lines into tangents and secants.

#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hq/field.hpp"

namespace hq {

class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Homogeneous triple of GF(q^2) codes.
using Triple = std::array<std::uint32_t, 3>;

/// PG(2, Q) over a field of order Q. Points and lines are normalized so the
/// first nonzero coordinate is 1; ids are positions in lexicographic order of
/// the normalized triples: (0,0,1), (0,1,z), (1,y,z).
class ProjectivePlane {
 public:
  explicit ProjectivePlane(const Field& field) : field_(&field), order_(field.order()) {}

  const Field& field() const { return *field_; }
  std::uint32_t order() const { return order_; }
  std::uint32_t size() const { return order_ * order_ + order_ + 1; }

  Triple coords(std::uint32_t id) const {
    if (id >= size()) throw GeometryError("point id out of range");
    if (id == 0) return {0, 0, 1};
    if (id <= order_) return {0, 1, id - 1};
    const std::uint32_t r = id - 1 - order_;
    return {1, r / order_, r % order_};
  }

  Triple normalize(Triple t) const {
    std::size_t lead = 0;
    while (lead < 3 && t[lead] == 0) ++lead;
    if (lead == 3) throw GeometryError("zero vector has no projective point");
    const std::uint32_t inv = field_->inv(t[lead]);
    for (auto& c : t) c = field_->mul(c, inv);
    return t;
  }

  /// Id of the point spanned by a nonzero vector.
  std::uint32_t id_of(const Triple& raw) const {
    const Triple t = normalize(raw);
    if (t[0] == 0 && t[1] == 0) return 0;
    if (t[0] == 0) return 1 + t[2];
    return 1 + order_ + t[1] * order_ + t[2];
  }

  /// Point p lies on line l (both as ids; lines use the same indexing, dually).
  bool incident(std::uint32_t point, std::uint32_t line) const { return incident(coords(point), coords(line)); }
  bool incident(const Triple& x, const Triple& l) const {
    const Field& f = *field_;
    return f.add(f.add(f.mul(l[0], x[0]), f.mul(l[1], x[1])), f.mul(l[2], x[2])) == 0;
  }

  /// The line through two distinct points (or, dually, the meet of two lines).
  std::uint32_t join(std::uint32_t a, std::uint32_t b) const {
    if (a == b) throw GeometryError("join of a point with itself");
    const Triple x = coords(a), y = coords(b);
    const Field& f = *field_;
    Triple c{f.sub(f.mul(x[1], y[2]), f.mul(x[2], y[1])),
             f.sub(f.mul(x[2], y[0]), f.mul(x[0], y[2])),
             f.sub(f.mul(x[0], y[1]), f.mul(x[1], y[0]))};
    return id_of(c);
  }

 private:
  const Field* field_;
  std::uint32_t order_;
};

/// The Hermitian unital U_q and its secant lines. Unital points are indexed
/// densely (0..q^3) in increasing plane-id order; secants likewise (0..n-1) in
/// increasing line-id order, and serve as the vertex ids of H_q.
struct UnitalIncidence {
  std::uint32_t q = 0;
  std::vector<std::uint32_t> unital_points;            // plane point ids
  std::vector<std::uint32_t> secants;                  // plane line ids
  std::vector<std::uint32_t> tangents;                 // plane line ids
  std::vector<std::vector<std::uint32_t>> secant_points;  // secant -> sorted unital indices (q+1)
  std::vector<std::vector<std::uint32_t>> point_secants;  // unital index -> sorted secants (q^2)
  std::vector<std::uint32_t> point_tangent;            // unital index -> tangent line id
  std::vector<std::uint32_t> joins;                    // (q^3+1)^2 table: secant through two unital points

  std::size_t point_count() const { return unital_points.size(); }
  std::size_t secant_count() const { return secants.size(); }

  /// Secant through two distinct unital points (dense indices).
  std::uint32_t secant_through(std::uint32_t a, std::uint32_t b) const {
    if (a == b) throw GeometryError("secant_through needs two distinct points");
    return joins[static_cast<std::size_t>(a) * unital_points.size() + b];
  }
};

/// Counts of the classical plane/unital parameters.
struct UnitalCounts {
  static std::uint64_t plane_points(std::uint64_t q) { return q * q * q * q + q * q + 1; }
  static std::uint64_t unital_points(std::uint64_t q) { return q * q * q + 1; }
  static std::uint64_t secants(std::uint64_t q) { return q * q * q * q - q * q * q + q * q; }
};

/// Classifies the lines of PG(2, q^2) against the Hermitian unital.
inline UnitalIncidence build_unital(const QuadraticExtension& fq, const ProjectivePlane& plane) {
  const Field& f = fq.ext();
  if (&plane.field() != &f) throw GeometryError("plane is not over the quadratic extension");
  const std::uint32_t q = fq.q();
  UnitalIncidence u;
  u.q = q;

  std::vector<std::uint32_t> index_of(plane.size(), UINT32_MAX);
  for (std::uint32_t id = 0; id < plane.size(); ++id) {
    const Triple x = plane.coords(id);
    const std::uint32_t form = f.add(f.add(fq.norm_code(x[0]), fq.norm_code(x[1])), fq.norm_code(x[2]));
    if (form == 0) {
      index_of[id] = static_cast<std::uint32_t>(u.unital_points.size());
      u.unital_points.push_back(id);
    }
  }
  const std::size_t np = u.unital_points.size();

  // Secants by joining pairs of unital points.
  std::vector<char> is_secant(plane.size(), 0);
  for (std::size_t a = 0; a < np; ++a)
    for (std::size_t b = a + 1; b < np; ++b) is_secant[plane.join(u.unital_points[a], u.unital_points[b])] = 1;

  // Independent classification: count unital points on every line.
  std::vector<Triple> ucoords(np);
  for (std::size_t a = 0; a < np; ++a) ucoords[a] = plane.coords(u.unital_points[a]);
  std::vector<std::uint32_t> secant_index(plane.size(), UINT32_MAX);
  for (std::uint32_t line = 0; line < plane.size(); ++line) {
    const Triple l = plane.coords(line);
    std::vector<std::uint32_t> on;
    for (std::uint32_t a = 0; a < np; ++a)
      if (plane.incident(ucoords[a], l)) on.push_back(a);
    if (on.size() == q + 1u) {
      if (!is_secant[line]) throw GeometryError("line with q+1 unital points missed by pair join");
      secant_index[line] = static_cast<std::uint32_t>(u.secants.size());
      u.secants.push_back(line);
      u.secant_points.push_back(std::move(on));
    } else if (on.size() == 1) {
      u.tangents.push_back(line);
    } else if (!on.empty()) {
      throw GeometryError("line meets the unital in " + std::to_string(on.size()) + " points");
    } else if (is_secant[line]) {
      throw GeometryError("joined line contains no unital points");
    }
  }

  u.point_secants.assign(np, {});
  for (std::uint32_t s = 0; s < u.secants.size(); ++s)
    for (std::uint32_t a : u.secant_points[s]) u.point_secants[a].push_back(s);

  u.point_tangent.assign(np, UINT32_MAX);
  for (std::uint32_t t : u.tangents) {
    const Triple l = plane.coords(t);
    for (std::uint32_t a = 0; a < np; ++a) {
      if (!plane.incident(ucoords[a], l)) continue;
      if (u.point_tangent[a] != UINT32_MAX) throw GeometryError("unital point on two tangents");
      u.point_tangent[a] = t;
    }
  }

  u.joins.assign(np * np, UINT32_MAX);
  for (std::uint32_t s = 0; s < u.secants.size(); ++s) {
    const auto& pts = u.secant_points[s];
    for (std::uint32_t a : pts)
      for (std::uint32_t b : pts)
        if (a != b) u.joins[static_cast<std::size_t>(a) * np + b] = s;
  }
  return u;
}

/// Everything needed to work with H_q: fields, plane and unital, built once.
class UnitalGeometry {
 public:
  explicit UnitalGeometry(std::uint32_t q)
      : fq_(std::make_unique<QuadraticExtension>(q)),
        plane_(std::make_unique<ProjectivePlane>(fq_->ext())),
        incidence_(build_unital(*fq_, *plane_)) {}

  std::uint32_t q() const { return fq_->q(); }
  const QuadraticExtension& fields() const { return *fq_; }
  const ProjectivePlane& plane() const { return *plane_; }
  const UnitalIncidence& incidence() const { return incidence_; }

 private:
  std::unique_ptr<QuadraticExtension> fq_;
  std::unique_ptr<ProjectivePlane> plane_;
  UnitalIncidence incidence_;
};

/// Text export: "q npoints nsecants", then one line per secant listing its
/// unital point indices.
inline void write_incidence(std::ostream& os, const UnitalIncidence& u) {
  os << u.q << ' ' << u.point_count() << ' ' << u.secant_count() << '\n';
  for (const auto& pts : u.secant_points) {
    for (std::size_t i = 0; i < pts.size(); ++i) os << (i ? " " : "") << pts[i];
    os << '\n';
  }
}

}  // namespace hq
