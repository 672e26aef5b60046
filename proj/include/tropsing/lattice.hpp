#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "tropsing/rational.hpp"

namespace tropsing {

/// Exponent (i, j) of the monomial x^i y^j.
struct LatticePoint {
  std::int64_t i = 0;
  std::int64_t j = 0;

  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;

  /// Canonical order: by j, then by i.
  friend std::strong_ordering operator<=>(const LatticePoint& a, const LatticePoint& b) {
    if (auto c = a.j <=> b.j; c != 0) return c;
    return a.i <=> b.i;
  }
};

using IndexSet = std::vector<std::size_t>;  // sorted, duplicate free

/// Twice the signed area of the triangle (a, b, c); positive when counter-clockwise.
std::int64_t orientation(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c);

/// Number of lattice points on the segment minus one.
std::int64_t lattice_length(const LatticePoint& a, const LatticePoint& b);

/// Twice the Euclidean area of a polygon given by its vertex cycle.
std::int64_t normalized_area(std::span<const LatticePoint> polygon);

/// Counter-clockwise hull vertices (no collinear boundary points), starting at
/// the canonically smallest vertex. Fewer than three vertices for degenerate input.
std::vector<LatticePoint> convex_hull(std::vector<LatticePoint> pts);

/// True iff p lies in the closed convex polygon (CCW vertex cycle).
bool in_convex_polygon(std::span<const LatticePoint> polygon, const LatticePoint& p);

/// The lattice points of a planar lattice polygon, in canonical order.
///
/// The default constructor path enforces that `points` is exactly the set of
/// lattice points of its convex hull. `relaxed` skips that check for
/// sub-configurations; such configurations report `is_complete() == false`.
class PointConfiguration {
 public:
  explicit PointConfiguration(std::vector<LatticePoint> points);

  static PointConfiguration relaxed(std::vector<LatticePoint> points);

  /// All lattice points of conv(vertices).
  static PointConfiguration from_polygon(std::vector<LatticePoint> vertices);

  std::size_t size() const noexcept { return points_.size(); }
  const std::vector<LatticePoint>& points() const noexcept { return points_; }
  const LatticePoint& operator[](std::size_t k) const { return points_[k]; }

  /// CCW vertex cycle of the hull, as configuration indices.
  const std::vector<std::size_t>& polygon() const noexcept { return polygon_; }
  std::vector<LatticePoint> polygon_points() const;

  bool is_complete() const noexcept { return complete_; }

  /// Index of p, or size() when absent.
  std::size_t index_of(const LatticePoint& p) const;

  /// True iff the point lies on the boundary of the hull.
  bool on_boundary(const LatticePoint& p) const;

  /// Sum of the lattice lengths of the hull edges.
  std::int64_t lattice_perimeter() const;

  friend bool operator==(const PointConfiguration& a, const PointConfiguration& b) {
    return a.points_ == b.points_;
  }

 private:
  PointConfiguration(std::vector<LatticePoint> points, bool require_complete);

  std::vector<LatticePoint> points_;
  std::vector<std::size_t> polygon_;
  bool complete_ = true;
};

struct AffineRelationSpace {
  std::vector<RationalVector> basis;
  std::size_t dimension() const noexcept { return basis.size(); }
};

/// Affine relations sum l_k m_k = 0, sum l_k = 0 supported on `support`.
AffineRelationSpace affine_relation_space(const PointConfiguration& config, const IndexSet& support);

AffineRelationSpace affine_relation_space(const PointConfiguration& config);

enum class CircuitKind {
  A,  // triangle with an interior point
  B,  // convex quadrangle
  C,  // three collinear points
};

char to_char(CircuitKind kind);

struct Circuit {
  IndexSet indices;
  CircuitKind kind;

  friend bool operator==(const Circuit&, const Circuit&) = default;
};

/// True iff the points are affinely independent (at most three, not collinear).
bool affinely_independent(const PointConfiguration& config, const IndexSet& subset);

/// Kind of a minimal affinely dependent subset; throws InvalidArgument otherwise.
CircuitKind circuit_kind(const PointConfiguration& config, const IndexSet& subset);

/// All circuits, sorted by (size, indices).
std::vector<Circuit> circuits(const PointConfiguration& config);

/// The three rows (1, i, j) of the configuration as rationals.
RationalVector x_coordinates(const PointConfiguration& config);
RationalVector y_coordinates(const PointConfiguration& config);

}  // namespace tropsing
