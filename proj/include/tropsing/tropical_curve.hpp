#pragma once

#include <cstdint>
#include <vector>

#include "tropsing/secondary_fan.hpp"

namespace tropsing {

struct CurveVertex {
  Point2 position;
  std::size_t cell = 0;  // index into the dual subdivision

  friend bool operator==(const CurveVertex&, const CurveVertex&) = default;
};

struct CurveEdge {
  std::size_t from = 0;  // vertex indices; the edge points along `direction` from `from` to `to`
  std::size_t to = 0;
  std::int64_t dx = 0, dy = 0;  // primitive direction
  std::int64_t weight = 1;
  std::size_t dual_a = 0, dual_b = 0;  // endpoints of the dual subdivision edge

  friend bool operator==(const CurveEdge&, const CurveEdge&) = default;
};

struct CurveRay {
  std::size_t vertex = 0;
  std::int64_t dx = 0, dy = 0;
  std::int64_t weight = 1;
  std::size_t dual_a = 0, dual_b = 0;

  friend bool operator==(const CurveRay&, const CurveRay&) = default;
};

struct TropicalCurve {
  std::vector<CurveVertex> vertices;
  std::vector<CurveEdge> bounded_edges;
  std::vector<CurveRay> rays;
  MarkedSubdivision subdivision;

  friend bool operator==(const TropicalCurve&, const TropicalCurve&) = default;
};

/// The curve of the max-plus polynomial max(u_ij + i x + j y).
TropicalCurve dual_curve(const PointConfiguration& config, const HeightVector& u);

/// Value of the max-plus polynomial and how many terms attain it.
struct TropicalValue {
  Rational value;
  std::size_t attained = 0;
};
TropicalValue evaluate(const PointConfiguration& config, const HeightVector& u, const Point2& p);

/// Normalized area of the dual cell of vertex v.
std::int64_t vertex_multiplicity(const PointConfiguration& config, const TropicalCurve& curve,
                                 std::size_t v);

/// Number of edges and rays at vertex v.
std::size_t valence(const TropicalCurve& curve, std::size_t v);

/// Sum of weight * direction over the edges leaving v.
std::pair<std::int64_t, std::int64_t> balance(const TropicalCurve& curve, std::size_t v);

using SubdivisionType = std::vector<std::vector<std::size_t>>;  // polygons only

struct CurveType {
  SubdivisionType cells;
  std::size_t b = 0;  // bounded edges
  std::size_t g = 0;  // cycle rank of the bounded graph

  friend bool operator==(const CurveType&, const CurveType&) = default;
};

CurveType curve_type(const MarkedSubdivision& ms);

/// Dimension of the family of curves of the given type: positions of one
/// vertex plus positive edge lengths subject to closing every cycle.
std::size_t type_dimension(const PointConfiguration& config, const CurveType& t);

}  // namespace tropsing
