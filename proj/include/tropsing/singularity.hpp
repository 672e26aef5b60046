#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <string_view>
#include <variant>

#include "tropsing/linalg.hpp"
#include "tropsing/tropical_curve.hpp"

namespace tropsing {

enum class SingularityKind {
  TypeA3,
  TypeA4,
  TypeB1,
  TypeB2Interior,
  TypeB2Boundary,
  FatEnd,
  NonMaximal,
  NotSingularAtOrigin,
  NonGeneric,
};

std::string_view to_string(SingularityKind kind);

inline constexpr std::size_t kNoVertex = std::numeric_limits<std::size_t>::max();

/// Vertex of the curve at the point, with its dual cell.
struct VertexWitness {
  std::size_t vertex = 0;
  std::size_t cell = 0;
  std::int64_t multiplicity = 0;
  std::size_t valence = 0;
  Circuit circuit;

  friend bool operator==(const VertexWitness&, const VertexWitness&) = default;
};

/// Weight-two edge (or ray) through the point.
///
/// `first` and `second` are the end vertices, `l1` and `l2` their lattice
/// distances to the point. For TypeB2 `first` is the 4-valent vertex; a ray
/// has no second vertex. mu is the height of the circuit. For TypeB1 lambda
/// and nu are the apex heights of the two triangles, shifted so lambda = 0,
/// and l1 = mu - lambda, l2 = mu - nu. For TypeB2Interior lambda is the height
/// of the parallel pair and nu that of the triangle apex, shifted so nu = 0,
/// and l1 = mu - lambda, l2 = mu. For TypeB2Boundary lambda = 0 is the pair
/// and l1 = mu.
struct EdgeWitness {
  bool on_ray = false;
  std::size_t edge = 0;  // index into bounded_edges or rays
  Circuit circuit;
  std::size_t first = kNoVertex;
  std::size_t second = kNoVertex;
  Rational l1;
  Rational l2;
  Rational lambda;
  Rational mu;
  Rational nu;

  friend bool operator==(const EdgeWitness&, const EdgeWitness&) = default;
};

/// Downward ray of weight at least two on {x = 0}.
struct FatEndWitness {
  std::size_t ray = 0;
  std::size_t vertex = 0;
  std::int64_t weight = 0;
  std::size_t valence = 0;
  std::int64_t multiplicity = 0;
  bool maximal = false;  // 4-valent vertex and no white points

  friend bool operator==(const FatEndWitness&, const FatEndWitness&) = default;
};

using SingularityWitness = std::variant<std::monostate, VertexWitness, EdgeWitness, FatEndWitness>;

struct SingularityReport {
  SingularityKind kind = SingularityKind::NotSingularAtOrigin;
  SingularityWitness witness;
  TropicalCurve curve;  // of the heights shifted to put the point at the origin

  friend bool operator==(const SingularityReport&, const SingularityReport&) = default;
};

/// Heights whose curve is the curve of u translated by -point.
HeightVector shift_to_origin(const PointConfiguration& config, const HeightVector& u, const Point2& point);

/// Classifies the curve of u at `point` (the origin by default).
SingularityReport classify_singularity(const PointConfiguration& config, const HeightVector& u,
                                       const std::optional<Point2>& point = std::nullopt);

/// Conditions for a singularity at (1, 0): rows (1 | 0 | 0), (i | 0 | 0),
/// (0 | 1 | 0) over the blocks j = 0, j = 1, j > 1.
Matrix coefficient_matrix_non_torus(const PointConfiguration& config);

SingularityReport classify_non_torus(const PointConfiguration& config, const HeightVector& u);

}  // namespace tropsing
