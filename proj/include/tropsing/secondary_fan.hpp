#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "tropsing/lattice.hpp"

namespace tropsing {

using HeightVector = RationalVector;

struct Cell {
  std::vector<std::size_t> polygon;  // CCW vertex cycle, starts at the smallest vertex
  IndexSet marked;                   // sorted; contains the vertices

  friend bool operator==(const Cell&, const Cell&) = default;
};

struct MarkedSubdivision {
  std::vector<Cell> cells;  // sorted by marked set

  friend bool operator==(const MarkedSubdivision&, const MarkedSubdivision&) = default;
};

/// Edge of a subdivision, a < b in configuration order.
struct SubdivisionEdge {
  std::size_t a = 0;
  std::size_t b = 0;
  std::vector<std::size_t> cells;  // one cell on the boundary of the polygon, two inside

  bool interior() const noexcept { return cells.size() == 2; }
};

std::vector<SubdivisionEdge> edges(const MarkedSubdivision& ms);

/// Affine function u = gamma + alpha i + beta j carrying one upper face.
struct FacePlane {
  Rational gamma;
  Rational alpha;
  Rational beta;

  Rational operator()(const LatticePoint& p) const { return gamma + alpha * p.i + beta * p.j; }
};

FacePlane cell_plane(const PointConfiguration& config, const HeightVector& u, const Cell& cell);

MarkedSubdivision regular_subdivision(const PointConfiguration& config, const HeightVector& u);

struct ConeInfo {
  std::size_t codimension = 0;
  IndexSet white_points;
  std::size_t lt_dim = 0;
  AffineRelationSpace lt;
};

ConeInfo cone_info(const PointConfiguration& config, const MarkedSubdivision& ms);

std::pair<RationalVector, RationalVector> lineality_basis(const PointConfiguration& config);

/// u = u_wc + c_x x + c_y y + c_1 (1,...,1).
struct Decomposition {
  HeightVector u_wc;
  Rational c_x;
  Rational c_y;
  Rational c_1;
  // All off-line maximisers of u_wc lie on one line parallel to a
  // three-point circuit. The weight class reached then need not be one of
  // the pair-type classes.
  bool parallel_pair = false;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

Decomposition decompose_weightclass_lineality(const PointConfiguration& config, const HeightVector& u,
                                              const Circuit& z);

/// The circuit whose affine relation spans L_T, if the cone has codimension 1.
std::optional<Circuit> unique_circuit(const PointConfiguration& config, const MarkedSubdivision& ms);

bool is_discriminant_cone(const PointConfiguration& config, const MarkedSubdivision& ms);

/// Two triangulations differing by a modification along the circuit of `ms`
/// give the same point of the discriminant exactly when the cone is not a
/// discriminant cone.
bool delta_equivalent(const PointConfiguration& config, const MarkedSubdivision& ms);

}  // namespace tropsing
