#include "tropsing/singularity.hpp"

#include <algorithm>

#include "tropsing/error.hpp"
#include "tropsing/matroid.hpp"

namespace tropsing {

namespace {

Rational cross(const Rational& ax, const Rational& ay, const Rational& bx, const Rational& by) {
  return ax * by - ay * bx;
}

// Origin strictly between p and q.
bool origin_inside_segment(const Point2& p, const Point2& q) {
  const Rational dx = q.x - p.x, dy = q.y - p.y;
  if (cross(dx, dy, -p.x, -p.y) != 0) return false;
  return -p.x * dx - p.y * dy > 0 && -q.x * -dx - q.y * -dy > 0;
}

// Origin on the open ray from p in direction (dx, dy).
bool origin_on_ray(const Point2& p, std::int64_t dx, std::int64_t dy) {
  if (cross(dx, dy, -p.x, -p.y) != 0) return false;
  return -p.x * dx - p.y * dy > 0;
}

// Lattice distance from the origin to p along the primitive direction (dx, dy).
Rational lattice_distance(const Point2& p, std::int64_t dx, std::int64_t dy) {
  return abs((p.x * dx + p.y * dy) / Rational(dx * dx + dy * dy));
}

// Signed lattice distance of m from the line through a and b.
std::int64_t level(const LatticePoint& a, const LatticePoint& b, const LatticePoint& m) {
  const std::int64_t g = lattice_length(a, b);
  const std::int64_t d1 = (b.i - a.i) / g, d2 = (b.j - a.j) / g;
  return d1 * (m.j - a.j) - d2 * (m.i - a.i);
}

// Point of the segment strictly between a and b (weight two edges only).
std::size_t midpoint(const PointConfiguration& config, std::size_t a, std::size_t b) {
  return config.index_of({(config[a].i + config[b].i) / 2, (config[a].j + config[b].j) / 2});
}

Circuit line_circuit(const PointConfiguration& config, std::size_t a, std::size_t b) {
  IndexSet z{a, midpoint(config, a, b), b};
  std::sort(z.begin(), z.end());
  return {z, CircuitKind::C};
}

// A vertex of the cell off the edge (a, b).
std::size_t apex(const Cell& cell, std::size_t a, std::size_t b) {
  for (std::size_t v : cell.polygon) {
    if (v != a && v != b) return v;
  }
  return cell.polygon.front();
}

bool is_triangle_on(const Cell& cell) { return cell.polygon.size() == 3 && cell.marked.size() == 4; }

// Quadrangle with the weight two edge (a, b) as one side and a parallel side
// of length one at lattice distance one.
bool is_trapezoid_on(const PointConfiguration& config, const Cell& cell, std::size_t a, std::size_t b) {
  if (cell.polygon.size() != 4 || cell.marked.size() != 5) return false;
  std::vector<std::int64_t> levels;
  for (std::size_t v : cell.polygon) {
    if (v != a && v != b) levels.push_back(level(config[a], config[b], config[v]));
  }
  return levels.size() == 2 && levels[0] == levels[1] && (levels[0] == 1 || levels[0] == -1);
}

// A weight two edge through the point whose neighbourhood fits no case.
SingularityKind unmatched(std::size_t codim) {
  return codim > 1 ? SingularityKind::NonMaximal : SingularityKind::NotSingularAtOrigin;
}

SingularityReport report(SingularityKind kind, TropicalCurve curve, SingularityWitness w = {}) {
  return {kind, std::move(w), std::move(curve)};
}

SingularityReport at_vertex(const PointConfiguration& config, TropicalCurve curve, std::size_t v,
                            std::size_t codim) {
  const Cell& cell = curve.subdivision.cells[curve.vertices[v].cell];
  VertexWitness w{v, curve.vertices[v].cell, vertex_multiplicity(config, curve, v), valence(curve, v), {}};
  if (codim > 1) return report(SingularityKind::NonMaximal, std::move(curve), w);
  if (cell.marked.size() == 4) {
    w.circuit = {cell.marked, circuit_kind(config, cell.marked)};
    if (cell.polygon.size() == 3 && w.multiplicity == 3) {
      return report(SingularityKind::TypeA3, std::move(curve), w);
    }
    if (cell.polygon.size() == 4) return report(SingularityKind::TypeA4, std::move(curve), w);
  }
  for (const auto& e : curve.bounded_edges) {
    if ((e.from == v || e.to == v) && e.weight >= 2) return report(SingularityKind::NonGeneric, std::move(curve), w);
  }
  for (const auto& r : curve.rays) {
    if (r.vertex == v && r.weight >= 2) return report(SingularityKind::NonGeneric, std::move(curve), w);
  }
  return report(SingularityKind::NotSingularAtOrigin, std::move(curve), w);
}

SingularityReport on_edge(const PointConfiguration& config, const HeightVector& u, TropicalCurve curve,
                          std::size_t index, std::size_t codim) {
  const CurveEdge e = curve.bounded_edges[index];
  if (e.weight != 2) {
    const auto kind = e.weight > 2 ? SingularityKind::NonMaximal : SingularityKind::NotSingularAtOrigin;
    return report(kind, std::move(curve));
  }
  EdgeWitness w;
  w.edge = index;
  w.circuit = line_circuit(config, e.dual_a, e.dual_b);
  const Rational mu = u[e.dual_a];
  const auto& cells = curve.subdivision.cells;
  const Cell& c0 = cells[curve.vertices[e.from].cell];
  const Cell& c1 = cells[curve.vertices[e.to].cell];
  const Rational d0 = lattice_distance(curve.vertices[e.from].position, e.dx, e.dy);
  const Rational d1 = lattice_distance(curve.vertices[e.to].position, e.dx, e.dy);

  if (is_triangle_on(c0) && is_triangle_on(c1)) {
    if (codim > 1) return report(SingularityKind::NonMaximal, std::move(curve), w);
    const Rational lambda0 = u[apex(c0, e.dual_a, e.dual_b)];
    const Rational lambda1 = u[apex(c1, e.dual_a, e.dual_b)];
    w.first = e.from;
    w.second = e.to;
    w.l1 = d0;
    w.l2 = d1;
    w.lambda = 0;
    w.mu = mu - lambda0;
    w.nu = lambda1 - lambda0;
    const auto kind = d0 == d1 ? SingularityKind::TypeB1 : SingularityKind::NotSingularAtOrigin;
    return report(kind, std::move(curve), w);
  }

  const bool trap0 = is_trapezoid_on(config, c0, e.dual_a, e.dual_b) && is_triangle_on(c1);
  const bool trap1 = is_trapezoid_on(config, c1, e.dual_a, e.dual_b) && is_triangle_on(c0);
  if (trap0 || trap1) {
    if (codim > 2) return report(SingularityKind::NonMaximal, std::move(curve), w);
    const Cell& quad = trap0 ? c0 : c1;
    const Cell& tri = trap0 ? c1 : c0;
    const Rational nu = u[apex(tri, e.dual_a, e.dual_b)];
    w.first = trap0 ? e.from : e.to;
    w.second = trap0 ? e.to : e.from;
    w.l1 = trap0 ? d0 : d1;
    w.l2 = trap0 ? d1 : d0;
    w.lambda = u[apex(quad, e.dual_a, e.dual_b)] - nu;
    w.mu = mu - nu;
    w.nu = 0;
    SingularityKind kind = SingularityKind::TypeB2Interior;
    if (w.l1 == w.l2) kind = SingularityKind::NonGeneric;
    if (w.l1 > w.l2) kind = SingularityKind::NotSingularAtOrigin;
    return report(kind, std::move(curve), w);
  }
  return report(unmatched(codim), std::move(curve), w);
}

SingularityReport on_ray(const PointConfiguration& config, const HeightVector& u, TropicalCurve curve,
                         std::size_t index, std::size_t codim) {
  const CurveRay r = curve.rays[index];
  if (r.weight != 2) {
    const auto kind = r.weight > 2 ? SingularityKind::NonMaximal : SingularityKind::NotSingularAtOrigin;
    return report(kind, std::move(curve));
  }
  EdgeWitness w;
  w.on_ray = true;
  w.edge = index;
  w.circuit = line_circuit(config, r.dual_a, r.dual_b);
  const Cell& cell = curve.subdivision.cells[curve.vertices[r.vertex].cell];
  if (!is_trapezoid_on(config, cell, r.dual_a, r.dual_b)) return report(unmatched(codim), std::move(curve), w);
  if (codim > 2) return report(SingularityKind::NonMaximal, std::move(curve), w);
  const Rational lambda = u[apex(cell, r.dual_a, r.dual_b)];
  w.first = r.vertex;
  w.l1 = lattice_distance(curve.vertices[r.vertex].position, r.dx, r.dy);
  w.lambda = 0;
  w.mu = u[r.dual_a] - lambda;
  return report(SingularityKind::TypeB2Boundary, std::move(curve), w);
}

}  // namespace

std::string_view to_string(SingularityKind kind) {
  switch (kind) {
    case SingularityKind::TypeA3: return "TypeA3";
    case SingularityKind::TypeA4: return "TypeA4";
    case SingularityKind::TypeB1: return "TypeB1";
    case SingularityKind::TypeB2Interior: return "TypeB2Interior";
    case SingularityKind::TypeB2Boundary: return "TypeB2Boundary";
    case SingularityKind::FatEnd: return "FatEnd";
    case SingularityKind::NonMaximal: return "NonMaximal";
    case SingularityKind::NotSingularAtOrigin: return "NotSingularAtOrigin";
    case SingularityKind::NonGeneric: return "NonGeneric";
  }
  return "?";
}

HeightVector shift_to_origin(const PointConfiguration& config, const HeightVector& u, const Point2& point) {
  if (u.size() != config.size()) throw Error(ErrorCode::InvalidArgument, "height vector length mismatch");
  HeightVector out(u.size());
  for (std::size_t k = 0; k < u.size(); ++k) out[k] = u[k] + config[k].i * point.x + config[k].j * point.y;
  return out;
}

SingularityReport classify_singularity(const PointConfiguration& config, const HeightVector& u,
                                       const std::optional<Point2>& point) {
  const HeightVector h = point ? shift_to_origin(config, u, *point) : u;
  TropicalCurve curve = dual_curve(config, h);
  if (!bergman_member_circuit_oracle(coefficient_matrix(config), h)) {
    return report(SingularityKind::NotSingularAtOrigin, std::move(curve));
  }
  const ConeInfo info = cone_info(config, curve.subdivision);
  if (!info.white_points.empty()) return report(SingularityKind::NonMaximal, std::move(curve));

  const Point2 origin{0, 0};
  for (std::size_t v = 0; v < curve.vertices.size(); ++v) {
    if (curve.vertices[v].position == origin) return at_vertex(config, std::move(curve), v, info.codimension);
  }
  for (std::size_t k = 0; k < curve.bounded_edges.size(); ++k) {
    const auto& e = curve.bounded_edges[k];
    if (origin_inside_segment(curve.vertices[e.from].position, curve.vertices[e.to].position)) {
      return on_edge(config, h, std::move(curve), k, info.codimension);
    }
  }
  for (std::size_t k = 0; k < curve.rays.size(); ++k) {
    const auto& r = curve.rays[k];
    if (origin_on_ray(curve.vertices[r.vertex].position, r.dx, r.dy)) {
      return on_ray(config, h, std::move(curve), k, info.codimension);
    }
  }
  return report(SingularityKind::NotSingularAtOrigin, std::move(curve));
}

Matrix coefficient_matrix_non_torus(const PointConfiguration& config) {
  std::size_t bottom = 0, second = 0;
  for (const auto& p : config.points()) {
    if (p.j < 0) throw Error(ErrorCode::InsufficientBoundaryPoints, "points below the line j = 0");
    bottom += p.j == 0;
    second += p.j == 1;
  }
  if (bottom < 3 || second < 2) {
    throw Error(ErrorCode::InsufficientBoundaryPoints, "need three points on j = 0 and two on j = 1");
  }
  Matrix a(3, config.size());
  for (std::size_t k = 0; k < config.size(); ++k) {
    if (config[k].j == 0) {
      a(0, k) = 1;
      a(1, k) = config[k].i;
    } else if (config[k].j == 1) {
      a(2, k) = 1;
    }
  }
  return a;
}

SingularityReport classify_non_torus(const PointConfiguration& config, const HeightVector& u) {
  coefficient_matrix_non_torus(config);
  if (u.size() != config.size()) throw Error(ErrorCode::InvalidArgument, "height vector length mismatch");
  TropicalCurve curve = dual_curve(config, u);
  for (std::int64_t row : {0, 1}) {
    std::optional<Rational> best;
    std::size_t count = 0;
    for (std::size_t k = 0; k < config.size(); ++k) {
      if (config[k].j != row) continue;
      if (!best || u[k] > *best) {
        best = u[k];
        count = 1;
      } else if (u[k] == *best) {
        ++count;
      }
    }
    if (count < static_cast<std::size_t>(row == 0 ? 3 : 2)) {
      return report(SingularityKind::NotSingularAtOrigin, std::move(curve));
    }
  }
  const bool no_white = cone_info(config, curve.subdivision).white_points.empty();
  for (std::size_t k = 0; k < curve.rays.size(); ++k) {
    const auto& r = curve.rays[k];
    if (r.dx != 0 || r.dy != -1 || r.weight < 2 || curve.vertices[r.vertex].position.x != 0) continue;
    FatEndWitness w{k, r.vertex, r.weight, valence(curve, r.vertex), vertex_multiplicity(config, curve, r.vertex),
                    false};
    w.maximal = w.valence == 4 && no_white;
    if (w.valence >= 4 || (w.valence == 3 && w.multiplicity >= 4)) {
      return report(SingularityKind::FatEnd, std::move(curve), w);
    }
    return report(SingularityKind::NonGeneric, std::move(curve), w);
  }
  return report(SingularityKind::NonGeneric, std::move(curve));
}

}  // namespace tropsing
