#include "tropsing/tropical_curve.hpp"

#include <algorithm>
#include <numeric>

#include "tropsing/error.hpp"
#include "tropsing/linalg.hpp"

namespace tropsing {

namespace {

// Position of edge (a, b) in the CCW cycle of `poly`: true if it appears as a -> b.
bool runs_forward(const std::vector<std::size_t>& poly, std::size_t a, std::size_t b) {
  for (std::size_t k = 0; k < poly.size(); ++k) {
    if (poly[k] == a && poly[(k + 1) % poly.size()] == b) return true;
  }
  return false;
}

// Primitive outward normal of the cell edge between configuration points a and b.
std::pair<std::int64_t, std::int64_t> outward_normal(const PointConfiguration& config,
                                                     const std::vector<std::size_t>& poly,
                                                     std::size_t a, std::size_t b) {
  if (!runs_forward(poly, a, b)) std::swap(a, b);
  const LatticePoint& p = config[a];
  const LatticePoint& q = config[b];
  const std::int64_t g = lattice_length(p, q);
  return {(q.j - p.j) / g, -(q.i - p.i) / g};
}

}  // namespace

TropicalCurve dual_curve(const PointConfiguration& config, const HeightVector& u) {
  TropicalCurve curve;
  curve.subdivision = regular_subdivision(config, u);
  const auto& cells = curve.subdivision.cells;
  for (std::size_t c = 0; c < cells.size(); ++c) {
    const FacePlane f = cell_plane(config, u, cells[c]);
    curve.vertices.push_back({{-f.alpha, -f.beta}, c});
  }
  for (const auto& e : edges(curve.subdivision)) {
    const std::int64_t w = lattice_length(config[e.a], config[e.b]);
    const auto [nx, ny] = outward_normal(config, cells[e.cells[0]].polygon, e.a, e.b);
    if (e.interior()) {
      curve.bounded_edges.push_back({e.cells[0], e.cells[1], nx, ny, w, e.a, e.b});
    } else {
      curve.rays.push_back({e.cells[0], nx, ny, w, e.a, e.b});
    }
  }
  return curve;
}

TropicalValue evaluate(const PointConfiguration& config, const HeightVector& u, const Point2& p) {
  TropicalValue out;
  for (std::size_t k = 0; k < config.size(); ++k) {
    const Rational v = u[k] + config[k].i * p.x + config[k].j * p.y;
    if (out.attained == 0 || v > out.value) {
      out.value = v;
      out.attained = 1;
    } else if (v == out.value) {
      ++out.attained;
    }
  }
  return out;
}

std::int64_t vertex_multiplicity(const PointConfiguration& config, const TropicalCurve& curve,
                                 std::size_t v) {
  std::vector<LatticePoint> poly;
  for (std::size_t k : curve.subdivision.cells.at(curve.vertices.at(v).cell).polygon) {
    poly.push_back(config[k]);
  }
  return normalized_area(poly);
}

std::size_t valence(const TropicalCurve& curve, std::size_t v) {
  std::size_t n = 0;
  for (const auto& e : curve.bounded_edges) n += (e.from == v) + (e.to == v);
  for (const auto& r : curve.rays) n += r.vertex == v;
  return n;
}

std::pair<std::int64_t, std::int64_t> balance(const TropicalCurve& curve, std::size_t v) {
  std::int64_t sx = 0, sy = 0;
  for (const auto& e : curve.bounded_edges) {
    if (e.from == v) {
      sx += e.weight * e.dx;
      sy += e.weight * e.dy;
    }
    if (e.to == v) {
      sx -= e.weight * e.dx;
      sy -= e.weight * e.dy;
    }
  }
  for (const auto& r : curve.rays) {
    if (r.vertex == v) {
      sx += r.weight * r.dx;
      sy += r.weight * r.dy;
    }
  }
  return {sx, sy};
}

CurveType curve_type(const MarkedSubdivision& ms) {
  CurveType t;
  for (const auto& cell : ms.cells) t.cells.push_back(cell.polygon);
  for (const auto& e : edges(ms)) t.b += e.interior();
  t.g = t.b + 1 - ms.cells.size();
  return t;
}

std::size_t type_dimension(const PointConfiguration& config, const CurveType& t) {
  MarkedSubdivision shape;
  for (const auto& poly : t.cells) {
    IndexSet sorted = poly;
    std::sort(sorted.begin(), sorted.end());
    shape.cells.push_back({poly, sorted});
  }
  std::vector<SubdivisionEdge> bounded;
  for (auto& e : edges(shape)) {
    if (e.interior()) bounded.push_back(std::move(e));
  }
  const std::size_t nv = t.cells.size();
  const std::size_t b = bounded.size();
  // Unknowns: vertex coordinates (2 per vertex), then edge lengths.
  // Equations: v_to - v_from - l_e * direction_e = 0.
  Matrix m(2 * b, 2 * nv + b);
  for (std::size_t k = 0; k < b; ++k) {
    const auto& e = bounded[k];
    const auto [nx, ny] = outward_normal(config, t.cells[e.cells[0]], e.a, e.b);
    const std::size_t from = e.cells[0], to = e.cells[1];
    m(2 * k, 2 * to) += 1;
    m(2 * k, 2 * from) -= 1;
    m(2 * k, 2 * nv + k) = Rational(-nx);
    m(2 * k + 1, 2 * to + 1) += 1;
    m(2 * k + 1, 2 * from + 1) -= 1;
    m(2 * k + 1, 2 * nv + k) = Rational(-ny);
  }
  // Positions are free: write each as a difference of two positive unknowns.
  Matrix split(2 * b, 4 * nv + b);
  for (std::size_t r = 0; r < 2 * b; ++r) {
    for (std::size_t c = 0; c < 2 * nv; ++c) {
      split(r, c) = m(r, c);
      split(r, 2 * nv + c) = -m(r, c);
    }
    for (std::size_t c = 0; c < b; ++c) split(r, 4 * nv + c) = m(r, 2 * nv + c);
  }
  if (!has_positive_kernel_vector(split)) {
    throw Error(ErrorCode::NotRealizable, "no positive edge lengths close every cycle");
  }
  return 2 * nv + b - rank(m);
}

}  // namespace tropsing
