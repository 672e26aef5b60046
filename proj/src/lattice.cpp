#include "tropsing/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "tropsing/error.hpp"
#include "tropsing/linalg.hpp"

namespace tropsing {

std::int64_t orientation(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c) {
  return (b.i - a.i) * (c.j - a.j) - (b.j - a.j) * (c.i - a.i);
}

std::int64_t lattice_length(const LatticePoint& a, const LatticePoint& b) {
  return std::gcd(std::abs(b.i - a.i), std::abs(b.j - a.j));
}

std::int64_t normalized_area(std::span<const LatticePoint> polygon) {
  std::int64_t twice = 0;
  for (std::size_t k = 0; k < polygon.size(); ++k) {
    const auto& p = polygon[k];
    const auto& q = polygon[(k + 1) % polygon.size()];
    twice += p.i * q.j - q.i * p.j;
  }
  return std::abs(twice);
}

std::vector<LatticePoint> convex_hull(std::vector<LatticePoint> pts) {
  // Andrew's monotone chain on (i, j) order; only strict turns are kept.
  std::sort(pts.begin(), pts.end(), [](const LatticePoint& a, const LatticePoint& b) {
    return a.i != b.i ? a.i < b.i : a.j < b.j;
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<LatticePoint> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && orientation(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t idx = pts.size() - 1, lower = k + 1; idx-- > 0;) {
    const auto& p = pts[idx];
    while (k >= lower && orientation(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  hull.resize(k - 1);
  if (hull.size() < 3) return hull;
  const auto first = std::min_element(hull.begin(), hull.end());
  std::rotate(hull.begin(), first, hull.end());
  return hull;
}

bool in_convex_polygon(std::span<const LatticePoint> polygon, const LatticePoint& p) {
  for (std::size_t k = 0; k < polygon.size(); ++k) {
    if (orientation(polygon[k], polygon[(k + 1) % polygon.size()], p) < 0) return false;
  }
  return true;
}

namespace {

std::vector<LatticePoint> lattice_points_of(const std::vector<LatticePoint>& hull) {
  auto [min_i, max_i] = std::minmax_element(hull.begin(), hull.end(),
                                            [](auto& a, auto& b) { return a.i < b.i; });
  auto [min_j, max_j] = std::minmax_element(hull.begin(), hull.end(),
                                            [](auto& a, auto& b) { return a.j < b.j; });
  std::vector<LatticePoint> out;
  for (std::int64_t j = min_j->j; j <= max_j->j; ++j) {
    for (std::int64_t i = min_i->i; i <= max_i->i; ++i) {
      if (in_convex_polygon(hull, {i, j})) out.push_back({i, j});
    }
  }
  return out;
}

}  // namespace

PointConfiguration::PointConfiguration(std::vector<LatticePoint> points)
    : PointConfiguration(std::move(points), true) {}

PointConfiguration PointConfiguration::relaxed(std::vector<LatticePoint> points) {
  return PointConfiguration(std::move(points), false);
}

PointConfiguration PointConfiguration::from_polygon(std::vector<LatticePoint> vertices) {
  const auto hull = convex_hull(std::move(vertices));
  if (hull.size() < 3) {
    throw Error(ErrorCode::DegenerateConfiguration, "polygon is not two-dimensional");
  }
  return PointConfiguration(lattice_points_of(hull));
}

PointConfiguration::PointConfiguration(std::vector<LatticePoint> points, bool require_complete)
    : points_(std::move(points)) {
  std::sort(points_.begin(), points_.end());
  if (std::adjacent_find(points_.begin(), points_.end()) != points_.end()) {
    throw Error(ErrorCode::DuplicatePoint, "configuration contains a repeated point");
  }
  const auto hull = convex_hull(points_);
  if (hull.size() < 3) {
    throw Error(ErrorCode::DegenerateConfiguration, "configuration is collinear or too small");
  }
  for (const auto& v : hull) polygon_.push_back(index_of(v));
  if (require_complete) {
    if (lattice_points_of(hull) != points_) {
      throw Error(ErrorCode::NotLatticeComplete,
                  "points are not all lattice points of their convex hull");
    }
  } else {
    complete_ = lattice_points_of(hull) == points_;
  }
}

std::vector<LatticePoint> PointConfiguration::polygon_points() const {
  std::vector<LatticePoint> out;
  out.reserve(polygon_.size());
  for (std::size_t k : polygon_) out.push_back(points_[k]);
  return out;
}

std::size_t PointConfiguration::index_of(const LatticePoint& p) const {
  const auto it = std::lower_bound(points_.begin(), points_.end(), p);
  if (it == points_.end() || *it != p) return points_.size();
  return static_cast<std::size_t>(it - points_.begin());
}

bool PointConfiguration::on_boundary(const LatticePoint& p) const {
  const auto poly = polygon_points();
  if (!in_convex_polygon(poly, p)) return false;
  for (std::size_t k = 0; k < poly.size(); ++k) {
    if (orientation(poly[k], poly[(k + 1) % poly.size()], p) == 0) return true;
  }
  return false;
}

std::int64_t PointConfiguration::lattice_perimeter() const {
  const auto poly = polygon_points();
  std::int64_t total = 0;
  for (std::size_t k = 0; k < poly.size(); ++k) total += lattice_length(poly[k], poly[(k + 1) % poly.size()]);
  return total;
}

AffineRelationSpace affine_relation_space(const PointConfiguration& config, const IndexSet& support) {
  if (support.empty()) throw Error(ErrorCode::InvalidArgument, "support must be nonempty");
  Matrix a(3, support.size());
  for (std::size_t k = 0; k < support.size(); ++k) {
    const auto& p = config[support[k]];
    a(0, k) = 1;
    a(1, k) = Rational(p.i);
    a(2, k) = Rational(p.j);
  }
  std::vector<RationalVector> embedded;
  for (const auto& v : kernel_basis(a)) {
    RationalVector full(config.size());
    for (std::size_t k = 0; k < support.size(); ++k) full[support[k]] = v[k];
    embedded.push_back(std::move(full));
  }
  return {span_basis(embedded, config.size())};
}

AffineRelationSpace affine_relation_space(const PointConfiguration& config) {
  IndexSet all(config.size());
  std::iota(all.begin(), all.end(), std::size_t{0});
  return affine_relation_space(config, all);
}

char to_char(CircuitKind kind) {
  switch (kind) {
    case CircuitKind::A: return 'A';
    case CircuitKind::B: return 'B';
    case CircuitKind::C: return 'C';
  }
  return '?';
}

bool affinely_independent(const PointConfiguration& config, const IndexSet& subset) {
  if (subset.size() <= 2) return subset.size() < 2 || config[subset[0]] != config[subset[1]];
  if (subset.size() > 3) return false;
  return orientation(config[subset[0]], config[subset[1]], config[subset[2]]) != 0;
}

CircuitKind circuit_kind(const PointConfiguration& config, const IndexSet& subset) {
  if (subset.size() == 3) {
    if (affinely_independent(config, subset)) {
      throw Error(ErrorCode::InvalidArgument, "three affinely independent points are not a circuit");
    }
    return CircuitKind::C;
  }
  if (subset.size() != 4) throw Error(ErrorCode::InvalidArgument, "circuits have three or four points");
  for (std::size_t skip = 0; skip < 4; ++skip) {
    IndexSet rest;
    for (std::size_t k = 0; k < 4; ++k) {
      if (k != skip) rest.push_back(subset[k]);
    }
    if (!affinely_independent(config, rest)) {
      throw Error(ErrorCode::InvalidArgument, "four points with three collinear are not a circuit");
    }
  }
  std::vector<LatticePoint> pts;
  for (std::size_t k : subset) pts.push_back(config[k]);
  return convex_hull(pts).size() == 3 ? CircuitKind::A : CircuitKind::B;
}

std::vector<Circuit> circuits(const PointConfiguration& config) {
  // In the plane every four points are affinely dependent, so circuits have
  // three points (collinear) or four points (no three collinear).
  const std::size_t s = config.size();
  std::vector<Circuit> out;
  for (std::size_t a = 0; a < s; ++a) {
    for (std::size_t b = a + 1; b < s; ++b) {
      for (std::size_t c = b + 1; c < s; ++c) {
        if (orientation(config[a], config[b], config[c]) == 0) out.push_back({{a, b, c}, CircuitKind::C});
      }
    }
  }
  for (std::size_t a = 0; a < s; ++a) {
    for (std::size_t b = a + 1; b < s; ++b) {
      for (std::size_t c = b + 1; c < s; ++c) {
        if (orientation(config[a], config[b], config[c]) == 0) continue;
        for (std::size_t d = c + 1; d < s; ++d) {
          if (orientation(config[a], config[b], config[d]) == 0 ||
              orientation(config[a], config[c], config[d]) == 0 ||
              orientation(config[b], config[c], config[d]) == 0) {
            continue;
          }
          IndexSet z{a, b, c, d};
          out.push_back({z, circuit_kind(config, z)});
        }
      }
    }
  }
  return out;
}

RationalVector x_coordinates(const PointConfiguration& config) {
  RationalVector v;
  v.reserve(config.size());
  for (const auto& p : config.points()) v.emplace_back(p.i);
  return v;
}

RationalVector y_coordinates(const PointConfiguration& config) {
  RationalVector v;
  v.reserve(config.size());
  for (const auto& p : config.points()) v.emplace_back(p.j);
  return v;
}

}  // namespace tropsing
