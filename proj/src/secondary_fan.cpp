#include "tropsing/secondary_fan.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "tropsing/error.hpp"
#include "tropsing/linalg.hpp"

namespace tropsing {

namespace {

FacePlane plane_through(const LatticePoint& p0, const LatticePoint& p1, const LatticePoint& p2,
                        const Rational& h0, const Rational& h1, const Rational& h2) {
  const Rational d = Rational(orientation(p0, p1, p2));
  const Rational di1 = Rational(p1.i - p0.i), dj1 = Rational(p1.j - p0.j);
  const Rational di2 = Rational(p2.i - p0.i), dj2 = Rational(p2.j - p0.j);
  const Rational dh1 = h1 - h0, dh2 = h2 - h0;
  FacePlane f;
  f.alpha = (dh1 * dj2 - dh2 * dj1) / d;
  f.beta = (di1 * dh2 - di2 * dh1) / d;
  f.gamma = h0 - f.alpha * p0.i - f.beta * p0.j;
  return f;
}

void check_heights(const PointConfiguration& config, const HeightVector& u) {
  if (u.size() != config.size()) {
    throw Error(ErrorCode::InvalidArgument, "height vector length does not match the configuration");
  }
}

bool contains(const IndexSet& set, const IndexSet& sub) {
  return std::includes(set.begin(), set.end(), sub.begin(), sub.end());
}

}  // namespace

FacePlane cell_plane(const PointConfiguration& config, const HeightVector& u, const Cell& cell) {
  const auto& p = cell.polygon;
  return plane_through(config[p[0]], config[p[1]], config[p[2]], u[p[0]], u[p[1]], u[p[2]]);
}

MarkedSubdivision regular_subdivision(const PointConfiguration& config, const HeightVector& u) {
  check_heights(config, u);
  const std::size_t s = config.size();
  std::vector<IndexSet> faces;
  for (std::size_t a = 0; a < s; ++a) {
    for (std::size_t b = a + 1; b < s; ++b) {
      for (std::size_t c = b + 1; c < s; ++c) {
        if (orientation(config[a], config[b], config[c]) == 0) continue;
        const FacePlane f = plane_through(config[a], config[b], config[c], u[a], u[b], u[c]);
        IndexSet on;
        bool upper = true;
        for (std::size_t k = 0; k < s && upper; ++k) {
          const Rational v = f(config[k]);
          if (u[k] > v) upper = false;
          else if (u[k] == v) on.push_back(k);
        }
        if (upper) faces.push_back(std::move(on));
      }
    }
  }
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());

  MarkedSubdivision ms;
  for (auto& marked : faces) {
    std::vector<LatticePoint> pts;
    for (std::size_t k : marked) pts.push_back(config[k]);
    Cell cell;
    for (const auto& v : convex_hull(pts)) cell.polygon.push_back(config.index_of(v));
    cell.marked = std::move(marked);
    ms.cells.push_back(std::move(cell));
  }
  return ms;
}

std::vector<SubdivisionEdge> edges(const MarkedSubdivision& ms) {
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> by_key;
  for (std::size_t c = 0; c < ms.cells.size(); ++c) {
    const auto& poly = ms.cells[c].polygon;
    for (std::size_t k = 0; k < poly.size(); ++k) {
      std::size_t a = poly[k], b = poly[(k + 1) % poly.size()];
      if (a > b) std::swap(a, b);
      by_key[{a, b}].push_back(c);
    }
  }
  std::vector<SubdivisionEdge> out;
  out.reserve(by_key.size());
  for (auto& [key, cells] : by_key) out.push_back({key.first, key.second, std::move(cells)});
  return out;
}

ConeInfo cone_info(const PointConfiguration& config, const MarkedSubdivision& ms) {
  std::vector<RationalVector> gens;
  std::vector<bool> seen(config.size(), false);
  for (const auto& cell : ms.cells) {
    for (std::size_t k : cell.marked) seen[k] = true;
    for (auto& v : affine_relation_space(config, cell.marked).basis) gens.push_back(std::move(v));
  }
  ConeInfo info;
  info.lt.basis = span_basis(gens, config.size());
  info.lt_dim = info.lt.dimension();
  info.codimension = info.lt_dim;
  for (std::size_t k = 0; k < config.size(); ++k) {
    if (!seen[k]) info.white_points.push_back(k);
  }
  return info;
}

std::pair<RationalVector, RationalVector> lineality_basis(const PointConfiguration& config) {
  return {x_coordinates(config), y_coordinates(config)};
}

namespace {

struct LineFrame {
  LatticePoint origin;
  std::int64_t d1 = 0, d2 = 0;  // primitive direction of the line

  std::int64_t level(const LatticePoint& m) const {
    return -d2 * (m.i - origin.i) + d1 * (m.j - origin.j);
  }
  std::int64_t along(const LatticePoint& m) const { return d1 * (m.i - origin.i) + d2 * (m.j - origin.j); }
};

LineFrame frame_of(const PointConfiguration& config, const Circuit& z) {
  const LatticePoint& a = config[z.indices[0]];
  const LatticePoint& b = config[z.indices[1]];
  const std::int64_t g = lattice_length(a, b);
  return {a, (b.i - a.i) / g, (b.j - a.j) / g};
}

Decomposition decompose_planar(const PointConfiguration& config, const HeightVector& u,
                               const Circuit& z, const Cell& cell) {
  const FacePlane f = cell_plane(config, u, cell);
  const LatticePoint& a = config[z.indices[0]];
  Decomposition d;
  d.c_x = f.alpha;
  d.c_y = f.beta;
  d.c_1 = -f.alpha * a.i - f.beta * a.j;
  d.u_wc.resize(u.size());
  for (std::size_t k = 0; k < u.size(); ++k) {
    d.u_wc[k] = u[k] - d.c_x * config[k].i - d.c_y * config[k].j - d.c_1;
  }
  return d;
}

Decomposition decompose_collinear(const PointConfiguration& config, const HeightVector& u,
                                  const Circuit& z) {
  const LineFrame lf = frame_of(config, z);
  const std::size_t a = z.indices[0];
  const std::size_t b = z.indices[1];
  // Slope of u along the line, per unit of along().
  const Rational beta_g = (u[b] - u[a]) / Rational(lf.along(config[b]));

  RationalVector v(u.size());
  std::map<std::int64_t, Rational> top;  // level -> maximal height
  std::map<std::int64_t, int> top_count;
  for (std::size_t k = 0; k < u.size(); ++k) {
    v[k] = u[k] - beta_g * lf.along(config[k]);
    const std::int64_t lv = lf.level(config[k]);
    if (lv == 0) continue;
    auto it = top.find(lv);
    if (it == top.end() || v[k] > it->second) {
      top[lv] = v[k];
      top_count[lv] = 1;
    } else if (v[k] == it->second) {
      ++top_count[lv];
    }
  }
  const Rational ceiling = u[a];

  // Rotating by c subtracts c * level. E(c) = max_k (top_k - c k).
  auto envelope = [&](const Rational& c, std::vector<std::int64_t>* argmax) {
    Rational best;
    bool first = true;
    for (const auto& [lv, h] : top) {
      const Rational val = h - c * lv;
      if (first || val > best) {
        best = val;
        first = false;
        if (argmax) argmax->assign(1, lv);
      } else if (val == best && argmax) {
        argmax->push_back(lv);
      }
    }
    return best;
  };
  auto valid = [&](const Rational& c) {
    std::vector<std::int64_t> arg;
    const Rational e = envelope(c, &arg);
    if (e > ceiling) return false;
    int count = 0;
    for (auto lv : arg) count += top_count[lv];
    return count >= 2;
  };

  std::vector<Rational> candidates;
  for (auto p = top.begin(); p != top.end(); ++p) {
    for (auto q = std::next(p); q != top.end(); ++q) {
      candidates.push_back((q->second - p->second) / Rational(q->first - p->first));
    }
  }
  candidates.push_back(Rational(0));
  // A level whose maximum is attained twice is valid on a whole interval;
  // the point of that interval closest to zero is either 0 or a breakpoint,
  // or an end of the feasible interval E(c) <= ceiling.
  for (const auto& [lv, h] : top) {
    if (top_count[lv] >= 2) candidates.push_back((h - ceiling) / Rational(lv));
  }

  std::optional<Rational> chosen;
  for (const auto& c : candidates) {
    if (!valid(c)) continue;
    if (!chosen || abs(c) < abs(*chosen) || (abs(c) == abs(*chosen) && c > *chosen)) chosen = c;
  }
  if (!chosen) {
    throw Error(ErrorCode::NotInUnion,
                "no rotation places the circuit on top with a repeated maximum off its line");
  }
  const Rational c = *chosen;
  const std::int64_t n1 = -lf.d2, n2 = lf.d1;
  const LatticePoint& ma = config[a];

  Decomposition d;
  d.c_x = beta_g * lf.d1 + c * n1;
  d.c_y = beta_g * lf.d2 + c * n2;
  d.c_1 = -beta_g * (lf.d1 * ma.i + lf.d2 * ma.j) - c * (n1 * ma.i + n2 * ma.j);
  d.u_wc.resize(u.size());
  for (std::size_t k = 0; k < u.size(); ++k) {
    d.u_wc[k] = u[k] - d.c_x * config[k].i - d.c_y * config[k].j - d.c_1;
  }
  std::vector<std::int64_t> arg;
  envelope(c, &arg);
  d.parallel_pair = arg.size() == 1;
  return d;
}

}  // namespace

Decomposition decompose_weightclass_lineality(const PointConfiguration& config, const HeightVector& u,
                                              const Circuit& z) {
  check_heights(config, u);
  const MarkedSubdivision ms = regular_subdivision(config, u);
  const Cell* host = nullptr;
  for (const auto& cell : ms.cells) {
    if (contains(cell.marked, z.indices)) {
      host = &cell;
      break;
    }
  }
  if (!host) throw Error(ErrorCode::CircuitNotInSubdivision, "circuit is not marked in a common cell");
  if (z.kind == CircuitKind::C) return decompose_collinear(config, u, z);
  return decompose_planar(config, u, z, *host);
}

std::optional<Circuit> unique_circuit(const PointConfiguration& config, const MarkedSubdivision& ms) {
  std::optional<Circuit> found;
  for (auto& z : circuits(config)) {
    for (const auto& cell : ms.cells) {
      if (contains(cell.marked, z.indices)) {
        if (found) return std::nullopt;
        found = z;
        break;
      }
    }
  }
  return found;
}

bool is_discriminant_cone(const PointConfiguration& config, const MarkedSubdivision& ms) {
  if (cone_info(config, ms).codimension != 1) {
    throw Error(ErrorCode::WrongCodimension, "discriminant test needs a codimension-one cone");
  }
  const auto z = unique_circuit(config, ms);
  if (!z) throw Error(ErrorCode::WrongCodimension, "no unique circuit in the subdivision");
  if (z->kind != CircuitKind::C) return true;
  const bool on_boundary = std::all_of(z->indices.begin(), z->indices.end(),
                                       [&](std::size_t k) { return config.on_boundary(config[k]); });
  if (!on_boundary) return true;
  const LineFrame lf = frame_of(config, *z);
  for (const auto& cell : ms.cells) {
    if (!contains(cell.marked, z->indices)) continue;
    if (cell.polygon.size() != 3) return true;
    for (std::size_t v : cell.polygon) {
      const std::int64_t lv = lf.level(config[v]);
      if (lv != 0) return std::abs(lv) != 1;
    }
  }
  return true;
}

bool delta_equivalent(const PointConfiguration& config, const MarkedSubdivision& ms) {
  return !is_discriminant_cone(config, ms);
}

}  // namespace tropsing
