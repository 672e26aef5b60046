// Acceptance suite: one PASS/FAIL line per criterion, with timing.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "sampling.hpp"
#include "tropsing/error.hpp"
#include "tropsing/lifts.hpp"
#include "tropsing/linalg.hpp"
#include "tropsing/matroid.hpp"
#include "tropsing/secondary_fan.hpp"
#include "tropsing/singularity.hpp"
#include "tropsing/tropical_curve.hpp"

using namespace tropsing;
using fixtures::idx;
using fixtures::vec;

namespace {

// Collects failed checks; the first few are reported.
struct Check {
  std::size_t failures = 0;
  std::vector<std::string> notes;

  void operator()(bool ok, const std::string& what) {
    if (ok) return;
    ++failures;
    if (notes.size() < 4) notes.push_back(what);
  }
};

struct Outcome {
  bool pass = false;
  std::string detail;
};

Outcome finish(const Check& check, const std::string& summary) {
  std::string detail = summary;
  for (const auto& n : check.notes) detail += "; " + n;
  if (check.failures > 4) detail += "; ... " + std::to_string(check.failures) + " failures";
  return {check.failures == 0, detail};
}

std::string mismatch(const Matrix& got, const Matrix& want) {
  if (got.rows() != want.rows() || got.cols() != want.cols()) {
    return "shape " + std::to_string(got.rows()) + "x" + std::to_string(got.cols()) + " vs " +
           std::to_string(want.rows()) + "x" + std::to_string(want.cols());
  }
  std::string out;
  for (std::size_t r = 0; r < got.rows(); ++r) {
    for (std::size_t c = 0; c < got.cols(); ++c) {
      if (got(r, c) == want(r, c)) continue;
      out += (out.empty() ? "" : ",") + std::string("(") + std::to_string(r + 1) + "," + std::to_string(c + 1) +
             ") got " + to_string(got(r, c)) + " expected " + to_string(want(r, c));
    }
  }
  return out;
}

// 2x2 minors of a pair of vectors; proportional minors mean equal planes.
std::vector<Rational> plucker(const RationalVector& a, const RationalVector& b) {
  std::vector<Rational> out;
  for (std::size_t x = 0; x < a.size(); ++x) {
    for (std::size_t y = x + 1; y < a.size(); ++y) out.push_back(a[x] * b[y] - a[y] * b[x]);
  }
  return out;
}

bool proportional(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  bool nonzero = false;
  for (std::size_t x = 0; x < a.size(); ++x) {
    nonzero = nonzero || a[x] != 0 || b[x] != 0;
    for (std::size_t y = 0; y < a.size(); ++y) {
      if (a[x] * b[y] != a[y] * b[x]) return false;
    }
  }
  return nonzero;
}

std::int64_t gcd_length(const LatticePoint& a, const LatticePoint& b) {
  return std::gcd(std::abs(a.i - b.i), std::abs(a.j - b.j));
}

// ---------------------------------------------------------------------------
// 1. Golden matrices

Outcome golden_matrices() {
  Check check;
  const auto c = fixtures::eight_point();
  const Matrix a8{{1, 1, 1, 1, 1, 1, 1, 1}, {0, 1, 0, 1, 2, 0, 1, 2}, {0, 0, 1, 1, 1, 2, 2, 2}};
  const Matrix b8{{1, -1, -1, 1, 0, 0, 0, 0},
                  {2, -2, -1, 0, 1, 0, 0, 0},
                  {1, 0, -2, 0, 0, 1, 0, 0},
                  {2, -1, -2, 0, 0, 0, 1, 0},
                  {3, -2, -2, 0, 0, 0, 0, 1}};
  const Matrix a = coefficient_matrix(c, 1, 1);
  check(a == a8, "3x8 A: " + mismatch(a, a8));
  const GaleDual g = gale_dual(a, PivotTriple{idx(c, 0, 0), idx(c, 1, 0), idx(c, 0, 1)});
  check(g.b == b8, "5x8 B: " + mismatch(g.b, b8));
  check((a * g.b.transpose()).is_zero(), "A B^t != 0 (3x8)");

  const auto nt = fixtures::non_torus();
  const Matrix a9{{1, 1, 1, 1, 0, 0, 0, 0, 0}, {0, 1, 2, 3, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 1, 1, 1, 0, 0}};
  const Matrix rref9{{1, 0, 0, -1, -2, 0, 0, 0, 0}, {0, 1, 0, 2, 3, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 1, 1, 1, 0}};
  const Matrix b9{{1, -2, 0, 1, 0, 0, 0, 0, 0}, {2, -3, 0, 0, 1, 0, 0, 0, 0}, {0, 0, -1, 0, 0, 1, 0, 0, 0},
                  {0, 0, -1, 0, 0, 0, 1, 0, 0}, {0, 0, -1, 0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 0, 0, 0, 1}};
  const Matrix a_nt = coefficient_matrix_non_torus(nt);
  check(a_nt == a9, "3x9 A: " + mismatch(a_nt, a9));
  const PivotTriple abc{idx(nt, 0, 0), idx(nt, 1, 0), idx(nt, 0, 1)};
  const GaleDual g9 = gale_dual(a_nt, abc);
  std::vector<std::size_t> order(abc.begin(), abc.end());
  for (std::size_t k = 0; k < nt.size(); ++k) {
    if (std::find(abc.begin(), abc.end(), k) == abc.end()) order.push_back(k);
  }
  const Matrix rref = transformed_points(a_nt, abc).select_columns(order);
  check(rref == rref9, "3x9 RREF: " + mismatch(rref, rref9));
  check(pivot_first_form(g9) == b9, "6x9 B: " + mismatch(pivot_first_form(g9), b9));
  check((a_nt * g9.b.transpose()).is_zero(), "A B^t != 0 (3x9)");
  return finish(check, "3x8 A, 5x8 B, 3x9 RREF, 6x9 B, 3x9 A compared entrywise");
}

// ---------------------------------------------------------------------------
// 2. Affine relations and the two-cell cone

Outcome figure_two() {
  Check check;
  const auto c = fixtures::five_point();
  const auto space = affine_relation_space(c);
  check(space.dimension() == 2, "relation space dimension " + std::to_string(space.dimension()));
  for (const auto& v : space.basis) check(oracle::is_affine_relation(c, v), "basis vector is not a relation");
  if (space.dimension() == 2) {
    check(proportional(plucker(space.basis[0], space.basis[1]),
                       plucker(vec({1, -1, -1, 1, 0}), vec({0, 1, 0, -2, 1}))),
          "relation span differs");
  }
  const auto ms = regular_subdivision(c, vec({-1, 1, 1, 2, 3}));
  check(ms.cells.size() == 2, "two-cell subdivision has " + std::to_string(ms.cells.size()) + " cells");
  const auto info = cone_info(c, ms);
  check(info.codimension == 1, "codimension " + std::to_string(info.codimension));
  check(info.lt.basis.size() == 1 && proportional(info.lt.basis[0], vec({0, 1, 0, -2, 1})), "L_T differs");
  return finish(check, "span via Pluecker coordinates; codim 1, L_T = <(0,1,0,-2,1)>");
}

// ---------------------------------------------------------------------------
// 3. Intro pipeline

Outcome intro_pipeline() {
  Check check;
  const auto c = fixtures::intro();
  std::vector<PuiseuxScalar> coef(c.size());
  coef[idx(c, 0, 0)] = parse_puiseux("-t - t^3");
  coef[idx(c, 1, 0)] = parse_puiseux("1 + 2*t + t^3");
  coef[idx(c, 2, 0)] = parse_puiseux("-t");
  coef[idx(c, 0, 1)] = parse_puiseux("t^3");
  coef[idx(c, 1, 1)] = parse_puiseux("-2 - t^3");
  coef[idx(c, 1, 2)] = parse_puiseux("1");
  const PuiseuxPolynomial f{c, coef};

  const auto u = neg_val_vector(f);
  check(u == fixtures::intro_heights(), "neg_val_vector differs");
  const auto ms = regular_subdivision(c, u);
  std::size_t triangles = 0, sharing = 0;
  const IndexSet line{idx(c, 1, 0), idx(c, 1, 1), idx(c, 1, 2)};
  for (const auto& cell : ms.cells) {
    triangles += cell.polygon.size() == 3;
    sharing += std::includes(cell.marked.begin(), cell.marked.end(), line.begin(), line.end());
  }
  check(ms.cells.size() == 3 && triangles == 3, "not three triangles");
  check(sharing == 2, "(1,1) not marked on the shared edge");

  const auto curve = dual_curve(c, u);
  bool weight_two = false;
  for (const auto& e : curve.bounded_edges) {
    if (e.weight != 2) continue;
    const Point2& p = curve.vertices[e.from].position;
    const Point2& q = curve.vertices[e.to].position;
    weight_two = (p == Point2{-1, 0} && q == Point2{1, 0}) || (p == Point2{1, 0} && q == Point2{-1, 0});
  }
  check(weight_two, "no weight-2 edge from (-1,0) to (1,0)");

  const auto report = classify_singularity(c, u);
  check(report.kind == SingularityKind::TypeB1, "kind " + std::string(to_string(report.kind)));
  if (const auto* w = std::get_if<EdgeWitness>(&report.witness)) {
    check(w->l1 == 1 && w->l2 == 1, "l1, l2 = " + to_string(w->l1) + ", " + to_string(w->l2));
  } else {
    check(false, "no edge witness");
  }
  for (const auto& series : conditions_at_one_one(f)) check(series.is_zero(), "condition " + to_string(series));
  check(verify_singular_at_one_one(f), "not singular at (1,1)");
  const auto g = refine_substitution(f);
  check(-*g.coefficients[idx(g.config, 0, 0)].val() == -1, "refined height at (0,0)");
  check(-*g.coefficients[idx(g.config, 2, 0)].val() == -1, "refined height at (2,0)");
  return finish(check, "neg-val, subdivision, curve, TypeB1 l1=l2=1, conditions, refinement");
}

// ---------------------------------------------------------------------------
// 4. Bergman triple equivalence

// Max of w off each line through two points is attained twice.
bool line_oracle(const PointConfiguration& c, const RationalVector& w) {
  for (std::size_t x = 0; x < c.size(); ++x) {
    for (std::size_t y = x + 1; y < c.size(); ++y) {
      std::optional<Rational> best;
      std::size_t count = 0;
      for (std::size_t k = 0; k < c.size(); ++k) {
        if (orientation(c[x], c[y], c[k]) == 0) continue;
        if (!best || w[k] > *best) {
          best = w[k];
          count = 1;
        } else if (w[k] == *best) {
          ++count;
        }
      }
      if (best && count < 2) return false;
    }
  }
  return true;
}

Outcome bergman_equivalence() {
  Check check;
  std::mt19937_64 rng(4004);
  std::size_t vectors = 0, members = 0, configs = 0;
  const std::vector<PointConfiguration> cs{fixtures::five_point(), fixtures::intro(), fixtures::eight_point(),
                                           PointConfiguration::from_polygon({{0, 0}, {3, 0}, {0, 1}, {3, 1}})};
  for (const auto& c : cs) {
    ++configs;
    const Matrix a = coefficient_matrix(c);
    const GaleDual g = gale_dual(a);
    const auto flags = enumerate_flags(g);
    std::vector<RationalVector> ws;
    for (int n = 0; n < 1000; ++n) {
      switch (n % 4) {
        case 0: ws.push_back(fixtures::random_heights(rng, c.size())); break;
        case 1: ws.push_back(fixtures::random_integer_heights(rng, c.size(), 1)); break;
        case 2: ws.push_back(fixtures::random_integer_heights(rng, c.size(), 2)); break;
        default: ws.push_back(sampling::sample(flags[rng() % flags.size()], c.size(), rng));
      }
    }
    for (const auto& flag : flags) ws.push_back(sampling::sample(flag, c.size(), rng));
    for (const auto& w : ws) {
      ++vectors;
      const bool lf = bergman_member_loopfree(g, w);
      const bool co = bergman_member_circuit_oracle(a, w);
      const bool wc = bergman_member_weight_classes(flags, w);
      const bool lo = line_oracle(c, w);
      auto shifted = w;
      const Rational k = fixtures::random_rational(rng);
      for (auto& x : shifted) x += k;
      const bool lf_shift = bergman_member_loopfree(g, shifted);
      check(lf == co && co == wc && wc == lo && lf == lf_shift,
            "disagreement on s=" + std::to_string(c.size()) + ": loopfree " + std::to_string(lf) + " circuit " +
                std::to_string(co) + " weight classes " + std::to_string(wc) + " lines " + std::to_string(lo));
      members += lf;
    }
  }
  check(members > 0, "no members");
  std::ostringstream s;
  s << configs << " configs, " << vectors << " vectors, " << members << " members; 4 routes plus constant shift";
  return finish(check, s.str());
}

// ---------------------------------------------------------------------------
// 5. Flag dichotomy on the eight-point configuration

bool is_circuit(const PointConfiguration& c, const IndexSet& s) {
  if (!oracle::dependent(c, s)) return false;
  for (std::size_t drop = 0; drop < s.size(); ++drop) {
    IndexSet sub;
    for (std::size_t k = 0; k < s.size(); ++k) {
      if (k != drop) sub.push_back(s[k]);
    }
    if (oracle::dependent(c, sub)) return false;
  }
  return true;
}

Outcome flag_dichotomy() {
  Check check;
  const auto c = fixtures::eight_point();
  const auto flags = enumerate_flags(gale_dual(coefficient_matrix(c)));
  check(flags.size() == oracle::dual_flag_count(c), "flag count differs from brute force");
  std::size_t case_a = 0, case_b = 0;
  std::vector<FlagClass> classes;
  for (const auto& flag : flags) {
    const auto blocks = flag.blocks();
    const auto& last = blocks.back();
    FlagClass fc;
    try {
      fc = classify_flag(flag, c);
    } catch (const Error& e) {
      check(false, std::string("classify_flag threw ") + e.what());
      continue;
    }
    classes.push_back(fc);
    bool singles = true;
    for (std::size_t k = 0; k + 1 < blocks.size(); ++k) singles = singles && blocks[k].size() == 1;
    if (last.size() == 4 && singles) {
      ++case_a;
      check(is_circuit(c, last), "case (a) block is no circuit");
      check(fc.which == FlagClass::Case::A && fc.circuit.indices == last, "case (a) misclassified");
      continue;
    }
    ++case_b;
    check(last.size() == 3 && is_circuit(c, last), "neither case: last block size " + std::to_string(last.size()));
    std::optional<std::size_t> pair_block;
    for (std::size_t k = 0; k + 1 < blocks.size(); ++k) {
      if (blocks[k].size() == 2) pair_block = k;
    }
    check(pair_block.has_value(), "case (b) without a pair");
    if (!pair_block) continue;
    bool on_line = true;
    for (std::size_t k = *pair_block + 1; k < blocks.size(); ++k) {
      for (std::size_t p : blocks[k]) on_line = on_line && orientation(c[last[0]], c[last[1]], c[p]) == 0;
    }
    check(on_line, "later blocks off the circuit line");
    const IndexSet pair(fc.pair.begin(), fc.pair.end());
    check(fc.which == FlagClass::Case::B && fc.circuit.indices == last && pair == blocks[*pair_block] &&
              fc.tail_on_line,
          "case (b) misclassified");
  }

  // reversed statement: every circuit ends some flag, each admissible pair occurs
  std::size_t reversed = 0;
  for (const auto& z : oracle::circuits(c)) {
    if (z.size() == 4) {
      const bool found = std::any_of(classes.begin(), classes.end(), [&](const FlagClass& fc) {
        return fc.which == FlagClass::Case::A && fc.circuit.indices == z;
      });
      check(found, "no flag for a 4-point circuit");
      reversed += found;
      continue;
    }
    for (std::size_t p = 0; p < c.size(); ++p) {
      for (std::size_t q = p + 1; q < c.size(); ++q) {
        if (orientation(c[z[0]], c[z[1]], c[p]) == 0 || orientation(c[z[0]], c[z[1]], c[q]) == 0) continue;
        const bool found = std::any_of(classes.begin(), classes.end(), [&](const FlagClass& fc) {
          return fc.which == FlagClass::Case::B && fc.circuit.indices == z && fc.pair[0] == p && fc.pair[1] == q;
        });
        check(found, "no flag for a collinear circuit and pair");
        reversed += found;
      }
    }
  }
  std::ostringstream s;
  s << flags.size() << " flags (" << case_a << " case a, " << case_b << " case b), " << reversed
    << " reversed-statement witnesses";
  return finish(check, s.str());
}

// ---------------------------------------------------------------------------
// 6. Metric properties of singular points

enum class Shape { ATriangle, AQuadrangle, B1, B2, B2Boundary, Other };

const char* shape_name(Shape s) {
  switch (s) {
    case Shape::ATriangle: return "a/triangle";
    case Shape::AQuadrangle: return "a/quadrangle";
    case Shape::B1: return "b.1";
    case Shape::B2: return "b.2";
    case Shape::B2Boundary: return "b.2-boundary";
    default: return "other";
  }
}

// Lattice area of a four-point circuit: the largest triangle if one point is
// inside, else half the sum of all four triangles.
std::int64_t circuit_area(const PointConfiguration& c, const IndexSet& z, std::size_t& hull) {
  std::int64_t sum = 0, best = 0;
  std::size_t inside = 0;
  for (std::size_t drop = 0; drop < 4; ++drop) {
    std::vector<LatticePoint> t;
    for (std::size_t k = 0; k < 4; ++k) {
      if (k != drop) t.push_back(c[z[k]]);
    }
    const std::int64_t d = std::abs(oracle::det3(t[0], t[1], t[2]));
    sum += d;
    best = std::max(best, d);
    // the dropped point lies in the triangle iff the three sub-areas add up
    std::int64_t parts = 0;
    for (std::size_t k = 0; k < 3; ++k) {
      parts += std::abs(oracle::det3(t[k], t[(k + 1) % 3], c[z[drop]]));
    }
    inside += parts == d;
  }
  hull = inside ? 3 : 4;
  return inside ? best : sum / 2;
}

// Position of the curve vertex dual to a cell, from its first three vertices.
Point2 cell_vertex(const PointConfiguration& c, const HeightVector& u, const Cell& cell) {
  return oracle::tie_point(c, u, cell.polygon[0], cell.polygon[1], cell.polygon[2]);
}

struct MetricResult {
  Shape shape = Shape::Other;
  bool ok = true;
  std::string why;
};

MetricResult metric_check(const PointConfiguration& c, const HeightVector& u, const FlagClass& fc) {
  MetricResult out;
  auto fail = [&](const std::string& why) {
    out.ok = false;
    if (out.why.empty()) out.why = why;
  };
  const Point2 origin{0, 0};
  const IndexSet top = oracle::argmax(c, u, origin);
  const auto report = classify_singularity(c, u);
  const auto& ms = report.curve.subdivision;

  if (fc.which == FlagClass::Case::A) {
    if (top != fc.circuit.indices) fail("top terms at the origin are not the circuit");
    if (top.size() != 4 || !is_circuit(c, top)) {
      fail("origin is not a four-term vertex");
      return out;
    }
    std::size_t hull = 0;
    const std::int64_t area = circuit_area(c, top, hull);
    out.shape = hull == 3 ? Shape::ATriangle : Shape::AQuadrangle;
    std::optional<std::size_t> vertex;
    for (std::size_t v = 0; v < report.curve.vertices.size(); ++v) {
      if (report.curve.vertices[v].position == origin) vertex = v;
    }
    if (!vertex) {
      fail("no curve vertex at the origin");
      return out;
    }
    const Cell& cell = ms.cells[report.curve.vertices[*vertex].cell];
    if (cell.marked != top) fail("dual cell is not the circuit");
    if (cell_vertex(c, u, cell) != origin) fail("tie point of the cell is not the origin");
    if (cell.polygon.size() != hull) fail("valence differs from the circuit hull");
    if (valence(report.curve, *vertex) != hull) fail("curve valence differs");
    if (vertex_multiplicity(c, report.curve, *vertex) != area) fail("multiplicity differs");
    if (const auto* w = std::get_if<VertexWitness>(&report.witness)) {
      if (w->multiplicity != area || w->valence != hull) fail("classifier witness differs");
    }
    if (report.kind == SingularityKind::TypeA3 && hull != 3) fail("TypeA3 on a quadrangle");
    if (report.kind == SingularityKind::TypeA4 && hull != 4) fail("TypeA4 on a triangle");
    return out;
  }

  if (top.size() < 3) fail("fewer than three terms at the origin");
  if (top.size() != 3 || !oracle::dependent(c, top)) return out;
  const LatticePoint a = c[top[0]], b = c[top[2]];
  if (gcd_length(a, b) != 2) return out;
  const std::int64_t g = gcd_length(a, b);
  const std::int64_t dx = (b.i - a.i) / g, dy = (b.j - a.j) / g;
  // unit normal steps along the curve edge are (-dy, dx)
  auto distance = [&](const Point2& p) {
    Rational t = p.x * -dy + p.y * dx;
    t /= Rational(dx * dx + dy * dy);
    return abs(t);
  };
  auto side = [&](const LatticePoint& p) { return orientation(a, b, p); };

  std::vector<std::size_t> cells;
  for (std::size_t k = 0; k < ms.cells.size(); ++k) {
    const auto& m = ms.cells[k].marked;
    if (std::includes(m.begin(), m.end(), top.begin(), top.end())) cells.push_back(k);
  }
  auto is_triangle = [&](const Cell& cell) { return cell.polygon.size() == 3 && cell.marked.size() == 4; };
  auto is_trapezoid = [&](const Cell& cell) {
    if (cell.polygon.size() != 4 || cell.marked.size() != 5) return false;
    std::set<std::int64_t> levels;
    for (std::size_t k : cell.marked) {
      if (side(c[k]) != 0) levels.insert(std::abs(side(c[k])) / g);
    }
    return levels == std::set<std::int64_t>{1};
  };
  std::set<std::size_t> marked;
  for (const auto& cell : ms.cells) marked.insert(cell.marked.begin(), cell.marked.end());
  const bool no_white = marked.size() == c.size();
  const std::size_t codim = cone_info(c, ms).codimension;

  if (cells.size() == 2 && no_white) {
    const Cell& p = ms.cells[cells[0]];
    const Cell& q = ms.cells[cells[1]];
    const Rational lp = distance(cell_vertex(c, u, p)), lq = distance(cell_vertex(c, u, q));
    if (is_triangle(p) && is_triangle(q) && codim == 1) {
      out.shape = Shape::B1;
      if (lp != lq) fail("b.1 distances " + to_string(lp) + " != " + to_string(lq));
      const auto* w = std::get_if<EdgeWitness>(&report.witness);
      if (report.kind != SingularityKind::TypeB1 || !w || w->l1 != lp || w->l2 != lq) fail("classifier disagrees on b.1");
    } else if ((is_triangle(p) && is_trapezoid(q)) || (is_trapezoid(p) && is_triangle(q))) {
      const Rational four = is_trapezoid(p) ? lp : lq;
      const Rational three = is_trapezoid(p) ? lq : lp;
      if (codim == 2) {
        out.shape = Shape::B2;
        if (!(four < three)) fail("b.2 distances " + to_string(four) + " !< " + to_string(three));
        const auto* w = std::get_if<EdgeWitness>(&report.witness);
        if (report.kind != SingularityKind::TypeB2Interior || !w || w->l1 != four || w->l2 != three) {
          fail("classifier disagrees on b.2");
        }
      }
    }
  } else if (cells.size() == 1 && no_white && codim == 2 && is_trapezoid(ms.cells[cells[0]])) {
    out.shape = Shape::B2Boundary;
    if (report.kind != SingularityKind::TypeB2Boundary) fail("classifier disagrees on boundary b.2");
  }
  return out;
}

Outcome metric_properties() {
  Check check;
  std::mt19937_64 rng(6006);
  struct Source {
    PointConfiguration config;
    FlagOfFlats flag;
    FlagClass fc;
  };
  std::vector<Source> sources;
  for (const auto& c : {fixtures::intro(), fixtures::eight_point(), fixtures::square3()}) {
    auto flags = enumerate_flags(gale_dual(coefficient_matrix(c)));
    std::shuffle(flags.begin(), flags.end(), rng);
    if (flags.size() > 1500) flags.resize(1500);
    for (auto& f : flags) sources.push_back({c, f, classify_flag(f, c)});
  }

  std::map<Shape, std::size_t> counts;
  std::map<Shape, std::vector<std::size_t>> productive;
  std::size_t samples = 0;
  auto run = [&](std::size_t k) {
    const auto& src = sources[k];
    const auto u = sampling::sample(src.flag, src.config.size(), rng);
    const auto r = metric_check(src.config, u, src.fc);
    ++samples;
    ++counts[r.shape];
    check(r.ok, std::string(shape_name(r.shape)) + ": " + r.why);
    return r.shape;
  };
  for (std::size_t k = 0; k < sources.size(); ++k) productive[run(k)].push_back(k);

  const std::vector<Shape> required{Shape::ATriangle, Shape::AQuadrangle, Shape::B1, Shape::B2};
  for (Shape s : required) {
    const auto& from = productive[s];
    for (std::size_t n = 0; counts[s] < 100 && !from.empty() && n < 20000; ++n) run(from[n % from.size()]);
    check(counts[s] >= 100, std::string("only ") + std::to_string(counts[s]) + " " + shape_name(s) + " samples");
  }
  std::ostringstream s;
  s << samples << " samples:";
  for (const auto& [shape, n] : counts) s << " " << shape_name(shape) << "=" << n;
  return finish(check, s.str());
}

// ---------------------------------------------------------------------------
// 7. Decomposition into weight class plus lineality

Outcome decomposition() {
  Check check;
  std::mt19937_64 rng(7007);
  std::size_t qualifying = 0, excluded = 0;
  const std::vector<PointConfiguration> cs{
      fixtures::unit_square(),
      fixtures::five_point(),
      fixtures::intro(),
      fixtures::area_three(),
      fixtures::eight_point(),
      PointConfiguration::from_polygon({{0, 0}, {2, 0}, {0, 1}}),
      PointConfiguration::from_polygon({{0, 0}, {2, 0}, {0, 2}}),
      PointConfiguration::from_polygon({{0, 0}, {3, 0}, {0, 1}, {3, 1}}),
  };
  for (const auto& c : cs) {
    const Matrix a = coefficient_matrix(c);
    const auto flags = enumerate_flags(gale_dual(a));
    const auto [xs, ys] = lineality_basis(c);
    for (int n = 0; n < 400; ++n) {
      const auto u = fixtures::random_integer_heights(rng, c.size(), 2);
      const auto ms = regular_subdivision(c, u);
      if (cone_info(c, ms).codimension != 1) continue;
      const auto z = unique_circuit(c, ms);
      check(z.has_value(), "codim-1 cone without circuit");
      if (!z) continue;
      check(is_circuit(c, z->indices), "reported circuit is not a circuit");

      // excluded: three boundary points, host triangle apex at minimal lattice distance
      bool expect_excluded = false;
      if (z->indices.size() == 3) {
        const LatticePoint p = c[z->indices[0]], q = c[z->indices[2]];
        std::int64_t lo = 0, hi = 0, nearest = 0;
        for (std::size_t k = 0; k < c.size(); ++k) {
          const std::int64_t o = orientation(p, q, c[k]);
          lo = std::min(lo, o);
          hi = std::max(hi, o);
          if (o != 0 && (nearest == 0 || std::abs(o) < nearest)) nearest = std::abs(o);
        }
        if (lo == 0 || hi == 0) {
          for (const auto& cell : ms.cells) {
            if (!std::includes(cell.marked.begin(), cell.marked.end(), z->indices.begin(), z->indices.end())) continue;
            for (std::size_t k : cell.polygon) {
              const std::int64_t o = std::abs(orientation(p, q, c[k]));
              if (o != 0 && o == nearest) expect_excluded = true;
            }
          }
        }
      }
      check(is_discriminant_cone(c, ms) == !expect_excluded, "discriminant test disagrees with the boundary rule");
      try {
        const auto d = decompose_weightclass_lineality(c, u, *z);
        check(!expect_excluded, "excluded cone decomposed");
        ++qualifying;
        bool exact = true;
        for (std::size_t k = 0; k < c.size(); ++k) exact = exact && u[k] == d.u_wc[k] + d.c_x * xs[k] + d.c_y * ys[k] + d.c_1;
        check(exact, "reconstruction is not exact");
        check(bergman_member_weight_classes(flags, d.u_wc), "u_wc in no closed weight class");
        check(bergman_member_circuit_oracle(a, d.u_wc), "u_wc fails the circuit oracle");
        check(regular_subdivision(c, d.u_wc) == ms, "u_wc changes the subdivision");
      } catch (const Error& e) {
        check(e.code() == ErrorCode::NotInUnion, std::string("unexpected error ") + e.what());
        check(expect_excluded, "qualifying cone rejected");
        excluded += expect_excluded;
      }
    }
  }
  check(qualifying >= 50, "only " + std::to_string(qualifying) + " qualifying cones");
  check(excluded >= 1, "no excluded cone met");
  std::ostringstream s;
  s << qualifying << " decomposed, " << excluded << " excluded cones rejected";
  return finish(check, s.str());
}

// ---------------------------------------------------------------------------
// 8. Structural invariants of dual curves

Outcome structural_invariants() {
  Check check;
  std::mt19937_64 rng(8008);
  std::size_t pairs = 0;
  for (const auto& c : fixtures::small_configs()) {
    const auto [xs, ys] = lineality_basis(c);
    std::int64_t perimeter = 0;
    const auto hull = c.polygon();
    for (std::size_t k = 0; k < hull.size(); ++k) perimeter += gcd_length(c[hull[k]], c[hull[(k + 1) % hull.size()]]);
    for (int n = 0; n < 50; ++n) {
      ++pairs;
      const auto u = n % 3 ? fixtures::random_heights(rng, c.size()) : fixtures::random_integer_heights(rng, c.size(), 2);
      const auto curve = dual_curve(c, u);
      const auto& ms = curve.subdivision;
      check(curve.vertices.size() == ms.cells.size(), "vertex count differs from cell count");
      std::map<std::pair<std::size_t, std::size_t>, int> sides;
      for (const auto& cell : ms.cells) {
        for (std::size_t k = 0; k < cell.polygon.size(); ++k) {
          const std::size_t p = cell.polygon[k], q = cell.polygon[(k + 1) % cell.polygon.size()];
          ++sides[{std::min(p, q), std::max(p, q)}];
        }
      }
      std::size_t interior = 0;
      for (const auto& [edge, n_cells] : sides) interior += n_cells == 2;
      check(curve.bounded_edges.size() == interior, "bounded edges differ from interior subdivision edges");
      std::int64_t ray_weight = 0;
      std::vector<std::pair<Rational, Rational>> sum(curve.vertices.size());
      for (const auto& e : curve.bounded_edges) {
        check(e.weight == gcd_length(c[e.dual_a], c[e.dual_b]), "edge weight differs from dual length");
        sum[e.from].first += e.weight * e.dx;
        sum[e.from].second += e.weight * e.dy;
        sum[e.to].first -= e.weight * e.dx;
        sum[e.to].second -= e.weight * e.dy;
      }
      for (const auto& r : curve.rays) {
        check(r.weight == gcd_length(c[r.dual_a], c[r.dual_b]), "ray weight differs from dual length");
        ray_weight += r.weight;
        sum[r.vertex].first += r.weight * r.dx;
        sum[r.vertex].second += r.weight * r.dy;
      }
      check(ray_weight == perimeter, "ray weights differ from the lattice perimeter");
      for (std::size_t v = 0; v < curve.vertices.size(); ++v) {
        check(sum[v].first == 0 && sum[v].second == 0, "unbalanced vertex");
        const Cell& cell = ms.cells[curve.vertices[v].cell];
        const Point2 p = cell_vertex(c, u, cell);
        check(curve.vertices[v].position == p, "vertex is not the tie point of its cell");
        check(oracle::argmax(c, u, p) == cell.marked, "cell marking differs from the tie set");
      }
      const Rational shift = fixtures::random_rational(rng);
      auto ux = u, uy = u, u1 = u;
      for (std::size_t k = 0; k < c.size(); ++k) {
        ux[k] += shift * xs[k];
        uy[k] += shift * ys[k];
        u1[k] += shift;
      }
      const auto cx = dual_curve(c, ux);
      const auto cy = dual_curve(c, uy);
      check(dual_curve(c, u1) == curve, "constant shift changes the curve");
      check(cx.vertices.size() == curve.vertices.size() && cy.vertices.size() == curve.vertices.size(),
            "translation changes the vertex count");
      if (cx.vertices.size() != curve.vertices.size() || cy.vertices.size() != curve.vertices.size()) continue;
      for (std::size_t v = 0; v < curve.vertices.size(); ++v) {
        const auto& p = curve.vertices[v].position;
        check(cx.vertices[v].position == Point2{p.x - shift, p.y}, "x-translation covariance");
        check(cy.vertices[v].position == Point2{p.x, p.y - shift}, "y-translation covariance");
      }
      check(cx.bounded_edges == curve.bounded_edges && cx.rays == curve.rays, "translation changes the edges");
    }
  }
  return finish(check, std::to_string(pairs) + " (config, heights) pairs");
}

// ---------------------------------------------------------------------------
// 9. Non-torus points

Outcome non_torus() {
  Check check;
  std::mt19937_64 rng(9009);
  const auto c = fixtures::non_torus();
  const Matrix a = coefficient_matrix_non_torus(c);
  auto flags = enumerate_flags(gale_dual(a));
  const std::size_t total = flags.size();
  std::shuffle(flags.begin(), flags.end(), rng);
  flags.resize(std::min<std::size_t>(flags.size(), 1000));
  std::size_t fat = 0, broken = 0;
  for (const auto& flag : flags) {
    const auto u = sampling::sample(flag, c.size(), rng);
    // the three-way tie on {y = 0}
    Rational top;
    IndexSet tied;
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (c[k].j != 0) continue;
      if (tied.empty() || u[k] > top) {
        top = u[k];
        tied.assign(1, k);
      } else if (u[k] == top) {
        tied.push_back(k);
      }
    }
    check(tied.size() >= 3, "sample without a three-way tie on y=0");
    const auto r = classify_non_torus(c, u);
    check(r.kind == SingularityKind::FatEnd, "kind " + std::string(to_string(r.kind)));
    if (const auto* w = std::get_if<FatEndWitness>(&r.witness)) {
      const auto& ray = r.curve.rays[w->ray];
      const Cell& cell = r.curve.subdivision.cells[r.curve.vertices[ray.vertex].cell];
      const Point2 p = cell_vertex(c, u, cell);
      check(ray.dx == 0 && ray.dy == -1, "fat end is not vertical");
      check(p.x == 0, "fat end off {x=0}");
      check(ray.weight >= 2 && ray.weight == gcd_length(c[ray.dual_a], c[ray.dual_b]), "fat end weight");
      fat += ray.weight >= 2 && p.x == 0;
    }
    // break the tie: raise one of the maximal points on y = 0
    auto v = u;
    v[tied[rng() % tied.size()]] += Rational(1, 7);
    check(classify_non_torus(c, v).kind == SingularityKind::NotSingularAtOrigin, "broken tie still singular");
    check(!bergman_member_circuit_oracle(a, v), "broken tie still in the fan");
    ++broken;
  }
  std::ostringstream s;
  s << flags.size() << " of " << total << " flags sampled: " << fat << " fat ends on {x=0}, " << broken << " broken ties rejected";
  return finish(check, s.str());
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "golden matrices", 1, golden_matrices},
      {2, "affine relations and the two-cell cone", 1, figure_two},
      {3, "intro pipeline", 1, intro_pipeline},
      {4, "Bergman triple equivalence", 60, bergman_equivalence},
      {5, "flag dichotomy and reversed statement", 60, flag_dichotomy},
      {6, "metric properties", 60, metric_properties},
      {7, "weight class plus lineality decomposition", 30, decomposition},
      {8, "structural invariants", 60, structural_invariants},
      {9, "non-torus fat ends", 5, non_torus},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.limit;
    const bool pass = o.pass && in_time;
    failed += !pass;
    std::printf("%s %d %s [%.3fs < %gs%s] %s\n", pass ? "PASS" : "FAIL", c.id, c.name, secs, c.limit,
                in_time ? "" : " exceeded", o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", int(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
