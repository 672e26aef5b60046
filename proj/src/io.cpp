#include "tropsing/io.hpp"

#include "tropsing/error.hpp"

namespace tropsing {

namespace {

[[noreturn]] void bad(const std::string& why) { throw Error(ErrorCode::ParseError, why); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

template <class T>
std::optional<T> optional_field(const Json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

Json witness_json(const SingularityWitness& w) {
  Json j;
  if (const auto* v = std::get_if<VertexWitness>(&w)) {
    j["witness"] = "vertex";
    j["vertex"] = v->vertex;
    j["cell"] = v->cell;
    j["multiplicity"] = v->multiplicity;
    j["valence"] = v->valence;
    j["circuit"] = v->circuit;
  } else if (const auto* e = std::get_if<EdgeWitness>(&w)) {
    j["witness"] = "edge";
    j["on_ray"] = e->on_ray;
    j["edge"] = e->edge;
    j["circuit"] = e->circuit;
    j["first"] = e->first == kNoVertex ? Json() : Json(e->first);
    j["second"] = e->second == kNoVertex ? Json() : Json(e->second);
    j["l1"] = e->l1;
    j["l2"] = e->l2;
    j["lambda"] = e->lambda;
    j["mu"] = e->mu;
    j["nu"] = e->nu;
  } else if (const auto* f = std::get_if<FatEndWitness>(&w)) {
    j["witness"] = "fat_end";
    j["ray"] = f->ray;
    j["vertex"] = f->vertex;
    j["weight"] = f->weight;
    j["valence"] = f->valence;
    j["multiplicity"] = f->multiplicity;
    j["maximal"] = f->maximal;
  } else {
    j["witness"] = "none";
  }
  return j;
}

SingularityWitness witness_from_json(const Json& j) {
  const std::string kind = field(j, "witness").get<std::string>();
  if (kind == "vertex") {
    return VertexWitness{field(j, "vertex").get<std::size_t>(), field(j, "cell").get<std::size_t>(),
                         field(j, "multiplicity").get<std::int64_t>(), field(j, "valence").get<std::size_t>(),
                         field(j, "circuit").get<Circuit>()};
  }
  if (kind == "edge") {
    EdgeWitness e;
    e.on_ray = field(j, "on_ray").get<bool>();
    e.edge = field(j, "edge").get<std::size_t>();
    e.circuit = field(j, "circuit").get<Circuit>();
    e.first = field(j, "first").is_null() ? kNoVertex : j.at("first").get<std::size_t>();
    e.second = field(j, "second").is_null() ? kNoVertex : j.at("second").get<std::size_t>();
    e.l1 = field(j, "l1").get<Rational>();
    e.l2 = field(j, "l2").get<Rational>();
    e.lambda = field(j, "lambda").get<Rational>();
    e.mu = field(j, "mu").get<Rational>();
    e.nu = field(j, "nu").get<Rational>();
    return e;
  }
  if (kind == "fat_end") {
    return FatEndWitness{field(j, "ray").get<std::size_t>(),        field(j, "vertex").get<std::size_t>(),
                         field(j, "weight").get<std::int64_t>(),    field(j, "valence").get<std::size_t>(),
                         field(j, "multiplicity").get<std::int64_t>(), field(j, "maximal").get<bool>()};
  }
  if (kind == "none") return std::monostate{};
  bad("unknown witness '" + kind + "'");
}

CircuitKind circuit_kind_from_string(const std::string& s) {
  if (s == "A") return CircuitKind::A;
  if (s == "B") return CircuitKind::B;
  if (s == "C") return CircuitKind::C;
  bad("unknown circuit kind '" + s + "'");
}

}  // namespace

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  bad("rationals are strings or integers, got " + j.dump());
}

SingularityKind singularity_kind_from_string(std::string_view name) {
  for (auto kind : {SingularityKind::TypeA3, SingularityKind::TypeA4, SingularityKind::TypeB1,
                    SingularityKind::TypeB2Interior, SingularityKind::TypeB2Boundary, SingularityKind::FatEnd,
                    SingularityKind::NonMaximal, SingularityKind::NotSingularAtOrigin, SingularityKind::NonGeneric}) {
    if (to_string(kind) == name) return kind;
  }
  bad("unknown singularity kind '" + std::string(name) + "'");
}

void to_json(Json& j, const LatticePoint& p) { j = Json::array({p.i, p.j}); }
void from_json(const Json& j, LatticePoint& p) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer()) {
    bad("points are [i, j] integer pairs, got " + j.dump());
  }
  p = {j[0].get<std::int64_t>(), j[1].get<std::int64_t>()};
}

void to_json(Json& j, const Point2& p) { j = Json::array({p.x, p.y}); }
void from_json(const Json& j, Point2& p) {
  if (!j.is_array() || j.size() != 2) bad("a point is a pair of rationals, got " + j.dump());
  p = {rational_from_json(j[0]), rational_from_json(j[1])};
}

void to_json(Json& j, const Matrix& m) {
  j = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) j.push_back(m.row(r));
}
void from_json(const Json& j, Matrix& m) {
  std::vector<RationalVector> rows = j.get<std::vector<RationalVector>>();
  m = Matrix::from_rows(rows, rows.empty() ? 0 : rows.front().size());
}

void to_json(Json& j, const Cell& c) { j = {{"polygon", c.polygon}, {"marked", c.marked}}; }
void from_json(const Json& j, Cell& c) {
  c.polygon = field(j, "polygon").get<std::vector<std::size_t>>();
  c.marked = field(j, "marked").get<IndexSet>();
}

void to_json(Json& j, const MarkedSubdivision& ms) { j = {{"cells", ms.cells}}; }
void from_json(const Json& j, MarkedSubdivision& ms) { ms.cells = field(j, "cells").get<std::vector<Cell>>(); }

void to_json(Json& j, const CurveVertex& v) { j = {{"position", v.position}, {"cell", v.cell}}; }
void from_json(const Json& j, CurveVertex& v) {
  v.position = field(j, "position").get<Point2>();
  v.cell = field(j, "cell").get<std::size_t>();
}

void to_json(Json& j, const CurveEdge& e) {
  j = {{"from", e.from},
       {"to", e.to},
       {"direction", {e.dx, e.dy}},
       {"weight", e.weight},
       {"dual", {e.dual_a, e.dual_b}}};
}
void from_json(const Json& j, CurveEdge& e) {
  e.from = field(j, "from").get<std::size_t>();
  e.to = field(j, "to").get<std::size_t>();
  const auto d = field(j, "direction").get<std::array<std::int64_t, 2>>();
  e.dx = d[0];
  e.dy = d[1];
  e.weight = field(j, "weight").get<std::int64_t>();
  const auto dual = field(j, "dual").get<std::array<std::size_t, 2>>();
  e.dual_a = dual[0];
  e.dual_b = dual[1];
}

void to_json(Json& j, const CurveRay& r) {
  j = {{"vertex", r.vertex}, {"direction", {r.dx, r.dy}}, {"weight", r.weight}, {"dual", {r.dual_a, r.dual_b}}};
}
void from_json(const Json& j, CurveRay& r) {
  r.vertex = field(j, "vertex").get<std::size_t>();
  const auto d = field(j, "direction").get<std::array<std::int64_t, 2>>();
  r.dx = d[0];
  r.dy = d[1];
  r.weight = field(j, "weight").get<std::int64_t>();
  const auto dual = field(j, "dual").get<std::array<std::size_t, 2>>();
  r.dual_a = dual[0];
  r.dual_b = dual[1];
}

void to_json(Json& j, const TropicalCurve& c) {
  j = {{"vertices", c.vertices}, {"bounded_edges", c.bounded_edges}, {"rays", c.rays}, {"subdivision", c.subdivision}};
}
void from_json(const Json& j, TropicalCurve& c) {
  c.vertices = field(j, "vertices").get<std::vector<CurveVertex>>();
  c.bounded_edges = field(j, "bounded_edges").get<std::vector<CurveEdge>>();
  c.rays = field(j, "rays").get<std::vector<CurveRay>>();
  c.subdivision = field(j, "subdivision").get<MarkedSubdivision>();
}

void to_json(Json& j, const Circuit& c) { j = {{"indices", c.indices}, {"kind", std::string(1, to_char(c.kind))}}; }
void from_json(const Json& j, Circuit& c) {
  c.indices = field(j, "indices").get<IndexSet>();
  c.kind = circuit_kind_from_string(field(j, "kind").get<std::string>());
}

void to_json(Json& j, const FlagOfFlats& f) { j = {{"flats", f.flats}}; }
void from_json(const Json& j, FlagOfFlats& f) { f.flats = field(j, "flats").get<std::vector<IndexSet>>(); }

void to_json(Json& j, const Decomposition& d) {
  j = {{"u_wc", d.u_wc}, {"c_x", d.c_x}, {"c_y", d.c_y}, {"c_1", d.c_1}, {"parallel_pair", d.parallel_pair}};
}
void from_json(const Json& j, Decomposition& d) {
  d.u_wc = field(j, "u_wc").get<HeightVector>();
  d.c_x = field(j, "c_x").get<Rational>();
  d.c_y = field(j, "c_y").get<Rational>();
  d.c_1 = field(j, "c_1").get<Rational>();
  d.parallel_pair = field(j, "parallel_pair").get<bool>();
}

void to_json(Json& j, const SingularityReport& r) {
  j = witness_json(r.witness);
  j["kind"] = to_string(r.kind);
  j["curve"] = r.curve;
}
void from_json(const Json& j, SingularityReport& r) {
  r.kind = singularity_kind_from_string(field(j, "kind").get<std::string>());
  r.witness = witness_from_json(j);
  r.curve = field(j, "curve").get<TropicalCurve>();
}

void to_json(Json& j, const PuiseuxScalar& a) { j = to_string(a); }
void from_json(const Json& j, PuiseuxScalar& a) {
  if (j.is_number_integer()) {
    a = PuiseuxScalar(Rational(j.get<long>()));
    return;
  }
  if (!j.is_string()) bad("series are strings, got " + j.dump());
  a = parse_puiseux(j.get<std::string>());
}

void to_json(Json& j, const JobSpec& s) {
  j = {{"schema", kSchema}, {"points", s.points}};
  if (s.heights) j["heights"] = *s.heights;
  if (s.flag) j["flag"] = *s.flag;
  if (s.circuit) j["circuit"] = *s.circuit;
  if (s.point) j["point"] = *s.point;
  if (s.coefficients) j["coefficients"] = *s.coefficients;
  if (s.exponents) j["exponents"] = *s.exponents;
  if (s.non_torus) j["non_torus"] = true;
}
void from_json(const Json& j, JobSpec& s) {
  if (!j.is_object()) bad("a job is a JSON object");
  if (j.contains("schema") && j.at("schema") != kSchema) bad("unsupported schema " + j.at("schema").dump());
  s.points = field(j, "points").get<std::vector<LatticePoint>>();
  s.heights = optional_field<HeightVector>(j, "heights");
  s.flag = optional_field<std::vector<IndexSet>>(j, "flag");
  s.circuit = optional_field<IndexSet>(j, "circuit");
  s.point = optional_field<Point2>(j, "point");
  s.coefficients = optional_field<std::vector<PuiseuxScalar>>(j, "coefficients");
  s.exponents = optional_field<std::vector<Rational>>(j, "exponents");
  s.non_torus = j.value("non_torus", false);
  if (s.heights && s.heights->size() != s.points.size()) bad("heights and points differ in length");
  if (s.coefficients && s.coefficients->size() != s.points.size()) {
    bad("coefficients and points differ in length");
  }
}

JobSpec parse_job(std::string_view text) {
  try {
    return Json::parse(text).get<JobSpec>();
  } catch (const Json::exception& e) {
    bad(std::string("invalid JSON job: ") + e.what());
  }
}

}  // namespace tropsing

namespace nlohmann {

void adl_serializer<tropsing::PointConfiguration>::to_json(json& j, const tropsing::PointConfiguration& c) {
  j = {{"points", c.points()}};
  if (!c.is_complete()) j["complete"] = false;
}

tropsing::PointConfiguration adl_serializer<tropsing::PointConfiguration>::from_json(const json& j) {
  auto points = tropsing::field(j, "points").get<std::vector<tropsing::LatticePoint>>();
  if (j.value("complete", true)) return tropsing::PointConfiguration(std::move(points));
  return tropsing::PointConfiguration::relaxed(std::move(points));
}

void adl_serializer<tropsing::PuiseuxPolynomial>::to_json(json& j, const tropsing::PuiseuxPolynomial& f) {
  j = json(f.config);
  j["coefficients"] = f.coefficients;
}

tropsing::PuiseuxPolynomial adl_serializer<tropsing::PuiseuxPolynomial>::from_json(const json& j) {
  const auto points = tropsing::field(j, "points").get<std::vector<tropsing::LatticePoint>>();
  auto given = tropsing::field(j, "coefficients").get<std::vector<tropsing::PuiseuxScalar>>();
  if (given.size() != points.size()) tropsing::bad("one coefficient per point");
  tropsing::PuiseuxPolynomial f{j.get<tropsing::PointConfiguration>(), {}};
  f.coefficients = tropsing::align_to_config(f.config, points, std::move(given));
  return f;
}

}  // namespace nlohmann
