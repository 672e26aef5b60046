#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "tropsing/lifts.hpp"
#include "tropsing/singularity.hpp"

namespace tropsing {

using Json = nlohmann::json;

inline constexpr std::string_view kSchema = "tropsing/1";

/// Input of one CLI job.
struct JobSpec {
  std::vector<LatticePoint> points;
  std::optional<HeightVector> heights;
  std::optional<std::vector<IndexSet>> flag;  // blocks, lowest first
  std::optional<IndexSet> circuit;
  std::optional<Point2> point;
  std::optional<std::vector<PuiseuxScalar>> coefficients;
  std::optional<std::vector<Rational>> exponents;
  bool non_torus = false;

  friend bool operator==(const JobSpec&, const JobSpec&) = default;
};

/// Parses a JSON document; every malformed input throws Error(ParseError).
JobSpec parse_job(std::string_view text);

/// Reads a rational from a JSON string or integer.
Rational rational_from_json(const Json& j);

void to_json(Json& j, const LatticePoint& p);
void from_json(const Json& j, LatticePoint& p);
void to_json(Json& j, const Point2& p);
void from_json(const Json& j, Point2& p);
void to_json(Json& j, const Matrix& m);
void from_json(const Json& j, Matrix& m);
void to_json(Json& j, const Cell& c);
void from_json(const Json& j, Cell& c);
void to_json(Json& j, const MarkedSubdivision& ms);
void from_json(const Json& j, MarkedSubdivision& ms);
void to_json(Json& j, const CurveVertex& v);
void from_json(const Json& j, CurveVertex& v);
void to_json(Json& j, const CurveEdge& e);
void from_json(const Json& j, CurveEdge& e);
void to_json(Json& j, const CurveRay& r);
void from_json(const Json& j, CurveRay& r);
void to_json(Json& j, const TropicalCurve& c);
void from_json(const Json& j, TropicalCurve& c);
void to_json(Json& j, const Circuit& c);
void from_json(const Json& j, Circuit& c);
void to_json(Json& j, const FlagOfFlats& f);
void from_json(const Json& j, FlagOfFlats& f);
void to_json(Json& j, const Decomposition& d);
void from_json(const Json& j, Decomposition& d);
void to_json(Json& j, const SingularityReport& r);
void from_json(const Json& j, SingularityReport& r);
void to_json(Json& j, const PuiseuxScalar& a);
void from_json(const Json& j, PuiseuxScalar& a);
void to_json(Json& j, const JobSpec& s);
void from_json(const Json& j, JobSpec& s);

SingularityKind singularity_kind_from_string(std::string_view name);

/// Reorders values given along `points` into the canonical order of `config`.
template <class T>
std::vector<T> align_to_config(const PointConfiguration& config, const std::vector<LatticePoint>& points,
                               std::vector<T> values) {
  std::vector<T> out(values.size());
  for (std::size_t k = 0; k < points.size(); ++k) out[config.index_of(points[k])] = std::move(values[k]);
  return out;
}

}  // namespace tropsing

namespace nlohmann {

template <>
struct adl_serializer<tropsing::Rational> {
  static void to_json(json& j, const tropsing::Rational& q) { j = tropsing::to_string(q); }
  static void from_json(const json& j, tropsing::Rational& q) { q = tropsing::rational_from_json(j); }
};

template <>
struct adl_serializer<tropsing::PointConfiguration> {
  static void to_json(json& j, const tropsing::PointConfiguration& c);
  static tropsing::PointConfiguration from_json(const json& j);
};

template <>
struct adl_serializer<tropsing::PuiseuxPolynomial> {
  static void to_json(json& j, const tropsing::PuiseuxPolynomial& f);
  static tropsing::PuiseuxPolynomial from_json(const json& j);
};

}  // namespace nlohmann
