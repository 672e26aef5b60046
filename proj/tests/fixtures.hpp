#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <string>
#include <vector>

#include "tropsing/lattice.hpp"
#include "tropsing/rational.hpp"

namespace fixtures {

using tropsing::LatticePoint;
using tropsing::PointConfiguration;
using tropsing::Rational;
using tropsing::RationalVector;

inline RationalVector vec(std::initializer_list<long> xs) {
  RationalVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline RationalVector qvec(std::initializer_list<const char*> xs) {
  RationalVector v;
  for (const char* x : xs) v.push_back(tropsing::parse_rational(x));
  return v;
}

// [(0,0),(1,0),(2,0),(0,1),(1,1),(1,2)]
inline PointConfiguration intro() {
  return PointConfiguration({{0, 0}, {1, 0}, {2, 0}, {0, 1}, {1, 1}, {1, 2}});
}
inline RationalVector intro_heights() { return vec({-1, 0, -1, -3, 0, 0}); }

// (0,0),(1,0),(0,1),(1,1),(1,2)
inline PointConfiguration five_point() {
  return PointConfiguration({{0, 0}, {1, 0}, {0, 1}, {1, 1}, {1, 2}});
}

inline PointConfiguration unit_triangle() { return PointConfiguration({{0, 0}, {1, 0}, {0, 1}}); }
inline PointConfiguration unit_square() { return PointConfiguration({{0, 0}, {1, 0}, {0, 1}, {1, 1}}); }

// conv{(0,0),(2,1),(1,2)}: three vertices and (1,1).
inline PointConfiguration area_three() { return PointConfiguration({{0, 0}, {2, 1}, {1, 2}, {1, 1}}); }

// conv{(0,0),(1,0),(2,1),(2,2),(0,2)}
inline PointConfiguration eight_point() {
  return PointConfiguration({{0, 0}, {1, 0}, {0, 1}, {1, 1}, {2, 1}, {0, 2}, {1, 2}, {2, 2}});
}

// conv{(0,0),(2,0),(2,2),(0,2)}
inline PointConfiguration square3() { return PointConfiguration::from_polygon({{0, 0}, {2, 0}, {2, 2}, {0, 2}}); }

// Four points on {j=0}, four on {j=1}, one above.
inline PointConfiguration non_torus() {
  return PointConfiguration::from_polygon({{0, 0}, {3, 0}, {3, 1}, {1, 2}, {0, 1}});
}

/// Small polygons used by randomized property tests.
inline std::vector<PointConfiguration> small_configs() {
  return {
      unit_triangle(),
      unit_square(),
      five_point(),
      intro(),
      area_three(),
      eight_point(),
      square3(),
      PointConfiguration::from_polygon({{0, 0}, {3, 0}, {0, 3}}),
      PointConfiguration::from_polygon({{0, 0}, {2, 0}, {0, 2}}),
      PointConfiguration::from_polygon({{0, 0}, {3, 0}, {0, 1}, {3, 1}}),
      PointConfiguration::from_polygon({{0, 0}, {2, 1}, {1, 3}, {0, 2}}),
  };
}

inline Rational random_rational(std::mt19937_64& rng, long range = 6, long den = 3) {
  std::uniform_int_distribution<long> num(-range * den, range * den);
  std::uniform_int_distribution<long> d(1, den);
  Rational q(num(rng), d(rng));
  q.canonicalize();
  return q;
}

inline RationalVector random_heights(std::mt19937_64& rng, std::size_t s, long range = 6, long den = 3) {
  RationalVector u(s);
  for (auto& x : u) x = random_rational(rng, range, den);
  return u;
}

inline RationalVector random_integer_heights(std::mt19937_64& rng, std::size_t s, long range = 3) {
  std::uniform_int_distribution<long> d(-range, range);
  RationalVector u(s);
  for (auto& x : u) x = d(rng);
  return u;
}

inline std::size_t idx(const PointConfiguration& c, std::int64_t i, std::int64_t j) {
  return c.index_of(LatticePoint{i, j});
}

}  // namespace fixtures
