#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "json.hpp"

#include "acute/acute.hpp"

namespace acute::testing {

inline std::string fixture_path(const std::string& name) { return std::string(ACUTE_FIXTURE_DIR) + "/" + name + ".json"; }

inline nlohmann::json oracle(const std::string& name) {
  std::ifstream in(std::string(ACUTE_ORACLE_DIR) + "/" + name);
  if (!in) throw std::runtime_error("missing oracle " + name);
  return nlohmann::json::parse(in);
}

/// Random valid triangle with sides in (lo, hi).
inline SphericalTriangle random_triangle(std::mt19937_64& rng, double lo = 0.05, double hi = 3.0) {
  std::uniform_real_distribution<double> U(lo, hi);
  for (;;) {
    const double a = U(rng), b = U(rng), c = U(rng);
    if (a < b + c - 1e-3 && b < c + a - 1e-3 && c < a + b - 1e-3 && a + b + c < 2 * pi - 1e-3) {
      return SphericalTriangle::from_sides(a, b, c);
    }
  }
}

/// Random triangle with every angle below pi/2 - margin.
inline SphericalTriangle random_acute(std::mt19937_64& rng, double margin = 1e-3) {
  std::uniform_real_distribution<double> U(0.05, pi / 2 - margin);
  for (;;) {
    const double A = U(rng), B = U(rng), C = U(rng);
    if (A + B + C <= pi + 1e-3) continue;
    if (pi - A >= (pi - B) + (pi - C) || pi - B >= (pi - C) + (pi - A) || pi - C >= (pi - A) + (pi - B)) continue;
    return SphericalTriangle::from_angles(A, B, C);
  }
}

}  // namespace acute::testing
