#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "nagata/scalar.hpp"

namespace nagata::configs {

using Point = std::vector<Rational>;

/// A finite labelled set of distinct points in affine n-space with exact
/// rational coordinates, optionally carrying a positive multiplicity per
/// point (empty means the uniform case, every multiplicity 1).
struct PointConfig {
  int dimension = 0;
  std::vector<Point> points;
  std::vector<int> multiplicities;
  std::string label;
  std::optional<std::uint64_t> seed;

  std::size_t size() const noexcept { return points.size(); }
  int multiplicity(std::size_t j) const { return multiplicities.empty() ? 1 : multiplicities.at(j); }

  /// Throws std::invalid_argument naming the violated invariant.
  void validate() const;

  PointConfig without_point(std::size_t j) const;
  /// Every coordinate multiplied by t (the set tS).
  PointConfig scaled(const Rational& t) const;
  /// Largest Euclidean norm of a point, in double precision.
  double max_norm() const;
};

PointConfig make_config(int dimension, std::vector<Point> points, std::string label = {});

/// r distinct integer points drawn uniformly from [-bound, bound]^n with a
/// seeded generator; collisions are re-drawn. Requires bound >= 2r.
PointConfig generic_points(int n, std::size_t r, std::uint64_t seed, std::int64_t bound = 1000);

/// The s^n lattice points {0, ..., s-1}^n in lexicographic order.
PointConfig grid_points(int n, int s);

/// {(1/2, 0), (-1/2, 0)} in two variables.
PointConfig two_point_example();

PointConfig single_point(const Point& p);

nlohmann::json to_json(const PointConfig& c);
PointConfig config_from_json(const nlohmann::json& j);

}  // namespace nagata::configs
