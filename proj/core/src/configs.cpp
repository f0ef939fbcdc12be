#include "nagata/configs.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <stdexcept>

namespace nagata::configs {
namespace {

struct PointLess {
  bool operator()(const Point& a, const Point& b) const {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        [](const Rational& x, const Rational& y) { return x < y; });
  }
};

}  // namespace

void PointConfig::validate() const {
  if (dimension < 1) throw std::invalid_argument("dimension must be >= 1");
  if (points.empty()) throw std::invalid_argument("a configuration needs at least one point");
  std::set<Point, PointLess> seen;
  for (std::size_t j = 0; j < points.size(); ++j) {
    if (points[j].size() != static_cast<std::size_t>(dimension)) {
      throw std::invalid_argument("point " + std::to_string(j) + " has " +
                                  std::to_string(points[j].size()) + " coordinates, expected " +
                                  std::to_string(dimension));
    }
    if (!seen.insert(points[j]).second) {
      throw std::invalid_argument("point " + std::to_string(j) + " duplicates an earlier point");
    }
  }
  if (!multiplicities.empty()) {
    if (multiplicities.size() != points.size()) {
      throw std::invalid_argument("multiplicities length must equal the number of points");
    }
    for (int m : multiplicities) {
      if (m < 1) throw std::invalid_argument("multiplicities must be positive");
    }
  }
}

PointConfig PointConfig::without_point(std::size_t j) const {
  if (points.size() < 2) throw std::invalid_argument("cannot remove the only point");
  PointConfig out = *this;
  out.points.erase(out.points.begin() + static_cast<std::ptrdiff_t>(j));
  if (!out.multiplicities.empty()) {
    out.multiplicities.erase(out.multiplicities.begin() + static_cast<std::ptrdiff_t>(j));
  }
  out.label += " minus point " + std::to_string(j);
  return out;
}

PointConfig PointConfig::scaled(const Rational& t) const {
  if (sgn(t) == 0) throw std::invalid_argument("scale factor must be nonzero");
  PointConfig out = *this;
  for (auto& p : out.points) {
    for (auto& x : p) x *= t;
  }
  return out;
}

double PointConfig::max_norm() const {
  double best = 0.0;
  for (const auto& p : points) {
    double s = 0.0;
    for (const auto& x : p) {
      const double v = to_double(x);
      s += v * v;
    }
    best = std::max(best, std::sqrt(s));
  }
  return best;
}

PointConfig make_config(int dimension, std::vector<Point> points, std::string label) {
  PointConfig c;
  c.dimension = dimension;
  c.points = std::move(points);
  c.label = std::move(label);
  c.validate();
  return c;
}

PointConfig generic_points(int n, std::size_t r, std::uint64_t seed, std::int64_t bound) {
  if (n < 1 || r < 1) throw std::invalid_argument("generic_points needs n >= 1 and r >= 1");
  if (bound < static_cast<std::int64_t>(2 * r)) {
    throw std::invalid_argument("bound " + std::to_string(bound) + " too small for " +
                                std::to_string(r) + " distinct points (need bound >= 2r)");
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> coord(-bound, bound);
  std::set<Point, PointLess> seen;
  std::vector<Point> points;
  while (points.size() < r) {
    Point p(static_cast<std::size_t>(n));
    for (auto& x : p) x = Rational(static_cast<long>(coord(rng)));
    if (seen.insert(p).second) points.push_back(std::move(p));
  }
  PointConfig c = make_config(n, std::move(points),
                              "generic n=" + std::to_string(n) + " r=" + std::to_string(r) +
                                  " seed=" + std::to_string(seed));
  c.seed = seed;
  return c;
}

PointConfig grid_points(int n, int s) {
  if (n < 1 || s < 1) throw std::invalid_argument("grid_points needs n >= 1 and s >= 1");
  std::vector<Point> points;
  std::vector<int> digits(static_cast<std::size_t>(n), 0);
  while (true) {
    Point p;
    for (int d : digits) p.emplace_back(d);
    points.push_back(std::move(p));
    int k = n - 1;
    while (k >= 0 && ++digits[static_cast<std::size_t>(k)] == s) {
      digits[static_cast<std::size_t>(k)] = 0;
      --k;
    }
    if (k < 0) break;
  }
  return make_config(n, std::move(points),
                     "grid n=" + std::to_string(n) + " s=" + std::to_string(s));
}

PointConfig two_point_example() {
  return make_config(2, {{Rational(1, 2), Rational(0)}, {Rational(-1, 2), Rational(0)}},
                     "two-point {(1/2,0),(-1/2,0)}");
}

PointConfig single_point(const Point& p) {
  return make_config(static_cast<int>(p.size()), {p}, "single point");
}

nlohmann::json to_json(const PointConfig& c) {
  nlohmann::json points = nlohmann::json::array();
  for (const auto& p : c.points) {
    nlohmann::json coords = nlohmann::json::array();
    for (const auto& x : p) coords.push_back(format_rational(x));
    points.push_back(std::move(coords));
  }
  nlohmann::json j = {{"dimension", c.dimension}, {"points", std::move(points)}, {"label", c.label}};
  if (!c.multiplicities.empty()) j["multiplicities"] = c.multiplicities;
  if (c.seed) j["seed"] = *c.seed;
  return j;
}

PointConfig config_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("config: expected a JSON object");
  if (!j.contains("dimension") || !j["dimension"].is_number_integer()) {
    throw std::invalid_argument("config.dimension: expected an integer");
  }
  if (!j.contains("points") || !j["points"].is_array()) {
    throw std::invalid_argument("config.points: expected an array of points");
  }
  PointConfig c;
  c.dimension = j["dimension"].get<int>();
  for (std::size_t i = 0; i < j["points"].size(); ++i) {
    const auto& p = j["points"][i];
    const std::string where = "config.points[" + std::to_string(i) + "]";
    if (!p.is_array()) throw std::invalid_argument(where + ": each point must be an array");
    Point pt;
    for (const auto& x : p) {
      if (x.is_string()) {
        try {
          pt.push_back(parse_rational(x.get<std::string>()));
        } catch (const std::invalid_argument& e) {
          throw std::invalid_argument(where + ": " + e.what());
        }
      } else if (x.is_number_integer()) {
        pt.emplace_back(static_cast<long>(x.get<std::int64_t>()));
      } else {
        throw std::invalid_argument(where + ": coordinates must be integers or \"num/den\" strings");
      }
    }
    c.points.push_back(std::move(pt));
  }
  if (j.contains("multiplicities")) {
    const auto& m = j["multiplicities"];
    if (!m.is_array() || !std::all_of(m.begin(), m.end(), [](const auto& x) { return x.is_number_integer(); })) {
      throw std::invalid_argument("config.multiplicities: expected an array of integers");
    }
    c.multiplicities = m.get<std::vector<int>>();
  }
  if (j.contains("label")) {
    if (!j["label"].is_string()) throw std::invalid_argument("config.label: expected a string");
    c.label = j["label"].get<std::string>();
  }
  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned()) throw std::invalid_argument("config.seed: expected a non-negative integer");
    c.seed = j["seed"].get<std::uint64_t>();
  }
  try {
    c.validate();
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(std::string("config: ") + e.what());
  }
  return c;
}

}  // namespace nagata::configs
