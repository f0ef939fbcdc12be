#include <gtest/gtest.h>

#include <set>

#include "nagata/configs.hpp"

using namespace nagata;
using namespace nagata::configs;

namespace {

Point pt(std::initializer_list<long> xs) {
  Point p;
  for (long x : xs) p.emplace_back(x);
  return p;
}

}  // namespace

TEST(GenericPoints, SinglePointInRange) {
  const auto c = generic_points(2, 1, 0, 1000);
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c.dimension, 2);
  for (const auto& x : c.points[0]) {
    EXPECT_EQ(x.get_den(), 1);
    EXPECT_LE(abs(x), 1000);
  }
}

TEST(GenericPoints, DistinctAndDeterministic) {
  const auto a = generic_points(2, 9, 7, 1000);
  const auto b = generic_points(2, 9, 7, 1000);
  ASSERT_EQ(a.size(), 9u);
  std::set<std::vector<std::string>> seen;
  for (const auto& p : a.points) {
    std::vector<std::string> key;
    for (const auto& x : p) key.push_back(x.get_str());
    seen.insert(key);
  }
  EXPECT_EQ(seen.size(), 9u);
  EXPECT_EQ(a.points, b.points);
  EXPECT_NE(a.points, generic_points(2, 9, 8, 1000).points);
  ASSERT_TRUE(a.seed.has_value());
  EXPECT_EQ(*a.seed, 7u);
}

TEST(GenericPoints, TightBoundStillDistinct) {
  // bound = 2r in one dimension: 17 slots for 4 points, so collisions are common.
  const auto c = generic_points(1, 4, 3, 8);
  std::set<std::string> seen;
  for (const auto& p : c.points) seen.insert(p[0].get_str());
  EXPECT_EQ(seen.size(), 4u);
  EXPECT_THROW(generic_points(2, 10, 0, 19), std::invalid_argument);
  EXPECT_THROW(generic_points(0, 1, 0), std::invalid_argument);
  EXPECT_THROW(generic_points(2, 0, 0), std::invalid_argument);
}

TEST(GridPoints, Enumeration) {
  const auto g = grid_points(2, 2);
  EXPECT_EQ(g.points, (std::vector<Point>{pt({0, 0}), pt({0, 1}), pt({1, 0}), pt({1, 1})}));
  EXPECT_EQ(grid_points(1, 3).points, (std::vector<Point>{pt({0}), pt({1}), pt({2})}));
  EXPECT_EQ(grid_points(2, 4).size(), 16u);
  EXPECT_EQ(grid_points(3, 2).size(), 8u);
}

TEST(TwoPointExample, Points) {
  const auto c = two_point_example();
  EXPECT_EQ(c.dimension, 2);
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c.points[0], (Point{Rational(1, 2), Rational(0)}));
  EXPECT_EQ(c.points[1], (Point{Rational(-1, 2), Rational(0)}));
}

TEST(PointConfig, ValidationNamesTheProblem) {
  try {
    make_config(2, {pt({1, 2}), pt({1, 2})});
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("duplicate"), std::string::npos);
  }
  EXPECT_THROW(make_config(2, {pt({1, 2}), pt({1})}), std::invalid_argument);
  EXPECT_THROW(make_config(2, {}), std::invalid_argument);
  auto weighted = make_config(2, {pt({0, 0}), pt({1, 0})});
  weighted.multiplicities = {2};
  EXPECT_THROW(weighted.validate(), std::invalid_argument);
  weighted.multiplicities = {2, 0};
  EXPECT_THROW(weighted.validate(), std::invalid_argument);
  weighted.multiplicities = {2, 1};
  EXPECT_NO_THROW(weighted.validate());
  EXPECT_EQ(weighted.multiplicity(0), 2);
}

TEST(PointConfig, ScaledAndWithout) {
  const auto c = two_point_example().scaled(Rational(1, 10));
  EXPECT_EQ(c.points[0][0], Rational(1, 20));
  EXPECT_DOUBLE_EQ(c.max_norm(), 0.05);
  EXPECT_THROW(two_point_example().scaled(0), std::invalid_argument);
  const auto w = grid_points(2, 2).without_point(1);
  EXPECT_EQ(w.points, (std::vector<Point>{pt({0, 0}), pt({1, 0}), pt({1, 1})}));
  EXPECT_THROW(single_point(pt({0, 0})).without_point(0), std::invalid_argument);
}

TEST(PointConfig, JsonRoundTrip) {
  auto c = generic_points(3, 5, 42);
  c.multiplicities = {1, 2, 3, 1, 1};
  const auto j = to_json(c);
  EXPECT_EQ(j["points"][0][0].get<std::string>(), c.points[0][0].get_str());
  const auto back = config_from_json(j);
  EXPECT_EQ(back.points, c.points);
  EXPECT_EQ(back.multiplicities, c.multiplicities);
  EXPECT_EQ(back.seed, c.seed);
  EXPECT_EQ(back.label, c.label);

  const auto mixed = config_from_json(nlohmann::json::parse(R"({"dimension":2,"points":[[1,"-1/2"],["3/6",0]]})"));
  EXPECT_EQ(mixed.points[1][0], Rational(1, 2));
}

TEST(PointConfig, JsonErrorsNameTheField) {
  const auto expect_field = [](const char* text, const char* field) {
    try {
      config_from_json(nlohmann::json::parse(text));
      ADD_FAILURE() << text;
    } catch (const std::invalid_argument& e) {
      EXPECT_NE(std::string(e.what()).find(field), std::string::npos) << e.what();
    }
  };
  expect_field(R"({"points":[[1,2]]})", "dimension");
  expect_field(R"({"dimension":2})", "points");
  expect_field(R"({"dimension":2,"points":[[1,"x"]]})", "points");
  expect_field(R"({"dimension":2,"points":[[1,2]],"multiplicities":[0]})", "multiplicities");
  expect_field(R"({"dimension":2,"points":[[1,2]],"multiplicities":["a"]})", "multiplicities");
  expect_field(R"({"dimension":2,"points":[[1,2]],"seed":-1})", "seed");
}
