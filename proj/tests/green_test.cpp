#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "nagata/elimination.hpp"
#include "nagata/fatpoints.hpp"
#include "nagata/green.hpp"
#include "nagata/invariants.hpp"

using namespace nagata;
using namespace nagata::green;

namespace {

// Ball automorphism in its textbook form:
// phi_a(z) = (a - P_a z - s_a Q_a z) / (1 - <z, a>).
double automorphism_oracle(const ComplexPoint& a, const ComplexPoint& z) {
  Complex za(0, 0);
  double aa = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    za += z[i] * std::conj(a[i]);
    aa += std::norm(a[i]);
  }
  const double s = std::sqrt(1 - aa);
  double num = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Complex pz = aa > 0 ? za / aa * a[i] : Complex(0, 0);
    const Complex qz = z[i] - pz;
    num += std::norm(a[i] - pz - s * qz);
  }
  return 0.5 * std::log(num) - std::log(std::abs(1.0 - za));
}

ComplexPoint random_in_ball(std::mt19937_64& rng, int n, double max_norm) {
  std::normal_distribution<double> g(0, 1);
  std::uniform_real_distribution<double> u(0, 1);
  ComplexPoint z(static_cast<std::size_t>(n));
  double s = 0;
  for (auto& c : z) {
    c = {g(rng), g(rng)};
    s += std::norm(c);
  }
  const double r = max_norm * std::pow(u(rng), 1.0 / (2 * n)) / std::sqrt(s);
  for (auto& c : z) c *= r;
  return z;
}

double euclid(const ComplexPoint& z) { return norm(z, DomainMode::ball); }

ApproximantOptions polydisc_options() {
  ApproximantOptions o;
  o.mode = DomainMode::polydisc;
  return o;
}

}  // namespace

TEST(BallGreen, OriginIsLogNorm) {
  EXPECT_NEAR(ball_green_single_pole({{0, 0}, {0, 0}}, {{0.5, 0}, {0, 0}}), std::log(0.5), 1e-15);
  std::mt19937_64 rng(1);
  for (int i = 0; i < 200; ++i) {
    const auto z = random_in_ball(rng, 3, 1.0);
    EXPECT_NEAR(ball_green_single_pole(ComplexPoint(3), z), std::log(euclid(z)), 1e-12);
  }
}

TEST(BallGreen, MatchesAutomorphismOracle) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 500; ++i) {
    const int n = 1 + i % 3;
    const auto a = random_in_ball(rng, n, 0.9);
    const auto z = random_in_ball(rng, n, 1.0);
    EXPECT_NEAR(ball_green_single_pole(a, z), automorphism_oracle(a, z), 1e-9);
    EXPECT_LE(ball_green_single_pole(a, z), 0.0);
  }
}

TEST(BallGreen, BoundaryAndPole) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    const auto a = random_in_ball(rng, 2, 0.95);
    auto z = random_in_ball(rng, 2, 1.0);
    const double s = euclid(z);
    for (auto& c : z) c /= s;
    EXPECT_NEAR(ball_green_single_pole(a, z), 0.0, 1e-12);
  }
  const ComplexPoint a{{0.5, 0}, {0, 0}};
  EXPECT_TRUE(is_pole_value(ball_green_single_pole(a, a)));
  // Logarithmic pole: g(a, a + eps e2) / ln(eps) -> 1.
  double previous = 10;
  for (double eps : {1e-3, 1e-6, 1e-9, 1e-12}) {
    const double ratio = ball_green_single_pole(a, {{0.5, 0}, {eps, 0}}) / std::log(eps);
    EXPECT_LT(std::abs(ratio - 1), std::abs(previous - 1) + 1e-15);
    previous = ratio;
  }
  EXPECT_NEAR(previous, 1.0, 0.02);
  EXPECT_THROW(ball_green_single_pole({{1, 0}, {0, 0}}, {{0, 0}, {0, 0}}), std::invalid_argument);
  EXPECT_THROW(ball_green_single_pole(a, {{NAN, 0}, {0, 0}}), std::invalid_argument);
  EXPECT_THROW(ball_green_single_pole(a, {{2, 0}, {0, 0}}), std::invalid_argument);
}

TEST(PolydiscExact, Examples) {
  // Small t: at (rho, 0) the exact value approaches the limit 2 ln rho.
  const double rho = 0.4;
  EXPECT_NEAR(polydisc_two_pole_exact({1e-6, 0}, {{rho, 0}, {0, 0}}), 2 * std::log(rho), 1e-10);
  EXPECT_DOUBLE_EQ(polydisc_two_pole_limit({{rho, 0}, {0, 0}}), 2 * std::log(rho));
  EXPECT_NEAR(polydisc_two_pole_exact({0.1, 0}, {{0.2, 0}, {1.0 - 1e-12, 0}}), 0.0, 1e-9);
  EXPECT_DOUBLE_EQ(polydisc_two_pole_exact({1e-3, 0}, {{0, 0}, {rho, 0}}), std::log(rho));
  EXPECT_TRUE(is_pole_value(polydisc_two_pole_exact({0.2, 0}, {{0.1, 0}, {0, 0}})));
  EXPECT_TRUE(is_pole_value(polydisc_two_pole_exact({0.2, 0}, {{-0.1, 0}, {0, 0}})));
  EXPECT_THROW(polydisc_two_pole_exact({2, 0}, {{0, 0}, {0, 0}}), std::invalid_argument);
}

TEST(PolydiscExact, SandwichOnAnnulusForSmallT) {
  // 2 ln|z| <= g <= ln|z| in the sup norm, up to the O(t^2/|z|^2) correction.
  const auto pts = annulus_points(2, {}, SphereKind::sup_norm, 4);
  for (const auto& z : pts) {
    const double g = polydisc_two_pole_exact({0.01, 0}, z);
    const double r = norm(z, DomainMode::polydisc);
    EXPECT_LE(g, std::log(r) + 1e-12);
    EXPECT_GE(g, 2 * std::log(r) - 1e-3);
  }
}

TEST(Approximant, SinglePoleAtOrigin) {
  const auto origin = configs::single_point({0, 0});
  const auto g = build_approximant(origin, 1, 1, 1, {});
  EXPECT_EQ(g.basis_size, 2u);
  std::mt19937_64 rng(4);
  for (int i = 0; i < 300; ++i) {
    const auto z = random_in_ball(rng, 2, 1.0);
    const double v = evaluate_approximant(g, z);
    EXPECT_LE(v, std::log(euclid(z)) + g.epsilon_sample + 1e-12);
    EXPECT_GE(v, std::log(std::abs(z[0])) - g.epsilon_sample - 1e-12);
  }
  // On the z1-axis the approximant recovers ln||z||.
  for (double rho : {0.9, 0.5, 0.1}) {
    EXPECT_GE(evaluate_approximant(g, {{rho, 0}, {0, 0}}), std::log(rho) - g.epsilon_sample - 1e-12);
  }
  EXPECT_TRUE(is_pole_value(evaluate_approximant(g, {{0, 0}, {0, 0}})));
}

TEST(Approximant, TwoPointKernel) {
  const Rational t(1, 10);
  const auto g = build_approximant(configs::two_point_example(), t, 1, 2, polydisc_options());
  ASSERT_EQ(g.basis_size, 4u);
  EXPECT_EQ(g.polynomials.size(), 4u + 32u);
  for (const auto& p : g.polynomials) {
    for (const auto& pole : g.poles) EXPECT_LT(std::abs(p(pole)), 1e-14);
  }
  // (z1 - t/2)(z1 + t/2) and z2 lie in the exact kernel of the scaled system.
  const auto scaled = configs::two_point_example().scaled(t);
  const auto ks = fatpoints::kernel_polynomials<Rational>(
      fatpoints::InterpolationProblem::uniform(scaled, 1, 2, exactla::ScalarDomain::rational()));
  const auto basis = fatpoints::monomials(2, 2);
  exactla::RationalMatrix span;
  for (const auto& k : ks) {
    std::vector<Rational> row;
    for (const auto& b : basis) row.push_back(k.poly.coefficient(b, 0));
    span.append_row(row);
  }
  const auto base_rank = exactla::rank(span);
  std::vector<Rational> conic(6, 0), line(6, 0);
  conic[0] = -t * t / 4;
  conic[3] = 1;
  line[2] = 1;
  span.append_row(conic);
  span.append_row(line);
  EXPECT_EQ(exactla::rank(span), base_rank);
}

TEST(Approximant, BelowExactPolydiscFormula) {
  const auto g = build_approximant(configs::two_point_example(), Rational(1, 10), 1, 2, polydisc_options());
  EXPECT_LE(g.epsilon_sample, 0.02);
  double deviation = 0;
  for (const auto& z : annulus_points(2, {}, SphereKind::sup_norm, 5)) {
    const double a = evaluate_approximant(g, z);
    const double e = polydisc_two_pole_exact({0.1, 0}, z);
    EXPECT_LE(a, e + g.epsilon_sample);
    deviation = std::max(deviation, std::abs(a - e));
  }
  EXPECT_LE(deviation, 0.05);
  EXPECT_GT(deviation, 0.0);
}

TEST(Approximant, NonPositiveWithZeroAtBestSample) {
  const auto g = build_approximant(configs::generic_points(2, 3, 1), Rational(1, 2000), 1, 2, {});
  double best = -INFINITY;
  for (const auto& s : g.samples) {
    const double v = evaluate_approximant(g, s);
    EXPECT_LE(v, 0.0);
    best = std::max(best, v);
  }
  EXPECT_EQ(best, 0.0);
  // Sup estimates are recomputable from the stored samples.
  for (std::size_t i = 0; i < g.polynomials.size(); ++i) {
    double sup = 0;
    for (const auto& s : g.samples) sup = std::max(sup, std::abs(g.polynomials[i](s)));
    EXPECT_EQ(sup, g.sup_estimates[i]);
  }
  std::mt19937_64 rng(8);
  for (int i = 0; i < 200; ++i) {
    EXPECT_LE(evaluate_approximant(g, random_in_ball(rng, 2, 1.0)), g.epsilon_sample + 1e-12);
  }
}

TEST(Approximant, DeterministicPerSeed) {
  ApproximantOptions a;
  a.seed = 17;
  const auto g1 = build_approximant(configs::two_point_example(), Rational(1, 4), 1, 2, a);
  const auto g2 = build_approximant(configs::two_point_example(), Rational(1, 4), 1, 2, a);
  EXPECT_EQ(g1.sup_estimates, g2.sup_estimates);
  EXPECT_EQ(g1.epsilon_sample, g2.epsilon_sample);
  a.seed = 18;
  const auto g3 = build_approximant(configs::two_point_example(), Rational(1, 4), 1, 2, a);
  EXPECT_NE(g1.sup_estimates, g3.sup_estimates);
}

TEST(Approximant, Errors) {
  EXPECT_THROW(build_approximant(configs::two_point_example(), 3, 1, 2, {}), std::invalid_argument);
  EXPECT_THROW(build_approximant(configs::two_point_example(), Rational(1, 10), 2, 1, {}), std::runtime_error);
  EXPECT_THROW(build_approximant(configs::two_point_example(), 0, 1, 2, {}), std::invalid_argument);
  const auto g = build_approximant(configs::two_point_example(), Rational(1, 10), 1, 2, {});
  EXPECT_THROW(evaluate_approximant(g, {{0, 0}}), std::invalid_argument);
  EXPECT_TRUE(is_pole_value(evaluate_approximant(g, {{0.05, 0}, {0, 0}})));
}

TEST(LineFit, ExactLine) {
  const std::vector<double> x{0, 1, 2, 3}, y{1, 3, 5, 7};
  const auto f = fit_line(x, y);
  EXPECT_DOUBLE_EQ(f.slope, 2);
  EXPECT_DOUBLE_EQ(f.intercept, 1);
  EXPECT_NEAR(f.slope_stderr, 0, 1e-15);
  EXPECT_THROW(fit_line(std::vector<double>{1}, std::vector<double>{1}), std::invalid_argument);
}

TEST(RadialProfile, DefaultRadii) {
  const auto r = default_radii(0.01);
  EXPECT_EQ(r, (std::vector<double>{0.5, 0.25, 0.125, 0.0625}));
  EXPECT_EQ(default_radii(1e-9).size(), 12u);
  EXPECT_THROW(default_radii(0.05), std::invalid_argument);
}

TEST(RadialProfile, ExactSlopes) {
  const auto radii = default_radii(1e-4);
  ProfileOptions ball;
  const auto single = radial_profile([](const ComplexPoint& z) { return ball_green_single_pole(ComplexPoint(2), z); },
                                     2, radii, 0.0, ball);
  EXPECT_NEAR(single.slope, 1.0, 1e-9);

  ProfileOptions sup;
  sup.sphere = SphereKind::sup_norm;
  const auto limit = radial_profile(polydisc_two_pole_limit, 2, radii, 0.0, sup);
  EXPECT_NEAR(limit.slope, 1.0, 1e-9);
  EXPECT_TRUE(limit.log_convex_nondecreasing(1e-12));

  ProfileOptions axis;
  axis.sphere = SphereKind::axis;
  axis.axis = 0;
  const auto axial = radial_profile(polydisc_two_pole_limit, 2, radii, 0.0, axis);
  EXPECT_NEAR(axial.slope, 2.0, 1e-9);
}

TEST(RadialProfile, ApproximantSlopeBracket) {
  // Slope of the approximant envelope sits between the certified lower
  // bound for the singular degree and |S|.
  for (const auto& [config, t] : {std::pair{configs::two_point_example(), Rational(1, 200)},
                                  std::pair{configs::generic_points(2, 3, 2, 10), Rational(1, 2000)}}) {
    const int l = 1;
    const int d = invariants::omega_l(config, l);
    const auto g = build_approximant(config, t, l, d, {});
    const auto radii = default_radii(g.pole_radius(DomainMode::ball));
    const auto prof = radial_profile(g, radii, {});
    const auto w = invariants::waldschmidt_interval(config, 4);
    EXPECT_GE(prof.slope, w.lower.get_d() - 3 * prof.slope_stderr);
    EXPECT_LE(prof.slope, static_cast<double>(config.size()) + 3 * prof.slope_stderr + g.epsilon_sample);
    EXPECT_TRUE(prof.log_convex_nondecreasing(2 * g.epsilon_sample + 1e-9));
  }
}

TEST(RadialProfile, Errors) {
  const std::vector<double> bad_order{0.25, 0.5};
  EXPECT_THROW(radial_profile(polydisc_two_pole_limit, 2, bad_order, 0.0, {}), std::invalid_argument);
  const std::vector<double> inside{0.5, 0.25, 0.01};
  EXPECT_THROW(radial_profile(polydisc_two_pole_limit, 2, inside, 0.05, {}), std::invalid_argument);
  const std::vector<double> outside{1.5, 0.5};
  EXPECT_THROW(radial_profile(polydisc_two_pole_limit, 2, outside, 0.0, {}), std::invalid_argument);
}

TEST(Collision, TwoPointConverges) {
  CollisionOptions o;
  o.approximant = polydisc_options();
  o.limit = polydisc_two_pole_limit;
  const std::vector<Rational> ts{Rational(1, 2), Rational(1, 4), Rational(1, 10), Rational(1, 20)};
  const auto res = collision_experiment(configs::two_point_example(), 1, 2, ts, o);
  EXPECT_DOUBLE_EQ(res.omega_hat, 1.0);
  ASSERT_EQ(res.rows.size(), 4u);
  EXPECT_TRUE(res.deviation_decreasing());
  EXPECT_LT(res.rows.back().deviation(), res.rows.front().deviation());
  EXPECT_LT(res.rows.back().deviation(), 0.02);
  EXPECT_TRUE(res.upper_bounds_hold());
  EXPECT_NEAR(res.rows.back().slope, 1.0, 0.01);
}

TEST(Collision, SinglePointIsScaleInvariant) {
  CollisionOptions o;
  o.limit = [](const ComplexPoint& z) { return std::log(norm(z, DomainMode::ball)); };
  const std::vector<Rational> ts{Rational(1, 2), Rational(1, 10)};
  const auto res = collision_experiment(configs::single_point({0, 0}), 1, 1, ts, o);
  // tS = S, so every t sees the same approximant; what remains is the gap of
  // a finite family of linear forms to the Euclidean norm.
  EXPECT_EQ(res.rows[0].deviation(), res.rows[1].deviation());
  EXPECT_LT(res.rows[0].deviation(), 0.1);
  for (const auto& row : res.rows) EXPECT_NEAR(row.slope, 1.0, 1e-9);
  o.approximant.random_combinations = 512;
  const auto dense = collision_experiment(configs::single_point({0, 0}), 1, 1, ts, o);
  EXPECT_LT(dense.rows[0].deviation(), res.rows[0].deviation());
}

TEST(Collision, GridSlopeTrendsToTwo) {
  CollisionOptions o;
  const std::vector<Rational> ts{Rational(1, 5), Rational(1, 20), Rational(1, 100)};
  const auto res = collision_experiment(configs::grid_points(2, 2), 1, 2, ts, o);
  EXPECT_EQ(res.deviation_kind, "envelope");
  EXPECT_DOUBLE_EQ(res.omega_hat, 2.0);
  EXPECT_NEAR(res.rows.back().slope, 2.0, 0.1);
  EXPECT_LT(std::abs(res.rows.back().slope - 2.0), std::abs(res.rows.front().slope - 2.0) + 1e-12);
}

TEST(Collision, RejectsBadSequences) {
  const std::vector<Rational> increasing{Rational(1, 10), Rational(1, 2)};
  EXPECT_THROW(collision_experiment(configs::two_point_example(), 1, 2, increasing, {}), std::invalid_argument);
  const std::vector<Rational> too_big{Rational(3, 2)};
  EXPECT_THROW(collision_experiment(configs::two_point_example(), 1, 2, too_big, {}), std::invalid_argument);
}

TEST(Schwarz, SinglePointMonomials) {
  for (int l = 1; l <= 3; ++l) {
    const auto res = schwarz_check(configs::single_point({0, 0}), l, l, 0.25, 8, 0.0, {});
    EXPECT_TRUE(res.all_pass());
    for (const auto& row : res.rows) {
      // Homogeneous of degree l, same directions on both spheres.
      EXPECT_NEAR(row.log_norm_r - row.log_norm_R, l * std::log(0.25), 1e-9);
    }
  }
}

TEST(Schwarz, TwoPointLineAndNinePoints) {
  const auto two = schwarz_check(configs::two_point_example(), 1, 1, 0.25, 8, 0.1, {});
  ASSERT_EQ(two.rows.size(), 1u);
  EXPECT_TRUE(two.all_pass());
  // f = z2: ln rho R = ln R - ln(1/rho) exactly.
  EXPECT_NEAR(two.rows[0].log_norm_r - two.rows[0].log_norm_R, std::log(0.25), 1e-9);

  // Nine generic points pulled into the unit ball so that R = 8 is large.
  const auto nine_pts = configs::generic_points(2, 9, 1, 20).scaled(Rational(1, 20));
  const auto nine = schwarz_check(nine_pts, 1, 3, 0.25, 8, 0.1, {});
  EXPECT_GE(nine.omega_lower, Rational(3, 2));
  EXPECT_TRUE(nine.all_pass());
  EXPECT_THROW(schwarz_check(configs::two_point_example(), 1, 1, 0, 8, 0.1, {}), std::invalid_argument);
}

TEST(Output, CsvHeaders) {
  const auto prof = radial_profile(polydisc_two_pole_limit, 2, default_radii(1e-3), 0.0, {});
  const auto csv = to_csv(prof);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "radius,sup,residual");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), static_cast<long>(prof.radii.size()) + 1);
  EXPECT_TRUE(to_json(prof).contains("slope_stderr"));
}

TEST(RadialProfile, SlopeDoesNotDependOnTheNorm) {
  // The Lelong number is norm independent: ball and polydisc approximants of
  // the same pole set give the same envelope slope.
  const Rational t(1, 500);
  const auto config = configs::two_point_example();
  const auto ball = build_approximant(config, t, 1, 2, {});
  const auto poly = build_approximant(config, t, 1, 2, polydisc_options());
  const auto radii = default_radii(ball.pole_radius(DomainMode::ball));
  ProfileOptions torus;
  torus.sphere = SphereKind::torus;
  const auto pb = radial_profile(ball, radii, {});
  const auto pp = radial_profile(poly, radii, torus);
  EXPECT_NEAR(pb.slope, pp.slope, 0.01);
  EXPECT_NEAR(pb.slope, 1.0, 0.01);
}
