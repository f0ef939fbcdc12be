#include "nagata/green.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include "nagata/fatpoints.hpp"
#include "nagata/invariants.hpp"
#include "nagata/seed.hpp"

namespace nagata::green {
namespace {

void require_finite(const ComplexPoint& z) {
  for (const auto& c : z) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw std::invalid_argument("complex point has a non-finite coordinate");
    }
  }
}

ComplexPoint scaled_point(const ComplexPoint& w, double r) {
  ComplexPoint z = w;
  for (auto& c : z) c *= r;
  return z;
}

ComplexPoint to_complex(const configs::Point& p) {
  ComplexPoint z;
  for (const auto& x : p) z.emplace_back(to_double(x), 0.0);
  return z;
}

DomainMode norm_for(SphereKind kind) {
  return kind == SphereKind::euclidean || kind == SphereKind::axis ? DomainMode::ball : DomainMode::polydisc;
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

nlohmann::json finite_or_null(double x) {
  return std::isfinite(x) ? nlohmann::json(x) : nlohmann::json(nullptr);
}

}  // namespace

double ball_green_single_pole(const ComplexPoint& a, const ComplexPoint& z) {
  require_finite(a);
  require_finite(z);
  if (a.size() != z.size()) throw std::invalid_argument("pole and point dimensions differ");
  const double na = norm(a, DomainMode::ball);
  if (na >= 1.0) throw std::invalid_argument("pole must lie inside the unit ball");
  if (norm(z, DomainMode::ball) > 1.0 + 1e-12) throw std::invalid_argument("point outside the closed unit ball");
  if (z == a) return kPoleValue;

  // |phi_a(z)|^2 = (|w|^2 - sum_{i<j} |w_i a_j - w_j a_i|^2) / |1 - <z,a>|^2, w = z - a.
  // Written in w so that the numerator keeps full relative precision near the pole.
  ComplexPoint w(z.size());
  Complex inner(0.0, 0.0);
  double w2 = 0.0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    w[i] = z[i] - a[i];
    w2 += std::norm(w[i]);
    inner += z[i] * std::conj(a[i]);
  }
  double lagrange = 0.0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    for (std::size_t j = i + 1; j < z.size(); ++j) lagrange += std::norm(w[i] * a[j] - w[j] * a[i]);
  }
  const double num = w2 - lagrange;
  const double den = std::norm(1.0 - inner);
  return 0.5 * std::log(num / den);
}

double polydisc_two_pole_exact(Complex t, const ComplexPoint& z) {
  require_finite(z);
  if (z.size() != 2) throw std::invalid_argument("the two-pole formula lives in two variables");
  if (std::abs(t) >= 2.0) throw std::invalid_argument("|t| must be below 2");
  if (norm(z, DomainMode::polydisc) > 1.0 + 1e-12) throw std::invalid_argument("point outside the closed bidisc");
  const Complex h = t / 2.0;
  if (z[1] == Complex(0.0, 0.0) && (z[0] == h || z[0] == -h)) return kPoleValue;
  const Complex hc = std::conj(t) / 2.0;
  const double first = std::log(std::abs((z[0] - h) * (z[0] + h))) -
                       std::log(std::abs((1.0 - hc * z[0]) * (1.0 + hc * z[0])));
  return std::max(first, std::log(std::abs(z[1])));
}

double polydisc_two_pole_limit(const ComplexPoint& z) {
  require_finite(z);
  if (z.size() != 2) throw std::invalid_argument("the two-pole limit lives in two variables");
  return std::max(2.0 * std::log(std::abs(z[0])), std::log(std::abs(z[1])));
}

ComplexPolynomial::ComplexPolynomial(const fatpoints::Polynomial<Rational>& p) {
  for (const auto& [m, c] : p.terms()) {
    terms_.emplace_back(m.exponents, Complex(to_double(c), 0.0));
    degree_ = std::max(degree_, m.total());
  }
}

Complex ComplexPolynomial::operator()(const ComplexPoint& z) const {
  Complex acc(0.0, 0.0);
  for (const auto& [e, c] : terms_) {
    Complex term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (int k = 0; k < e[i]; ++k) term *= z[i];
    }
    acc += term;
  }
  return acc;
}

ComplexPolynomial ComplexPolynomial::combined(const ComplexPolynomial& other, Complex a, Complex b) const {
  std::map<std::vector<int>, Complex> acc;
  for (const auto& [e, c] : terms_) acc[e] += a * c;
  for (const auto& [e, c] : other.terms_) acc[e] += b * c;
  ComplexPolynomial out;
  for (const auto& [e, c] : acc) {
    if (c == Complex(0.0, 0.0)) continue;
    out.terms_.emplace_back(e, c);
    int total = 0;
    for (int x : e) total += x;
    out.degree_ = std::max(out.degree_, total);
  }
  return out;
}

double GreenApproximant::pole_radius(DomainMode mode) const {
  double r = 0.0;
  for (const auto& p : poles) r = std::max(r, norm(p, mode));
  return r;
}

GreenApproximant build_approximant(const configs::PointConfig& config, const Rational& t, int l, int d,
                                   const ApproximantOptions& options) {
  if (l < 1) throw std::invalid_argument("order l must be >= 1");
  if (options.boundary_samples == 0) throw std::invalid_argument("need at least one boundary sample");
  GreenApproximant g;
  g.config = config;
  g.t = t;
  g.order = l;
  g.degree_cap = d;
  g.options = options;

  const auto scaled = config.scaled(t);
  for (const auto& p : scaled.points) {
    g.poles.push_back(to_complex(p));
    if (norm(g.poles.back(), options.mode) >= 1.0) {
      throw std::invalid_argument("scaled pole lies outside the open unit domain");
    }
  }

  const auto problem = fatpoints::InterpolationProblem::uniform(scaled, l, d, exactla::ScalarDomain::rational());
  for (const auto& k : fatpoints::kernel_polynomials<Rational>(problem)) g.polynomials.emplace_back(k.poly);
  g.basis_size = g.polynomials.size();

  std::mt19937_64 rng(derive_seed(options.seed, "kernel-combinations"));
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (std::size_t k = 0; k < options.random_combinations && g.basis_size > 1; ++k) {
    ComplexPolynomial combo;
    for (std::size_t i = 0; i < g.basis_size; ++i) {
      combo = combo.combined(g.polynomials[i], 1.0, Complex(gauss(rng), gauss(rng)));
    }
    g.polynomials.push_back(std::move(combo));
  }

  const int n = config.dimension;
  auto samples = boundary_samples(n, 2 * options.boundary_samples, options.mode,
                                  derive_seed(options.seed, "boundary"));
  for (const auto& p : g.polynomials) {
    double sup_half = 0.0;
    double sup_full = 0.0;
    for (std::size_t s = 0; s < samples.size(); ++s) {
      const double v = std::abs(p(samples[s]));
      if (s < options.boundary_samples) sup_half = std::max(sup_half, v);
      sup_full = std::max(sup_full, v);
    }
    if (!(sup_half > 0.0)) throw std::runtime_error("kernel polynomial vanishes on every boundary sample");
    g.sup_estimates.push_back(sup_half);
    g.epsilon_sample = std::max(g.epsilon_sample, std::log(sup_full / sup_half) / l);
  }
  samples.resize(options.boundary_samples);
  g.samples = std::move(samples);
  return g;
}

double evaluate_approximant(const GreenApproximant& g, const ComplexPoint& z) {
  require_finite(z);
  if (z.size() != static_cast<std::size_t>(g.config.dimension)) {
    throw std::invalid_argument("point dimension does not match the approximant");
  }
  for (const auto& p : g.poles) {
    if (p == z) return kPoleValue;
  }
  double best = kPoleValue;
  for (std::size_t i = 0; i < g.polynomials.size(); ++i) {
    const double v = std::abs(g.polynomials[i](z));
    if (v == 0.0) continue;
    best = std::max(best, (std::log(v) - std::log(g.sup_estimates[i])) / g.order);
  }
  return best;
}

LineFit fit_line(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("line fit needs >= 2 paired values");
  const auto m = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= m;
  my /= m;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx == 0.0) throw std::invalid_argument("line fit needs distinct abscissae");
  LineFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  if (x.size() > 2) {
    double ssr = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double r = y[i] - (fit.intercept + fit.slope * x[i]);
      ssr += r * r;
    }
    fit.slope_stderr = std::sqrt(ssr / (m - 2.0) / sxx);
  }
  return fit;
}

std::vector<double> RadialProfile::residuals() const {
  std::vector<double> out;
  for (std::size_t i = 0; i < radii.size(); ++i) {
    out.push_back(sup_values[i] - (intercept + slope * std::log(radii[i])));
  }
  return out;
}

bool RadialProfile::log_convex_nondecreasing(double tol) const {
  // Radii decrease, so walk backwards to get increasing ln(radius).
  std::vector<double> x, y;
  for (std::size_t i = radii.size(); i-- > 0;) {
    x.push_back(std::log(radii[i]));
    y.push_back(sup_values[i]);
  }
  for (std::size_t i = 1; i < x.size(); ++i) {
    if (y[i] < y[i - 1] - tol) return false;
  }
  for (std::size_t i = 2; i < x.size(); ++i) {
    const double s1 = (y[i - 1] - y[i - 2]) / (x[i - 1] - x[i - 2]);
    const double s2 = (y[i] - y[i - 1]) / (x[i] - x[i - 1]);
    if (s2 < s1 - tol / (x[i] - x[i - 1])) return false;
  }
  return true;
}

std::vector<double> default_radii(double pole_radius) {
  std::vector<double> radii;
  for (double r = 0.5; r >= 4.0 * pole_radius && radii.size() < 12; r *= 0.5) radii.push_back(r);
  if (radii.size() < 4) {
    throw std::invalid_argument("poles too spread for a Lelong window: fewer than 4 radii above 4x pole radius");
  }
  return radii;
}

RadialProfile radial_profile(const RadialFunction& f, int n, std::span<const double> radii, double pole_radius,
                             const ProfileOptions& options) {
  if (radii.size() < 2) throw std::invalid_argument("a radial profile needs at least 2 radii");
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (!(radii[i] > 0.0 && radii[i] < 1.0)) throw std::invalid_argument("radii must lie in (0, 1)");
    if (i > 0 && !(radii[i] < radii[i - 1])) throw std::invalid_argument("radii must be strictly decreasing");
    if (radii[i] <= pole_radius) {
      throw std::invalid_argument("radius " + fmt(radii[i]) + " does not exclude the poles (pole radius " +
                                  fmt(pole_radius) + ")");
    }
  }
  const auto directions = unit_sphere_samples(n, options.samples, options.sphere, options.seed, options.axis);
  RadialProfile prof;
  prof.radii.assign(radii.begin(), radii.end());
  std::vector<double> x;
  for (double r : radii) {
    double sup = kPoleValue;
    for (const auto& w : directions) sup = std::max(sup, f(scaled_point(w, r)));
    prof.sup_values.push_back(sup);
    x.push_back(std::log(r));
  }
  const auto fit = fit_line(x, prof.sup_values);
  prof.slope = fit.slope;
  prof.intercept = fit.intercept;
  prof.slope_stderr = fit.slope_stderr;
  return prof;
}

RadialProfile radial_profile(const GreenApproximant& g, std::span<const double> radii, const ProfileOptions& options) {
  const double pole_radius = g.pole_radius(norm_for(options.sphere));
  return radial_profile([&g](const ComplexPoint& z) { return evaluate_approximant(g, z); }, g.config.dimension,
                        radii, pole_radius, options);
}

std::vector<double> annulus_radii(const AnnulusGrid& grid) {
  if (!(grid.inner > 0.0 && grid.inner < grid.outer && grid.outer <= 1.0) || grid.radii < 2) {
    throw std::invalid_argument("annulus grid needs 0 < inner < outer <= 1 and >= 2 radii");
  }
  std::vector<double> radii;
  const double ratio = std::pow(grid.inner / grid.outer, 1.0 / static_cast<double>(grid.radii - 1));
  double r = grid.outer;
  for (std::size_t i = 0; i < grid.radii; ++i, r *= ratio) radii.push_back(i + 1 == grid.radii ? grid.inner : r);
  return radii;
}

std::vector<ComplexPoint> annulus_points(int n, const AnnulusGrid& grid, SphereKind kind, std::uint64_t seed) {
  const auto directions = unit_sphere_samples(n, grid.directions, kind, seed);
  std::vector<ComplexPoint> out;
  for (double r : annulus_radii(grid)) {
    for (const auto& w : directions) out.push_back(scaled_point(w, r));
  }
  return out;
}

bool CollisionResult::deviation_decreasing() const {
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (!(rows[i].deviation() < rows[i - 1].deviation())) return false;
  }
  return true;
}

bool CollisionResult::deviation_non_increasing(double tol) const {
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].deviation() > rows[i - 1].deviation() + tol) return false;
  }
  return true;
}

bool CollisionResult::upper_bounds_hold() const {
  return std::all_of(rows.begin(), rows.end(), [](const CollisionRow& r) { return r.upper_ok; });
}

CollisionResult collision_experiment(const configs::PointConfig& config, int l, int d,
                                     std::span<const Rational> t_sequence, const CollisionOptions& options) {
  if (t_sequence.empty()) throw std::invalid_argument("collision experiment needs at least one t");
  for (std::size_t i = 1; i < t_sequence.size(); ++i) {
    if (!(abs(t_sequence[i]) < abs(t_sequence[i - 1]))) {
      throw std::invalid_argument("t sequence must be strictly decreasing in modulus");
    }
  }
  CollisionResult result;
  result.omega_hat = options.omega_hat > 0.0 ? options.omega_hat
                                             : static_cast<double>(invariants::omega_l(config, l)) / l;
  result.deviation_kind = options.limit ? "limit" : "envelope";

  const DomainMode mode = options.approximant.mode;
  const SphereKind kind = sphere_for(mode);
  const int n = config.dimension;
  const auto radii = annulus_radii(options.grid);
  // Grid points fill the whole sphere of the norm (torus points alone would
  // make the bidisc comparison degenerate since |z1| = |z2| there).
  const SphereKind grid_kind = mode == DomainMode::ball ? SphereKind::euclidean : SphereKind::sup_norm;
  const auto grid_points = annulus_points(n, options.grid, grid_kind, derive_seed(options.approximant.seed, "grid"));
  const auto envelope_dirs = unit_sphere_samples(n, options.grid.envelope_samples, kind,
                                                 derive_seed(options.approximant.seed, "envelope"));

  for (const auto& t : t_sequence) {
    const auto g = build_approximant(config, t, l, d, options.approximant);
    if (g.pole_radius(mode) >= options.grid.inner) {
      throw std::invalid_argument("scaled poles reach the annulus; choose smaller t or a larger inner radius");
    }
    CollisionRow row;
    row.t = t;
    row.epsilon_sample = g.epsilon_sample;

    std::vector<double> x, env;
    for (double r : radii) {
      double sup = kPoleValue;
      for (const auto& w : envelope_dirs) sup = std::max(sup, evaluate_approximant(g, scaled_point(w, r)));
      row.envelope_deviation = std::max(row.envelope_deviation, std::abs(sup - result.omega_hat * std::log(r)));
      x.push_back(std::log(r));
      env.push_back(sup);
    }
    const auto fit = fit_line(x, env);
    row.slope = fit.slope;
    row.slope_stderr = fit.slope_stderr;

    double limit_dev = 0.0;
    row.upper_excess = -std::numeric_limits<double>::infinity();
    for (const auto& z : grid_points) {
      const double v = evaluate_approximant(g, z);
      row.upper_excess = std::max(row.upper_excess, v - result.omega_hat * std::log(norm(z, mode)));
      if (options.limit) {
        const double ref = options.limit(z);
        const double diff = std::abs(v - ref);
        limit_dev = std::max(limit_dev, std::isfinite(diff) ? diff : std::numeric_limits<double>::infinity());
      }
    }
    if (options.limit) row.limit_deviation = limit_dev;
    row.upper_ok = row.upper_excess <= row.epsilon_sample;
    result.rows.push_back(std::move(row));
  }
  return result;
}

bool SchwarzResult::all_pass() const {
  return std::all_of(rows.begin(), rows.end(), [](const SchwarzRow& r) { return r.pass; });
}

SchwarzResult schwarz_check(const configs::PointConfig& config, int l, int d, double rho, double R, double epsilon,
                            const SchwarzOptions& options) {
  if (!(rho > 0.0 && rho <= 1.0) || !(R > 0.0) || epsilon < 0.0) {
    throw std::invalid_argument("schwarz_check needs 0 < rho <= 1, R > 0, epsilon >= 0");
  }
  SchwarzResult res;
  res.l = l;
  res.d = d;
  res.R = R;
  res.r = rho * R;
  res.epsilon = epsilon;
  res.omega_lower = invariants::waldschmidt_interval(config, std::max(l, options.interval_l_max), options.domain).lower;

  const auto problem = fatpoints::InterpolationProblem::uniform(config, l, d, exactla::ScalarDomain::rational());
  const auto kernels = fatpoints::kernel_polynomials<Rational>(problem);
  // The same directions on both spheres: homogeneous f then gives exactly
  // ln||f||_r - ln||f||_R = deg f * ln(r/R).
  const auto dirs = unit_sphere_samples(config.dimension, 2 * options.samples, SphereKind::euclidean,
                                        derive_seed(options.seed, "schwarz"));
  const double decay = l * (to_double(res.omega_lower) - epsilon) * std::log(R / res.r);
  for (std::size_t i = 0; i < kernels.size(); ++i) {
    const ComplexPolynomial f(kernels[i].poly);
    double sr_half = 0.0, sr_full = 0.0, sR_half = 0.0, sR_full = 0.0;
    for (std::size_t s = 0; s < dirs.size(); ++s) {
      const double vr = std::abs(f(scaled_point(dirs[s], res.r)));
      const double vR = std::abs(f(scaled_point(dirs[s], R)));
      if (s < options.samples) {
        sr_half = std::max(sr_half, vr);
        sR_half = std::max(sR_half, vR);
      }
      sr_full = std::max(sr_full, vr);
      sR_full = std::max(sR_full, vR);
    }
    SchwarzRow row;
    row.index = i;
    row.degree = kernels[i].degree;
    row.log_norm_r = std::log(sr_half);
    row.log_norm_R = std::log(sR_half);
    row.rhs = row.log_norm_R - decay;
    row.slack = std::max(std::log(sr_full / sr_half), std::log(sR_full / sR_half)) + 1e-9;
    row.pass = row.log_norm_r <= row.rhs + row.slack;
    res.rows.push_back(row);
  }
  return res;
}

std::string to_csv(const RadialProfile& p) {
  std::ostringstream out;
  out << "radius,sup,residual\n";
  const auto res = p.residuals();
  for (std::size_t i = 0; i < p.radii.size(); ++i) {
    out << fmt(p.radii[i]) << ',' << fmt(p.sup_values[i]) << ',' << fmt(res[i]) << '\n';
  }
  return out.str();
}

std::string to_csv(const CollisionResult& c) {
  std::ostringstream out;
  out << "t,deviation,envelope_deviation,limit_deviation,slope,slope_stderr,epsilon_sample,upper_ok\n";
  for (const auto& r : c.rows) {
    out << format_rational(r.t) << ',' << fmt(r.deviation()) << ',' << fmt(r.envelope_deviation) << ','
        << (r.limit_deviation ? fmt(*r.limit_deviation) : std::string()) << ',' << fmt(r.slope) << ','
        << fmt(r.slope_stderr) << ',' << fmt(r.epsilon_sample) << ',' << (r.upper_ok ? "true" : "false") << '\n';
  }
  return out.str();
}

std::string to_csv(const SchwarzResult& s) {
  std::ostringstream out;
  out << "index,degree,log_norm_r,log_norm_R,rhs,slack,pass\n";
  for (const auto& r : s.rows) {
    out << r.index << ',' << r.degree << ',' << fmt(r.log_norm_r) << ',' << fmt(r.log_norm_R) << ','
        << fmt(r.rhs) << ',' << fmt(r.slack) << ',' << (r.pass ? "true" : "false") << '\n';
  }
  return out.str();
}

nlohmann::json to_json(const RadialProfile& p) {
  nlohmann::json sups = nlohmann::json::array();
  for (double v : p.sup_values) sups.push_back(finite_or_null(v));
  return {{"radii", p.radii},
          {"sup_values", std::move(sups)},
          {"slope", p.slope},
          {"intercept", p.intercept},
          {"slope_stderr", p.slope_stderr}};
}

nlohmann::json to_json(const CollisionResult& c) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : c.rows) {
    rows.push_back({{"t", format_rational(r.t)},
                    {"deviation", finite_or_null(r.deviation())},
                    {"envelope_deviation", finite_or_null(r.envelope_deviation)},
                    {"limit_deviation", r.limit_deviation ? finite_or_null(*r.limit_deviation) : nlohmann::json()},
                    {"slope", r.slope},
                    {"slope_stderr", r.slope_stderr},
                    {"epsilon_sample", r.epsilon_sample},
                    {"upper_excess", finite_or_null(r.upper_excess)},
                    {"upper_ok", r.upper_ok}});
  }
  return {{"omega_hat", c.omega_hat}, {"deviation_kind", c.deviation_kind}, {"rows", std::move(rows)}};
}

nlohmann::json to_json(const SchwarzResult& s) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : s.rows) {
    rows.push_back({{"index", r.index},
                    {"degree", r.degree},
                    {"log_norm_r", r.log_norm_r},
                    {"log_norm_R", r.log_norm_R},
                    {"rhs", r.rhs},
                    {"slack", r.slack},
                    {"pass", r.pass}});
  }
  return {{"omega_lower", format_rational(s.omega_lower)},
          {"l", s.l},
          {"d", s.d},
          {"r", s.r},
          {"R", s.R},
          {"epsilon", s.epsilon},
          {"rows", std::move(rows)}};
}

}  // namespace nagata::green
