#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "nagata/configs.hpp"
#include "nagata/polynomial.hpp"
#include "nagata/sampling.hpp"
#include "nagata/scalar.hpp"

namespace nagata::green {

/// Value returned exactly at a logarithmic pole.
inline constexpr double kPoleValue = -std::numeric_limits<double>::infinity();

inline bool is_pole_value(double v) { return v == kPoleValue; }

/// Pluricomplex Green function of the unit ball with one pole at `a`:
/// ln |phi_a(z)| for the ball automorphism with phi_a(a) = 0.
/// Requires ||a|| < 1 and ||z|| <= 1.
double ball_green_single_pole(const ComplexPoint& a, const ComplexPoint& z);

/// Green function of the unit bidisc with poles at (t/2, 0) and (-t/2, 0):
///   max{ ln |(z1 - t/2)(z1 + t/2) / ((1 - conj(t) z1/2)(1 + conj(t) z1/2))|, ln |z2| }.
double polydisc_two_pole_exact(Complex t, const ComplexPoint& z);

/// The t -> 0 limit of the above: max{2 ln|z1|, ln|z2|}.
double polydisc_two_pole_limit(const ComplexPoint& z);

/// Complex-coefficient copy of an exact polynomial, for evaluation.
class ComplexPolynomial {
 public:
  ComplexPolynomial() = default;
  explicit ComplexPolynomial(const fatpoints::Polynomial<Rational>& p);

  Complex operator()(const ComplexPoint& z) const;
  int degree() const noexcept { return degree_; }
  ComplexPolynomial combined(const ComplexPolynomial& other, Complex a, Complex b) const;
  const std::vector<std::pair<std::vector<int>, Complex>>& terms() const noexcept { return terms_; }

 private:
  std::vector<std::pair<std::vector<int>, Complex>> terms_;
  int degree_ = -1;
};

struct ApproximantOptions {
  DomainMode mode = DomainMode::ball;
  std::size_t boundary_samples = 4096;
  std::size_t random_combinations = 32;
  std::uint64_t seed = 0;
};

/// Finite-family minorant of H_{tS,1,l}: the kernel basis of the degree-<=d
/// system with order l at the scaled poles tS, plus seeded random kernel
/// combinations, each normalised by its sampled boundary sup norm.
struct GreenApproximant {
  configs::PointConfig config;  // unscaled S
  Rational t;
  int order = 1;
  int degree_cap = 0;
  ApproximantOptions options;
  std::vector<ComplexPoint> poles;  // t * p_j
  std::vector<ComplexPoint> samples;
  std::vector<ComplexPolynomial> polynomials;
  std::size_t basis_size = 0;
  std::vector<double> sup_estimates;  // max |P| over `samples`
  double epsilon_sample = 0.0;        // (1/l) ln gain in sup when samples double

  double pole_radius(DomainMode mode) const;
};

GreenApproximant build_approximant(const configs::PointConfig& config, const Rational& t, int l, int d,
                                   const ApproximantOptions& options = {});

/// max_P (1/l)(ln|P(z)| - ln sup|P|); kPoleValue at a pole.
double evaluate_approximant(const GreenApproximant& g, const ComplexPoint& z);

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double slope_stderr = 0.0;
};

LineFit fit_line(std::span<const double> x, std::span<const double> y);

/// Supremum of a function over sampled spheres of decreasing radii, with the
/// least-squares slope against ln(radius) as a Lelong-number estimate.
struct RadialProfile {
  std::vector<double> radii;
  std::vector<double> sup_values;
  double slope = 0.0;
  double intercept = 0.0;
  double slope_stderr = 0.0;

  std::vector<double> residuals() const;
  /// sup is non-decreasing and convex as a function of ln(radius), up to tol.
  bool log_convex_nondecreasing(double tol) const;
};

using RadialFunction = std::function<double(const ComplexPoint&)>;

struct ProfileOptions {
  SphereKind sphere = SphereKind::euclidean;
  int axis = 0;
  std::size_t samples = 4096;
  std::uint64_t seed = 0;
};

/// Radii 0.5, 0.25, ... down to 4 x pole_radius (at most 12). Throws when
/// fewer than 4 radii fit.
std::vector<double> default_radii(double pole_radius);

/// Requires radii strictly decreasing in (0, 1), all above pole_radius.
RadialProfile radial_profile(const RadialFunction& f, int n, std::span<const double> radii,
                             double pole_radius, const ProfileOptions& options = {});
RadialProfile radial_profile(const GreenApproximant& g, std::span<const double> radii,
                             const ProfileOptions& options = {});

struct AnnulusGrid {
  double inner = 0.3;
  double outer = 0.95;
  std::size_t radii = 20;
  std::size_t directions = 20;
  std::size_t envelope_samples = 1024;  // per radius, for the radial sup
};

/// radii x directions points rho_i * w_j, radii geometric in [inner, outer].
std::vector<ComplexPoint> annulus_points(int n, const AnnulusGrid& grid, SphereKind kind, std::uint64_t seed);
std::vector<double> annulus_radii(const AnnulusGrid& grid);

struct CollisionRow {
  Rational t;
  double envelope_deviation = 0.0;          // sup_rho |sup_{|z|=rho} g_t - omega_hat ln rho|
  std::optional<double> limit_deviation;    // sup_grid |g_t - g_limit| when a limit is known
  double slope = 0.0;
  double slope_stderr = 0.0;
  double epsilon_sample = 0.0;
  double upper_excess = 0.0;                // max_grid g_t(z) - omega_hat ln|z|
  bool upper_ok = true;                     // upper_excess <= epsilon_sample

  double deviation() const { return limit_deviation.value_or(envelope_deviation); }
};

struct CollisionOptions {
  ApproximantOptions approximant;
  AnnulusGrid grid;
  RadialFunction limit;       // optional closed-form limit g_infinity
  double omega_hat = 0.0;     // <= 0 means Omega(S, l) / l over the prime field
};

struct CollisionResult {
  double omega_hat = 0.0;
  std::string deviation_kind;  // "limit" or "envelope"
  std::vector<CollisionRow> rows;

  bool deviation_decreasing() const;
  bool deviation_non_increasing(double tol) const;
  bool upper_bounds_hold() const;
};

CollisionResult collision_experiment(const configs::PointConfig& config, int l, int d,
                                     std::span<const Rational> t_sequence, const CollisionOptions& options = {});

struct SchwarzRow {
  std::size_t index = 0;
  int degree = 0;
  double log_norm_r = 0.0;
  double log_norm_R = 0.0;
  double rhs = 0.0;    // ln||f||_R - l (omega_lower - epsilon) ln(R/r)
  double slack = 0.0;  // sampling allowance
  bool pass = false;
};

struct SchwarzOptions {
  std::size_t samples = 4096;
  std::uint64_t seed = 0;
  int interval_l_max = 4;
  exactla::ScalarDomain domain = exactla::ScalarDomain::field();
};

struct SchwarzResult {
  Rational omega_lower;
  double r = 0.0;
  double R = 0.0;
  double epsilon = 0.0;
  int l = 0;
  int d = 0;
  std::vector<SchwarzRow> rows;

  bool all_pass() const;
};

/// ln||f||_r <= ln||f||_R - l (Omega(S) - eps) ln(R/r), r = rho R, for every
/// kernel polynomial f of the (l, d) system at S, with Omega(S) replaced by
/// the certified Waldschmidt lower bound.
SchwarzResult schwarz_check(const configs::PointConfig& config, int l, int d, double rho, double R,
                            double epsilon, const SchwarzOptions& options = {});

std::string to_csv(const RadialProfile& p);
std::string to_csv(const CollisionResult& c);
std::string to_csv(const SchwarzResult& s);
nlohmann::json to_json(const RadialProfile& p);
nlohmann::json to_json(const CollisionResult& c);
nlohmann::json to_json(const SchwarzResult& s);

}  // namespace nagata::green
