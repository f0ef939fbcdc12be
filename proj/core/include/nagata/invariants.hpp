#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "nagata/configs.hpp"
#include "nagata/report.hpp"
#include "nagata/scalar.hpp"

namespace nagata::invariants {

using exactla::ScalarDomain;

/// Least degree of a nonzero polynomial vanishing to order >= orders[j] at
/// point j.
int omega(const configs::PointConfig& config, std::span<const int> orders,
          const ScalarDomain& domain = ScalarDomain::field());

/// Omega(S, l): uniform order l at every point.
int omega_l(const configs::PointConfig& config, int l,
            const ScalarDomain& domain = ScalarDomain::field());

/// Omega(S, l) for l = 1..l_max; entry l-1 holds Omega(S, l).
std::vector<int> omega_table(const configs::PointConfig& config, int l_max,
                             const ScalarDomain& domain = ScalarDomain::field());

/// Certified bracket for the singular degree from finitely many orders:
/// lower = max_l Omega(S,l)/(l+n-1), upper = min_l Omega(S,l)/l.
struct WaldschmidtInterval {
  Rational lower;
  Rational upper;
  int lower_at = 0;  // the l attaining each bound
  int upper_at = 0;

  bool contains_root(const Rational& r, int n) const;  // lower^n <= r <= upper^n
};

WaldschmidtInterval waldschmidt_interval(std::span<const int> table, int n);
WaldschmidtInterval waldschmidt_interval(const configs::PointConfig& config, int l_max,
                                         const ScalarDomain& domain = ScalarDomain::field());

/// Lower bounds for omega(S) = sup sum_j ord(P, p_j) / deg P.
struct WitnessBound {
  Rational witnessed;   // best sum(orders)/degree over the kernel basis
  Rational analytic;    // |S| * l / Omega(S, l)
  Rational best;        // max of the two
  int omega = 0;        // Omega(S, l) used by the analytic bound
  bool certified = false;  // witness polynomials are rational, not mod p
};

WitnessBound omega_s_witness_bound(const configs::PointConfig& config, int l, int d,
                                   const ScalarDomain& domain = ScalarDomain::field());

struct NagataRow {
  int l = 0;
  int omega = 0;
  bool holds = false;  // Omega(S,l)^n > l^n * r
};

/// Strict Nagata (n = 2) or Iarrobino (n > 2) inequality for l = 1..l_max,
/// decided in exact integer arithmetic.
std::vector<NagataRow> nagata_check(const configs::PointConfig& config, int l_max,
                                    const ScalarDomain& domain = ScalarDomain::field());
std::vector<NagataRow> nagata_rows(std::span<const int> table, int n, std::size_t r);

/// c_r for r = 1..9 general points in the plane.
Rational harbourne_constant(int r);

struct HarbourneRow {
  int r = 0;
  int m = 0;
  mpz_class expected;
  int actual = 0;
  bool pass = false;
  std::uint64_t seed = 0;
  std::string note;
};

/// omega_l on seeded generic plane configurations against ceil(c_r * m) for
/// r = 1..9, m = 1..m_max.
std::vector<HarbourneRow> harbourne_table_check(int m_max, std::uint64_t seed,
                                                const ScalarDomain& domain = ScalarDomain::field());

std::vector<Verdict> superadditivity_check(std::span<const int> table, int n);
std::vector<Verdict> superadditivity_check(const configs::PointConfig& config, int l_max,
                                           const ScalarDomain& domain = ScalarDomain::field());

/// Omega(S,l) <= (l+n-1) r^(1/n) - (n-1), via (Omega+n-1)^n <= (l+n-1)^n r.
std::vector<Verdict> waldschmidt_upper_check(std::span<const int> table, int n, std::size_t r);
std::vector<Verdict> waldschmidt_upper_check(const configs::PointConfig& config, int l_max,
                                             const ScalarDomain& domain = ScalarDomain::field());

struct InvariantReport {
  configs::PointConfig config;
  ScalarDomain domain;
  int l_max = 0;
  std::vector<int> table;
  WaldschmidtInterval interval;
  WitnessBound w_lower;  // taken at the order attaining the best analytic ratio
  int w_lower_at = 0;
  std::vector<Verdict> verdicts;
};

InvariantReport build_report(const configs::PointConfig& config, int l_max,
                             const ScalarDomain& domain = ScalarDomain::field());

nlohmann::json to_json(const WaldschmidtInterval& w);
nlohmann::json to_json(const WitnessBound& w);
nlohmann::json to_json(const InvariantReport& report);
/// One row per l: l, omega, per-l bracket, running interval, checks.
std::string to_csv(const InvariantReport& report);

}  // namespace nagata::invariants
